#ifndef SPLITGEN_POINTS_HPP
#define SPLITGEN_POINTS_HPP

#include <cstddef>
#include <vector>

#include "splitgen/field.hpp"
#include "splitgen/poly.hpp"

namespace splitgen {

/// Point of P^n as normalized homogeneous coordinates: nonzero, scaled so the
/// first nonzero coordinate is 1. Equality of normalized representatives is
/// projective equality.
class Point {
public:
    explicit Point(std::vector<FieldElement> raw);

    unsigned n() const { return static_cast<unsigned>(coords_.size()) - 1; }
    FieldSpec field() const { return coords_.front().field(); }
    const std::vector<FieldElement>& coords() const { return coords_; }
    const FieldElement& operator[](std::size_t i) const { return coords_[i]; }

    bool operator==(const Point&) const = default;

private:
    std::vector<FieldElement> coords_;
};

/// Scales raw coordinates so the first nonzero one becomes 1.
Point normalize_point(std::vector<FieldElement> raw);

/// Ordered list of distinct normalized points of P^n over one field.
class PointSet {
public:
    PointSet(unsigned n, const FieldSpec& field) : n_(n), field_(field) {}
    PointSet(unsigned n, const FieldSpec& field, std::vector<Point> points);

    unsigned n() const { return n_; }
    FieldSpec field() const { return field_; }
    std::size_t size() const { return points_.size(); }
    const Point& operator[](std::size_t i) const { return points_[i]; }
    const std::vector<Point>& points() const { return points_; }

    /// Appends a point, enforcing dimension, field and distinctness.
    void append(Point p);
    bool contains(const Point& p) const;

    /// Point set holding the listed indices, in the listed order.
    PointSet subset(const std::vector<std::size_t>& indices) const;

    bool operator==(const PointSet&) const = default;

private:
    unsigned n_;
    FieldSpec field_;
    std::vector<Point> points_;
};

/// True iff every min(n+1, d)-subset of the coordinate vectors is linearly
/// independent. Smaller subsets are then independent automatically.
bool is_lgp(const PointSet& gamma);

/// Points (1, t, t^2, ..., t^n) for the given pairwise distinct parameters.
/// The result is always in linearly general position (Vandermonde).
PointSet moment_curve_points(unsigned n, const FieldSpec& field,
                             const std::vector<FieldElement>& params);

/// Canonical basis of the degree-1 forms vanishing on the block's points:
/// nullspace of the |block| x (n+1) coordinate matrix, n+1-|block| forms.
/// When |block| = n the single hyperplane form is rescaled canonically
/// (over Q: primitive integer coefficients with positive leading sign;
/// over F_p: leading coefficient 1).
std::vector<PolyVec> linear_forms_vanishing_on(const PointSet& gamma,
                                               const std::vector<std::size_t>& block);

/// Appends `count` new points keeping linearly general position, trying
/// successive moment-curve parameters t = 0, 1, 2, ... and accepting the
/// first candidate that works. Deterministic given gamma.
PointSet extend_lgp(const PointSet& gamma, std::size_t count);

}  // namespace splitgen

#endif
