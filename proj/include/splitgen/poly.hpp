#ifndef SPLITGEN_POLY_HPP
#define SPLITGEN_POLY_HPP

#include <cstddef>
#include <vector>

#include "splitgen/field.hpp"
#include "splitgen/linalg.hpp"

namespace splitgen {

/// Exponent vector of a monomial in n+1 variables. The canonical order of a
/// fixed degree is lexicographically descending on exponent vectors with
/// x0 > x1 > ... > xn, so x0^l comes first and xn^l last.
struct Monomial {
    std::vector<unsigned> exponents;

    unsigned degree() const;
    bool operator==(const Monomial&) const = default;
};

/// Number of monomials of the given degree in n+1 variables: C(n+degree, n).
std::size_t monomial_count(unsigned n, unsigned degree);

/// All degree-`degree` monomials in canonical order.
std::vector<Monomial> monomial_basis(unsigned n, unsigned degree);

/// Position of an exponent vector within the canonical order of its degree.
std::size_t monomial_rank(const std::vector<unsigned>& exponents);

/// Homogeneous form of fixed degree in n+1 variables, stored as the dense
/// coefficient vector over the canonical monomial order.
class PolyVec {
public:
    PolyVec(unsigned degree, unsigned n, const FieldSpec& field);
    PolyVec(unsigned degree, unsigned n, std::vector<FieldElement> coeffs);

    static PolyVec variable(unsigned i, unsigned n, const FieldSpec& field);
    /// Degree-1 form with the given coordinate coefficients (length n+1).
    static PolyVec linear(std::vector<FieldElement> coeffs);

    unsigned degree() const { return degree_; }
    unsigned n() const { return n_; }
    FieldSpec field() const { return field_; }
    const std::vector<FieldElement>& coeffs() const { return coeffs_; }

    const FieldElement& coeff(std::size_t i) const { return coeffs_[i]; }
    FieldElement& coeff(std::size_t i) { return coeffs_[i]; }
    const FieldElement& coeff(const std::vector<unsigned>& exponents) const;

    bool is_zero() const;

    /// Value at a coordinate vector (length n+1).
    FieldElement evaluate(const std::vector<FieldElement>& coords) const;

    PolyVec& operator+=(const PolyVec& o);
    friend PolyVec operator+(PolyVec a, const PolyVec& b) { return a += b; }
    PolyVec operator-() const;
    friend PolyVec operator-(PolyVec a, const PolyVec& b) { return a += -b; }
    PolyVec scaled(const FieldElement& c) const;

    bool operator==(const PolyVec&) const = default;

private:
    unsigned degree_, n_;
    FieldSpec field_;
    std::vector<FieldElement> coeffs_;
};

/// Product h.f of a degree-1 form with a degree-l form; bilinear.
PolyVec multiply_linear(const PolyVec& f, const PolyVec& h);

/// Product f * x^mu for an exponent vector mu (same variable count).
PolyVec multiply_monomial(const PolyVec& f, const std::vector<unsigned>& mu);

/// Left fold of multiply_linear over a nonempty list of degree-1 forms.
PolyVec product_of_linears(const std::vector<PolyVec>& hs);

/// Canonical basis of the degree-t slice of the ideal generated by `gens`:
/// span{ mu.g : g in gens, mu a monomial of degree t - deg g }. Computed by
/// laddering degree by degree with rank extraction; generators of degree > t
/// cannot contribute and are ignored.
std::vector<PolyVec> ideal_slice_from_generators(const std::vector<PolyVec>& gens, unsigned t);

/// Ranks of the slices for every degree from the smallest generator degree
/// up to t, in one ladder pass. slice_dims(gens, t).back() equals
/// |ideal_slice_from_generators(gens, t)|.
std::vector<std::size_t> ideal_slice_dims(const std::vector<PolyVec>& gens, unsigned first_degree,
                                          unsigned t);

/// Rows of a coefficient matrix holding the given forms (all same degree).
std::vector<std::vector<FieldElement>> coefficient_rows(const std::vector<PolyVec>& forms);

/// Canonical basis (RREF rows) of the span of the given same-degree forms.
std::vector<PolyVec> canonical_span_basis(const std::vector<PolyVec>& forms);

}  // namespace splitgen

#endif
