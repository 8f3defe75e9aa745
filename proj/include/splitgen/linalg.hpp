#ifndef SPLITGEN_LINALG_HPP
#define SPLITGEN_LINALG_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "splitgen/field.hpp"

namespace splitgen {

/// Dense matrix over a single exact field, row-major.
class ExactMatrix {
public:
    ExactMatrix(std::size_t rows, std::size_t cols, const FieldSpec& field);

    /// Builds from explicit rows; every entry must belong to `field`.
    static ExactMatrix from_rows(const std::vector<std::vector<FieldElement>>& rows,
                                 const FieldSpec& field);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const FieldSpec& field() const { return field_; }

    FieldElement& at(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const FieldElement& at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

    std::vector<FieldElement> row(std::size_t i) const;

    bool operator==(const ExactMatrix& o) const;

private:
    std::size_t rows_, cols_;
    FieldSpec field_;
    std::vector<FieldElement> entries_;
};

struct RrefResult {
    ExactMatrix reduced;
    std::vector<std::size_t> pivot_columns;  // strictly increasing
    std::size_t rank;
};

/// Reduced row echelon form. Pivot rule: first nonzero entry scanning
/// columns left to right, rows top to bottom; pivots normalized to 1 and
/// cleared above and below. The result is the unique RREF over the field.
RrefResult rref(const ExactMatrix& m);

/// Canonical nullspace basis read off the RREF: one vector per free column
/// in increasing free-column order, with the free coordinate set to 1.
std::vector<std::vector<FieldElement>> nullspace_basis(const ExactMatrix& m);

/// Exact membership of v in the row space of `basis`, by rank comparison.
bool in_row_space(const std::vector<FieldElement>& v,
                  const std::vector<std::vector<FieldElement>>& basis);

/// Rank of the stacked matrix; 0 for the empty list.
std::size_t span_dim(const std::vector<std::vector<FieldElement>>& vectors);

/// Least-index particular solution of a.x = b (free variables set to 0),
/// or nullopt when the system is inconsistent.
std::optional<std::vector<FieldElement>> solve(const ExactMatrix& a,
                                               const std::vector<FieldElement>& b);

/// Incremental RREF accumulator. Rows inserted in any order settle into the
/// unique RREF of their span, so the extracted basis is canonical.
class RowBasis {
public:
    RowBasis(std::size_t cols, const FieldSpec& field) : cols_(cols), field_(field) {}

    /// Reduces `row` against the current basis; inserts the remainder if
    /// nonzero. Returns true when the rank grew.
    bool insert(std::vector<FieldElement> row);

    bool contains(std::vector<FieldElement> row) const;

    std::size_t rank() const { return rows_.size(); }
    std::size_t cols() const { return cols_; }
    const FieldSpec& field() const { return field_; }

    /// RREF rows in increasing pivot order.
    const std::vector<std::vector<FieldElement>>& rows() const { return rows_; }
    const std::vector<std::size_t>& pivot_columns() const { return pivots_; }

private:
    void reduce(std::vector<FieldElement>& row) const;

    std::size_t cols_;
    FieldSpec field_;
    std::vector<std::vector<FieldElement>> rows_;
    std::vector<std::size_t> pivots_;
};

}  // namespace splitgen

#endif
