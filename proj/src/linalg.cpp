#include "splitgen/linalg.hpp"

#include <algorithm>

namespace splitgen {

ExactMatrix::ExactMatrix(std::size_t rows, std::size_t cols, const FieldSpec& field)
    : rows_(rows), cols_(cols), field_(field),
      entries_(rows * cols, FieldElement::zero(field)) {}

ExactMatrix ExactMatrix::from_rows(const std::vector<std::vector<FieldElement>>& rows,
                                   const FieldSpec& field) {
    std::size_t cols = rows.empty() ? 0 : rows.front().size();
    ExactMatrix m(rows.size(), cols, field);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) throw Error("dimension mismatch");
        for (std::size_t j = 0; j < cols; ++j) {
            if (rows[i][j].field() != field) throw Error("field mismatch");
            m.at(i, j) = rows[i][j];
        }
    }
    return m;
}

std::vector<FieldElement> ExactMatrix::row(std::size_t i) const {
    return {entries_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
            entries_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_)};
}

bool ExactMatrix::operator==(const ExactMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && field_ == o.field_ && entries_ == o.entries_;
}

RrefResult rref(const ExactMatrix& m) {
    ExactMatrix r = m;
    std::vector<std::size_t> pivots;
    std::size_t lead = 0;
    for (std::size_t col = 0; col < r.cols() && lead < r.rows(); ++col) {
        std::size_t sel = lead;
        while (sel < r.rows() && r.at(sel, col).is_zero()) ++sel;
        if (sel == r.rows()) continue;
        if (sel != lead)
            for (std::size_t j = 0; j < r.cols(); ++j) std::swap(r.at(lead, j), r.at(sel, j));
        FieldElement inv = r.at(lead, col).inverse();
        for (std::size_t j = col; j < r.cols(); ++j) r.at(lead, j) *= inv;
        for (std::size_t i = 0; i < r.rows(); ++i) {
            if (i == lead || r.at(i, col).is_zero()) continue;
            FieldElement f = r.at(i, col);
            for (std::size_t j = col; j < r.cols(); ++j) {
                if (r.at(lead, j).is_zero()) continue;
                r.at(i, j) -= f * r.at(lead, j);
            }
        }
        pivots.push_back(col);
        ++lead;
    }
    std::size_t rank = pivots.size();
    return {std::move(r), std::move(pivots), rank};
}

std::vector<std::vector<FieldElement>> nullspace_basis(const ExactMatrix& m) {
    RrefResult r = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t c : r.pivot_columns) is_pivot[c] = true;

    std::vector<std::vector<FieldElement>> basis;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        std::vector<FieldElement> v(m.cols(), FieldElement::zero(m.field()));
        v[f] = FieldElement::one(m.field());
        for (std::size_t i = 0; i < r.rank; ++i)
            v[r.pivot_columns[i]] = -r.reduced.at(i, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

bool in_row_space(const std::vector<FieldElement>& v,
                  const std::vector<std::vector<FieldElement>>& basis) {
    if (basis.empty()) {
        for (const auto& e : v)
            if (!e.is_zero()) return false;
        return true;
    }
    RowBasis rb(basis.front().size(), basis.front().front().field());
    for (const auto& b : basis) {
        if (b.size() != basis.front().size()) throw Error("dimension mismatch");
        rb.insert(b);
    }
    if (v.size() != rb.cols()) throw Error("dimension mismatch");
    return rb.contains(v);
}

std::size_t span_dim(const std::vector<std::vector<FieldElement>>& vectors) {
    if (vectors.empty()) return 0;
    RowBasis rb(vectors.front().size(), vectors.front().front().field());
    for (const auto& v : vectors) {
        if (v.size() != vectors.front().size()) throw Error("dimension mismatch");
        rb.insert(v);
    }
    return rb.rank();
}

std::optional<std::vector<FieldElement>> solve(const ExactMatrix& a,
                                               const std::vector<FieldElement>& b) {
    if (b.size() != a.rows()) throw Error("dimension mismatch");
    ExactMatrix aug(a.rows(), a.cols() + 1, a.field());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
        if (b[i].field() != a.field()) throw Error("field mismatch");
        aug.at(i, a.cols()) = b[i];
    }
    RrefResult r = rref(aug);
    if (!r.pivot_columns.empty() && r.pivot_columns.back() == a.cols())
        return std::nullopt;  // inconsistent
    std::vector<FieldElement> x(a.cols(), FieldElement::zero(a.field()));
    for (std::size_t i = 0; i < r.rank; ++i)
        x[r.pivot_columns[i]] = r.reduced.at(i, a.cols());
    return x;
}

void RowBasis::reduce(std::vector<FieldElement>& row) const {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        const FieldElement& c = row[pivots_[i]];
        if (c.is_zero()) continue;
        FieldElement f = c;  // pivot entry is 1, so f is the full multiplier
        const auto& prow = rows_[i];
        for (std::size_t j = pivots_[i]; j < cols_; ++j) {
            if (prow[j].is_zero()) continue;
            row[j] -= f * prow[j];
        }
    }
}

bool RowBasis::insert(std::vector<FieldElement> row) {
    if (row.size() != cols_) throw Error("dimension mismatch");
    reduce(row);
    std::size_t lead = 0;
    while (lead < cols_ && row[lead].is_zero()) ++lead;
    if (lead == cols_) return false;

    FieldElement inv = row[lead].inverse();
    for (std::size_t j = lead; j < cols_; ++j) row[j] *= inv;

    for (std::size_t i = 0; i < rows_.size(); ++i) {
        FieldElement c = rows_[i][lead];
        if (c.is_zero()) continue;
        for (std::size_t j = lead; j < cols_; ++j) {
            if (row[j].is_zero()) continue;
            rows_[i][j] -= c * row[j];
        }
    }

    auto pos = std::upper_bound(pivots_.begin(), pivots_.end(), lead) - pivots_.begin();
    pivots_.insert(pivots_.begin() + pos, lead);
    rows_.insert(rows_.begin() + pos, std::move(row));
    return true;
}

bool RowBasis::contains(std::vector<FieldElement> row) const {
    if (row.size() != cols_) throw Error("dimension mismatch");
    reduce(row);
    return std::all_of(row.begin(), row.end(),
                       [](const FieldElement& e) { return e.is_zero(); });
}

}  // namespace splitgen
