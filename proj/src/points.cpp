#include "splitgen/points.hpp"

#include <algorithm>

namespace splitgen {

namespace {

// Visits all k-subsets of {0..pool-1} in lexicographic order; stops early
// when the visitor returns false.
template <typename Visit>
bool for_each_combination(std::size_t pool, std::size_t k, Visit visit) {
    if (k == 0 || k > pool) return true;
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        if (!visit(idx)) return false;
        std::size_t i = k;
        while (i-- > 0) {
            if (idx[i] + (k - i) <= pool - 1 + 0) {
                ++idx[i];
                for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
                break;
            }
            if (i == 0) return true;
        }
    }
}

bool rows_independent(const std::vector<std::vector<FieldElement>>& rows) {
    return span_dim(rows) == rows.size();
}

std::vector<FieldElement> canonical_hyperplane(std::vector<FieldElement> v) {
    if (v.front().field().kind == FieldKind::Rationals) {
        mpz_class scale = 1;
        for (const auto& c : v) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(),
                                        c.rational().get_den().get_mpz_t());
        mpz_class g = 0;
        for (const auto& c : v) {
            mpz_class num = c.rational().get_num() * (scale / c.rational().get_den());
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), num.get_mpz_t());
        }
        mpq_class factor(scale, g);
        factor.canonicalize();
        FieldElement s = FieldElement::from_rational(factor);
        for (auto& c : v) c *= s;
        for (const auto& c : v) {
            if (c.is_zero()) continue;
            if (c.rational() < 0)
                for (auto& x : v) x = -x;
            break;
        }
    } else {
        for (const auto& c : v) {
            if (c.is_zero()) continue;
            FieldElement s = c.inverse();
            for (auto& x : v) x *= s;
            break;
        }
    }
    return v;
}

// Assumes gamma is already in linearly general position; checks only the
// subsets that involve the candidate.
bool keeps_lgp(const PointSet& gamma, const Point& cand) {
    std::size_t d = gamma.size() + 1;
    std::size_t k = std::min<std::size_t>(gamma.n() + 1, d);
    if (k <= 1) return true;
    return for_each_combination(gamma.size(), k - 1, [&](const std::vector<std::size_t>& idx) {
        std::vector<std::vector<FieldElement>> rows;
        rows.reserve(k);
        for (std::size_t i : idx) rows.push_back(gamma[i].coords());
        rows.push_back(cand.coords());
        return rows_independent(rows);
    });
}

}  // namespace

Point::Point(std::vector<FieldElement> raw) : coords_(std::move(raw)) {
    if (coords_.empty()) throw Error("not a projective point");
    FieldSpec f = coords_.front().field();
    for (const auto& c : coords_)
        if (c.field() != f) throw Error("field mismatch");
    auto lead = std::find_if(coords_.begin(), coords_.end(),
                             [](const FieldElement& c) { return !c.is_zero(); });
    if (lead == coords_.end()) throw Error("not a projective point");
    FieldElement s = lead->inverse();
    for (auto& c : coords_) c *= s;
}

Point normalize_point(std::vector<FieldElement> raw) { return Point(std::move(raw)); }

PointSet::PointSet(unsigned n, const FieldSpec& field, std::vector<Point> points)
    : n_(n), field_(field) {
    for (auto& p : points) append(std::move(p));
}

void PointSet::append(Point p) {
    if (p.n() != n_) throw Error("dimension mismatch");
    if (p.field() != field_) throw Error("field mismatch");
    if (contains(p)) throw Error("duplicate point");
    points_.push_back(std::move(p));
}

bool PointSet::contains(const Point& p) const {
    return std::find(points_.begin(), points_.end(), p) != points_.end();
}

PointSet PointSet::subset(const std::vector<std::size_t>& indices) const {
    PointSet out(n_, field_);
    for (std::size_t i : indices) {
        if (i >= points_.size()) throw Error("index out of range");
        out.append(points_[i]);
    }
    return out;
}

bool is_lgp(const PointSet& gamma) {
    std::size_t d = gamma.size();
    std::size_t k = std::min<std::size_t>(gamma.n() + 1, d);
    if (k <= 1) return true;
    return for_each_combination(d, k, [&](const std::vector<std::size_t>& idx) {
        std::vector<std::vector<FieldElement>> rows;
        rows.reserve(k);
        for (std::size_t i : idx) rows.push_back(gamma[i].coords());
        return rows_independent(rows);
    });
}

PointSet moment_curve_points(unsigned n, const FieldSpec& field,
                             const std::vector<FieldElement>& params) {
    for (std::size_t i = 0; i < params.size(); ++i)
        for (std::size_t j = i + 1; j < params.size(); ++j)
            if (params[i] == params[j]) throw Error("repeated parameter");
    PointSet out(n, field);
    for (const auto& t : params) {
        std::vector<FieldElement> coords;
        coords.reserve(n + 1);
        coords.push_back(FieldElement::one(field));
        for (unsigned i = 1; i <= n; ++i) coords.push_back(coords.back() * t);
        out.append(Point(std::move(coords)));
    }
    return out;
}

std::vector<PolyVec> linear_forms_vanishing_on(const PointSet& gamma,
                                               const std::vector<std::size_t>& block) {
    unsigned n = gamma.n();
    if (block.size() > n) throw Error("block too large");
    std::vector<std::vector<FieldElement>> rows;
    rows.reserve(block.size());
    for (std::size_t i : block) {
        if (i >= gamma.size()) throw Error("index out of range");
        rows.push_back(gamma[i].coords());
    }
    ExactMatrix m(block.size(), n + 1, gamma.field());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j <= n; ++j) m.at(i, j) = rows[i][j];
    RrefResult r = rref(m);
    if (r.rank < block.size()) throw Error("block not independent");
    std::vector<PolyVec> forms;
    for (auto& v : nullspace_basis(m)) {
        if (block.size() == n) v = canonical_hyperplane(std::move(v));
        forms.push_back(PolyVec::linear(std::move(v)));
    }
    return forms;
}

PointSet extend_lgp(const PointSet& gamma, std::size_t count) {
    PointSet out = gamma;
    const FieldSpec field = gamma.field();
    for (std::size_t added = 0; added < count; ++added) {
        bool found = false;
        for (std::uint64_t t = 0;; ++t) {
            if (field.kind == FieldKind::PrimeField && t >= field.modulus) break;
            FieldElement param = FieldElement::from_integer(static_cast<long>(t), field);
            std::vector<FieldElement> coords;
            coords.reserve(gamma.n() + 1);
            coords.push_back(FieldElement::one(field));
            for (unsigned i = 1; i <= gamma.n(); ++i) coords.push_back(coords.back() * param);
            Point cand(std::move(coords));
            if (out.contains(cand)) continue;
            if (keeps_lgp(out, cand)) {
                out.append(cand);
                found = true;
                break;
            }
        }
        if (!found) throw Error("field too small");
    }
    return out;
}

}  // namespace splitgen
