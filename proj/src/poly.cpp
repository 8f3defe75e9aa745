#include "splitgen/poly.hpp"

#include <algorithm>
#include <numeric>

namespace splitgen {

namespace {

std::size_t binom(unsigned long a, unsigned long b) {
    if (b > a) return 0;
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), a, b);
    if (!r.fits_ulong_p()) throw Error("binomial overflow");
    return r.get_ui();
}

void enumerate_monomials(unsigned vars_left, unsigned degree_left,
                         std::vector<unsigned>& prefix, std::vector<Monomial>& out) {
    if (vars_left == 1) {
        prefix.push_back(degree_left);
        out.push_back(Monomial{prefix});
        prefix.pop_back();
        return;
    }
    for (unsigned e = degree_left + 1; e-- > 0;) {
        prefix.push_back(e);
        enumerate_monomials(vars_left - 1, degree_left - e, prefix, out);
        prefix.pop_back();
    }
}

}  // namespace

unsigned Monomial::degree() const {
    return std::accumulate(exponents.begin(), exponents.end(), 0u);
}

std::size_t monomial_count(unsigned n, unsigned degree) {
    return binom(n + degree, n);
}

std::vector<Monomial> monomial_basis(unsigned n, unsigned degree) {
    std::vector<Monomial> out;
    out.reserve(monomial_count(n, degree));
    std::vector<unsigned> prefix;
    enumerate_monomials(n + 1, degree, prefix, out);
    return out;
}

std::size_t monomial_rank(const std::vector<unsigned>& exponents) {
    // Counts monomials preceding e: those agreeing on a prefix and larger at
    // the next spot; the inner sum telescopes to a single binomial.
    unsigned n = static_cast<unsigned>(exponents.size()) - 1;
    unsigned rem = std::accumulate(exponents.begin(), exponents.end(), 0u);
    std::size_t pos = 0;
    for (unsigned i = 0; i < n; ++i) {
        pos += binom(rem - exponents[i] + n - i - 1, n - i);
        rem -= exponents[i];
    }
    return pos;
}

PolyVec::PolyVec(unsigned degree, unsigned n, const FieldSpec& field)
    : degree_(degree), n_(n), field_(field),
      coeffs_(monomial_count(n, degree), FieldElement::zero(field)) {}

PolyVec::PolyVec(unsigned degree, unsigned n, std::vector<FieldElement> coeffs)
    : degree_(degree), n_(n), coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw Error("empty coefficient vector");
    field_ = coeffs_.front().field();
    if (coeffs_.size() != monomial_count(n, degree)) throw Error("dimension mismatch");
    for (const auto& c : coeffs_)
        if (c.field() != field_) throw Error("field mismatch");
}

PolyVec PolyVec::variable(unsigned i, unsigned n, const FieldSpec& field) {
    PolyVec v(1, n, field);
    v.coeffs_[i] = FieldElement::one(field);
    return v;
}

PolyVec PolyVec::linear(std::vector<FieldElement> coeffs) {
    unsigned n = static_cast<unsigned>(coeffs.size()) - 1;
    return PolyVec(1, n, std::move(coeffs));
}

const FieldElement& PolyVec::coeff(const std::vector<unsigned>& exponents) const {
    return coeffs_[monomial_rank(exponents)];
}

bool PolyVec::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(),
                       [](const FieldElement& c) { return c.is_zero(); });
}

FieldElement PolyVec::evaluate(const std::vector<FieldElement>& coords) const {
    if (coords.size() != n_ + 1) throw Error("dimension mismatch");
    // powers[i][k] = coords[i]^k
    std::vector<std::vector<FieldElement>> powers(n_ + 1);
    for (unsigned i = 0; i <= n_; ++i) {
        powers[i].reserve(degree_ + 1);
        powers[i].push_back(FieldElement::one(field_));
        for (unsigned k = 1; k <= degree_; ++k) powers[i].push_back(powers[i].back() * coords[i]);
    }
    FieldElement acc = FieldElement::zero(field_);
    auto basis = monomial_basis(n_, degree_);
    for (std::size_t j = 0; j < basis.size(); ++j) {
        if (coeffs_[j].is_zero()) continue;
        FieldElement term = coeffs_[j];
        for (unsigned i = 0; i <= n_; ++i)
            if (basis[j].exponents[i] > 0) term *= powers[i][basis[j].exponents[i]];
        acc += term;
    }
    return acc;
}

PolyVec& PolyVec::operator+=(const PolyVec& o) {
    if (degree_ != o.degree_ || n_ != o.n_) throw Error("degree mismatch");
    if (field_ != o.field_) throw Error("field mismatch");
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    return *this;
}

PolyVec PolyVec::operator-() const {
    PolyVec r(*this);
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

PolyVec PolyVec::scaled(const FieldElement& c) const {
    PolyVec r(*this);
    for (auto& x : r.coeffs_) x *= c;
    return r;
}

PolyVec multiply_linear(const PolyVec& f, const PolyVec& h) {
    if (h.degree() != 1) throw Error("degree mismatch");
    if (f.n() != h.n()) throw Error("dimension mismatch");
    if (f.field() != h.field()) throw Error("field mismatch");

    PolyVec out(f.degree() + 1, f.n(), f.field());
    auto basis = monomial_basis(f.n(), f.degree());
    for (std::size_t j = 0; j < basis.size(); ++j) {
        if (f.coeff(j).is_zero()) continue;
        for (unsigned i = 0; i <= f.n(); ++i) {
            if (h.coeff(i).is_zero()) continue;
            std::vector<unsigned> e = basis[j].exponents;
            ++e[i];
            out.coeff(monomial_rank(e)) += f.coeff(j) * h.coeff(i);
        }
    }
    return out;
}

PolyVec multiply_monomial(const PolyVec& f, const std::vector<unsigned>& mu) {
    if (mu.size() != f.n() + 1) throw Error("dimension mismatch");
    unsigned extra = std::accumulate(mu.begin(), mu.end(), 0u);
    PolyVec out(f.degree() + extra, f.n(), f.field());
    auto basis = monomial_basis(f.n(), f.degree());
    for (std::size_t j = 0; j < basis.size(); ++j) {
        if (f.coeff(j).is_zero()) continue;
        std::vector<unsigned> e = basis[j].exponents;
        for (std::size_t i = 0; i < e.size(); ++i) e[i] += mu[i];
        out.coeff(monomial_rank(e)) = f.coeff(j);
    }
    return out;
}

PolyVec product_of_linears(const std::vector<PolyVec>& hs) {
    if (hs.empty()) throw Error("empty product");
    PolyVec acc = hs.front();
    for (std::size_t i = 1; i < hs.size(); ++i) acc = multiply_linear(acc, hs[i]);
    return acc;
}

namespace {

// Shared ladder: climbs degree by degree, multiplying the current canonical
// basis by every variable and folding in same-degree generators.
RowBasis slice_ladder(const std::vector<PolyVec>& gens, unsigned n, const FieldSpec& field,
                      unsigned t, std::vector<std::size_t>* dims, unsigned record_from) {
    std::vector<std::vector<const PolyVec*>> by_degree(t + 1);
    for (const auto& g : gens) {
        if (g.n() != n) throw Error("dimension mismatch");
        if (g.field() != field) throw Error("field mismatch");
        if (g.degree() <= t) by_degree[g.degree()].push_back(&g);
    }
    unsigned start = 0;
    while (start <= t && by_degree[start].empty()) ++start;

    RowBasis basis(monomial_count(n, t), field);
    if (start > t) {
        if (dims)
            for (unsigned s = record_from; s <= t; ++s) dims->push_back(0);
        return basis;
    }

    RowBasis current(monomial_count(n, start), field);
    for (const PolyVec* g : by_degree[start]) current.insert(g->coeffs());
    if (dims)
        for (unsigned s = record_from; s < start; ++s) dims->push_back(0);
    if (dims && start >= record_from) dims->push_back(current.rank());

    for (unsigned s = start + 1; s <= t; ++s) {
        RowBasis next(monomial_count(n, s), field);
        for (const auto& row : current.rows()) {
            PolyVec f(s - 1, n, row);
            for (unsigned i = 0; i <= n; ++i)
                next.insert(multiply_linear(f, PolyVec::variable(i, n, field)).coeffs());
        }
        for (const PolyVec* g : by_degree[s]) next.insert(g->coeffs());
        if (dims && s >= record_from) dims->push_back(next.rank());
        current = std::move(next);
    }
    return current;
}

}  // namespace

std::vector<PolyVec> ideal_slice_from_generators(const std::vector<PolyVec>& gens, unsigned t) {
    if (gens.empty()) return {};
    unsigned n = gens.front().n();
    RowBasis b = slice_ladder(gens, n, gens.front().field(), t, nullptr, 0);
    std::vector<PolyVec> out;
    out.reserve(b.rank());
    for (const auto& row : b.rows()) out.emplace_back(t, n, row);
    return out;
}

std::vector<std::size_t> ideal_slice_dims(const std::vector<PolyVec>& gens, unsigned first_degree,
                                          unsigned t) {
    std::vector<std::size_t> dims;
    if (gens.empty()) {
        dims.assign(t - first_degree + 1, 0);
        return dims;
    }
    slice_ladder(gens, gens.front().n(), gens.front().field(), t, &dims, first_degree);
    return dims;
}

std::vector<std::vector<FieldElement>> coefficient_rows(const std::vector<PolyVec>& forms) {
    std::vector<std::vector<FieldElement>> rows;
    rows.reserve(forms.size());
    for (const auto& f : forms) {
        if (f.degree() != forms.front().degree() || f.n() != forms.front().n())
            throw Error("degree mismatch");
        rows.push_back(f.coeffs());
    }
    return rows;
}

std::vector<PolyVec> canonical_span_basis(const std::vector<PolyVec>& forms) {
    if (forms.empty()) return {};
    RowBasis rb(forms.front().coeffs().size(), forms.front().field());
    for (const auto& f : forms) {
        if (f.degree() != forms.front().degree() || f.n() != forms.front().n())
            throw Error("degree mismatch");
        rb.insert(f.coeffs());
    }
    std::vector<PolyVec> out;
    out.reserve(rb.rank());
    for (const auto& row : rb.rows())
        out.emplace_back(forms.front().degree(), forms.front().n(), row);
    return out;
}

}  // namespace splitgen
