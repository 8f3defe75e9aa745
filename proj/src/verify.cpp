#include "splitgen/verify.hpp"

#include "splitgen/ideal.hpp"

namespace splitgen {

namespace {

unsigned ceil_div(std::size_t a, unsigned b) {
    return static_cast<unsigned>((a + b - 1) / b);
}

void add_row(std::vector<EvidenceRow>& rows, std::string label, mpz_class lhs, mpz_class rhs) {
    bool ok = lhs == rhs;
    rows.push_back(EvidenceRow{std::move(label), std::move(lhs), std::move(rhs), ok});
}

bool all_ok(const std::vector<EvidenceRow>& rows) {
    for (const auto& r : rows)
        if (!r.ok) return false;
    return true;
}

bool vanishes_on(const PolyVec& f, const PointSet& gamma) {
    for (std::size_t i = 0; i < gamma.size(); ++i)
        if (!f.evaluate(gamma[i].coords()).is_zero()) return false;
    return true;
}

std::size_t count_vanishing(const std::vector<PolyVec>& forms, const PointSet& gamma) {
    std::size_t count = 0;
    for (const auto& f : forms)
        if (vanishes_on(f, gamma)) ++count;
    return count;
}

void require_lgp(const PointSet& gamma) {
    if (!is_lgp(gamma)) throw Error("point set not in linearly general position");
}

}  // namespace

VerifyReport verify_span_theorem(const PointSet& gamma, unsigned l) {
    require_lgp(gamma);
    unsigned n = gamma.n();
    std::size_t d = gamma.size();
    VerifyReport report{"span", n, d, l, gamma.field(), {}, false};

    std::vector<PolyVec> phi = phi_span_basis(gamma, l);
    unsigned threshold = d == 0 ? 0 : ceil_div(d, n);
    if (l < threshold) {
        add_row(report.evidence, "phi-empty", phi.size(), 0);
    } else {
        std::size_t dim_ideal = ideal_dim(gamma, l);
        add_row(report.evidence, "span-dim", span_dim(coefficient_rows(phi)), dim_ideal);
        add_row(report.evidence, "vanishing", count_vanishing(phi, gamma), phi.size());
        if (d <= static_cast<std::size_t>(l) * n + 1)
            add_row(report.evidence, "normality", dim_ideal, monomial_count(n, l) - d);
    }
    report.passed = all_ok(report.evidence);
    return report;
}

VerifyReport verify_multiplication(const PointSet& gamma, unsigned m) {
    if (m < 2) throw Error("m must be at least 2");
    require_lgp(gamma);
    unsigned n = gamma.n();
    std::size_t d = gamma.size();
    if (d > static_cast<std::size_t>(m) * n) throw Error("degree too small for this d");
    VerifyReport report{"mult", n, d, m, gamma.field(), {}, false};

    std::vector<PolyVec> phi = phi_span_basis(gamma, m);
    RowBasis products(monomial_count(n, m + 1), gamma.field());
    for (const auto& g : phi)
        for (unsigned i = 0; i <= n; ++i)
            products.insert(multiply_linear(g, PolyVec::variable(i, n, gamma.field())).coeffs());

    std::size_t dim_ideal = ideal_dim(gamma, m + 1);
    add_row(report.evidence, "product-span", products.rank(), dim_ideal);
    add_row(report.evidence, "normality", dim_ideal, monomial_count(n, m + 1) - d);
    report.passed = all_ok(report.evidence);
    return report;
}

VerifyReport verify_main(const Certificate& cert, unsigned max_degree) {
    unsigned m = cert.m;
    if (max_degree < m + 1) throw Error("max_degree must exceed m");
    VerifyReport report{"main", cert.points.n(), cert.points.size(),
                        m,      cert.points.field(), {}, false};

    std::vector<std::size_t> extended;
    if (max_degree > m + 2) {
        std::vector<PolyVec> gens = cert.lower_degree_basis;
        for (const auto& g : cert.generators) gens.push_back(g.form);
        extended = ideal_slice_dims(gens, m, max_degree);
    }
    for (unsigned t = m; t <= max_degree; ++t) {
        std::size_t dim_generated, dim_ideal;
        if (t <= m + 2) {
            const DegreeDims& row = cert.verification[t - 1];
            dim_generated = row.dim_generated;
            dim_ideal = row.dim_ideal;
        } else {
            dim_generated = extended[t - m];
            dim_ideal = ideal_dim(cert.points, t);
        }
        add_row(report.evidence, "deg-" + std::to_string(t), dim_generated, dim_ideal);
    }
    report.passed = all_ok(report.evidence);
    return report;
}

VerifyReport verify_main(const PointSet& gamma, unsigned m, unsigned max_degree) {
    return verify_main(generating_set(gamma, m), max_degree);
}

VerifyReport verify_lemma_sum(const PointSet& gamma0, std::size_t x_index, std::size_t y_index,
                              unsigned l) {
    if (gamma0.size() < 2) throw Error("point set too small");
    if (x_index >= gamma0.size() || y_index >= gamma0.size()) throw Error("index out of range");
    if (x_index == y_index) throw Error("indices must differ");
    require_lgp(gamma0);

    unsigned n = gamma0.n();
    std::size_t d = gamma0.size() - 2;
    if (l < ceil_div(d + 1, n)) throw Error("degree below lemma threshold");
    VerifyReport report{"lemma-sum", n, d, l, gamma0.field(), {}, false};

    std::vector<std::size_t> keep_g, keep_g1, keep_g2;
    for (std::size_t i = 0; i < gamma0.size(); ++i) {
        if (i != x_index && i != y_index) keep_g.push_back(i);
        if (i != y_index) keep_g1.push_back(i);
        if (i != x_index) keep_g2.push_back(i);
    }
    PointSet gamma = gamma0.subset(keep_g);
    std::vector<PolyVec> b1 = ideal_piece(gamma0.subset(keep_g1), l);
    std::vector<PolyVec> b2 = ideal_piece(gamma0.subset(keep_g2), l);

    std::vector<std::vector<FieldElement>> stacked = coefficient_rows(b1);
    for (const auto& f : b2) stacked.push_back(f.coeffs());

    mpz_class c = monomial_count(n, l);
    std::size_t dim_gamma = ideal_dim(gamma, l);
    add_row(report.evidence, "sum-dim", span_dim(stacked), dim_gamma);
    add_row(report.evidence, "g-dim", dim_gamma, c - d);
    add_row(report.evidence, "g1-dim", b1.size(), c - (d + 1));
    add_row(report.evidence, "g2-dim", b2.size(), c - (d + 1));
    add_row(report.evidence, "g0-dim", ideal_dim(gamma0, l), c - (d + 2));
    report.passed = all_ok(report.evidence);
    return report;
}

std::size_t quadric_rank(const PolyVec& q) {
    if (q.degree() != 2) throw Error("degree mismatch");
    FieldSpec field = q.field();
    if (field.kind == FieldKind::PrimeField && field.modulus == 2)
        throw Error("rank undefined in char 2 via symmetric matrix");
    unsigned n = q.n();
    FieldElement half = FieldElement::from_integer(2, field).inverse();

    ExactMatrix g(n + 1, n + 1, field);
    for (unsigned i = 0; i <= n; ++i) {
        for (unsigned j = i; j <= n; ++j) {
            std::vector<unsigned> e(n + 1, 0);
            ++e[i];
            ++e[j];
            FieldElement entry = q.coeff(monomial_rank(e));
            if (i != j) entry *= half;
            g.at(i, j) = entry;
            g.at(j, i) = entry;
        }
    }
    return rref(g).rank;
}

}  // namespace splitgen
