#include "splitgen/split.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace splitgen {

namespace {

// Visits every k-subset of the sorted pool, lexicographically.
void for_each_subset(const std::vector<std::size_t>& pool, std::size_t k, std::size_t start,
                     std::vector<std::size_t>& cur,
                     const std::function<void(const std::vector<std::size_t>&)>& fn) {
    if (cur.size() == k) {
        fn(cur);
        return;
    }
    for (std::size_t i = start; i + (k - cur.size()) <= pool.size(); ++i) {
        cur.push_back(pool[i]);
        for_each_subset(pool, k, i + 1, cur, fn);
        cur.pop_back();
    }
}

std::vector<std::size_t> without(const std::vector<std::size_t>& pool,
                                 const std::vector<std::size_t>& block) {
    std::vector<std::size_t> rest;
    rest.reserve(pool.size() - block.size());
    for (std::size_t v : pool)
        if (!std::binary_search(block.begin(), block.end(), v)) rest.push_back(v);
    return rest;
}

// Anchored partition enumeration: the block holding the smallest unassigned
// index comes first, so each unordered partition is visited exactly once and
// in canonical order. Blocks have size exactly `size` here.
void equal_blocks_rec(const std::vector<std::size_t>& avail, unsigned size,
                      std::vector<std::vector<std::size_t>>& acc,
                      const std::function<void(const std::vector<std::vector<std::size_t>>&)>& emit) {
    if (avail.empty()) {
        emit(acc);
        return;
    }
    std::vector<std::size_t> tail(avail.begin() + 1, avail.end());
    std::vector<std::size_t> companions;
    for_each_subset(tail, size - 1, 0, companions, [&](const std::vector<std::size_t>& c) {
        std::vector<std::size_t> block;
        block.reserve(size);
        block.push_back(avail.front());
        block.insert(block.end(), c.begin(), c.end());
        acc.push_back(block);
        equal_blocks_rec(without(tail, c), size, acc, emit);
        acc.pop_back();
    });
}

// Same anchoring, blocks of any size 1..n, at most `slots` blocks. Prunes
// branches that cannot absorb the remaining indices.
void assignments_rec(const std::vector<std::size_t>& avail, unsigned n, unsigned slots,
                     std::vector<std::vector<std::size_t>>& acc,
                     const std::function<void(const std::vector<std::vector<std::size_t>>&)>& emit) {
    if (avail.empty()) {
        emit(acc);
        return;
    }
    if (slots == 0 || avail.size() > static_cast<std::size_t>(slots) * n) return;
    std::vector<std::size_t> tail(avail.begin() + 1, avail.end());
    unsigned max_size = std::min<std::size_t>(n, avail.size());
    for (unsigned s = 1; s <= max_size; ++s) {
        std::vector<std::size_t> companions;
        for_each_subset(tail, s - 1, 0, companions, [&](const std::vector<std::size_t>& c) {
            std::vector<std::size_t> block;
            block.reserve(s);
            block.push_back(avail.front());
            block.insert(block.end(), c.begin(), c.end());
            acc.push_back(block);
            assignments_rec(without(tail, c), n, slots - 1, acc, emit);
            acc.pop_back();
        });
    }
}

std::vector<std::size_t> iota_indices(std::size_t d) {
    std::vector<std::size_t> v(d);
    for (std::size_t i = 0; i < d; ++i) v[i] = i;
    return v;
}

}  // namespace

Partition Partition::canonical(std::vector<std::vector<std::size_t>> blocks) {
    for (auto& b : blocks) {
        if (b.empty()) throw Error("empty block");
        std::sort(b.begin(), b.end());
    }
    std::sort(blocks.begin(), blocks.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    std::vector<std::size_t> all;
    for (const auto& b : blocks) all.insert(all.end(), b.begin(), b.end());
    std::sort(all.begin(), all.end());
    if (std::adjacent_find(all.begin(), all.end()) != all.end())
        throw Error("overlapping blocks");
    return Partition{std::move(blocks)};
}

mpz_class split_degree(unsigned n, unsigned l) {
    if (n < 1 || l < 1) throw Error("parameters must be positive");
    mpz_class num, nf, lf, den;
    mpz_fac_ui(num.get_mpz_t(), static_cast<unsigned long>(l) * n);
    mpz_fac_ui(nf.get_mpz_t(), n);
    mpz_fac_ui(lf.get_mpz_t(), l);
    mpz_pow_ui(den.get_mpz_t(), nf.get_mpz_t(), l);
    den *= lf;
    return num / den;
}

std::vector<Partition> partitions_equal_blocks(std::size_t d, unsigned m, unsigned n) {
    if (n < 1 || m < 1) throw Error("parameters must be positive");
    if (d != static_cast<std::size_t>(m) * n) throw Error("d must equal m*n");
    std::vector<Partition> out;
    std::vector<std::vector<std::size_t>> acc;
    equal_blocks_rec(iota_indices(d), n, acc,
                     [&](const std::vector<std::vector<std::size_t>>& blocks) {
                         out.push_back(Partition{blocks});
                     });
    return out;
}

std::vector<SigmaGenerator> sigma_generators(const PointSet& gamma, unsigned m) {
    if (m < 2) throw Error("m must be at least 2");
    if (gamma.size() != static_cast<std::size_t>(m) * gamma.n())
        throw Error("point count must equal m*n");
    if (!is_lgp(gamma)) throw Error("point set not in linearly general position");

    std::map<std::vector<std::size_t>, PolyVec> hyperplanes;
    auto hyperplane = [&](const std::vector<std::size_t>& block) -> const PolyVec& {
        auto it = hyperplanes.find(block);
        if (it == hyperplanes.end())
            it = hyperplanes.emplace(block, linear_forms_vanishing_on(gamma, block).front()).first;
        return it->second;
    };

    std::vector<SigmaGenerator> out;
    for (auto& part : partitions_equal_blocks(gamma.size(), m, gamma.n())) {
        std::vector<PolyVec> hs;
        hs.reserve(part.blocks.size());
        for (const auto& b : part.blocks) hs.push_back(hyperplane(b));
        out.push_back(SigmaGenerator{product_of_linears(hs), std::move(part)});
    }
    return out;
}

std::vector<PolyVec> phi_span_basis(const PointSet& gamma, unsigned l) {
    if (l < 1) throw Error("degree must be positive");
    if (!is_lgp(gamma)) throw Error("point set not in linearly general position");
    unsigned n = gamma.n();
    const FieldSpec field = gamma.field();
    RowBasis basis(monomial_count(n, l), field);

    std::map<std::vector<std::size_t>, std::vector<PolyVec>> block_forms;
    auto forms_of = [&](const std::vector<std::size_t>& block) -> const std::vector<PolyVec>& {
        auto it = block_forms.find(block);
        if (it == block_forms.end())
            it = block_forms.emplace(block, linear_forms_vanishing_on(gamma, block)).first;
        return it->second;
    };

    std::vector<std::vector<Monomial>> fill_monomials(l + 1);
    auto monomials_of = [&](unsigned degree) -> const std::vector<Monomial>& {
        if (fill_monomials[degree].empty()) fill_monomials[degree] = monomial_basis(n, degree);
        return fill_monomials[degree];
    };

    // Cartesian product of the block bases, multiplying as it descends; the
    // factors a partition leaves free contribute every missing-degree
    // monomial (variables are themselves linear forms).
    auto emit = [&](const std::vector<std::vector<std::size_t>>& blocks) {
        unsigned free_degree = l - static_cast<unsigned>(blocks.size());
        std::function<void(std::size_t, const PolyVec*)> descend =
            [&](std::size_t next, const PolyVec* partial) {
                if (next == blocks.size()) {
                    if (partial == nullptr) {
                        for (const auto& mu : monomials_of(l)) {
                            PolyVec f(l, n, field);
                            f.coeff(monomial_rank(mu.exponents)) = FieldElement::one(field);
                            basis.insert(f.coeffs());
                        }
                    } else if (free_degree == 0) {
                        basis.insert(partial->coeffs());
                    } else {
                        for (const auto& mu : monomials_of(free_degree))
                            basis.insert(multiply_monomial(*partial, mu.exponents).coeffs());
                    }
                    return;
                }
                for (const auto& h : forms_of(blocks[next])) {
                    PolyVec grown = partial ? multiply_linear(*partial, h) : h;
                    descend(next + 1, &grown);
                }
            };
        descend(0, nullptr);
    };

    std::vector<std::vector<std::size_t>> acc;
    assignments_rec(iota_indices(gamma.size()), n, l, acc, emit);

    std::vector<PolyVec> out;
    out.reserve(basis.rank());
    for (const auto& row : basis.rows()) out.emplace_back(l, n, row);
    return out;
}

Certificate generating_set(const PointSet& gamma, unsigned m) {
    unsigned n = gamma.n();
    std::size_t d = gamma.size();
    if (m < 2) throw Error("m must be at least 2");
    if (d > static_cast<std::size_t>(m) * n) throw Error("degree too small for this d");
    if (!is_lgp(gamma)) throw Error("point set not in linearly general position");

    std::vector<CertGenerator> gens;
    if (d == static_cast<std::size_t>(m) * n) {
        for (auto& sg : sigma_generators(gamma, m))
            gens.push_back(CertGenerator{std::move(sg.form), std::move(sg.partition), {}});
    } else {
        std::size_t eps = static_cast<std::size_t>(m) * n - d;
        PointSet g0 = extend_lgp(gamma, eps + 1);
        for (std::size_t j = 0; j <= eps; ++j) {
            std::vector<std::size_t> keep = iota_indices(d);
            std::vector<Point> aug;
            for (std::size_t i = d; i < g0.size(); ++i) {
                if (i == d + j) continue;
                keep.push_back(i);
                aug.push_back(g0[i]);
            }
            PointSet gj = g0.subset(keep);
            for (auto& sg : sigma_generators(gj, m))
                gens.push_back(CertGenerator{std::move(sg.form), std::move(sg.partition), aug});
        }
    }

    std::vector<PolyVec> lower;
    for (unsigned t = 1; t + 1 <= m; ++t)
        for (auto& f : ideal_piece(gamma, t)) lower.push_back(std::move(f));

    std::vector<PolyVec> all = lower;
    all.reserve(lower.size() + gens.size());
    for (const auto& g : gens) all.push_back(g.form);

    std::vector<std::size_t> generated = ideal_slice_dims(all, 1, m + 2);
    std::vector<DegreeDims> table;
    bool ok = true;
    for (unsigned t = 1; t <= m + 2; ++t) {
        std::size_t dim_ideal = ideal_dim(gamma, t);
        std::size_t dim_generated = generated[t - 1];
        bool equal = dim_ideal == dim_generated;
        ok = ok && equal;
        table.push_back(DegreeDims{t, dim_ideal, dim_generated, equal});
    }
    return Certificate{gamma, m, std::move(gens), std::move(lower), std::move(table), ok};
}

PolyVec reconstruct_generator(const PointSet& base, const CertGenerator& g) {
    PointSet all = base;
    for (const auto& p : g.augmented) all.append(p);
    std::vector<PolyVec> hs;
    hs.reserve(g.partition.blocks.size());
    for (const auto& b : g.partition.blocks) {
        if (b.size() != all.n()) throw Error("block size mismatch");
        hs.push_back(linear_forms_vanishing_on(all, b).front());
    }
    return product_of_linears(hs);
}

std::pair<PolyVec, PolyVec> decompose_in_sum(const PolyVec& f, const PointSet& gamma1,
                                             const PointSet& gamma2, unsigned l) {
    if (f.degree() != l || f.n() != gamma1.n() || f.n() != gamma2.n())
        throw Error("dimension mismatch");
    if (f.field() != gamma1.field() || f.field() != gamma2.field())
        throw Error("field mismatch");

    std::vector<PolyVec> b1 = ideal_piece(gamma1, l);
    std::vector<PolyVec> b2 = ideal_piece(gamma2, l);
    std::size_t rows = f.coeffs().size();
    ExactMatrix a(rows, b1.size() + b2.size(), f.field());
    for (std::size_t j = 0; j < b1.size(); ++j)
        for (std::size_t i = 0; i < rows; ++i) a.at(i, j) = b1[j].coeff(i);
    for (std::size_t j = 0; j < b2.size(); ++j)
        for (std::size_t i = 0; i < rows; ++i) a.at(i, b1.size() + j) = b2[j].coeff(i);

    auto sol = solve(a, f.coeffs());
    if (!sol) throw Error("sum decomposition failed");

    PolyVec f1(l, f.n(), f.field());
    PolyVec f2(l, f.n(), f.field());
    for (std::size_t j = 0; j < b1.size(); ++j) f1 += b1[j].scaled((*sol)[j]);
    for (std::size_t j = 0; j < b2.size(); ++j) f2 += b2[j].scaled((*sol)[b1.size() + j]);
    return {std::move(f1), std::move(f2)};
}

}  // namespace splitgen
