#include "splitgen/ideal.hpp"

namespace splitgen {

ExactMatrix eval_matrix(const PointSet& gamma, unsigned l) {
    unsigned n = gamma.n();
    auto basis = monomial_basis(n, l);
    ExactMatrix m(gamma.size(), basis.size(), gamma.field());
    for (std::size_t i = 0; i < gamma.size(); ++i) {
        // powers[v][k] = v-th coordinate to the k-th power
        std::vector<std::vector<FieldElement>> powers(n + 1);
        for (unsigned v = 0; v <= n; ++v) {
            powers[v].reserve(l + 1);
            powers[v].push_back(FieldElement::one(gamma.field()));
            for (unsigned k = 1; k <= l; ++k) powers[v].push_back(powers[v].back() * gamma[i][v]);
        }
        for (std::size_t j = 0; j < basis.size(); ++j) {
            FieldElement value = FieldElement::one(gamma.field());
            for (unsigned v = 0; v <= n; ++v)
                if (basis[j].exponents[v] > 0) value *= powers[v][basis[j].exponents[v]];
            m.at(i, j) = value;
        }
    }
    return m;
}

std::vector<PolyVec> ideal_piece(const PointSet& gamma, unsigned l) {
    auto vectors = nullspace_basis(eval_matrix(gamma, l));
    std::vector<PolyVec> forms;
    forms.reserve(vectors.size());
    for (auto& v : vectors) forms.emplace_back(l, gamma.n(), std::move(v));
    return forms;
}

std::size_t ideal_dim(const PointSet& gamma, unsigned l) {
    ExactMatrix m = eval_matrix(gamma, l);
    return m.cols() - rref(m).rank;
}

}  // namespace splitgen
