#ifndef SPLITGEN_VERIFY_HPP
#define SPLITGEN_VERIFY_HPP

#include <string>
#include <vector>

#include <gmpxx.h>

#include "splitgen/points.hpp"
#include "splitgen/poly.hpp"
#include "splitgen/split.hpp"

namespace splitgen {

/// One checked equality: lhs must equal rhs.
struct EvidenceRow {
    std::string label;
    mpz_class lhs;
    mpz_class rhs;
    bool ok;
};

/// Structured outcome of one claim check. `degree` carries the claim's m or
/// l parameter; passed is the conjunction of the evidence rows.
struct VerifyReport {
    std::string claim;  // "span" | "mult" | "main" | "lemma-sum"
    unsigned n;
    std::size_t d;
    unsigned degree;
    FieldSpec field;
    std::vector<EvidenceRow> evidence;
    bool passed;
};

/// Decomposable span in degree l: below ceil(d/n) the span must be empty;
/// at or above, its dimension must equal dim I(gamma)_l, every basis element
/// must vanish on gamma, and for d <= l*n + 1 the dimension must equal
/// C(n+l, n) - d.
VerifyReport verify_span_theorem(const PointSet& gamma, unsigned l);

/// Degree climb: variable multiples of the degree-m decomposable span must
/// span all of I(gamma)_{m+1}. Requires d <= m*n.
VerifyReport verify_multiplication(const PointSet& gamma, unsigned m);

/// Full generation check: the certificate's generators must produce the
/// exact ideal slice in every degree m..max_degree (default m+2).
VerifyReport verify_main(const PointSet& gamma, unsigned m, unsigned max_degree);
VerifyReport verify_main(const Certificate& cert, unsigned max_degree);

/// Two-point deletion: with gamma = gamma0 minus {x, y}, checks
/// I(gamma)_l = I(gamma1)_l + I(gamma2)_l together with the dimension
/// formulas of all four sets. Requires l >= ceil((d+1)/n) where d =
/// |gamma0| - 2.
VerifyReport verify_lemma_sum(const PointSet& gamma0, std::size_t x_index, std::size_t y_index,
                              unsigned l);

/// Rank of the symmetric matrix of a quadratic form. Refused in
/// characteristic 2.
std::size_t quadric_rank(const PolyVec& q);

}  // namespace splitgen

#endif
