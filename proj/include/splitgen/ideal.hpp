#ifndef SPLITGEN_IDEAL_HPP
#define SPLITGEN_IDEAL_HPP

#include "splitgen/linalg.hpp"
#include "splitgen/points.hpp"
#include "splitgen/poly.hpp"

namespace splitgen {

/// Evaluation matrix of a point set in degree l: entry (i, j) is the j-th
/// canonical monomial at the i-th normalized point. d rows, C(n+l, n) cols.
ExactMatrix eval_matrix(const PointSet& gamma, unsigned l);

/// Canonical basis of the degree-l piece of the vanishing ideal: the
/// nullspace basis of eval_matrix. For an LGP set with d <= l*n + 1 its size
/// is C(n+l, n) - d.
std::vector<PolyVec> ideal_piece(const PointSet& gamma, unsigned l);

/// dim I(gamma)_l = C(n+l, n) - rank(eval_matrix).
std::size_t ideal_dim(const PointSet& gamma, unsigned l);

}  // namespace splitgen

#endif
