#ifndef SPLITGEN_SPLIT_HPP
#define SPLITGEN_SPLIT_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "splitgen/ideal.hpp"
#include "splitgen/points.hpp"
#include "splitgen/poly.hpp"

namespace splitgen {

/// Unordered partition of point indices into blocks, kept in canonical form:
/// each block sorted, blocks ordered by smallest element. The indices run
/// over the point set a consumer associates with the partition (for
/// certificate generators that is the base set followed by the generator's
/// augmented points).
struct Partition {
    std::vector<std::vector<std::size_t>> blocks;

    /// Sorts blocks and block contents; rejects empty or overlapping blocks.
    static Partition canonical(std::vector<std::vector<std::size_t>> blocks);

    bool operator==(const Partition&) const = default;
};

/// Number of degree-l completely decomposable hypersurfaces through a
/// generic point: (ln)! / ((n!)^l * l!). Exact big integer.
mpz_class split_degree(unsigned n, unsigned l);

/// All partitions of {0..d-1} into m blocks of size exactly n, in canonical
/// enumeration order (the block holding the smallest unassigned index is
/// produced first). Count equals split_degree(n, m). Requires d = m*n.
std::vector<Partition> partitions_equal_blocks(std::size_t d, unsigned m, unsigned n);

/// Product of the m hyperplane forms of an equal-block partition, one form
/// per partition. Every product vanishes on the whole point set.
struct SigmaGenerator {
    PolyVec form;
    Partition partition;
};

/// The canonical degree-m generator list for an LGP set of exactly m*n
/// points: one completely decomposable form per equal-block partition.
std::vector<SigmaGenerator> sigma_generators(const PointSet& gamma, unsigned m);

/// Canonical basis of the span of all degree-l completely decomposable forms
/// vanishing on gamma. Enumerates unordered assignments of the point indices
/// into at most l blocks of size <= n; nonempty blocks contribute their
/// vanishing-form basis, leftover factors contribute every monomial of the
/// missing degree. Multilinearity of the product map makes basis products
/// span everything. Empty when l*n < d.
std::vector<PolyVec> phi_span_basis(const PointSet& gamma, unsigned l);

/// One degree-m generator of a certificate: the form, the partition of the
/// concatenated (base + augmented) index range it came from, and the
/// augmented points themselves (empty when the base set already has m*n
/// points).
struct CertGenerator {
    PolyVec form;
    Partition partition;
    std::vector<Point> augmented;
};

/// One row of the generation check table.
struct DegreeDims {
    unsigned degree;
    std::size_t dim_ideal;
    std::size_t dim_generated;
    bool equal;
};

/// Serializable record of a generating set for I(gamma): the degree-m
/// completely decomposable generators with provenance, a basis of every
/// lower-degree piece, and the per-degree comparison table for t = 1..m+2.
struct Certificate {
    PointSet points;
    unsigned m;
    std::vector<CertGenerator> generators;
    std::vector<PolyVec> lower_degree_basis;
    std::vector<DegreeDims> verification;
    bool passed;
};

/// Builds the certificate. For d = m*n this is the sigma list; for d < m*n
/// the set is extended by eps+1 = m*n-d+1 points, and the union of the sigma
/// lists of the eps+1 drop-one subsets is taken. Requires d <= m*n.
Certificate generating_set(const PointSet& gamma, unsigned m);

/// Rebuilds a certificate generator from its provenance: hyperplanes of the
/// partition blocks over base + augmented points, multiplied out.
PolyVec reconstruct_generator(const PointSet& base, const CertGenerator& g);

/// Writes F in I(gamma1)_l + I(gamma2)_l: exact solve over the concatenated
/// bases, canonical first solution. Throws "sum decomposition failed" when F
/// is not in the sum.
std::pair<PolyVec, PolyVec> decompose_in_sum(const PolyVec& f, const PointSet& gamma1,
                                             const PointSet& gamma2, unsigned l);

}  // namespace splitgen

#endif
