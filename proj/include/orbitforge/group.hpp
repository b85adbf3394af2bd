#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "orbitforge/packed_matrix.hpp"
#include "orbitforge/quadform.hpp"

namespace orbitforge {

/// |O_N(F_q)|, or |SO_N(F_q)| when `special` is set and N is even, from the
/// classical order formulas. Throws ResourceGuard if the value overflows 64 bits.
std::uint64_t classical_order(int dim, WittType type, unsigned q, bool special);

struct GroupCertificate {
  std::uint64_t formula_order = 0;
  std::uint64_t certified_order = 0;
  bool augmented = false;
  std::string method;  // "closure" or "orbit-stabilizer"
};

struct GeneratorSet {
  std::vector<OrthMap> gens;
  GroupCertificate certificate;
};

/// One transvection per anisotropic line, i.e. t_v for every v with Q(v) = 1.
std::vector<OrthMap> all_transvections(const QuadraticSpace& space);

/// A small generating set of O(V) (or SO(V) when `special` is set and V is
/// non-defective), with its order certified against classical_order.
///
/// The O generators are transvections chosen so that the generated group
/// moves every Q = 1 vector into the set of chosen centres; it then contains
/// every transvection. If the transvections generate a proper subgroup, the
/// set is augmented by exhaustive search when q^(N^2) <= 2^24. SO generators
/// are the Schreier generators of the O set for the transversal {1, t} with
/// t of Dickson invariant 1.
///
/// Requires N <= 8 and q <= 4. Throws ConsistencyError when the certified
/// order does not reach the formula.
GeneratorSet generators(const QuadraticSpace& space, bool special);

/// All elements of the group generated by `gens`, sorted. Throws
/// ResourceGuard once more than `cap` elements are found.
std::vector<PackedMatrix> group_closure(const PackedOps& ops, std::span<const PackedMatrix> gens,
                                        int n, std::size_t cap);

/// g^{-1}, found as the last power of g before the identity.
PackedMatrix packed_inverse(const PackedOps& ops, const PackedMatrix& g, int n);

/// A lower bound on the order of the group generated by `gens`, exact when
/// the group is small enough to close (at most `cap` elements) and otherwise
/// |orbit of e_level| times a bound for a subgroup of the point stabilizer,
/// built from up to `schreier_budget` Schreier generators.
std::uint64_t order_lower_bound(const PackedOps& ops, std::span<const PackedMatrix> gens, int n,
                                int level, std::size_t cap, std::size_t schreier_budget);

}  // namespace orbitforge
