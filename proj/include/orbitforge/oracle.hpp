#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "orbitforge/group.hpp"
#include "orbitforge/packed_matrix.hpp"
#include "orbitforge/quadform.hpp"
#include "orbitforge/rational.hpp"
#include "orbitforge/symbols.hpp"

namespace orbitforge {

/// Largest log2 of q^{dim o(V)} the enumerator accepts.
inline constexpr int kEnumerationGuardBits = 30;

/// Worker count: ORBITFORGE_THREADS if set (at least 1), else the hardware
/// concurrency, and never more than `requested` when that is positive.
int worker_count(int requested = 0);

/// Sorted nilpotent elements of o(V).
struct NilpotentSet {
  std::vector<PackedMatrix> elements;
  std::uint64_t scanned = 0;
};

/// Throws ResourceGuard when q^{dim o(V)} exceeds 2^30 or N > 8 or q > 4.
NilpotentSet enumerate_nilpotents(const QuadraticSpace& space, int threads = 0);

/// Membership index over a sorted element list (open addressing).
class NilpotentIndex {
 public:
  explicit NilpotentIndex(const std::vector<PackedMatrix>& elements);
  /// Position in the element list, or -1.
  std::int64_t find(const PackedMatrix& m) const;

 private:
  const std::vector<PackedMatrix>* elements_;
  std::vector<std::uint32_t> slots_;  // index + 1, 0 = empty
  std::uint64_t mask_ = 0;
};

struct OrbitRecord {
  std::uint64_t size = 0;
  PackedMatrix representative;  // smallest element of the orbit
  std::vector<int> jordan;
  std::vector<int> chi;  // chi_of at each distinct part, in decreasing part order
  Symbol symbol;
  std::optional<RationalOrbitLabel> label;
  int label_hits = 0;
  std::uint64_t centralizer_order = 0;
};

struct OrbitReport {
  int dim = 0;
  WittType type = WittType::Plus;
  unsigned q = 2;
  bool special = false;
  std::uint64_t group_order = 0;
  std::uint64_t scanned = 0;
  std::uint64_t nilpotent_count = 0;
  std::vector<OrbitRecord> orbits;
  // Labels whose representative fell outside the nilpotent set.
  std::vector<RationalOrbitLabel> stray_labels;
  double enumerate_seconds = 0;
  double bfs_seconds = 0;
};

struct OracleOptions {
  int threads = 0;
  /// Throw ConsistencyError when an orbit matches zero or several labels.
  bool strict = true;
  /// Measure the symbol of every element, not only of orbit minima.
  bool check_every_element = false;
};

/// Orbits of O(V) (or SO(V) when special and V is even) on the nilpotent
/// set, each matched to the rational label whose representative it contains.
OrbitReport orbit_partition(const QuadraticSpace& space, bool special,
                            const OracleOptions& options = {});

/// |group| / |orbit of T|, from a report computed for the same space.
std::uint64_t centralizer_order(const OrbitReport& report, const QuadraticSpace& space,
                                const Matrix& t);

/// Elements of the centralizer of T in O(V), with how many of them have
/// Dickson invariant 1. Needs |O(V)| <= 2^22 (full closure).
struct CentralizerProfile {
  std::uint64_t order = 0;
  std::uint64_t odd_dickson = 0;
};
CentralizerProfile centralizer_profile(const QuadraticSpace& space, const Matrix& t);

/// The rational representative of a label, moved into the coordinates of
/// `space` (which must have the label's dimension and Witt type).
Matrix representative_in(const RationalOrbitLabel& lab, const QuadraticSpace& space);

struct ReconcileIssue {
  std::string check;  // "count", "split", "match", "z-in-so", "sizes", "symbol"
  std::string message;
};

struct ReconcileResult {
  bool pass = true;
  std::vector<ReconcileIssue> issues;
  OrbitReport report;  // for the requested flavor
  std::optional<OrbitReport> o_report;  // even dimension: the O-orbits too
  std::optional<OrbitReport> so_report;  // even dimension: the SO-orbits too
};

/// Compares the brute-force orbits with the theoretical classification:
/// orbit count, per-symbol splitting, a perfect label match, and (even
/// dimension) Z(x) inside SO exactly for the orbits with n2 = 0.
ReconcileResult reconcile(const QuadraticSpace& space, Flavor flavor,
                          const OracleOptions& options = {});

}  // namespace orbitforge
