#pragma once

#include <cstdint>
#include <vector>

namespace orbitforge {

/// p(k) and p2(n) for 0 <= k, n <= max_n. Throws ResourceGuard if a value
/// does not fit in 64 bits.
class CountTable {
 public:
  explicit CountTable(int max_n);

  int max_n() const { return static_cast<int>(p_.size()) - 1; }
  std::uint64_t p(int k) const;
  std::uint64_t p2(int n) const;

 private:
  std::vector<std::uint64_t> p_;
  std::vector<std::uint64_t> p2_;
};

std::uint64_t p(int k);
std::uint64_t p2(int n);

enum class Series { B, Dplus, Dminus, SOplus };
enum class WeylType { B, D };

/// Number of nilpotent orbits over F_q (q even) of O_{2n+1}, O^+_{2n},
/// O^-_{2n} or SO^+_{2n}. p(n/2) is read as 0 for odd n.
std::uint64_t orbit_count(Series series, int n);

/// Irreducible characters of the Weyl group of type B_n or D_n.
std::uint64_t weyl_irrep_count(WeylType type, int n);

/// Sum over closed-field orbits of the number of component group characters,
/// compared against weyl_irrep_count.
bool check_springer_cardinality(WeylType type, int n);

/// The left-hand side of that comparison.
std::uint64_t springer_pair_count(WeylType type, int n);

}  // namespace orbitforge
