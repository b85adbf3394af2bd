#include "orbitforge/counting.hpp"

#include "orbitforge/errors.hpp"
#include "orbitforge/rational.hpp"
#include "orbitforge/symbols.hpp"

namespace orbitforge {

namespace {

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out;
  if (__builtin_add_overflow(a, b, &out)) throw ResourceGuard("count exceeds 64 bits");
  return out;
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out;
  if (__builtin_mul_overflow(a, b, &out)) throw ResourceGuard("count exceeds 64 bits");
  return out;
}

void require_positive(int n) {
  if (n < 1) throw InvalidInput("rank must be at least 1");
}

}  // namespace

CountTable::CountTable(int max_n) {
  if (max_n < 0) throw InvalidInput("partition counts need n >= 0");
  // Standard DP over part sizes.
  p_.assign(max_n + 1, 0);
  p_[0] = 1;
  for (int part = 1; part <= max_n; ++part)
    for (int k = part; k <= max_n; ++k) p_[k] = checked_add(p_[k], p_[k - part]);
  p2_.assign(max_n + 1, 0);
  for (int n = 0; n <= max_n; ++n)
    for (int k = 0; k <= n; ++k) p2_[n] = checked_add(p2_[n], checked_mul(p_[k], p_[n - k]));
}

std::uint64_t CountTable::p(int k) const {
  if (k < 0 || k > max_n()) throw InvalidInput("p(k) outside the table");
  return p_[k];
}

std::uint64_t CountTable::p2(int n) const {
  if (n < 0 || n > max_n()) throw InvalidInput("p2(n) outside the table");
  return p2_[n];
}

std::uint64_t p(int k) { return CountTable(k).p(k); }
std::uint64_t p2(int n) { return CountTable(n).p2(n); }

std::uint64_t orbit_count(Series series, int n) {
  require_positive(n);
  const CountTable t(n);
  const std::uint64_t total = t.p2(n);
  const std::uint64_t half = n % 2 ? 0 : t.p(n / 2);
  switch (series) {
    case Series::B: return total;
    case Series::Dplus: return (total + half) / 2;
    case Series::Dminus: return (total - half) / 2;
    case Series::SOplus: return (total + checked_mul(3, half)) / 2;
  }
  return 0;
}

std::uint64_t weyl_irrep_count(WeylType type, int n) {
  require_positive(n);
  const CountTable t(n);
  if (type == WeylType::B) return t.p2(n);
  // Unordered pairs {a, b}; the pairs {a, a} split into two characters.
  const std::uint64_t half = n % 2 ? 0 : t.p(n / 2);
  return (t.p2(n) + checked_mul(3, half)) / 2;
}

std::uint64_t springer_pair_count(WeylType type, int n) {
  require_positive(n);
  std::uint64_t total = 0;
  if (type == WeylType::B) {
    for (const auto& s : enumerate_symbols(2 * n + 1, true))
      total = checked_add(total, std::uint64_t{1} << component_group_rank(s, GroupFlavor::O_odd).rank);
    return total;
  }
  for (const auto& s : enumerate_symbols(2 * n, false)) {
    const ComponentGroup g = component_group_rank(s, GroupFlavor::SO_even);
    total = checked_add(total, g.so_splits ? 2 : std::uint64_t{1} << g.rank);
  }
  return total;
}

bool check_springer_cardinality(WeylType type, int n) {
  return springer_pair_count(type, n) == weyl_irrep_count(type, n);
}

}  // namespace orbitforge
