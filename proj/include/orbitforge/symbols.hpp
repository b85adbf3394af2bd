#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace orbitforge {

struct SymbolEntry {
  int lambda = 0;
  int chi = 0;
  int mult = 0;

  friend auto operator<=>(const SymbolEntry&, const SymbolEntry&) = default;
};

/// Jordan parts with multiplicities and index values, one entry per
/// distinct part, parts strictly decreasing.
struct Symbol {
  std::vector<SymbolEntry> entries;

  int dim() const;
  /// True iff some multiplicity is odd (equivalently, the dimension is odd).
  bool defective() const;

  friend auto operator<=>(const Symbol&, const Symbol&) = default;
};

/// Descending order on (lambda, mult, chi) entry by entry; enumeration order.
bool symbol_before(const Symbol& a, const Symbol& b);

/// Parses `(3)_2^2(1)_1`; `^1` may be written or omitted. Throws InvalidInput.
Symbol parse_symbol(std::string_view text);
/// Canonical text, `^1` omitted.
std::string to_string(const Symbol& s);

/// [m;l](n) = max(0, min(n - m + l, l)).
int index_fn(int m, int l, int n);

struct IndexFunction {
  int m = 0;
  int l = 0;
  int operator()(int n) const { return index_fn(m, l, n); }
};

/// n -> max_i [lambda_i; chi_i](n), the index function of the symbol's
/// orthogonal decomposition.
int symbol_index_value(const Symbol& s, int n);

struct SymbolViolation {
  int condition = 0;  // 0 = malformed entries, 1..4 = validity conditions
  std::string message;
};

/// nullopt when the symbol is valid; otherwise the first failed condition.
std::optional<SymbolViolation> validate_symbol(const Symbol& s);

/// All valid symbols of dimension N, sorted by symbol_before. `defective`
/// must equal N odd; throws InvalidInput otherwise.
std::vector<Symbol> enumerate_symbols(int dim, bool defective);

/// Entry indices i (0-based) with chi_i + chi_{i+1} <= lambda_i and
/// 2 chi_i != lambda_i; `include_last` lets the last entry count with
/// chi_{s+1} = 0.
std::vector<int> counted_indices(const Symbol& s, bool include_last);
int n1(const Symbol& s);
int n2(const Symbol& s);
/// The break positions: counted_indices for n1 (defective) or n2.
std::vector<int> break_positions(const Symbol& s);

struct PartitionPair {
  std::vector<int> alpha;
  std::vector<int> beta;

  /// Strips trailing zeros.
  PartitionPair& normalize();
  int size() const;
  bool well_formed() const;  // both parts weakly decreasing and non-negative

  friend auto operator<=>(const PartitionPair&, const PartitionPair&) = default;
};

std::string to_string(const PartitionPair& p);

/// beta_i <= alpha_i + 2 (odd) or beta_i <= alpha_i (even).
bool in_image_set(const PartitionPair& p, bool odd);

PartitionPair symbol_to_pair(const Symbol& s);
/// Throws InvalidInput when the pair is outside the image set.
Symbol pair_to_symbol(const PartitionPair& p, bool odd);

/// All partitions of n, each weakly decreasing, in reverse lexicographic order.
std::vector<std::vector<int>> partitions_of(int n);

}  // namespace orbitforge
