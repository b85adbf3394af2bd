#pragma once

#include <compare>
#include <cstdint>
#include <vector>

namespace orbitforge {

/// An element of GF(2^k), stored as the bit pattern of its polynomial residue.
struct FieldElem {
  std::uint8_t bits = 0;

  constexpr bool is_zero() const { return bits == 0; }
  friend constexpr bool operator==(FieldElem, FieldElem) = default;
  friend constexpr auto operator<=>(FieldElem, FieldElem) = default;
};

/// Addition is XOR and does not depend on the field context.
constexpr FieldElem operator+(FieldElem a, FieldElem b) {
  return FieldElem{static_cast<std::uint8_t>(a.bits ^ b.bits)};
}
constexpr FieldElem& operator+=(FieldElem& a, FieldElem b) {
  a.bits ^= b.bits;
  return a;
}

namespace detail {
struct FieldTables;
}

/// The field GF(2^k), 1 <= k <= 8, with a fixed Conway reduction polynomial.
///
/// Contexts are cheap to copy: the arithmetic tables are built once per
/// degree and shared read-only.
class FieldCtx {
 public:
  explicit FieldCtx(int degree = 1);

  int degree() const { return k_; }
  unsigned order() const { return 1u << k_; }
  /// Bitmask of the reduction polynomial, including the x^k term.
  unsigned reduction_polynomial() const;

  FieldElem zero() const { return {}; }
  FieldElem one() const { return FieldElem{1}; }
  /// Element with the given bit pattern; throws if bits >= q.
  FieldElem element(unsigned bits) const;
  /// All q elements in increasing bit order.
  std::vector<FieldElem> elements() const;

  FieldElem add(FieldElem a, FieldElem b) const { return a + b; }
  FieldElem mul(FieldElem a, FieldElem b) const;
  /// Throws std::domain_error on zero.
  FieldElem inv(FieldElem a) const;
  FieldElem square(FieldElem a) const { return mul(a, a); }
  /// The unique b with b*b == a.
  FieldElem sqrt(FieldElem a) const;

  /// Absolute trace a + a^2 + ... + a^(2^(k-1)), as 0 or 1.
  int trace(FieldElem a) const;
  /// True iff a = y^2 + y for some y in the field.
  bool is_artin_schreier(FieldElem a) const;
  /// Smallest element (by bit pattern) outside {y^2 + y}.
  FieldElem pick_delta() const;

  friend bool operator==(const FieldCtx& a, const FieldCtx& b) {
    return a.k_ == b.k_;
  }

 private:
  int k_;
  const detail::FieldTables* tables_;
};

}  // namespace orbitforge
