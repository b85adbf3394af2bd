#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <functional>

#include "orbitforge/matrix.hpp"

namespace orbitforge {

/// N x N matrix (N <= 8) over GF(2) or GF(4), stored as bit planes.
///
/// Plane p holds bit p of every entry; within a plane, byte r is row r and
/// bit c of that byte is column c. The pair of planes doubles as the hash
/// and ordering key used by the orbit enumerator.
struct PackedMatrix {
  std::array<std::uint64_t, 2> planes{0, 0};

  static constexpr int kMaxDim = 8;
  static constexpr int kMaxDegree = 2;

  /// Throws InvalidInput if the matrix is not square, N > 8, or k > 2.
  static PackedMatrix from_matrix(const Matrix& m);
  Matrix to_matrix(const FieldCtx& field, int n) const;

  FieldElem get(int r, int c) const {
    const int bit = 8 * r + c;
    return FieldElem{static_cast<std::uint8_t>(((planes[0] >> bit) & 1u) |
                                               (((planes[1] >> bit) & 1u) << 1))};
  }
  void set(int r, int c, FieldElem v);

  bool is_zero() const { return (planes[0] | planes[1]) == 0; }

  friend constexpr bool operator==(const PackedMatrix&, const PackedMatrix&) = default;
  friend constexpr auto operator<=>(const PackedMatrix& a, const PackedMatrix& b) {
    if (auto c = a.planes[1] <=> b.planes[1]; c != 0) return c;
    return a.planes[0] <=> b.planes[0];
  }
};

/// Packed column vector: bits 0..7 are plane 0, bits 8..15 plane 1.
using PackedVector = std::uint16_t;

/// Arithmetic on packed matrices for a fixed field degree (1 or 2).
class PackedOps {
 public:
  explicit PackedOps(const FieldCtx& field);

  int degree() const { return k_; }

  static PackedMatrix add(const PackedMatrix& a, const PackedMatrix& b) {
    return PackedMatrix{{a.planes[0] ^ b.planes[0], a.planes[1] ^ b.planes[1]}};
  }
  PackedMatrix mul(const PackedMatrix& a, const PackedMatrix& b) const;
  PackedMatrix scale(const PackedMatrix& a, FieldElem c) const;
  PackedMatrix identity(int n) const;
  /// g * x * g_inv
  PackedMatrix conjugate(const PackedMatrix& g, const PackedMatrix& x,
                         const PackedMatrix& g_inv) const {
    return mul(mul(g, x), g_inv);
  }
  /// True iff x^(2^ceil(log2 n)) == 0, i.e. x is nilpotent in dimension n.
  bool is_nilpotent(const PackedMatrix& x, int n) const;

  PackedVector apply(const PackedMatrix& m, PackedVector v) const;
  static PackedVector pack(const Vector& v);
  static Vector unpack(PackedVector v, int n);

 private:
  int k_;
};

/// Product of two 8x8 GF(2) bit matrices in the byte-per-row layout.
std::uint64_t bit_matrix_mul(std::uint64_t a, std::uint64_t b);

struct PackedMatrixHash {
  std::size_t operator()(const PackedMatrix& m) const noexcept {
    std::uint64_t h = m.planes[0] * 0x9E3779B97F4A7C15ULL;
    h ^= (m.planes[1] + 0x632BE59BD9B4E019ULL) * 0xC2B2AE3D27D4EB4FULL;
    h ^= h >> 29;
    h *= 0xBF58476D1CE4E5B9ULL;
    h ^= h >> 32;
    return static_cast<std::size_t>(h);
  }
};

}  // namespace orbitforge
