#include "orbitforge/packed_matrix.hpp"

#include <bit>

#include "orbitforge/errors.hpp"

namespace orbitforge {

std::uint64_t bit_matrix_mul(std::uint64_t a, std::uint64_t b) {
  constexpr std::uint64_t kLowBits = 0x0101010101010101ULL;
  std::uint64_t c = 0;
  for (int j = 0; j < 8; ++j) {
    // Rows of a with bit j set pick up row j of b.
    const std::uint64_t mask = ((a >> j) & kLowBits) * 0xFF;
    const std::uint64_t row = ((b >> (8 * j)) & 0xFF) * kLowBits;
    c ^= mask & row;
  }
  return c;
}

PackedMatrix PackedMatrix::from_matrix(const Matrix& m) {
  if (m.rows() != m.cols()) throw InvalidInput("packed matrix must be square");
  if (m.rows() > kMaxDim) throw InvalidInput("packed matrix dimension exceeds 8");
  if (m.field().degree() > kMaxDegree)
    throw InvalidInput("packed matrix field degree exceeds 2");
  PackedMatrix p;
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c) p.set(r, c, m(r, c));
  return p;
}

Matrix PackedMatrix::to_matrix(const FieldCtx& field, int n) const {
  Matrix m(field, n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) m(r, c) = get(r, c);
  return m;
}

void PackedMatrix::set(int r, int c, FieldElem v) {
  const std::uint64_t bit = std::uint64_t{1} << (8 * r + c);
  for (int p = 0; p < 2; ++p) {
    if ((v.bits >> p) & 1u)
      planes[p] |= bit;
    else
      planes[p] &= ~bit;
  }
}

PackedOps::PackedOps(const FieldCtx& field) : k_(field.degree()) {
  if (k_ > PackedMatrix::kMaxDegree)
    throw InvalidInput("packed arithmetic supports GF(2) and GF(4) only");
}

PackedMatrix PackedOps::mul(const PackedMatrix& a, const PackedMatrix& b) const {
  if (k_ == 1) return PackedMatrix{{bit_matrix_mul(a.planes[0], b.planes[0]), 0}};
  // GF(4) = GF(2)[w]/(w^2+w+1); w^2 = w + 1.
  const std::uint64_t m0 = bit_matrix_mul(a.planes[0], b.planes[0]);
  const std::uint64_t m2 = bit_matrix_mul(a.planes[1], b.planes[1]);
  const std::uint64_t mx = bit_matrix_mul(a.planes[0] ^ a.planes[1], b.planes[0] ^ b.planes[1]);
  return PackedMatrix{{m0 ^ m2, mx ^ m0}};
}

PackedMatrix PackedOps::scale(const PackedMatrix& a, FieldElem c) const {
  switch (c.bits) {
    case 0: return {};
    case 1: return a;
    case 2: return PackedMatrix{{a.planes[1], a.planes[0] ^ a.planes[1]}};
    case 3: return PackedMatrix{{a.planes[0] ^ a.planes[1], a.planes[0]}};
    default: throw InvalidInput("scalar outside GF(4)");
  }
}

PackedMatrix PackedOps::identity(int n) const {
  PackedMatrix p;
  for (int i = 0; i < n; ++i) p.planes[0] |= std::uint64_t{1} << (9 * i);
  return p;
}

bool PackedOps::is_nilpotent(const PackedMatrix& x, int n) const {
  PackedMatrix y = x;
  for (int e = 1; e < n; e *= 2) y = mul(y, y);
  return y.is_zero();
}

PackedVector PackedOps::apply(const PackedMatrix& m, PackedVector v) const {
  const std::uint64_t v0 = (v & 0xFF) * 0x0101010101010101ULL;
  const std::uint64_t v1 = ((v >> 8) & 0xFF) * 0x0101010101010101ULL;
  auto row_parity = [](std::uint64_t x) {
    unsigned out = 0;
    for (int r = 0; r < 8; ++r)
      out |= static_cast<unsigned>(std::popcount((x >> (8 * r)) & 0xFF) & 1) << r;
    return out;
  };
  if (k_ == 1) return static_cast<PackedVector>(row_parity(m.planes[0] & v0));
  const unsigned p0 = row_parity(m.planes[0] & v0);
  const unsigned p2 = row_parity(m.planes[1] & v1);
  const unsigned px = row_parity((m.planes[0] ^ m.planes[1]) & (v0 ^ v1));
  return static_cast<PackedVector>((p0 ^ p2) | ((px ^ p0) << 8));
}

PackedVector PackedOps::pack(const Vector& v) {
  if (v.size() > 8) throw InvalidInput("packed vector length exceeds 8");
  unsigned out = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    out |= static_cast<unsigned>(v[i].bits & 1u) << i;
    out |= static_cast<unsigned>((v[i].bits >> 1) & 1u) << (8 + i);
  }
  return static_cast<PackedVector>(out);
}

Vector PackedOps::unpack(PackedVector v, int n) {
  Vector out(n);
  for (int i = 0; i < n; ++i)
    out[i] = FieldElem{static_cast<std::uint8_t>(((v >> i) & 1u) | (((v >> (8 + i)) & 1u) << 1))};
  return out;
}

}  // namespace orbitforge
