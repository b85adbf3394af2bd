#include "orbitforge/gf2.hpp"

#include <array>
#include <stdexcept>
#include <string>

namespace orbitforge {

namespace detail {

struct FieldTables {
  int k = 0;
  unsigned poly = 0;
  std::vector<std::uint8_t> mul;  // q*q products, row-major
  std::vector<std::uint8_t> inv;
  std::vector<std::uint8_t> sqrt;
  std::vector<bool> in_as_image;
  std::uint8_t delta = 0;
};

}  // namespace detail

namespace {

// Conway polynomials for GF(2^k), k = 1..8.
constexpr std::array<unsigned, 9> kConwayPolys = {
    0, 0x3, 0x7, 0xB, 0x13, 0x25, 0x5B, 0x83, 0x11D};

unsigned slow_mul(unsigned a, unsigned b, int k, unsigned poly) {
  unsigned acc = 0;
  for (int i = 0; i < k; ++i) {
    if (b & (1u << i)) acc ^= a << i;
  }
  for (int d = 2 * k - 2; d >= k; --d) {
    if (acc & (1u << d)) acc ^= poly << (d - k);
  }
  return acc;
}

detail::FieldTables build(int k) {
  detail::FieldTables t;
  t.k = k;
  t.poly = kConwayPolys[k];
  const unsigned q = 1u << k;
  t.mul.resize(q * q);
  for (unsigned a = 0; a < q; ++a)
    for (unsigned b = 0; b < q; ++b)
      t.mul[a * q + b] = static_cast<std::uint8_t>(slow_mul(a, b, k, t.poly));
  t.inv.assign(q, 0);
  t.sqrt.assign(q, 0);
  t.in_as_image.assign(q, false);
  for (unsigned a = 0; a < q; ++a) {
    for (unsigned b = 1; b < q && a != 0; ++b)
      if (t.mul[a * q + b] == 1) t.inv[a] = static_cast<std::uint8_t>(b);
    const unsigned sq = t.mul[a * q + a];
    t.sqrt[sq] = static_cast<std::uint8_t>(a);
    t.in_as_image[sq ^ a] = true;
  }
  for (unsigned a = 0; a < q; ++a) {
    if (!t.in_as_image[a]) {
      t.delta = static_cast<std::uint8_t>(a);
      break;
    }
  }
  return t;
}

const detail::FieldTables& tables_for(int k) {
  static const std::array<detail::FieldTables, 9> all = [] {
    std::array<detail::FieldTables, 9> out;
    for (int k = 1; k <= 8; ++k) out[k] = build(k);
    return out;
  }();
  return all[k];
}

}  // namespace

FieldCtx::FieldCtx(int degree) : k_(degree) {
  if (degree < 1 || degree > 8)
    throw std::invalid_argument("field degree must be in [1, 8], got " +
                                std::to_string(degree));
  tables_ = &tables_for(degree);
}

unsigned FieldCtx::reduction_polynomial() const { return tables_->poly; }

FieldElem FieldCtx::element(unsigned bits) const {
  if (bits >= order())
    throw std::invalid_argument("element bits out of range for GF(2^" +
                                std::to_string(k_) + ")");
  return FieldElem{static_cast<std::uint8_t>(bits)};
}

std::vector<FieldElem> FieldCtx::elements() const {
  std::vector<FieldElem> out;
  out.reserve(order());
  for (unsigned a = 0; a < order(); ++a)
    out.push_back(FieldElem{static_cast<std::uint8_t>(a)});
  return out;
}

FieldElem FieldCtx::mul(FieldElem a, FieldElem b) const {
  return FieldElem{tables_->mul[a.bits * order() + b.bits]};
}

FieldElem FieldCtx::inv(FieldElem a) const {
  if (a.is_zero()) throw std::domain_error("inverse of zero field element");
  return FieldElem{tables_->inv[a.bits]};
}

FieldElem FieldCtx::sqrt(FieldElem a) const {
  return FieldElem{tables_->sqrt[a.bits]};
}

int FieldCtx::trace(FieldElem a) const {
  FieldElem acc = a;
  FieldElem pow = a;
  for (int i = 1; i < k_; ++i) {
    pow = square(pow);
    acc += pow;
  }
  return acc.bits;
}

bool FieldCtx::is_artin_schreier(FieldElem a) const {
  return tables_->in_as_image[a.bits];
}

FieldElem FieldCtx::pick_delta() const { return FieldElem{tables_->delta}; }

}  // namespace orbitforge
