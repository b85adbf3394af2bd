#include <doctest.h>

#include <random>

#include "orbitforge/errors.hpp"
#include "orbitforge/matrix.hpp"
#include "orbitforge/packed_matrix.hpp"

using namespace orbitforge;

namespace {

Matrix random_matrix(const FieldCtx& f, int r, int c, std::mt19937& rng) {
  Matrix m(f, r, c);
  std::uniform_int_distribution<unsigned> d(0, f.order() - 1);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) m(i, j) = f.element(d(rng));
  return m;
}

}  // namespace

TEST_CASE("rank, kernel and inverse agree") {
  std::mt19937 rng(7);
  for (int k : {1, 2, 3}) {
    FieldCtx f(k);
    for (int trial = 0; trial < 40; ++trial) {
      const int n = 1 + trial % 6;
      Matrix m = random_matrix(f, n, n, rng);
      const auto ker = kernel_basis(m);
      CHECK(static_cast<int>(ker.size()) + rank(m) == n);
      for (const auto& v : ker) {
        for (auto x : m * v) CHECK(x.is_zero());
      }
      auto inv = inverse(m);
      CHECK(inv.has_value() == (rank(m) == n));
      if (inv) {
        CHECK(*inv * m == Matrix::identity(f, n));
        CHECK(m * *inv == Matrix::identity(f, n));
      }
    }
  }
}

TEST_CASE("span basis and powers") {
  FieldCtx f(1);
  std::vector<Vector> vs = {{f.one(), f.one(), f.zero()},
                            {f.zero(), f.one(), f.one()},
                            {f.one(), f.zero(), f.one()}};
  CHECK(span_basis(f, vs).size() == 2);
  Matrix j(f, 3, 3);
  j(0, 1) = j(1, 2) = f.one();
  CHECK_FALSE(power(j, 2).is_zero());
  CHECK(power(j, 3).is_zero());
  CHECK(power(j, 0) == Matrix::identity(f, 3));
}

TEST_CASE("8x8 bit matrix product matches the generic product") {
  std::mt19937_64 rng(11);
  FieldCtx f(1);
  for (int trial = 0; trial < 200; ++trial) {
    const std::uint64_t a = rng(), b = rng();
    PackedMatrix pa{{a, 0}}, pb{{b, 0}};
    const Matrix ma = pa.to_matrix(f, 8), mb = pb.to_matrix(f, 8);
    CHECK(bit_matrix_mul(a, b) == PackedMatrix::from_matrix(ma * mb).planes[0]);
  }
}

TEST_CASE("packed arithmetic round-trips with the generic matrix type") {
  std::mt19937 rng(3);
  for (int k : {1, 2}) {
    FieldCtx f(k);
    PackedOps ops(f);
    for (int trial = 0; trial < 100; ++trial) {
      const int n = 1 + trial % 8;
      Matrix a = random_matrix(f, n, n, rng), b = random_matrix(f, n, n, rng);
      const PackedMatrix pa = PackedMatrix::from_matrix(a), pb = PackedMatrix::from_matrix(b);
      CHECK(pa.to_matrix(f, n) == a);
      CHECK(ops.mul(pa, pb).to_matrix(f, n) == a * b);
      CHECK(PackedOps::add(pa, pb).to_matrix(f, n) == a + b);
      for (auto c : f.elements()) CHECK(ops.scale(pa, c).to_matrix(f, n) == a.scaled(c));
      Vector v = random_matrix(f, n, 1, rng).column(0);
      CHECK(PackedOps::unpack(ops.apply(pa, PackedOps::pack(v)), n) == a * v);
      CHECK(PackedOps::unpack(PackedOps::pack(v), n) == v);
      Matrix p = a;
      for (int i = 1; i < n; ++i) p = p * a;
      CHECK(ops.is_nilpotent(pa, n) == p.is_zero());
    }
    CHECK(ops.identity(5).to_matrix(f, 5) == Matrix::identity(f, 5));
  }
  CHECK_THROWS_AS(PackedOps(FieldCtx(3)), InvalidInput);
  CHECK_THROWS_AS(PackedMatrix::from_matrix(Matrix(FieldCtx(1), 9, 9)), InvalidInput);
}
