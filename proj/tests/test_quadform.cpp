#include <doctest.h>

#include <cmath>
#include <random>
#include <tuple>

#include "orbitforge/errors.hpp"
#include "orbitforge/quadform.hpp"

using namespace orbitforge;

namespace {

Vector random_vector(const FieldCtx& f, int n, std::mt19937& rng) {
  std::uniform_int_distribution<unsigned> d(0, f.order() - 1);
  Vector v(n);
  for (auto& x : v) x = f.element(d(rng));
  return v;
}

Matrix random_invertible(const FieldCtx& f, int n, std::mt19937& rng) {
  while (true) {
    std::vector<Vector> cols;
    for (int i = 0; i < n; ++i) cols.push_back(random_vector(f, n, rng));
    Matrix m = Matrix::from_columns(f, n, cols);
    if (rank(m) == n) return m;
  }
}

// Greedy extension of a totally singular subspace; by Witt's theorem every
// maximal one has the same dimension.
int witt_index_by_search(const QuadraticSpace& s) {
  const auto vs = all_vectors(s.field(), s.dim());
  std::vector<Vector> basis;
  bool grew = true;
  while (grew) {
    grew = false;
    for (const auto& v : vs) {
      if (!s.eval_q(v).is_zero()) continue;
      bool orth = true;
      for (const auto& b : basis) orth = orth && s.bilinear(v, b).is_zero();
      if (!orth) continue;
      auto ext = basis;
      ext.push_back(v);
      if (span_basis(s.field(), ext).size() == ext.size()) {
        basis = std::move(ext);
        grew = true;
        break;
      }
    }
  }
  return static_cast<int>(basis.size());
}

}  // namespace

TEST_CASE("standard spaces") {
  FieldCtx f2(1);
  auto plus = standard_space(f2, 2, WittType::Plus);
  CHECK(plus.q_diag() == std::vector<FieldElem>{f2.zero(), f2.zero()});
  CHECK(plus.gram()(0, 1) == f2.one());
  CHECK(plus.eval_q({f2.one(), f2.one()}) == f2.one());
  auto minus = standard_space(f2, 2, WittType::Minus);
  CHECK(minus.q_diag() == std::vector<FieldElem>{f2.one(), f2.one()});
  CHECK(minus.gram()(0, 1) == f2.one());
  auto odd3 = standard_space(f2, 3, WittType::OddDefective);
  REQUIRE(odd3.radical().size() == 1);
  CHECK(odd3.radical()[0] == Vector{f2.zero(), f2.zero(), f2.one()});
  CHECK(odd3.eval_q(odd3.radical()[0]) == f2.one());
  CHECK(standard_space(f2, 5, WittType::OddDefective).radical().size() == 1);
  CHECK(plus.radical().empty());
  CHECK_THROWS_AS(standard_space(f2, 3, WittType::Plus), InvalidInput);
  CHECK_THROWS_AS(standard_space(f2, 4, WittType::OddDefective), InvalidInput);
}

TEST_CASE("degenerate forms are rejected") {
  FieldCtx f(1);
  Matrix zero(f, 2, 2);
  CHECK_THROWS_AS(QuadraticSpace(f, {f.one(), f.one()}, zero), InvalidInput);
  Matrix g(f, 1, 1);
  CHECK_THROWS_AS(QuadraticSpace(f, {f.zero()}, g), InvalidInput);
  Matrix bad(f, 2, 2);
  bad(0, 0) = f.one();
  CHECK_THROWS_AS(QuadraticSpace(f, {f.zero(), f.zero()}, bad), InvalidInput);
}

TEST_CASE("polarization identity and alternating form") {
  std::mt19937 rng(5);
  for (int k : {1, 2, 3}) {
    FieldCtx f(k);
    for (int n = 1; n <= 8; ++n) {
      auto s = standard_space(f, n, n % 2 ? WittType::OddDefective : WittType::Minus);
      s = s.change_basis(random_invertible(f, n, rng));
      for (int t = 0; t < 20; ++t) {
        Vector v = random_vector(f, n, rng), w = random_vector(f, n, rng);
        Vector vw(n);
        for (int i = 0; i < n; ++i) vw[i] = v[i] + w[i];
        CHECK(s.eval_q(vw) + s.eval_q(v) + s.eval_q(w) == s.bilinear(v, w));
        CHECK(s.bilinear(v, v).is_zero());
      }
    }
  }
}

TEST_CASE("Witt type round-trips and matches the Witt index search") {
  std::mt19937 rng(9);
  for (int k : {1, 2}) {
    FieldCtx f(k);
    for (int n = 1; n <= 8; ++n) {
      std::vector<WittType> types;
      if (n % 2) types = {WittType::OddDefective};
      else types = {WittType::Plus, WittType::Minus};
      for (auto t : types) {
        auto s = standard_space(f, n, t);
        CHECK(witt_type(s) == t);
        auto moved = s.change_basis(random_invertible(f, n, rng));
        CHECK(witt_type(moved) == t);
        auto wb = witt_basis(moved);
        CHECK(moved.change_basis(wb.basis) == standard_space(f, n, t));
        if (std::pow(f.order(), n) <= 4096) {
          const int idx = witt_index_by_search(moved);
          if (t == WittType::Plus) CHECK(idx == n / 2);
          if (t == WittType::Minus) CHECK(idx == n / 2 - 1);
          if (t == WittType::OddDefective) CHECK(idx == n / 2);
        }
      }
    }
  }
  FieldCtx f(1);
  auto m = standard_space(f, 2, WittType::Minus);
  CHECK(witt_type(orthogonal_sum(m, m)) == WittType::Plus);
  CHECK(witt_type(orthogonal_sum(m, standard_space(f, 2, WittType::Plus))) == WittType::Minus);
}

TEST_CASE("Lie algebra dimensions") {
  for (int k : {1, 2}) {
    FieldCtx f(k);
    for (int n = 1; n <= 8; ++n) {
      const int r = n / 2;
      const int expected = n % 2 ? 2 * r * r + r : 2 * r * r - r;
      auto s = standard_space(f, n, n % 2 ? WittType::OddDefective : WittType::Plus);
      const auto basis = lie_algebra_basis(s);
      CHECK(static_cast<int>(basis.size()) == expected);
      for (const auto& x : basis) CHECK(in_lie_algebra(s, x));
    }
  }
  FieldCtx f(1);
  CHECK(lie_algebra_basis(standard_space(f, 3, WittType::OddDefective)).size() == 3);
  CHECK(lie_algebra_basis(standard_space(f, 5, WittType::OddDefective)).size() == 10);
  CHECK(lie_algebra_basis(standard_space(f, 4, WittType::Plus)).size() == 6);
}

TEST_CASE("Lie algebra size by direct search over all matrices") {
  FieldCtx f(1);
  for (auto [n, t, expected] : {std::tuple{3, WittType::OddDefective, 8},
                                std::tuple{4, WittType::Plus, 64},
                                std::tuple{4, WittType::Minus, 64}}) {
    auto s = standard_space(f, n, t);
    const auto vs = all_vectors(f, n);
    int count = 0;
    for (unsigned bits = 0; bits < (1u << (n * n)); ++bits) {
      Matrix x(f, n, n);
      for (int e = 0; e < n * n; ++e) x(e / n, e % n) = FieldElem{static_cast<std::uint8_t>((bits >> e) & 1u)};
      if (!x.trace().is_zero()) continue;
      bool ok = true;
      for (const auto& v : vs) ok = ok && s.bilinear(x * v, v).is_zero();
      count += ok;
    }
    CHECK(count == expected);
  }
}

TEST_CASE("transvections and the Dickson invariant") {
  std::mt19937 rng(13);
  FieldCtx f(2);
  auto s = standard_space(f, 6, WittType::Minus);
  std::vector<OrthMap> ts;
  for (const auto& v : all_vectors(f, 6)) {
    if (s.eval_q(v).is_zero()) continue;
    auto t = transvection(s, v);
    CHECK(t.matrix() * v == v);
    CHECK(t.matrix() * t.matrix() == Matrix::identity(f, 6));
    CHECK(dickson(s, t) == 1);
    if (ts.size() < 12) ts.push_back(t);
  }
  for (int trial = 0; trial < 30; ++trial) {
    Vector x = random_vector(f, 6, rng), v = random_vector(f, 6, rng);
    if (s.eval_q(v).is_zero()) continue;
    if (s.bilinear(x, v).is_zero()) CHECK(transvection(s, v).matrix() * x == x);
  }
  CHECK(dickson(s, OrthMap(s, Matrix::identity(f, 6))) == 0);
  for (const auto& a : ts)
    for (const auto& b : ts) CHECK(dickson(s, OrthMap(s, a.matrix() * b.matrix())) == 0);
  CHECK_THROWS_AS(transvection(s, Vector(6)), InvalidInput);
  auto odd = standard_space(f, 3, WittType::OddDefective);
  CHECK_THROWS_AS(dickson(odd, OrthMap(odd, Matrix::identity(f, 3))), InvalidInput);
  Matrix bad = Matrix::identity(f, 6);
  bad(0, 1) = f.one();
  CHECK_THROWS_AS(OrthMap(s, bad), ConsistencyError);
}
