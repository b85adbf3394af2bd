#include <doctest.h>

#include "orbitforge/errors.hpp"
#include "orbitforge/group.hpp"

using namespace orbitforge;

namespace {

// Count orthogonal matrices by scanning every N x N matrix.
std::uint64_t count_orthogonal(const QuadraticSpace& s) {
  const FieldCtx& f = s.field();
  const int n = s.dim();
  std::uint64_t total = 1;
  for (int i = 0; i < n * n; ++i) total *= f.order();
  std::uint64_t count = 0;
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    Matrix m(f, n, n);
    std::uint64_t rest = idx;
    for (int e = 0; e < n * n; ++e) {
      m(e / n, e % n) = FieldElem{static_cast<std::uint8_t>(rest % f.order())};
      rest /= f.order();
    }
    count += preserves_form(s, m);
  }
  return count;
}

struct Case {
  int n;
  WittType t;
  int k;
};

}  // namespace

TEST_CASE("classical orders") {
  CHECK(classical_order(3, WittType::OddDefective, 2, false) == 6);
  CHECK(classical_order(5, WittType::OddDefective, 2, false) == 720);
  CHECK(classical_order(7, WittType::OddDefective, 2, false) == 1451520);
  CHECK(classical_order(4, WittType::Plus, 2, false) == 72);
  CHECK(classical_order(4, WittType::Minus, 2, false) == 120);
  CHECK(classical_order(2, WittType::Plus, 2, false) == 2);
  CHECK(classical_order(2, WittType::Minus, 2, false) == 6);
  CHECK(classical_order(8, WittType::Plus, 2, false) == 348364800ULL);
  CHECK(classical_order(8, WittType::Minus, 2, false) == 394813440ULL);
  CHECK(classical_order(5, WittType::OddDefective, 4, false) == 979200);
  CHECK(classical_order(4, WittType::Plus, 2, true) == 36);
  CHECK(classical_order(3, WittType::OddDefective, 2, true) == 6);
}

TEST_CASE("classical orders agree with a scan of all matrices") {
  for (Case c : {Case{2, WittType::Plus, 1}, Case{2, WittType::Minus, 1},
                 Case{3, WittType::OddDefective, 1}, Case{4, WittType::Plus, 1},
                 Case{4, WittType::Minus, 1}, Case{2, WittType::Plus, 2},
                 Case{2, WittType::Minus, 2}, Case{3, WittType::OddDefective, 2}}) {
    FieldCtx f(c.k);
    CAPTURE(c.n);
    CHECK(count_orthogonal(standard_space(f, c.n, c.t)) ==
          classical_order(c.n, c.t, f.order(), false));
  }
}

TEST_CASE("certified generating sets") {
  for (Case c : {Case{1, WittType::OddDefective, 1}, Case{2, WittType::Plus, 1},
                 Case{2, WittType::Minus, 1}, Case{3, WittType::OddDefective, 1},
                 Case{4, WittType::Plus, 1}, Case{4, WittType::Minus, 1},
                 Case{5, WittType::OddDefective, 1}, Case{6, WittType::Plus, 1},
                 Case{6, WittType::Minus, 1}, Case{7, WittType::OddDefective, 1},
                 Case{3, WittType::OddDefective, 2}, Case{4, WittType::Plus, 2},
                 Case{4, WittType::Minus, 2}, Case{5, WittType::OddDefective, 2}}) {
    FieldCtx f(c.k);
    CAPTURE(c.n);
    CAPTURE(c.k);
    auto s = standard_space(f, c.n, c.t);
    auto g = generators(s, false);
    CHECK(g.certificate.certified_order == classical_order(c.n, c.t, f.order(), false));
    CHECK(g.certificate.augmented == (c.n == 4 && c.t == WittType::Plus && c.k == 1));
    if (c.t != WittType::OddDefective) {
      auto so = generators(s, true);
      CHECK(so.certificate.certified_order == classical_order(c.n, c.t, f.order(), true));
      for (const auto& x : so.gens) CHECK(dickson(s, x) == 0);
    }
  }
}

TEST_CASE("transvections alone miss half of O4+(2)") {
  FieldCtx f(1);
  auto s = standard_space(f, 4, WittType::Plus);
  PackedOps ops(f);
  std::vector<PackedMatrix> ts;
  for (const auto& t : all_transvections(s)) ts.push_back(PackedMatrix::from_matrix(t.matrix()));
  CHECK(group_closure(ops, ts, 4, 1000).size() == 36);
}

TEST_CASE("Dickson invariant is a homomorphism on O4+(2)") {
  FieldCtx f(1);
  auto s = standard_space(f, 4, WittType::Plus);
  PackedOps ops(f);
  auto g = generators(s, false);
  std::vector<PackedMatrix> gens;
  for (const auto& x : g.gens) gens.push_back(PackedMatrix::from_matrix(x.matrix()));
  const auto group = group_closure(ops, gens, 4, 1000);
  REQUIRE(group.size() == 72);
  std::vector<int> d;
  for (const auto& x : group) d.push_back(dickson(s, OrthMap(s, x.to_matrix(f, 4))));
  for (std::size_t i = 0; i < group.size(); i += 5)
    for (std::size_t j = 0; j < group.size(); j += 3) {
      const PackedMatrix p = ops.mul(group[i], group[j]);
      const auto it = std::lower_bound(group.begin(), group.end(), p);
      REQUIRE(it != group.end());
      CHECK(d[it - group.begin()] == (d[i] + d[j]) % 2);
    }
}
