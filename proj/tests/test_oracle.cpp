#include <doctest.h>

#include "orbitforge/errors.hpp"
#include "orbitforge/invariants.hpp"
#include "orbitforge/oracle.hpp"

using namespace orbitforge;

namespace {

const FieldCtx F2(1), F4(2);

// Nilpotent elements of o(V) by scanning every N x N matrix: <xv, v> = 0 on
// all v, x kills the radical, and x^N = 0.
std::size_t brute_nilpotent_count(const QuadraticSpace& space) {
  const FieldCtx& f = space.field();
  const int n = space.dim();
  const auto vectors = all_vectors(f, n);
  std::size_t count = 0;
  const std::uint64_t total = std::uint64_t{1} << (n * n * f.degree());
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    Matrix x(f, n, n);
    std::uint64_t rest = idx;
    for (int e = 0; e < n * n; ++e) {
      x(e / n, e % n) = FieldElem{static_cast<std::uint8_t>(rest % f.order())};
      rest /= f.order();
    }
    bool ok = power(x, n).is_zero();
    for (std::size_t i = 0; i < vectors.size() && ok; ++i)
      ok = space.bilinear(x * vectors[i], vectors[i]).is_zero();
    for (const auto& r : space.radical()) ok = ok && (x * r == Vector(n));
    count += ok;
  }
  return count;
}

}  // namespace

TEST_CASE("nilpotent enumeration") {
  CHECK(enumerate_nilpotents(standard_space(F2, 3, WittType::OddDefective)).scanned == 8);
  CHECK(enumerate_nilpotents(standard_space(F2, 4, WittType::Plus)).scanned == 64);
  for (auto [field, n, type] : {std::tuple{F2, 3, WittType::OddDefective},
                                std::tuple{F2, 4, WittType::Plus},
                                std::tuple{F2, 4, WittType::Minus},
                                std::tuple{F2, 2, WittType::Plus},
                                std::tuple{F4, 3, WittType::OddDefective}}) {
    const auto space = standard_space(field, n, type);
    const auto nil = enumerate_nilpotents(space);
    CHECK(nil.elements.size() == brute_nilpotent_count(space));
    CHECK(std::is_sorted(nil.elements.begin(), nil.elements.end()));
  }
  // threaded scan gives the same sorted list
  const auto space = standard_space(F2, 6, WittType::Minus);
  CHECK(enumerate_nilpotents(space, 1).elements == enumerate_nilpotents(space, 3).elements);
  CHECK_THROWS_AS(enumerate_nilpotents(standard_space(F4, 7, WittType::OddDefective)), ResourceGuard);
}

TEST_CASE("nilpotent index") {
  const auto nil = enumerate_nilpotents(standard_space(F2, 5, WittType::OddDefective));
  const NilpotentIndex index(nil.elements);
  for (std::size_t i = 0; i < nil.elements.size(); ++i) CHECK(index.find(nil.elements[i]) == i);
  PackedMatrix id;
  for (int r = 0; r < 5; ++r) id.set(r, r, F2.one());
  CHECK(index.find(id) == -1);
}

TEST_CASE("matrix invariants") {
  CHECK(jordan_partition(Matrix(F2, 5, 5)) == std::vector<int>{1, 1, 1, 1, 1});
  Matrix j(F2, 6, 6);
  for (int i = 0; i + 1 < 6; ++i) j(i + 1, i) = F2.one();
  CHECK(jordan_partition(j) == std::vector<int>{6});
  CHECK_THROWS_AS(jordan_partition(Matrix::identity(F2, 3)), InvalidInput);
  const auto odd = standard_space(F2, 3, WittType::OddDefective);
  CHECK(chi_of(odd, Matrix(F2, 3, 3), 1) == 1);

  // chi of a representative is the pointwise max of its summand index functions
  for (int n = 1; n <= 10; ++n)
    for (auto type : n % 2 ? std::vector{WittType::OddDefective}
                           : std::vector{WittType::Plus, WittType::Minus})
      for (const auto& lab : enumerate_rational_orbits(n, type, Flavor::O)) {
        const auto rep = representative(lab, F2);
        const auto d = decomposition_of(lab);
        for (int m = 1; m <= n; ++m) {
          int expect = 0;
          for (const auto& s : d.summands()) expect = std::max(expect, index_fn(s.lambda, s.l, m));
          CHECK(chi_of(rep.space, rep.t, m) == expect);
        }
      }
}

TEST_CASE("orbit partitions") {
  const auto o5 = standard_space(F2, 5, WittType::OddDefective);
  const auto r5 = orbit_partition(o5, false);
  CHECK(r5.orbits.size() == 5);
  CHECK(r5.group_order == 720);
  CHECK(r5.orbits.front().representative.is_zero());
  CHECK(r5.orbits.front().centralizer_order == 720);
  CHECK(centralizer_order(r5, o5, Matrix(F2, 5, 5)) == 720);
  const auto reg = representative_in(make_label(parse_symbol("(3)_3(2)_2"), {}), o5);
  CHECK(jordan_partition(reg) == std::vector<int>{3, 2});
  for (const auto& rec : r5.orbits)
    if (rec.symbol == parse_symbol("(3)_3(2)_2")) CHECK(centralizer_order(r5, o5, reg) == 720 / rec.size);

  const auto p4 = standard_space(F2, 4, WittType::Plus);
  CHECK(orbit_partition(p4, false).orbits.size() == 3);
  CHECK(orbit_partition(p4, true).orbits.size() == 4);
  CHECK(orbit_partition(standard_space(F2, 4, WittType::Minus), false).orbits.size() == 2);
  CHECK(orbit_partition(standard_space(F2, 3, WittType::OddDefective), false).orbits.size() == 2);

  OracleOptions paranoid;
  paranoid.check_every_element = true;
  CHECK_NOTHROW(orbit_partition(standard_space(F2, 6, WittType::Plus), true, paranoid));
}

TEST_CASE("reconciliation on small spaces") {
  for (auto [field, n, type] : {std::tuple{F2, 3, WittType::OddDefective},
                                std::tuple{F2, 5, WittType::OddDefective},
                                std::tuple{F2, 2, WittType::Plus},
                                std::tuple{F2, 2, WittType::Minus},
                                std::tuple{F2, 4, WittType::Plus},
                                std::tuple{F2, 4, WittType::Minus},
                                std::tuple{F2, 6, WittType::Plus},
                                std::tuple{F2, 6, WittType::Minus},
                                std::tuple{F4, 3, WittType::OddDefective},
                                std::tuple{F4, 4, WittType::Plus},
                                std::tuple{F4, 4, WittType::Minus}}) {
    const auto space = standard_space(field, n, type);
    for (auto flavor : {Flavor::O, Flavor::SO}) {
      const auto res = reconcile(space, flavor);
      std::string why;
      for (const auto& i : res.issues) why += i.check + ": " + i.message + "\n";
      INFO(n, " ", witt_type_name(type), " q=", field.order(), "\n", why);
      CHECK(res.pass);
    }
  }
  const auto six = reconcile(standard_space(F2, 6, WittType::Plus), Flavor::SO);
  CHECK(six.report.orbits.size() == 5);
}

TEST_CASE("reconciliation in a non-standard basis") {
  // Same form written in a scrambled basis.
  const auto base = standard_space(F2, 5, WittType::OddDefective);
  Matrix b = Matrix::identity(F2, 5);
  b(0, 1) = b(2, 4) = b(1, 3) = b(0, 4) = F2.one();
  REQUIRE(inverse(b));
  const auto res = reconcile(base.change_basis(b), Flavor::O);
  CHECK(res.pass);
  CHECK(res.report.orbits.size() == 5);
}

TEST_CASE("centralizers and the Dickson invariant") {
  const auto p4 = standard_space(F2, 4, WittType::Plus);
  const auto aa = representative_in(make_label(parse_symbol("(2)_1^2"), {}), p4);
  const auto prof = centralizer_profile(p4, aa);
  CHECK(prof.order > 0);
  CHECK(prof.odd_dickson == 0);
  const auto other = representative_in(make_label(parse_symbol("(2)_2^2"), {false}), p4);
  CHECK(centralizer_profile(p4, other).odd_dickson * 2 == centralizer_profile(p4, other).order);
  CHECK_THROWS_AS(centralizer_profile(standard_space(F2, 3, WittType::OddDefective), Matrix(F2, 3, 3)),
                  InvalidInput);
}
