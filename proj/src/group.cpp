#include "orbitforge/group.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <random>
#include <unordered_map>
#include <unordered_set>

#include "orbitforge/errors.hpp"

namespace orbitforge {

namespace {

constexpr std::size_t kClosureCap = std::size_t{1} << 22;

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) throw ResourceGuard("group order overflows 64 bits");
  return out;
}

std::uint64_t ipow(std::uint64_t b, int e) {
  std::uint64_t out = 1;
  for (int i = 0; i < e; ++i) out = checked_mul(out, b);
  return out;
}

struct Bound {
  std::uint64_t order = 0;
  bool exact = false;  // obtained by full closure
};

// Closure, or nullopt when the cap is exceeded.
std::optional<std::vector<PackedMatrix>> try_closure(const PackedOps& ops,
                                                     std::span<const PackedMatrix> gens, int n,
                                                     std::size_t cap) {
  std::unordered_set<PackedMatrix, PackedMatrixHash> seen;
  std::vector<PackedMatrix> queue{ops.identity(n)};
  seen.insert(queue.front());
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const PackedMatrix g = queue[head];
    for (const auto& s : gens) {
      const PackedMatrix h = ops.mul(s, g);
      if (seen.insert(h).second) {
        if (seen.size() > cap) return std::nullopt;
        queue.push_back(h);
      }
    }
  }
  std::sort(queue.begin(), queue.end());
  return queue;
}

Bound bound_impl(const PackedOps& ops, std::span<const PackedMatrix> gens, int n, int level,
                 std::size_t cap, std::size_t budget) {
  if (auto all = try_closure(ops, gens, n, cap)) return {all->size(), true};
  if (level >= n) throw ConsistencyError("point stabilizer chain exhausted");

  std::vector<PackedMatrix> inv;
  for (const auto& s : gens) inv.push_back(packed_inverse(ops, s, n));

  const PackedVector base = static_cast<PackedVector>(1u << level);
  std::unordered_map<PackedVector, std::size_t> where{{base, 0}};
  std::vector<PackedVector> points{base};
  std::vector<PackedMatrix> u{ops.identity(n)}, uinv{ops.identity(n)};
  for (std::size_t head = 0; head < points.size(); ++head) {
    for (std::size_t k = 0; k < gens.size(); ++k) {
      const PackedVector img = ops.apply(gens[k], points[head]);
      if (where.emplace(img, points.size()).second) {
        points.push_back(img);
        u.push_back(ops.mul(gens[k], u[head]));
        uinv.push_back(ops.mul(uinv[head], inv[k]));
      }
    }
  }

  const PackedMatrix id = ops.identity(n);
  std::unordered_set<PackedMatrix, PackedMatrixHash> seen;
  std::vector<PackedMatrix> schreier;
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t k = 0; k < gens.size(); ++k) {
      const std::size_t j = where.at(ops.apply(gens[k], points[i]));
      const PackedMatrix sg = ops.mul(uinv[j], ops.mul(gens[k], u[i]));
      if (sg != id && seen.insert(sg).second) schreier.push_back(sg);
    }
  std::mt19937_64 rng(0x5eed0000u + static_cast<unsigned>(level));
  std::shuffle(schreier.begin(), schreier.end(), rng);
  if (schreier.size() > budget) schreier.resize(budget);

  const Bound sub = bound_impl(ops, schreier, n, level + 1, cap, budget);
  return {checked_mul(points.size(), sub.order), false};
}

PackedMatrix to_packed(const OrthMap& g) { return PackedMatrix::from_matrix(g.matrix()); }

Bound certify(const PackedOps& ops, std::span<const PackedMatrix> gens, int n,
              std::uint64_t target) {
  Bound b;
  for (std::size_t budget : {std::size_t{16}, std::size_t{64}, std::size_t{256},
                             std::numeric_limits<std::size_t>::max()}) {
    b = bound_impl(ops, gens, n, 0, kClosureCap, budget);
    if (b.exact || b.order >= target) break;
  }
  return b;
}

}  // namespace

std::uint64_t classical_order(int dim, WittType type, unsigned q, bool special) {
  if (dim < 1) throw InvalidInput("group order needs dimension >= 1");
  if ((dim % 2 == 1) != (type == WittType::OddDefective))
    throw InvalidInput("dimension does not fit Witt type");
  const int n = dim / 2;
  if (type == WittType::OddDefective) {
    std::uint64_t out = ipow(q, n * n);
    for (int i = 1; i <= n; ++i) out = checked_mul(out, ipow(q, 2 * i) - 1);
    return out;
  }
  std::uint64_t out = checked_mul(special ? 1 : 2, ipow(q, n * (n - 1)));
  const std::uint64_t qn = ipow(q, n);
  out = checked_mul(out, type == WittType::Plus ? qn - 1 : qn + 1);
  for (int i = 1; i < n; ++i) out = checked_mul(out, ipow(q, 2 * i) - 1);
  return out;
}

std::vector<OrthMap> all_transvections(const QuadraticSpace& space) {
  std::vector<OrthMap> out;
  for (const auto& v : all_vectors(space.field(), space.dim()))
    if (space.eval_q(v) == space.field().one()) out.push_back(transvection(space, v));
  return out;
}

PackedMatrix packed_inverse(const PackedOps& ops, const PackedMatrix& g, int n) {
  const PackedMatrix id = ops.identity(n);
  PackedMatrix prev = id;
  PackedMatrix cur = g;
  for (int i = 0; i < (1 << 20); ++i) {
    if (cur == id) return prev;
    prev = cur;
    cur = ops.mul(cur, g);
  }
  throw ConsistencyError("element order too large or element not invertible");
}

std::vector<PackedMatrix> group_closure(const PackedOps& ops, std::span<const PackedMatrix> gens,
                                        int n, std::size_t cap) {
  auto all = try_closure(ops, gens, n, cap);
  if (!all) throw ResourceGuard("group closure exceeds " + std::to_string(cap) + " elements");
  return *all;
}

std::uint64_t order_lower_bound(const PackedOps& ops, std::span<const PackedMatrix> gens, int n,
                                int level, std::size_t cap, std::size_t schreier_budget) {
  return bound_impl(ops, gens, n, level, cap, schreier_budget).order;
}

GeneratorSet generators(const QuadraticSpace& space, bool special) {
  const FieldCtx& f = space.field();
  const int n = space.dim();
  if (n > PackedMatrix::kMaxDim || f.degree() > PackedMatrix::kMaxDegree)
    throw ResourceGuard("generator search supports N <= 8 and q <= 4 only");
  const PackedOps ops(f);
  const WittType type = witt_type(space);

  // Greedy choice of transvection centres until their orbits cover all
  // Q = 1 vectors.
  std::vector<Vector> centres;
  for (const auto& v : all_vectors(f, n))
    if (space.eval_q(v) == f.one()) centres.push_back(v);
  std::vector<OrthMap> chosen;
  std::vector<PackedMatrix> packed;
  std::vector<PackedVector> axes;
  std::vector<bool> covered(1u << 16, false);
  for (const auto& c : centres) {
    if (covered[PackedOps::pack(c)]) continue;
    chosen.push_back(transvection(space, c));
    packed.push_back(to_packed(chosen.back()));
    axes.push_back(PackedOps::pack(c));
    std::fill(covered.begin(), covered.end(), false);
    std::vector<PackedVector> queue = axes;
    for (auto a : axes) covered[a] = true;
    for (std::size_t head = 0; head < queue.size(); ++head)
      for (const auto& g : packed) {
        const PackedVector img = ops.apply(g, queue[head]);
        if (!covered[img]) {
          covered[img] = true;
          queue.push_back(img);
        }
      }
  }

  std::uint64_t target = classical_order(n, type, f.order(), false);
  Bound b = certify(ops, packed, n, target);
  bool augmented = false;
  if (b.order < target && b.exact) {
    std::uint64_t search = 1;
    bool small = true;
    for (int i = 0; i < n * n && small; ++i) {
      search *= f.order();
      small = search <= (std::uint64_t{1} << 24);
    }
    if (!small) throw ConsistencyError("transvections undershoot and search space is too large");
    while (b.order < target) {
      const auto group = group_closure(ops, packed, n, kClosureCap);
      bool added = false;
      for (std::uint64_t idx = 0; idx < search && !added; ++idx) {
        Matrix m(f, n, n);
        std::uint64_t rest = idx;
        for (int e = 0; e < n * n; ++e) {
          m(e / n, e % n) = FieldElem{static_cast<std::uint8_t>(rest % f.order())};
          rest /= f.order();
        }
        if (!preserves_form(space, m)) continue;
        const PackedMatrix p = PackedMatrix::from_matrix(m);
        if (std::binary_search(group.begin(), group.end(), p)) continue;
        chosen.emplace_back(space, m);
        packed.push_back(p);
        added = true;
      }
      if (!added) break;
      augmented = true;
      b = certify(ops, packed, n, target);
    }
  }
  if (b.order != target)
    throw ConsistencyError("generated group order " + std::to_string(b.order) +
                           " does not match classical order " + std::to_string(target));

  GeneratorSet out{chosen, {target, b.order, augmented, b.exact ? "closure" : "orbit-stabilizer"}};
  if (!special || space.defective()) return out;

  // Schreier generators for the index-2 subgroup SO(V).
  std::size_t ti = 0;
  while (ti < chosen.size() && dickson(space, chosen[ti]) == 0) ++ti;
  if (ti == chosen.size()) throw ConsistencyError("no generator of Dickson invariant 1");
  const PackedMatrix t = packed[ti];
  const PackedMatrix tinv = packed_inverse(ops, t, n);
  const PackedMatrix id = ops.identity(n);
  std::vector<PackedMatrix> so;
  for (std::size_t i = 0; i < chosen.size(); ++i) {
    const PackedMatrix& s = packed[i];
    const bool even = dickson(space, chosen[i]) == 0;
    for (const PackedMatrix& g : even ? std::array{s, ops.mul(ops.mul(t, s), tinv)}
                                      : std::array{ops.mul(s, tinv), ops.mul(t, s)})
      if (g != id && std::find(so.begin(), so.end(), g) == so.end()) so.push_back(g);
  }
  GeneratorSet sout;
  for (const auto& g : so) {
    sout.gens.emplace_back(space, g.to_matrix(f, n));
    if (dickson(space, sout.gens.back()) != 0)
      throw ConsistencyError("SO generator has Dickson invariant 1");
  }
  target = classical_order(n, type, f.order(), true);
  b = certify(ops, so, n, target);
  if (b.order != target)
    throw ConsistencyError("generated SO order " + std::to_string(b.order) +
                           " does not match classical order " + std::to_string(target));
  sout.certificate = {target, b.order, augmented, b.exact ? "closure" : "orbit-stabilizer"};
  return sout;
}

}  // namespace orbitforge
