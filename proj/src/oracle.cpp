#include "orbitforge/oracle.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdlib>
#include <map>
#include <thread>
#include <unordered_set>

#include "orbitforge/counting.hpp"
#include "orbitforge/errors.hpp"
#include "orbitforge/invariants.hpp"

namespace orbitforge {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

PackedMatrix packed(const Matrix& m) { return PackedMatrix::from_matrix(m); }

}  // namespace

int worker_count(int requested) {
  int n = static_cast<int>(std::thread::hardware_concurrency());
  if (const char* env = std::getenv("ORBITFORGE_THREADS")) {
    const int v = std::atoi(env);
    if (v >= 1) n = v;
  }
  if (requested > 0) n = std::min(n, requested);
  return std::max(n, 1);
}

NilpotentSet enumerate_nilpotents(const QuadraticSpace& space, int threads) {
  const FieldCtx& f = space.field();
  const int n = space.dim();
  if (n > PackedMatrix::kMaxDim || f.degree() > PackedMatrix::kMaxDegree)
    throw ResourceGuard("nilpotent enumeration supports N <= 8 and q <= 4 only");
  const std::vector<Matrix> basis = lie_algebra_basis(space);
  const int d = static_cast<int>(basis.size());
  if (d * f.degree() > kEnumerationGuardBits)
    throw ResourceGuard("q^dim o(V) = 2^" + std::to_string(d * f.degree()) +
                        " exceeds the enumeration guard 2^" +
                        std::to_string(kEnumerationGuardBits));
  const PackedOps ops(f);
  const unsigned q = f.order();
  // scaled[i][c] = c * basis[i]
  std::vector<std::vector<PackedMatrix>> scaled(d);
  for (int i = 0; i < d; ++i)
    for (const FieldElem c : f.elements()) scaled[i].push_back(ops.scale(packed(basis[i]), c));

  const std::uint64_t total = std::uint64_t{1} << (d * f.degree());
  const int workers = static_cast<int>(std::min<std::uint64_t>(worker_count(threads), total));
  std::vector<std::vector<PackedMatrix>> found(workers);

  auto scan = [&](int w) {
    const std::uint64_t begin = total * w / workers, end = total * (w + 1) / workers;
    std::vector<unsigned> digit(d);
    PackedMatrix x;
    std::uint64_t rest = begin;
    for (int i = 0; i < d; ++i) {
      digit[i] = static_cast<unsigned>(rest % q);
      rest /= q;
      x = PackedOps::add(x, scaled[i][digit[i]]);
    }
    auto& out = found[w];
    for (std::uint64_t idx = begin; idx < end; ++idx) {
      if (ops.is_nilpotent(x, n)) out.push_back(x);
      for (int i = 0; i < d; ++i) {
        const unsigned next = (digit[i] + 1) % q;
        x = PackedOps::add(x, scaled[i][digit[i] ^ next]);
        digit[i] = next;
        if (next != 0) break;
      }
    }
  };
  if (workers == 1) {
    scan(0);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(scan, w);
    for (auto& t : pool) t.join();
  }

  NilpotentSet out;
  out.scanned = total;
  for (auto& part : found) out.elements.insert(out.elements.end(), part.begin(), part.end());
  std::sort(out.elements.begin(), out.elements.end());
  return out;
}

NilpotentIndex::NilpotentIndex(const std::vector<PackedMatrix>& elements) : elements_(&elements) {
  if (elements.size() >= 0xFFFFFFFFu) throw ResourceGuard("too many elements to index");
  const std::uint64_t cap = std::bit_ceil(std::max<std::uint64_t>(16, 2 * elements.size()));
  slots_.assign(cap, 0);
  mask_ = cap - 1;
  const PackedMatrixHash hash;
  for (std::size_t i = 0; i < elements.size(); ++i) {
    std::uint64_t h = hash(elements[i]) & mask_;
    while (slots_[h]) h = (h + 1) & mask_;
    slots_[h] = static_cast<std::uint32_t>(i + 1);
  }
}

std::int64_t NilpotentIndex::find(const PackedMatrix& m) const {
  std::uint64_t h = PackedMatrixHash{}(m) & mask_;
  while (const std::uint32_t s = slots_[h]) {
    if ((*elements_)[s - 1] == m) return s - 1;
    h = (h + 1) & mask_;
  }
  return -1;
}

Matrix representative_in(const RationalOrbitLabel& lab, const QuadraticSpace& space) {
  const WittBasis wb = witt_basis(space);
  if (wb.type != lab.form_type || space.dim() != lab.symbol.dim())
    throw InvalidInput("label " + to_string(lab) + " does not fit this space");
  const Matrix t = representative_in_standard(lab, space.field());
  const auto binv = inverse(wb.basis);
  if (!binv) throw ConsistencyError("Witt basis is singular");
  return wb.basis * t * *binv;
}

namespace {

struct PackedGenerators {
  std::vector<PackedMatrix> g, ginv;
  std::uint64_t order = 0;
};

PackedGenerators packed_generators(const QuadraticSpace& space, bool special) {
  const PackedOps ops(space.field());
  const GeneratorSet gs = generators(space, special);
  PackedGenerators out;
  for (const auto& g : gs.gens) {
    out.g.push_back(packed(g.matrix()));
    out.ginv.push_back(packed_inverse(ops, out.g.back(), space.dim()));
  }
  out.order = gs.certificate.certified_order;
  return out;
}

}  // namespace

OrbitReport orbit_partition(const QuadraticSpace& space, bool special, const OracleOptions& options) {
  const FieldCtx& f = space.field();
  const int n = space.dim();
  const PackedOps ops(f);
  OrbitReport rep;
  rep.dim = n;
  rep.type = witt_type(space);
  rep.q = f.order();
  rep.special = special && !space.defective();

  auto start = Clock::now();
  const NilpotentSet nil = enumerate_nilpotents(space, options.threads);
  rep.enumerate_seconds = seconds_since(start);
  rep.scanned = nil.scanned;
  rep.nilpotent_count = nil.elements.size();

  start = Clock::now();
  const PackedGenerators gens = packed_generators(space, rep.special);
  rep.group_order = gens.order;
  const NilpotentIndex index(nil.elements);
  std::vector<std::int32_t> orbit_of(nil.elements.size(), -1);
  std::vector<std::uint32_t> queue;
  for (std::size_t first = 0; first < nil.elements.size(); ++first) {
    if (orbit_of[first] >= 0) continue;
    const auto id = static_cast<std::int32_t>(rep.orbits.size());
    OrbitRecord rec;
    rec.representative = nil.elements[first];
    const Matrix t = rec.representative.to_matrix(f, n);
    rec.symbol = measured_symbol(space, t);
    rec.jordan = jordan_partition(t);
    for (const auto& e : rec.symbol.entries) rec.chi.push_back(e.chi);

    queue.assign(1, static_cast<std::uint32_t>(first));
    orbit_of[first] = id;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const PackedMatrix& x = nil.elements[queue[head]];
      if (options.check_every_element && measured_symbol(space, x.to_matrix(f, n)) != rec.symbol)
        throw ConsistencyError("symbol is not constant on the orbit of " + to_string(rec.symbol));
      for (std::size_t g = 0; g < gens.g.size(); ++g) {
        const std::int64_t y = index.find(ops.conjugate(gens.g[g], x, gens.ginv[g]));
        if (y < 0) throw ConsistencyError("conjugate of a nilpotent element left the nilpotent set");
        if (orbit_of[y] < 0) {
          orbit_of[y] = id;
          queue.push_back(static_cast<std::uint32_t>(y));
        }
      }
    }
    rec.size = queue.size();
    rec.centralizer_order = rep.group_order % rec.size == 0 ? rep.group_order / rec.size : 0;
    rep.orbits.push_back(std::move(rec));
  }

  const Flavor flavor = rep.special ? Flavor::SO : Flavor::O;
  for (const auto& lab : enumerate_rational_orbits(n, rep.type, flavor)) {
    const std::int64_t at = index.find(packed(representative_in(lab, space)));
    if (at < 0) {
      rep.stray_labels.push_back(lab);
      continue;
    }
    OrbitRecord& rec = rep.orbits[orbit_of[at]];
    if (!rec.label) rec.label = lab;
    ++rec.label_hits;
  }
  rep.bfs_seconds = seconds_since(start);

  if (options.strict) {
    if (!rep.stray_labels.empty())
      throw ConsistencyError("representative of " + to_string(rep.stray_labels.front()) +
                             " is not a nilpotent element of o(V)");
    for (const auto& rec : rep.orbits)
      if (rec.label_hits != 1)
        throw ConsistencyError("orbit of " + to_string(rec.symbol) + " matches " +
                               std::to_string(rec.label_hits) + " labels");
  }
  return rep;
}

std::uint64_t centralizer_order(const OrbitReport& report, const QuadraticSpace& space,
                                const Matrix& t) {
  const PackedOps ops(space.field());
  const PackedGenerators gens = packed_generators(space, report.special);
  std::unordered_set<PackedMatrix, PackedMatrixHash> seen{packed(t)};
  std::vector<PackedMatrix> queue{packed(t)};
  for (std::size_t head = 0; head < queue.size(); ++head)
    for (std::size_t g = 0; g < gens.g.size(); ++g) {
      const PackedMatrix y = ops.conjugate(gens.g[g], queue[head], gens.ginv[g]);
      if (seen.insert(y).second) queue.push_back(y);
    }
  if (report.group_order % queue.size())
    throw ConsistencyError("orbit size does not divide the group order");
  return report.group_order / queue.size();
}

CentralizerProfile centralizer_profile(const QuadraticSpace& space, const Matrix& t) {
  if (space.defective()) throw InvalidInput("the Dickson invariant needs a non-defective space");
  const FieldCtx& f = space.field();
  const int n = space.dim();
  const PackedOps ops(f);
  const PackedGenerators gens = packed_generators(space, false);
  const auto group = group_closure(ops, gens.g, n, std::size_t{1} << 22);
  const PackedMatrix x = packed(t);
  CentralizerProfile out;
  for (const auto& g : group) {
    if (ops.mul(g, x) != ops.mul(x, g)) continue;
    ++out.order;
    out.odd_dickson += dickson(space, OrthMap(space, g.to_matrix(f, n)));
  }
  return out;
}

ReconcileResult reconcile(const QuadraticSpace& space, Flavor flavor, const OracleOptions& options) {
  OracleOptions opts = options;
  opts.strict = false;
  ReconcileResult res;
  const int n = space.dim();
  const bool even = !space.defective();
  if (!even) flavor = Flavor::O;
  auto issue = [&](std::string check, std::string msg) {
    res.issues.push_back({std::move(check), std::move(msg)});
  };

  res.o_report = orbit_partition(space, false, opts);
  if (even) res.so_report = orbit_partition(space, true, opts);
  res.report = flavor == Flavor::SO ? *res.so_report : *res.o_report;
  const OrbitReport& rep = res.report;

  // (a) orbit count
  const auto labels = enumerate_rational_orbits(n, rep.type, flavor);
  if (rep.orbits.size() != labels.size())
    issue("count", std::to_string(rep.orbits.size()) + " orbits found, " +
                       std::to_string(labels.size()) + " predicted");
  const Series series = !even ? Series::B
                        : rep.type == WittType::Minus ? Series::Dminus
                        : flavor == Flavor::SO ? Series::SOplus
                                               : Series::Dplus;
  if (orbit_count(series, n / 2) != rep.orbits.size())
    issue("count", "orbit count formula gives " + std::to_string(orbit_count(series, n / 2)));

  // sizes and measured symbols
  std::uint64_t total = 0;
  for (const auto& rec : rep.orbits) {
    total += rec.size;
    if (rec.centralizer_order == 0)
      issue("sizes", "orbit size " + std::to_string(rec.size) + " does not divide the group order");
    if (auto v = validate_symbol(rec.symbol))
      issue("symbol", "measured " + to_string(rec.symbol) + " is invalid: " + v->message);
  }
  if (total != rep.nilpotent_count) issue("sizes", "orbit sizes do not sum to the nilpotent count");

  // (b) per-symbol splitting
  std::map<std::string, std::vector<const OrbitRecord*>> by_symbol;
  for (const auto& rec : rep.orbits) by_symbol[to_string(rec.symbol)].push_back(&rec);
  for (const auto& s : enumerate_symbols(n, !even)) {
    std::size_t expect;
    if (!even) expect = std::size_t{1} << n1(s);
    else if (n2(s) > 0) expect = std::size_t{1} << (n2(s) - 1);
    else expect = rep.type == WittType::Minus ? 0 : flavor == Flavor::SO ? 2 : 1;
    const auto it = by_symbol.find(to_string(s));
    const std::size_t got = it == by_symbol.end() ? 0 : it->second.size();
    if (got != expect)
      issue("split", to_string(s) + ": " + std::to_string(got) + " orbits, expected " +
                         std::to_string(expect));
  }
  if (by_symbol.size() > enumerate_symbols(n, !even).size())
    issue("split", "orbits carry symbols outside the enumeration");

  // (c) one label per orbit
  for (const auto& lab : rep.stray_labels)
    issue("match", "representative of " + to_string(lab) + " is not in the nilpotent set");
  for (const auto& rec : rep.orbits) {
    if (rec.label_hits != 1)
      issue("match", "orbit of " + to_string(rec.symbol) + " matched " +
                         std::to_string(rec.label_hits) + " labels");
    else if (rec.label->symbol != rec.symbol)
      issue("match", "label " + to_string(*rec.label) + " landed in an orbit measuring " +
                         to_string(rec.symbol));
  }

  // (d) Z(x) inside SO(V) exactly for the (a, a) pairs
  if (even) {
    for (const auto& o : res.o_report->orbits) {
      const auto so = std::find_if(res.so_report->orbits.begin(), res.so_report->orbits.end(),
                                   [&](const OrbitRecord& r) { return r.representative == o.representative; });
      if (so == res.so_report->orbits.end() || !o.label) {
        issue("z-in-so", "no SO-orbit through the minimum of " + to_string(o.symbol));
        continue;
      }
      const bool inside = so->size * 2 == o.size;
      const PartitionPair pair = label_to_pair(*o.label);
      if (inside != (pair.alpha == pair.beta))
        issue("z-in-so", to_string(o.symbol) + ": centralizer " +
                             (inside ? "inside" : "not inside") + " SO for pair " + to_string(pair));
    }
  }
  res.pass = res.issues.empty();
  return res;
}

}  // namespace orbitforge
