#include "orbitforge/rational.hpp"

#include <algorithm>
#include <deque>

#include "orbitforge/errors.hpp"
#include "orbitforge/invariants.hpp"

namespace orbitforge {

Summand make_w(int lambda, int l, bool delta) {
  if (lambda < 1 || 2 * l < lambda || l > lambda)
    throw InvalidInput("W_" + std::to_string(l) + "(" + std::to_string(lambda) +
                       ") needs lambda/2 <= l <= lambda");
  if (delta && 2 * l == lambda)
    throw InvalidInput("W_l(lambda) with l = lambda/2 has no delta variant");
  return {Summand::Kind::W, lambda, l, delta};
}

Summand make_d(int m) {
  if (m < 1) throw InvalidInput("D(m) needs m >= 1");
  return {Summand::Kind::D, m, m, false};
}

namespace {

bool summand_order(const Summand& a, const Summand& b) {
  if (a.lambda != b.lambda) return a.lambda > b.lambda;
  if (a.kind != b.kind) return a.kind == Summand::Kind::W;
  if (a.l != b.l) return a.l > b.l;
  return a.delta < b.delta;
}

}  // namespace

DecoratedDecomposition::DecoratedDecomposition(std::vector<Summand> summands)
    : summands_(std::move(summands)) {
  int d_count = 0;
  for (const auto& s : summands_) {
    if (s.kind == Summand::Kind::D) {
      make_d(s.lambda);
      if (s.l != s.lambda || s.delta) throw InvalidInput("D(m) carries no index or marker");
      ++d_count;
    } else {
      make_w(s.lambda, s.l, s.delta);
    }
  }
  if (d_count > 1) throw InvalidInput("a non-degenerate decomposition has at most one D summand");
  if (summands_.empty()) throw InvalidInput("decomposition has no summands");
  std::sort(summands_.begin(), summands_.end(), summand_order);
}

int DecoratedDecomposition::dim() const {
  int n = 0;
  for (const auto& s : summands_) n += s.dim();
  return n;
}

bool DecoratedDecomposition::defective() const {
  return std::any_of(summands_.begin(), summands_.end(),
                     [](const Summand& s) { return s.kind == Summand::Kind::D; });
}

int DecoratedDecomposition::delta_count() const {
  return static_cast<int>(std::count_if(summands_.begin(), summands_.end(),
                                        [](const Summand& s) { return s.delta; }));
}

DecoratedDecomposition DecoratedDecomposition::undecorated() const {
  DecoratedDecomposition out = *this;
  for (auto& s : out.summands_) s.delta = false;
  return out;
}

std::string to_string(const DecoratedDecomposition& d) {
  std::string out;
  for (const auto& s : d.summands()) {
    if (!out.empty()) out += " + ";
    if (s.kind == Summand::Kind::D) {
      out += "D(" + std::to_string(s.lambda) + ")";
    } else {
      out += "W_" + std::to_string(s.l) + (s.delta ? "^d(" : "^0(") + std::to_string(s.lambda) + ")";
    }
  }
  return out;
}

DecoratedDecomposition paired_form(const Symbol& s) {
  if (auto v = validate_symbol(s)) throw InvalidInput("invalid symbol: " + v->message);
  std::vector<Summand> out;
  int m = 0;
  for (const auto& e : s.entries) {
    for (int c = 0; c < e.mult / 2; ++c) out.push_back(make_w(e.lambda, e.chi));
    if (e.mult % 2) m = std::max(m, e.lambda);
  }
  if (m > 0) out.push_back(make_d(m));
  return DecoratedDecomposition(std::move(out));
}

Symbol derived_symbol(const DecoratedDecomposition& d) {
  std::vector<int> parts;
  for (const auto& s : d.summands()) {
    parts.push_back(s.lambda);
    if (s.kind == Summand::Kind::W) parts.push_back(s.lambda);
    else if (s.lambda > 1) parts.push_back(s.lambda - 1);
  }
  std::sort(parts.rbegin(), parts.rend());
  Symbol sym;
  for (int p : parts) {
    if (!sym.entries.empty() && sym.entries.back().lambda == p) {
      ++sym.entries.back().mult;
      continue;
    }
    int chi = 0;
    for (const auto& s : d.summands()) chi = std::max(chi, index_fn(s.lambda, s.l, p));
    sym.entries.push_back({p, chi, 1});
  }
  if (auto v = validate_symbol(sym))
    throw InvalidInput(to_string(d) + " does not give a valid symbol: " + v->message);
  if (paired_form(sym) != d.undecorated())
    throw InvalidInput(to_string(d) + " is not the paired form of " + to_string(sym));
  return sym;
}

namespace {

// Lemma moves available from d: each is a set of summand positions to flip.
std::vector<std::vector<std::size_t>> moves(const DecoratedDecomposition& d) {
  const auto& ss = d.summands();
  std::vector<std::vector<std::size_t>> out;
  const auto dpos = std::find_if(ss.begin(), ss.end(),
                                 [](const Summand& s) { return s.kind == Summand::Kind::D; });
  for (std::size_t i = 0; i < ss.size(); ++i) {
    if (!ss[i].delta_capable()) continue;
    if (dpos != ss.end()) {
      const int m = dpos->lambda, k = ss[i].lambda, l = ss[i].l;
      if ((k >= m && l >= m && l + m > k) || (m > k && l == k)) out.push_back({i});
    }
    for (std::size_t j = i + 1; j < ss.size(); ++j) {
      if (!ss[j].delta_capable()) continue;
      const Summand& a = ss[i];
      const Summand& b = ss[j];
      if (a.l >= b.l && a.lambda - a.l >= b.lambda - b.l && a.l + b.l > a.lambda)
        out.push_back({i, j});
    }
  }
  return out;
}

DecoratedDecomposition flipped(const DecoratedDecomposition& d, const std::vector<std::size_t>& at) {
  std::vector<Summand> ss = d.summands();
  for (std::size_t i : at) ss[i].delta = !ss[i].delta;
  return DecoratedDecomposition(std::move(ss));
}

}  // namespace

std::set<DecoratedDecomposition> move_closure(const DecoratedDecomposition& d) {
  std::set<DecoratedDecomposition> seen{d};
  std::deque<DecoratedDecomposition> queue{d};
  while (!queue.empty()) {
    const DecoratedDecomposition cur = std::move(queue.front());
    queue.pop_front();
    for (const auto& mv : moves(cur)) {
      DecoratedDecomposition next = flipped(cur, mv);
      if (seen.insert(next).second) queue.push_back(std::move(next));
    }
  }
  return seen;
}

bool iso_equivalent(const DecoratedDecomposition& a, const DecoratedDecomposition& b) {
  if (a.undecorated() != b.undecorated())
    throw InvalidInput("iso_equivalent needs the same undecorated summands");
  return move_closure(a).contains(b);
}

std::string bits_string(const RationalOrbitLabel& lab) {
  std::string out;
  for (bool b : lab.bits) out += b ? '1' : '0';
  return out;
}

std::string to_string(const RationalOrbitLabel& lab) {
  std::string out = to_string(lab.symbol) + " | bits=" + bits_string(lab) +
                    " | type=" + std::string(witt_type_name(lab.form_type));
  if (lab.so != SoTag::None) out += lab.so == SoTag::I ? " | so=I" : " | so=II";
  return out;
}

namespace {

WittType type_for(const Symbol& s, const std::vector<bool>& bits) {
  if (s.defective()) return WittType::OddDefective;
  return std::count(bits.begin(), bits.end(), true) % 2 ? WittType::Minus : WittType::Plus;
}

}  // namespace

void validate_label(const RationalOrbitLabel& lab) {
  if (auto v = validate_symbol(lab.symbol)) throw InvalidInput("invalid symbol: " + v->message);
  const std::size_t breaks = break_positions(lab.symbol).size();
  if (lab.bits.size() != breaks)
    throw InvalidInput(to_string(lab.symbol) + " has " + std::to_string(breaks) +
                       " break positions, got " + std::to_string(lab.bits.size()) + " bits");
  if (lab.form_type != type_for(lab.symbol, lab.bits))
    throw InvalidInput("form type does not match the delta parity of " + to_string(lab));
  if (lab.so != SoTag::None && (lab.symbol.defective() || breaks != 0))
    throw InvalidInput("an SO tag applies only to orbits with n2 = 0");
}

RationalOrbitLabel make_label(const Symbol& s, const std::vector<bool>& bits, SoTag so) {
  RationalOrbitLabel lab{s, bits, type_for(s, bits), so};
  validate_label(lab);
  return lab;
}

RationalOrbitLabel canonicalize(const DecoratedDecomposition& d) {
  const Symbol s = derived_symbol(d);
  const std::vector<int> breaks = break_positions(s);
  std::vector<bool> bits(breaks.size(), false);
  for (const auto& sm : d.summands()) {
    if (!sm.delta) continue;
    int entry = 0;
    while (s.entries[entry].lambda != sm.lambda) ++entry;
    const auto block = std::lower_bound(breaks.begin(), breaks.end(), entry);
    if (block != breaks.end()) bits[block - breaks.begin()] = !bits[block - breaks.begin()];
  }
  RationalOrbitLabel lab{s, bits, type_for(s, bits), SoTag::None};
  if (!s.defective() && lab.form_type != witt_sign(d))
    throw ConsistencyError("delta markers outside every block in " + to_string(d));
  return lab;
}

WittType witt_sign(const DecoratedDecomposition& d) {
  if (d.defective()) throw InvalidInput("witt_sign is defined for non-defective decompositions");
  return d.delta_count() % 2 ? WittType::Minus : WittType::Plus;
}

DecoratedDecomposition decomposition_of(const RationalOrbitLabel& lab) {
  validate_label(lab);
  std::vector<Summand> ss = paired_form(lab.symbol).summands();
  const std::vector<int> breaks = break_positions(lab.symbol);
  for (std::size_t t = 0; t < breaks.size(); ++t) {
    if (!lab.bits[t]) continue;
    const int lambda = lab.symbol.entries[breaks[t]].lambda;
    auto it = std::find_if(ss.begin(), ss.end(), [&](const Summand& s) {
      return s.kind == Summand::Kind::W && s.lambda == lambda;
    });
    it->delta = true;
  }
  return DecoratedDecomposition(std::move(ss));
}

std::vector<RationalOrbitLabel> split_orbit(const Symbol& s, WittType ambient) {
  if (auto v = validate_symbol(s)) throw InvalidInput("invalid symbol: " + v->message);
  if (s.defective() != (ambient == WittType::OddDefective))
    throw InvalidInput("symbol " + to_string(s) + " does not fit a " +
                       std::string(witt_type_name(ambient)) + " space");
  const std::size_t b = break_positions(s).size();
  std::vector<RationalOrbitLabel> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << b); ++mask) {
    std::vector<bool> bits(b);
    for (std::size_t i = 0; i < b; ++i) bits[i] = (mask >> (b - 1 - i)) & 1;
    if (type_for(s, bits) == ambient) out.push_back(make_label(s, bits));
  }
  return out;
}

ComponentGroup component_group_rank(const Symbol& s, GroupFlavor flavor) {
  if (auto v = validate_symbol(s)) throw InvalidInput("invalid symbol: " + v->message);
  if (flavor == GroupFlavor::O_odd) {
    if (!s.defective()) throw InvalidInput("O_odd needs a defective symbol");
    return {n1(s), false};
  }
  if (s.defective()) throw InvalidInput("SO_even needs a non-defective symbol");
  const int k = n2(s);
  if (k == 0) return {0, true};
  return {k - 1, false};
}

PartitionPair label_to_pair(const RationalOrbitLabel& lab) {
  validate_label(lab);
  const Symbol& s = lab.symbol;
  const bool odd = s.defective();
  PartitionPair p = symbol_to_pair(s);
  const std::vector<int> breaks = break_positions(s);
  // ends[t]: one past the last pair index belonging to break entry t.
  int m = 0;
  for (const auto& e : s.entries)
    if (e.mult % 2) m = std::max(m, e.lambda);
  std::vector<int> ends;
  int count = 0;
  for (int i = 0, t = 0; i < static_cast<int>(s.entries.size()); ++i) {
    if (!odd || s.entries[i].lambda >= m) count += s.entries[i].mult / 2;
    if (t < static_cast<int>(breaks.size()) && breaks[t] == i) {
      ends.push_back(count);
      ++t;
    }
  }
  auto at = [](std::vector<int>& v, int i) -> int& {
    if (static_cast<int>(v.size()) <= i) v.resize(i + 1, 0);
    return v[i];
  };
  // The even case uses every bit but the last: a full swap is the identity on
  // unordered pairs, so fixing the last block picks one pair per class.
  const std::size_t used = odd ? breaks.size() : (breaks.empty() ? 0 : breaks.size() - 1);
  for (std::size_t t = 0; t < used; ++t) {
    if (!lab.bits[t]) continue;
    for (int i = t == 0 ? 0 : ends[t - 1]; i < ends[t]; ++i) {
      const int a = at(p.alpha, i), b = at(p.beta, i);
      at(p.alpha, i) = odd ? b - 2 : b;
      at(p.beta, i) = odd ? a + 2 : a;
    }
  }
  p.normalize();
  if (!p.well_formed()) throw ConsistencyError("label " + to_string(lab) + " maps to a non-partition");
  if (!odd && p.alpha < p.beta) std::swap(p.alpha, p.beta);
  return p;
}

std::vector<RationalOrbitLabel> enumerate_rational_orbits(int n, WittType ambient, Flavor flavor) {
  if (n < 1) throw InvalidInput("dimension must be positive");
  if ((n % 2 == 1) != (ambient == WittType::OddDefective))
    throw InvalidInput("odd dimension goes with the odd type and conversely");
  std::vector<RationalOrbitLabel> out;
  for (const auto& s : enumerate_symbols(n, n % 2 == 1))
    for (auto& lab : split_orbit(s, ambient)) {
      if (flavor == Flavor::SO && !s.defective() && lab.bits.empty()) {
        lab.so = SoTag::I;
        out.push_back(lab);
        lab.so = SoTag::II;
      }
      out.push_back(std::move(lab));
    }
  return out;
}

Representative representative(const RationalOrbitLabel& lab, const FieldCtx& ctx) {
  const DecoratedDecomposition d = decomposition_of(lab);
  for (const auto& s : d.summands())
    if (s.lambda > 62) throw InvalidInput("part sizes above 62 are not supported");
  const int n = d.dim();
  const FieldElem one = ctx.one(), delta = ctx.pick_delta();
  std::vector<FieldElem> q(n);
  Matrix gram(ctx, n, n), t(ctx, n, n);
  int off = 0;
  for (const auto& s : d.summands()) {
    const int len1 = s.lambda;
    const int len2 = s.kind == Summand::Kind::W ? s.lambda : s.lambda - 1;
    const int v2 = off + len1;
    for (int a = 0; a + 1 < len1; ++a) t(off + a + 1, off + a) = one;
    for (int b = 0; b + 1 < len2; ++b) t(v2 + b + 1, v2 + b) = one;
    q[off + s.l - 1] = one;
    if (s.delta) q[v2 + s.lambda - s.l] = delta;
    // <T^a v1, T^b v2> = 1 iff a + b = len2 - 1 (lambda - 1 for W, m - 2 for D)
    for (int b = 0; b < len2; ++b) {
      const int a = len2 - 1 - b;
      gram(off + a, v2 + b) = one;
      gram(v2 + b, off + a) = one;
    }
    off += len1 + len2;
  }
  std::optional<QuadraticSpace> space;
  try {
    space.emplace(ctx, q, gram);
  } catch (const InvalidInput& e) {
    throw ConsistencyError("normal form of " + to_string(d) + " is degenerate: " + e.what());
  }
  if (!in_lie_algebra(*space, t))
    throw ConsistencyError("shift map of " + to_string(d) + " is not in o(V)");
  const Symbol got = measured_symbol(*space, t);
  if (got != lab.symbol)
    throw ConsistencyError("representative of " + to_string(lab) + " measures as " + to_string(got));
  if (witt_type(*space) != lab.form_type)
    throw ConsistencyError("representative of " + to_string(lab) + " has the wrong Witt type");
  return {std::move(*space), std::move(t)};
}

Matrix representative_in_standard(const RationalOrbitLabel& lab, const FieldCtx& ctx) {
  const Representative rep = representative(lab, ctx);
  const WittBasis wb = witt_basis(rep.space);
  const auto pinv = inverse(wb.basis);
  if (!pinv) throw ConsistencyError("Witt basis is singular");
  Matrix t = *pinv * rep.t * wb.basis;
  if (lab.so == SoTag::II) {
    const QuadraticSpace std_space = standard_space(ctx, rep.space.dim(), lab.form_type);
    const int half = rep.space.dim() / 2;
    Vector v(rep.space.dim());
    v[0] = ctx.one();
    v[half] = ctx.one();
    const Matrix g = transvection(std_space, v).matrix();
    t = g * t * g;
  }
  return t;
}

}  // namespace orbitforge
