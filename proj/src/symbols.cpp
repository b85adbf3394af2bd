#include "orbitforge/symbols.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <map>

#include "orbitforge/errors.hpp"

namespace orbitforge {

int Symbol::dim() const {
  int n = 0;
  for (const auto& e : entries) n += e.lambda * e.mult;
  return n;
}

bool Symbol::defective() const {
  return std::any_of(entries.begin(), entries.end(), [](const auto& e) { return e.mult % 2; });
}

bool symbol_before(const Symbol& a, const Symbol& b) {
  const auto key = [](const SymbolEntry& e) { return std::tuple{e.lambda, e.mult, e.chi}; };
  const std::size_t n = std::min(a.entries.size(), b.entries.size());
  for (std::size_t i = 0; i < n; ++i) {
    const auto ka = key(a.entries[i]), kb = key(b.entries[i]);
    if (ka != kb) return ka > kb;
  }
  return a.entries.size() > b.entries.size();
}

namespace {

class Cursor {
 public:
  explicit Cursor(std::string_view s) : s_(s) {}

  bool done() const { return pos_ == s_.size(); }
  bool peek(char c) const { return pos_ < s_.size() && s_[pos_] == c; }

  void expect(char c) {
    if (!peek(c))
      throw InvalidInput("symbol text: expected '" + std::string(1, c) + "' at position " +
                         std::to_string(pos_) + " in \"" + std::string(s_) + "\"");
    ++pos_;
  }

  int number() {
    int value = 0;
    const char* begin = s_.data() + pos_;
    const auto [ptr, ec] = std::from_chars(begin, s_.data() + s_.size(), value);
    if (ec != std::errc() || ptr == begin || *begin == '+' || *begin == '-')
      throw InvalidInput("symbol text: expected a number at position " + std::to_string(pos_) +
                         " in \"" + std::string(s_) + "\"");
    pos_ += static_cast<std::size_t>(ptr - begin);
    return value;
  }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

Symbol parse_symbol(std::string_view text) {
  Cursor c(text);
  Symbol s;
  if (c.done()) throw InvalidInput("symbol text is empty");
  while (!c.done()) {
    SymbolEntry e;
    c.expect('(');
    e.lambda = c.number();
    c.expect(')');
    c.expect('_');
    e.chi = c.number();
    e.mult = 1;
    if (c.peek('^')) {
      c.expect('^');
      e.mult = c.number();
    }
    s.entries.push_back(e);
  }
  return s;
}

std::string to_string(const Symbol& s) {
  std::string out;
  for (const auto& e : s.entries) {
    out += "(" + std::to_string(e.lambda) + ")_" + std::to_string(e.chi);
    if (e.mult != 1) out += "^" + std::to_string(e.mult);
  }
  return out;
}

int index_fn(int m, int l, int n) { return std::max(0, std::min(n - m + l, l)); }

int symbol_index_value(const Symbol& s, int n) {
  int out = 0;
  for (const auto& e : s.entries) out = std::max(out, index_fn(e.lambda, e.chi, n));
  return out;
}

std::optional<SymbolViolation> validate_symbol(const Symbol& s) {
  const auto& es = s.entries;
  if (es.empty()) return SymbolViolation{0, "symbol has no entries"};
  for (std::size_t i = 0; i < es.size(); ++i) {
    if (es[i].lambda < 1 || es[i].mult < 1 || es[i].chi < 0)
      return SymbolViolation{0, "parts, multiplicities must be positive"};
    if (i > 0 && es[i].lambda >= es[i - 1].lambda)
      return SymbolViolation{0, "parts must be strictly decreasing"};
  }
  for (std::size_t i = 1; i < es.size(); ++i) {
    if (es[i].chi > es[i - 1].chi)
      return SymbolViolation{1, "chi increases at part " + std::to_string(es[i].lambda)};
    if (es[i].lambda - es[i].chi > es[i - 1].lambda - es[i - 1].chi)
      return SymbolViolation{1, "lambda - chi increases at part " + std::to_string(es[i].lambda)};
  }
  for (const auto& e : es)
    if (2 * e.chi < e.lambda || e.chi > e.lambda)
      return SymbolViolation{2, "chi out of range at part " + std::to_string(e.lambda)};
  for (const auto& e : es)
    if (e.mult % 2 && e.chi != e.lambda)
      return SymbolViolation{3, "odd multiplicity with chi != lambda at part " +
                                    std::to_string(e.lambda)};
  std::vector<int> odd;
  for (const auto& e : es)
    if (e.mult % 2) odd.push_back(e.lambda);
  const bool ok = odd.empty() || (odd.size() == 1 && odd[0] == 1) ||
                  (odd.size() == 2 && odd[0] == odd[1] + 1);
  if (!ok) return SymbolViolation{4, "odd-multiplicity parts are not of the form {m, m-1}"};
  return std::nullopt;
}

std::vector<Symbol> enumerate_symbols(int dim, bool defective) {
  if (dim < 1) throw InvalidInput("symbol enumeration needs dimension >= 1");
  if ((dim % 2 == 1) != defective)
    throw InvalidInput("defective symbols have odd dimension and conversely");
  std::vector<Symbol> out;
  std::vector<SymbolEntry> cur;
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      Symbol s{cur};
      if (!validate_symbol(s)) out.push_back(std::move(s));
      return;
    }
    for (int lam = std::min(max_part, remaining); lam >= 1; --lam)
      for (int mult = remaining / lam; mult >= 1; --mult)
        for (int chi = lam; 2 * chi >= lam; --chi) {
          if (mult % 2 && chi != lam) continue;
          if (!cur.empty() &&
              (chi > cur.back().chi || lam - chi > cur.back().lambda - cur.back().chi))
            continue;
          cur.push_back({lam, chi, mult});
          rec(remaining - lam * mult, lam - 1);
          cur.pop_back();
        }
  };
  rec(dim, dim);
  std::sort(out.begin(), out.end(), symbol_before);
  return out;
}

std::vector<int> counted_indices(const Symbol& s, bool include_last) {
  std::vector<int> out;
  const auto& es = s.entries;
  const int count = static_cast<int>(es.size()) - (include_last ? 0 : 1);
  for (int i = 0; i < count; ++i) {
    const int next = i + 1 < static_cast<int>(es.size()) ? es[i + 1].chi : 0;
    if (es[i].chi + next <= es[i].lambda && 2 * es[i].chi != es[i].lambda) out.push_back(i);
  }
  return out;
}

int n1(const Symbol& s) { return static_cast<int>(counted_indices(s, false).size()); }
int n2(const Symbol& s) { return static_cast<int>(counted_indices(s, true).size()); }

std::vector<int> break_positions(const Symbol& s) {
  return counted_indices(s, !s.defective());
}

PartitionPair& PartitionPair::normalize() {
  while (!alpha.empty() && alpha.back() == 0) alpha.pop_back();
  while (!beta.empty() && beta.back() == 0) beta.pop_back();
  return *this;
}

int PartitionPair::size() const {
  int n = 0;
  for (int a : alpha) n += a;
  for (int b : beta) n += b;
  return n;
}

bool PartitionPair::well_formed() const {
  for (const auto* part : {&alpha, &beta})
    for (std::size_t i = 0; i < part->size(); ++i) {
      if ((*part)[i] < 0) return false;
      if (i > 0 && (*part)[i] > (*part)[i - 1]) return false;
    }
  return true;
}

std::string to_string(const PartitionPair& p) {
  auto list = [](const std::vector<int>& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
    return out + ")";
  };
  return "(" + list(p.alpha) + "," + list(p.beta) + ")";
}

bool in_image_set(const PartitionPair& p, bool odd) {
  if (!p.well_formed()) return false;
  const int slack = odd ? 2 : 0;
  for (std::size_t i = 0; i < p.beta.size(); ++i) {
    const int a = i < p.alpha.size() ? p.alpha[i] : 0;
    if (p.beta[i] > a + slack) return false;
  }
  return true;
}

PartitionPair symbol_to_pair(const Symbol& s) {
  if (auto v = validate_symbol(s)) throw InvalidInput("invalid symbol: " + v->message);
  PartitionPair p;
  if (!s.defective()) {
    for (const auto& e : s.entries)
      for (int c = 0; c < e.mult / 2; ++c) {
        p.alpha.push_back(e.chi);
        p.beta.push_back(e.lambda - e.chi);
      }
    return p.normalize();
  }
  // Odd-multiplicity parts are m and m - 1 (or just 1 when m = 1).
  int m = 0;
  for (const auto& e : s.entries)
    if (e.mult % 2) m = std::max(m, e.lambda);
  std::vector<int> after;
  for (const auto& e : s.entries) {
    for (int c = 0; c < e.mult / 2; ++c) {
      if (e.lambda >= m) {
        p.alpha.push_back(e.chi - 1);
        p.beta.push_back(e.lambda - e.chi + 1);
      } else {
        after.push_back(e.lambda);
      }
    }
  }
  p.alpha.push_back(m - 1);
  p.alpha.insert(p.alpha.end(), after.begin(), after.end());
  return p.normalize();
}

Symbol pair_to_symbol(const PartitionPair& pair, bool odd) {
  PartitionPair p = pair;
  p.normalize();
  if (!in_image_set(p, odd)) throw InvalidInput("pair " + to_string(p) + " is outside the image set");
  auto alpha_at = [&](std::size_t i) { return i < p.alpha.size() ? p.alpha[i] : 0; };
  // part -> (chi, multiplicity)
  std::map<int, std::pair<int, int>, std::greater<>> parts;
  auto add = [&](int lam, int chi, int mult) {
    if (lam == 0) return;
    auto [it, fresh] = parts.try_emplace(lam, chi, 0);
    if (it->second.first != chi)
      throw InvalidInput("pair " + to_string(p) + " gives inconsistent index values");
    it->second.second += mult;
  };
  const std::size_t k = p.beta.size();
  if (odd) {
    for (std::size_t i = 0; i < k; ++i) add(alpha_at(i) + p.beta[i], alpha_at(i) + 1, 2);
    const int m = alpha_at(k) + 1;
    add(m, m, 1);
    add(m - 1, m - 1, 1);
    for (std::size_t i = k + 1; i < p.alpha.size(); ++i) add(p.alpha[i], p.alpha[i], 2);
  } else {
    for (std::size_t i = 0; i < p.alpha.size(); ++i)
      add(p.alpha[i] + (i < k ? p.beta[i] : 0), p.alpha[i], 2);
  }
  Symbol s;
  for (const auto& [lam, cm] : parts) s.entries.push_back({lam, cm.first, cm.second});
  if (auto v = validate_symbol(s))
    throw InvalidInput("pair " + to_string(p) + " gives an invalid symbol: " + v->message);
  return s;
}

std::vector<std::vector<int>> partitions_of(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.push_back(cur);
      return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
      cur.push_back(part);
      rec(remaining - part, part);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

}  // namespace orbitforge
