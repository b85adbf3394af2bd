#include "oracles.hpp"

#include <algorithm>
#include <deque>
#include <functional>

namespace oracle {

std::vector<Partition> partitions(int n) {
  std::vector<Partition> out;
  Partition cur;
  std::function<void(int, int)> rec = [&](int left, int cap) {
    if (left == 0) {
      out.push_back(cur);
      return;
    }
    for (int p = std::min(left, cap); p >= 1; --p) {
      cur.push_back(p);
      rec(left - p, p);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

std::uint64_t count_partitions(int n) { return partitions(n).size(); }

std::vector<Bipartition> bipartitions(int n) {
  std::vector<Bipartition> out;
  for (int a = 0; a <= n; ++a)
    for (const auto& al : partitions(a))
      for (const auto& be : partitions(n - a)) out.push_back({al, be});
  return out;
}

Bipartition unordered(Bipartition p) {
  if (p.first < p.second) std::swap(p.first, p.second);
  return p;
}

namespace {

int index_value(int m, int l, int n) { return std::clamp(n - m + l, 0, l); }

bool sorted_before(const RawSummand& a, const RawSummand& b) {
  if (a.lam != b.lam) return a.lam > b.lam;
  if (a.d != b.d) return !a.d;
  return a.l > b.l;
}

// part -> (chi, mult) in decreasing part order, or empty on a validity failure.
std::map<int, std::pair<int, int>, std::greater<>> symbol_of(const RawDecomposition& d) {
  std::map<int, std::pair<int, int>, std::greater<>> sym;
  std::vector<int> parts;
  for (const auto& s : d) {
    parts.push_back(s.lam);
    if (!s.d) parts.push_back(s.lam);
    else if (s.lam > 1) parts.push_back(s.lam - 1);
  }
  for (int p : parts) {
    int chi = 0;
    for (const auto& s : d) chi = std::max(chi, index_value(s.lam, s.d ? s.lam : s.l, p));
    sym[p].first = chi;
    ++sym[p].second;
  }
  return sym;
}

bool valid(const std::map<int, std::pair<int, int>, std::greater<>>& sym) {
  int prev_chi = 1 << 30, prev_gap = 1 << 30;
  std::vector<int> odd;
  for (const auto& [lam, cm] : sym) {
    const auto [chi, mult] = cm;
    if (chi > prev_chi || lam - chi > prev_gap) return false;
    if (2 * chi < lam || chi > lam) return false;
    if (mult % 2) {
      if (chi != lam) return false;
      odd.push_back(lam);
    }
    prev_chi = chi;
    prev_gap = lam - chi;
  }
  return odd.empty() || (odd.size() == 1 && odd[0] == 1) ||
         (odd.size() == 2 && odd[0] == odd[1] + 1);
}

}  // namespace

std::vector<RawDecomposition> paired_decompositions(int max_summands, int max_lambda) {
  std::vector<RawSummand> pool;
  for (int lam = 1; lam <= max_lambda; ++lam) {
    for (int l = (lam + 1) / 2; l <= lam; ++l) pool.push_back({false, lam, l});
    pool.push_back({true, lam, lam});
  }
  std::vector<RawDecomposition> out;
  RawDecomposition cur;
  std::function<void(std::size_t)> rec = [&](std::size_t from) {
    if (!cur.empty()) {
      RawDecomposition d = cur;
      std::sort(d.begin(), d.end(), sorted_before);
      const auto sym = symbol_of(d);
      if (valid(sym)) {
        RawDecomposition paired;
        int m = 0;
        for (const auto& [lam, cm] : sym) {
          for (int c = 0; c < cm.second / 2; ++c) paired.push_back({false, lam, cm.first});
          if (cm.second % 2) m = std::max(m, lam);
        }
        if (m > 0) paired.push_back({true, m, m});
        std::sort(paired.begin(), paired.end(), sorted_before);
        if (paired == d) out.push_back(d);
      }
    }
    if (static_cast<int>(cur.size()) == max_summands) return;
    for (std::size_t i = from; i < pool.size(); ++i) {
      if (pool[i].d && std::any_of(cur.begin(), cur.end(), [](auto& s) { return s.d; })) continue;
      cur.push_back(pool[i]);
      rec(i);
      cur.pop_back();
    }
  };
  rec(0);
  return out;
}

std::map<unsigned, unsigned> lemma_classes(const RawDecomposition& d) {
  const int n = static_cast<int>(d.size());
  auto capable = [&](int i) { return !d[i].d && 2 * d[i].l > d[i].lam; };
  unsigned allowed = 0;
  for (int i = 0; i < n; ++i)
    if (capable(i)) allowed |= 1u << i;

  // Generators of the move graph as XOR masks.
  std::vector<unsigned> flips;
  for (int i = 0; i < n; ++i) {
    if (!capable(i)) continue;
    for (int j = 0; j < n; ++j) {
      if (!d[j].d) continue;
      const int m = d[j].lam, k = d[i].lam, l = d[i].l;
      if (k >= m && l >= m && l + m > k) flips.push_back(1u << i);  // W_l(k) + D(m), l+m > k
      if (m > k && l == k) flips.push_back(1u << i);                 // D(m) + W_k(k), m > k
    }
    for (int j = 0; j < n; ++j) {
      if (j == i || !capable(j)) continue;
      const auto& a = d[i];
      const auto& b = d[j];
      if (a.l >= b.l && a.lam - a.l >= b.lam - b.l && a.l + b.l > a.lam)
        flips.push_back((1u << i) | (1u << j));
    }
  }

  std::map<unsigned, unsigned> cls;
  for (unsigned start = 0; start < (1u << n); ++start) {
    if ((start & ~allowed) || cls.contains(start)) continue;
    std::vector<unsigned> members{start};
    std::deque<unsigned> queue{start};
    std::set<unsigned> seen{start};
    while (!queue.empty()) {
      const unsigned cur = queue.front();
      queue.pop_front();
      for (unsigned f : flips)
        if (seen.insert(cur ^ f).second) {
          queue.push_back(cur ^ f);
          members.push_back(cur ^ f);
        }
    }
    const unsigned rep = *std::min_element(members.begin(), members.end());
    for (unsigned mbr : members) cls[mbr] = rep;
  }
  return cls;
}

}  // namespace oracle
