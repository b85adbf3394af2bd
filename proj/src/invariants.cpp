#include "orbitforge/invariants.hpp"

#include "orbitforge/errors.hpp"

namespace orbitforge {

std::vector<int> jordan_partition(const Matrix& t) {
  const int n = t.rows();
  std::vector<int> ranks{n};
  Matrix p = Matrix::identity(t.field(), n);
  while (ranks.back() > 0) {
    if (static_cast<int>(ranks.size()) > n) throw InvalidInput("matrix is not nilpotent");
    p = p * t;
    ranks.push_back(rank(p));
    if (ranks.back() == ranks[ranks.size() - 2] && ranks.back() > 0)
      throw InvalidInput("matrix is not nilpotent");
  }
  ranks.push_back(0);
  std::vector<int> parts;
  for (int m = static_cast<int>(ranks.size()) - 2; m >= 1; --m) {
    const int mult = ranks[m - 1] - 2 * ranks[m] + ranks[m + 1];
    for (int c = 0; c < mult; ++c) parts.push_back(m);
  }
  return parts;
}

int chi_of(const QuadraticSpace& space, const Matrix& t, int m) {
  std::vector<Vector> basis = kernel_basis(power(t, m));
  for (int k = 0;; ++k) {
    bool vanishes = true;
    for (std::size_t i = 0; i < basis.size() && vanishes; ++i) {
      vanishes = space.eval_q(basis[i]).is_zero();
      for (std::size_t j = i + 1; j < basis.size() && vanishes; ++j)
        vanishes = space.bilinear(basis[i], basis[j]).is_zero();
    }
    if (vanishes) return k;
    for (auto& b : basis) b = t * b;
  }
}

Symbol measured_symbol(const QuadraticSpace& space, const Matrix& t) {
  Symbol s;
  for (int part : jordan_partition(t)) {
    if (!s.entries.empty() && s.entries.back().lambda == part) {
      ++s.entries.back().mult;
      continue;
    }
    s.entries.push_back({part, chi_of(space, t, part), 1});
  }
  return s;
}

}  // namespace orbitforge
