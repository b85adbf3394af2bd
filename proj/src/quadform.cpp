#include "orbitforge/quadform.hpp"

#include <string>
#include <utility>

#include "orbitforge/errors.hpp"

namespace orbitforge {

std::string_view witt_type_name(WittType t) {
  switch (t) {
    case WittType::Plus: return "+";
    case WittType::Minus: return "-";
    case WittType::OddDefective: return "odd";
  }
  return "?";
}

std::optional<WittType> parse_witt_type(std::string_view s) {
  if (s == "+" || s == "plus") return WittType::Plus;
  if (s == "-" || s == "minus") return WittType::Minus;
  if (s == "odd") return WittType::OddDefective;
  return std::nullopt;
}

QuadraticSpace::QuadraticSpace(FieldCtx field, std::vector<FieldElem> q_diag, Matrix gram)
    : field_(field), q_diag_(std::move(q_diag)), gram_(std::move(gram)) {
  const int n = dim();
  if (gram_.rows() != n || gram_.cols() != n)
    throw InvalidInput("gram matrix shape does not match q_diag length");
  if (!(gram_.field() == field_)) throw InvalidInput("gram matrix over a different field");
  for (int i = 0; i < n; ++i) {
    if (q_diag_[i].bits >= field_.order()) throw InvalidInput("q value outside the field");
    if (!gram_(i, i).is_zero()) throw InvalidInput("gram matrix must have zero diagonal");
    for (int j = 0; j < i; ++j)
      if (gram_(i, j) != gram_(j, i)) throw InvalidInput("gram matrix must be symmetric");
  }
  radical_ = kernel_basis(gram_);
  if (radical_.size() > 1)
    throw InvalidInput("degenerate form: radical has dimension " +
                       std::to_string(radical_.size()));
  if (radical_.size() == 1 && eval_q(radical_[0]).is_zero())
    throw InvalidInput("degenerate form: Q vanishes on the radical");
}

FieldElem QuadraticSpace::eval_q(const Vector& v) const {
  if (static_cast<int>(v.size()) != dim()) throw InvalidInput("vector length mismatch");
  FieldElem acc;
  for (int i = 0; i < dim(); ++i) {
    if (v[i].is_zero()) continue;
    acc += field_.mul(field_.square(v[i]), q_diag_[i]);
    for (int j = i + 1; j < dim(); ++j)
      acc += field_.mul(field_.mul(v[i], v[j]), gram_(i, j));
  }
  return acc;
}

FieldElem QuadraticSpace::bilinear(const Vector& v, const Vector& w) const {
  if (static_cast<int>(v.size()) != dim() || static_cast<int>(w.size()) != dim())
    throw InvalidInput("vector length mismatch");
  FieldElem acc;
  for (int i = 0; i < dim(); ++i) {
    if (v[i].is_zero()) continue;
    for (int j = 0; j < dim(); ++j)
      acc += field_.mul(field_.mul(v[i], gram_(i, j)), w[j]);
  }
  return acc;
}

QuadraticSpace QuadraticSpace::change_basis(const Matrix& basis) const {
  const int n = basis.cols();
  std::vector<Vector> cols;
  for (int c = 0; c < n; ++c) cols.push_back(basis.column(c));
  std::vector<FieldElem> q(n);
  Matrix g(field_, n, n);
  for (int i = 0; i < n; ++i) {
    q[i] = eval_q(cols[i]);
    for (int j = i + 1; j < n; ++j) g(i, j) = g(j, i) = bilinear(cols[i], cols[j]);
  }
  return QuadraticSpace(field_, std::move(q), std::move(g));
}

QuadraticSpace standard_space(const FieldCtx& field, int dim, WittType type) {
  if (dim < 0) throw InvalidInput("negative dimension");
  const bool odd = dim % 2 == 1;
  if (odd != (type == WittType::OddDefective))
    throw InvalidInput("dimension " + std::to_string(dim) + " does not fit Witt type " +
                       std::string(witt_type_name(type)));
  if (type == WittType::Minus && dim == 0) throw InvalidInput("Minus type needs dimension >= 2");
  const int n = dim / 2;
  std::vector<FieldElem> q(dim);
  Matrix g(field, dim, dim);
  for (int i = 0; i < n; ++i) g(i, n + i) = g(n + i, i) = field.one();
  if (type == WittType::Minus) {
    q[n - 1] = field.one();
    q[2 * n - 1] = field.pick_delta();
  }
  if (odd) q[dim - 1] = field.one();
  return QuadraticSpace(field, std::move(q), std::move(g));
}

QuadraticSpace orthogonal_sum(const QuadraticSpace& a, const QuadraticSpace& b) {
  if (!(a.field() == b.field())) throw InvalidInput("orthogonal sum over different fields");
  const int n = a.dim() + b.dim();
  std::vector<FieldElem> q = a.q_diag();
  q.insert(q.end(), b.q_diag().begin(), b.q_diag().end());
  Matrix g(a.field(), n, n);
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j) g(i, j) = a.gram()(i, j);
  for (int i = 0; i < b.dim(); ++i)
    for (int j = 0; j < b.dim(); ++j) g(a.dim() + i, a.dim() + j) = b.gram()(i, j);
  return QuadraticSpace(a.field(), std::move(q), std::move(g));
}

namespace {

Vector axpy(const FieldCtx& f, const Vector& x, FieldElem c, const Vector& y) {
  Vector out = x;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += f.mul(c, y[i]);
  return out;
}

Vector scaled(const FieldCtx& f, const Vector& x, FieldElem c) {
  Vector out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = f.mul(c, x[i]);
  return out;
}

// x*a + y*b with Q(x*a + y*b) == target, searching all (x, y); nullopt if none.
std::optional<Vector> plane_solve(const QuadraticSpace& s, const Vector& a, const Vector& b,
                                  FieldElem target) {
  const FieldCtx& f = s.field();
  for (auto x : f.elements())
    for (auto y : f.elements()) {
      if (x.is_zero() && y.is_zero()) continue;
      Vector v = axpy(f, scaled(f, a, x), y, b);
      if (s.eval_q(v) == target) return v;
    }
  return std::nullopt;
}

// Index of a vector in `vs` pairing non-trivially with `u`, or -1.
int find_partner(const QuadraticSpace& s, const Vector& u, const std::vector<Vector>& vs) {
  for (std::size_t i = 0; i < vs.size(); ++i)
    if (!s.bilinear(u, vs[i]).is_zero()) return static_cast<int>(i);
  return -1;
}

// Projection onto the orthogonal complement of the plane spanned by a, b,
// where <a, b> = c is non-zero.
Vector project_off_plane(const QuadraticSpace& s, const Vector& x, const Vector& a,
                         const Vector& b) {
  const FieldCtx& f = s.field();
  const FieldElem cinv = f.inv(s.bilinear(a, b));
  Vector out = axpy(f, x, f.mul(s.bilinear(x, b), cinv), a);
  return axpy(f, out, f.mul(s.bilinear(x, a), cinv), b);
}

// A non-zero singular vector in the span of `rest` (a non-degenerate
// subspace), or nullopt when that span is an anisotropic plane.
std::optional<Vector> find_singular(const QuadraticSpace& s, const std::vector<Vector>& rest) {
  for (const auto& v : rest)
    if (s.eval_q(v).is_zero()) return v;
  const Vector& a = rest[0];
  const int pi = find_partner(s, a, rest);
  const Vector& b = rest[pi];
  if (auto v = plane_solve(s, a, b, FieldElem{})) return v;
  if (rest.size() == 2) return std::nullopt;
  // The plane (a, b) is anisotropic; look in its complement.
  std::vector<Vector> comp;
  for (std::size_t i = 0; i < rest.size(); ++i) {
    if (i == 0 || static_cast<int>(i) == pi) continue;
    comp.push_back(project_off_plane(s, rest[i], a, b));
  }
  comp = span_basis(s.field(), comp);
  const Vector& c = comp[0];
  const Vector& d = comp[find_partner(s, c, comp)];
  if (auto v = plane_solve(s, c, d, FieldElem{})) return v;
  // Two anisotropic planes: Q takes every value on each, so p + r with
  // Q(p) = Q(r) = 1 is singular.
  const FieldElem one = s.field().one();
  const Vector p = *plane_solve(s, a, b, one);
  const Vector r = *plane_solve(s, c, d, one);
  return axpy(s.field(), p, one, r);
}

}  // namespace

WittBasis witt_basis(const QuadraticSpace& space) {
  const FieldCtx& f = space.field();
  const int n = space.dim();
  const FieldElem one = f.one();

  std::optional<Vector> rad;
  std::vector<Vector> rest;
  if (space.defective()) {
    Vector r = space.radical()[0];
    r = scaled(f, r, f.inv(f.sqrt(space.eval_q(r))));
    int pivot = 0;
    while (r[pivot].is_zero()) ++pivot;
    for (int i = 0; i < n; ++i) {
      if (i == pivot) continue;
      Vector e(n);
      e[i] = one;
      rest.push_back(e);
    }
    rad = r;
  } else {
    for (int i = 0; i < n; ++i) {
      Vector e(n);
      e[i] = one;
      rest.push_back(e);
    }
  }

  std::vector<Vector> us, ws;
  std::optional<std::pair<Vector, Vector>> aniso;
  while (!rest.empty()) {
    auto u = find_singular(space, rest);
    if (!u) {
      // Anisotropic final plane: normalize to Q(a) = 1, <a, b> = 1, Q(b) = delta.
      Vector a = *plane_solve(space, rest[0], rest[1], one);
      Vector b0 = rest[find_partner(space, a, rest)];
      b0 = scaled(f, b0, f.inv(space.bilinear(a, b0)));
      const FieldElem target = space.eval_q(b0) + f.pick_delta();
      FieldElem c;
      bool found = false;
      for (auto y : f.elements())
        if (f.square(y) + y == target) {
          c = y;
          found = true;
          break;
        }
      if (!found) throw ConsistencyError("anisotropic plane with unexpected discriminant");
      aniso = std::pair{a, axpy(f, b0, c, a)};
      break;
    }
    Vector w = rest[find_partner(space, *u, rest)];
    w = scaled(f, w, f.inv(space.bilinear(*u, w)));
    w = axpy(f, w, space.eval_q(w), *u);
    std::vector<Vector> next;
    for (const auto& x : rest) next.push_back(project_off_plane(space, x, *u, w));
    us.push_back(*u);
    ws.push_back(w);
    next = span_basis(f, next);
    if (next.size() + 2 != rest.size())
      throw ConsistencyError("hyperbolic splitting lost dimension");
    rest = std::move(next);
  }

  WittType type = space.defective() ? WittType::OddDefective : WittType::Plus;
  if (aniso) {
    if (rad) {
      // The radical turns the anisotropic plane hyperbolic.
      Vector a = axpy(f, aniso->first, one, *rad);
      Vector b = axpy(f, aniso->second, f.sqrt(f.pick_delta()), *rad);
      us.push_back(a);
      ws.push_back(b);
    } else {
      type = WittType::Minus;
      us.push_back(aniso->first);
      ws.push_back(aniso->second);
    }
  }

  std::vector<Vector> cols = us;
  cols.insert(cols.end(), ws.begin(), ws.end());
  if (rad) cols.push_back(*rad);
  WittBasis out{type, Matrix::from_columns(f, n, cols)};
  if (!(space.change_basis(out.basis) == standard_space(f, n, type)))
    throw ConsistencyError("Witt basis does not reproduce the standard form");
  return out;
}

WittType witt_type(const QuadraticSpace& space) {
  if (space.defective()) return WittType::OddDefective;
  return witt_basis(space).type;
}

std::vector<Matrix> lie_algebra_basis(const QuadraticSpace& space) {
  const FieldCtx& f = space.field();
  const int n = space.dim();
  const Matrix& g = space.gram();
  auto var = [n](int r, int c) { return r * n + c; };
  // <x e_i, e_j> = sum_k x_{k,i} g_{k,j}
  std::vector<Vector> rows;
  for (int i = 0; i < n; ++i) {
    Vector row(n * n);
    for (int k = 0; k < n; ++k) row[var(k, i)] += g(k, i);
    rows.push_back(std::move(row));
    for (int j = i + 1; j < n; ++j) {
      Vector sym(n * n);
      for (int k = 0; k < n; ++k) {
        sym[var(k, i)] += g(k, j);
        sym[var(k, j)] += g(k, i);
      }
      rows.push_back(std::move(sym));
    }
  }
  Vector tr(n * n);
  for (int i = 0; i < n; ++i) tr[var(i, i)] = f.one();
  rows.push_back(std::move(tr));

  Matrix system(f, static_cast<int>(rows.size()), n * n);
  for (int r = 0; r < system.rows(); ++r)
    for (int c = 0; c < n * n; ++c) system(r, c) = rows[r][c];
  std::vector<Matrix> basis;
  for (const auto& sol : kernel_basis(system)) {
    Matrix x(f, n, n);
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) x(r, c) = sol[var(r, c)];
    basis.push_back(std::move(x));
  }
  return basis;
}

bool in_lie_algebra(const QuadraticSpace& space, const Matrix& x) {
  const int n = space.dim();
  if (x.rows() != n || x.cols() != n) return false;
  if (!x.trace().is_zero()) return false;
  const Matrix gx = space.gram() * x;  // (gx)_{j,i} = <e_j, x e_i>
  for (int i = 0; i < n; ++i) {
    if (!gx(i, i).is_zero()) return false;
    for (int j = i + 1; j < n; ++j)
      if (gx(j, i) != gx(i, j)) return false;
  }
  return true;
}

bool preserves_form(const QuadraticSpace& space, const Matrix& g) {
  const int n = space.dim();
  if (g.rows() != n || g.cols() != n) return false;
  std::vector<Vector> cols;
  for (int c = 0; c < n; ++c) cols.push_back(g.column(c));
  for (int i = 0; i < n; ++i) {
    if (space.eval_q(cols[i]) != space.q_diag()[i]) return false;
    for (int j = i + 1; j < n; ++j)
      if (space.bilinear(cols[i], cols[j]) != space.gram()(i, j)) return false;
  }
  return rank(g) == n;
}

OrthMap::OrthMap(const QuadraticSpace& space, Matrix g) : g_(std::move(g)) {
  if (!preserves_form(space, g_)) throw ConsistencyError("matrix does not preserve the form");
}

OrthMap transvection(const QuadraticSpace& space, const Vector& v) {
  const FieldCtx& f = space.field();
  const FieldElem qv = space.eval_q(v);
  if (qv.is_zero()) throw InvalidInput("transvection needs Q(v) != 0");
  const int n = space.dim();
  const Vector gv = space.gram() * v;
  const FieldElem c = f.inv(qv);
  Matrix t = Matrix::identity(f, n);
  for (int r = 0; r < n; ++r)
    for (int col = 0; col < n; ++col) t(r, col) += f.mul(c, f.mul(v[r], gv[col]));
  return OrthMap(space, std::move(t));
}

int dickson(const QuadraticSpace& space, const OrthMap& g) {
  if (space.defective()) throw InvalidInput("Dickson invariant needs a non-defective space");
  return rank(g.matrix() + Matrix::identity(space.field(), space.dim())) % 2;
}

std::vector<Vector> all_vectors(const FieldCtx& field, int n) {
  std::vector<Vector> out;
  Vector v(n);
  const unsigned q = field.order();
  while (true) {
    out.push_back(v);
    int i = 0;
    while (i < n && v[i].bits + 1u == q) v[i++] = FieldElem{};
    if (i == n) break;
    v[i] = FieldElem{static_cast<std::uint8_t>(v[i].bits + 1)};
  }
  return out;
}

}  // namespace orbitforge
