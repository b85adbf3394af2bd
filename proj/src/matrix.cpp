#include "orbitforge/matrix.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace orbitforge {

Matrix::Matrix(FieldCtx field, int rows, int cols)
    : field_(field), rows_(rows), cols_(cols),
      data_(static_cast<std::size_t>(rows) * cols) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix shape");
}

Matrix Matrix::identity(FieldCtx field, int n) {
  Matrix m(field, n, n);
  for (int i = 0; i < n; ++i) m(i, i) = field.one();
  return m;
}

Matrix Matrix::from_columns(FieldCtx field, int rows,
                            std::span<const Vector> columns) {
  Matrix m(field, rows, static_cast<int>(columns.size()));
  for (int c = 0; c < m.cols(); ++c) {
    if (static_cast<int>(columns[c].size()) != rows)
      throw std::invalid_argument("column length mismatch");
    for (int r = 0; r < rows; ++r) m(r, c) = columns[c][r];
  }
  return m;
}

Vector Matrix::column(int c) const {
  Vector v(rows_);
  for (int r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

Vector Matrix::row(int r) const {
  return Vector(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_);
}

Matrix Matrix::operator*(const Matrix& rhs) const {
  if (cols_ != rhs.rows_) throw std::invalid_argument("matrix shape mismatch");
  Matrix out(field_, rows_, rhs.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const FieldElem a = (*this)(i, k);
      if (a.is_zero()) continue;
      for (int j = 0; j < rhs.cols_; ++j)
        out(i, j) += field_.mul(a, rhs(k, j));
    }
  return out;
}

Matrix Matrix::operator+(const Matrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
    throw std::invalid_argument("matrix shape mismatch");
  Matrix out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] += rhs.data_[i];
  return out;
}

Vector Matrix::operator*(const Vector& v) const {
  if (static_cast<int>(v.size()) != cols_)
    throw std::invalid_argument("vector length mismatch");
  Vector out(rows_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) out[i] += field_.mul((*this)(i, k), v[k]);
  return out;
}

Matrix Matrix::scaled(FieldElem c) const {
  Matrix out = *this;
  for (auto& x : out.data_) x = field_.mul(x, c);
  return out;
}

Matrix Matrix::transpose() const {
  Matrix out(field_, cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  return out;
}

bool Matrix::is_zero() const {
  for (auto x : data_)
    if (!x.is_zero()) return false;
  return true;
}

FieldElem Matrix::trace() const {
  FieldElem t;
  for (int i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
  return t;
}

namespace {

// In-place reduction to reduced row echelon form; returns pivot columns.
std::vector<int> rref(Matrix& m) {
  const FieldCtx& f = m.field();
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
    int sel = -1;
    for (int r = row; r < m.rows(); ++r)
      if (!m(r, col).is_zero()) {
        sel = r;
        break;
      }
    if (sel < 0) continue;
    if (sel != row)
      for (int c = 0; c < m.cols(); ++c) std::swap(m(sel, c), m(row, c));
    const FieldElem s = f.inv(m(row, col));
    for (int c = 0; c < m.cols(); ++c) m(row, c) = f.mul(m(row, c), s);
    for (int r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col).is_zero()) continue;
      const FieldElem factor = m(r, col);
      for (int c = 0; c < m.cols(); ++c) m(r, c) += f.mul(factor, m(row, c));
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

int rank(const Matrix& m) {
  Matrix copy = m;
  return static_cast<int>(rref(copy).size());
}

std::vector<Vector> kernel_basis(const Matrix& m) {
  Matrix r = m;
  const auto pivots = rref(r);
  std::vector<bool> is_pivot(m.cols(), false);
  for (int p : pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (int free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v(m.cols());
    v[free] = m.field().one();
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = r(static_cast<int>(i), free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<Vector> span_basis(const FieldCtx& field, std::span<const Vector> vectors) {
  if (vectors.empty()) return {};
  const int n = static_cast<int>(vectors.front().size());
  Matrix m(field, static_cast<int>(vectors.size()), n);
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < n; ++j) m(i, j) = vectors[i][j];
  const auto pivots = rref(m);
  std::vector<Vector> out;
  for (std::size_t i = 0; i < pivots.size(); ++i) out.push_back(m.row(static_cast<int>(i)));
  return out;
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  const int n = m.rows();
  if (n == 0) return m;
  Matrix aug(m.field(), n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = m.field().one();
  }
  const auto pivots = rref(aug);
  if (static_cast<int>(pivots.size()) < n || pivots[n - 1] != n - 1) return std::nullopt;
  Matrix out(m.field(), n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out(i, j) = aug(i, n + j);
  return out;
}

Matrix power(const Matrix& m, int e) {
  Matrix out = Matrix::identity(m.field(), m.rows());
  for (int i = 0; i < e; ++i) out = out * m;
  return out;
}

}  // namespace orbitforge
