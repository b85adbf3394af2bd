#pragma once

#include <optional>
#include <span>
#include <vector>

#include "orbitforge/gf2.hpp"

namespace orbitforge {

using Vector = std::vector<FieldElem>;

/// Dense matrix over a small binary field, row-major.
class Matrix {
 public:
  Matrix() = default;
  Matrix(FieldCtx field, int rows, int cols);

  static Matrix identity(FieldCtx field, int n);
  /// Matrix whose columns are the given vectors (all of length `rows`).
  static Matrix from_columns(FieldCtx field, int rows,
                             std::span<const Vector> columns);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const FieldCtx& field() const { return field_; }

  FieldElem operator()(int r, int c) const { return data_[r * cols_ + c]; }
  FieldElem& operator()(int r, int c) { return data_[r * cols_ + c]; }

  Vector column(int c) const;
  Vector row(int r) const;

  Matrix operator*(const Matrix& rhs) const;
  Matrix operator+(const Matrix& rhs) const;
  Vector operator*(const Vector& v) const;
  Matrix scaled(FieldElem c) const;
  Matrix transpose() const;

  bool is_zero() const;
  FieldElem trace() const;

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  FieldCtx field_;
  int rows_ = 0;
  int cols_ = 0;
  std::vector<FieldElem> data_;
};

int rank(const Matrix& m);

/// Basis of {v : m v = 0}.
std::vector<Vector> kernel_basis(const Matrix& m);

/// Maximal linearly independent subset of the span, in reduced echelon form.
std::vector<Vector> span_basis(const FieldCtx& field, std::span<const Vector> vectors);

std::optional<Matrix> inverse(const Matrix& m);

Matrix power(const Matrix& m, int e);

}  // namespace orbitforge
