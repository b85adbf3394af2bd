#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "orbitforge/matrix.hpp"

namespace orbitforge {

enum class WittType { Plus, Minus, OddDefective };

/// "+", "-" or "odd".
std::string_view witt_type_name(WittType t);
std::optional<WittType> parse_witt_type(std::string_view s);

/// A quadratic form Q on F_q^N, given by Q(e_i) and the polarization Gram
/// matrix <e_i, e_j>. Only non-degenerate spaces can be constructed: the
/// bilinear radical has dimension at most 1 and Q does not vanish on it.
class QuadraticSpace {
 public:
  /// Throws InvalidInput on shape errors, a non-alternating Gram matrix, or
  /// a degenerate form.
  QuadraticSpace(FieldCtx field, std::vector<FieldElem> q_diag, Matrix gram);

  const FieldCtx& field() const { return field_; }
  int dim() const { return static_cast<int>(q_diag_.size()); }
  const std::vector<FieldElem>& q_diag() const { return q_diag_; }
  const Matrix& gram() const { return gram_; }

  FieldElem eval_q(const Vector& v) const;
  FieldElem bilinear(const Vector& v, const Vector& w) const;

  /// Basis of V^perp; empty or a single vector.
  const std::vector<Vector>& radical() const { return radical_; }
  bool defective() const { return !radical_.empty(); }

  /// The same form expressed in the basis formed by the columns of `basis`.
  QuadraticSpace change_basis(const Matrix& basis) const;

  friend bool operator==(const QuadraticSpace& a, const QuadraticSpace& b) {
    return a.field_ == b.field_ && a.q_diag_ == b.q_diag_ && a.gram_ == b.gram_;
  }

 private:
  FieldCtx field_;
  std::vector<FieldElem> q_diag_;
  Matrix gram_;
  std::vector<Vector> radical_;
};

/// Plus: sum x_i x_{n+i}. Minus: the last pair (x_n, x_2n) carries
/// x^2 + xy + delta y^2. OddDefective: sum x_i x_{n+i} + x_{2n+1}^2.
/// Throws InvalidInput when the parity of `dim` does not fit `type`.
QuadraticSpace standard_space(const FieldCtx& field, int dim, WittType type);

QuadraticSpace orthogonal_sum(const QuadraticSpace& a, const QuadraticSpace& b);

/// A basis in which the space becomes standard_space(dim, type).
struct WittBasis {
  WittType type;
  Matrix basis;  // columns are the new basis vectors
};

/// Splits off hyperbolic planes one at a time. Throws ConsistencyError if the
/// result does not reproduce the standard form.
WittBasis witt_basis(const QuadraticSpace& space);
WittType witt_type(const QuadraticSpace& space);

/// Basis of o(V) = {x : <xv, v> = 0 for all v, tr x = 0}.
std::vector<Matrix> lie_algebra_basis(const QuadraticSpace& space);
bool in_lie_algebra(const QuadraticSpace& space, const Matrix& x);

/// True iff Q(g e_i) = Q(e_i) and <g e_i, g e_j> = <e_i, e_j> for all i, j.
bool preserves_form(const QuadraticSpace& space, const Matrix& g);

/// An element of O(V). Construction checks that Q is preserved.
class OrthMap {
 public:
  /// Throws ConsistencyError if `g` does not preserve the form.
  OrthMap(const QuadraticSpace& space, Matrix g);

  const Matrix& matrix() const { return g_; }
  friend bool operator==(const OrthMap& a, const OrthMap& b) { return a.g_ == b.g_; }

 private:
  Matrix g_;
};

/// x -> x + <x, v> Q(v)^{-1} v. Throws InvalidInput when Q(v) = 0.
OrthMap transvection(const QuadraticSpace& space, const Vector& v);

/// rank(g + 1) mod 2. Throws InvalidInput on a defective space.
int dickson(const QuadraticSpace& space, const OrthMap& g);

/// Every vector of F_q^n, in base-q odometer order on the coordinates.
std::vector<Vector> all_vectors(const FieldCtx& field, int n);

}  // namespace orbitforge
