#pragma once

#include <set>
#include <string>
#include <vector>

#include "orbitforge/quadform.hpp"
#include "orbitforge/symbols.hpp"

namespace orbitforge {

/// One indecomposable summand: W_l^eps(lambda) of dimension 2 lambda, or
/// D(lambda) of dimension 2 lambda - 1. For D, l is lambda and delta is false.
struct Summand {
  enum class Kind { W, D };
  Kind kind = Kind::W;
  int lambda = 1;
  int l = 1;
  bool delta = false;

  int dim() const { return kind == Kind::W ? 2 * lambda : 2 * lambda - 1; }
  bool delta_capable() const { return kind == Kind::W && 2 * l > lambda; }
  auto operator<=>(const Summand&) const = default;
};

Summand make_w(int lambda, int l, bool delta = false);
Summand make_d(int m);

/// A decorated orthogonal decomposition. Constructing one sorts the summands
/// (decreasing lambda, W before D) and validates each summand.
class DecoratedDecomposition {
 public:
  explicit DecoratedDecomposition(std::vector<Summand> summands);

  const std::vector<Summand>& summands() const { return summands_; }
  int dim() const;
  bool defective() const;
  int delta_count() const;

  /// Same summands with every marker cleared.
  DecoratedDecomposition undecorated() const;

  auto operator<=>(const DecoratedDecomposition&) const = default;

 private:
  std::vector<Summand> summands_;
};

std::string to_string(const DecoratedDecomposition& d);

/// Closed-field symbol of a decomposition: parts from the summands, chi the
/// pointwise maximum of the summand index functions. Throws InvalidInput when
/// the result is not a valid symbol or the decomposition is not the paired
/// form of that symbol.
Symbol derived_symbol(const DecoratedDecomposition& d);

/// The undecorated paired form of a symbol: mult/2 copies of W_chi(lambda)
/// per entry, plus D(m) for the odd-multiplicity pair {m, m-1} (or {1}).
DecoratedDecomposition paired_form(const Symbol& s);

/// Every decoration reachable from d by the rewriting moves (graph closure).
std::set<DecoratedDecomposition> move_closure(const DecoratedDecomposition& d);

/// Throws InvalidInput if the undecorated data differ.
bool iso_equivalent(const DecoratedDecomposition& a, const DecoratedDecomposition& b);

enum class SoTag { None, I, II };

struct RationalOrbitLabel {
  Symbol symbol;
  std::vector<bool> bits;  // one per break position, true = delta
  WittType form_type = WittType::Plus;
  SoTag so = SoTag::None;

  auto operator<=>(const RationalOrbitLabel&) const = default;
};

std::string to_string(const RationalOrbitLabel& lab);
std::string bits_string(const RationalOrbitLabel& lab);

/// Throws InvalidInput when bits do not fit the break positions or the type
/// disagrees with the parity rule.
void validate_label(const RationalOrbitLabel& lab);

/// Label built from a symbol and a bit string; the form type follows.
RationalOrbitLabel make_label(const Symbol& s, const std::vector<bool>& bits,
                              SoTag so = SoTag::None);

RationalOrbitLabel canonicalize(const DecoratedDecomposition& d);

/// Plus iff the number of delta markers is even. Throws on defective input.
WittType witt_sign(const DecoratedDecomposition& d);

/// The decomposition whose canonical label is lab: the paired form with one
/// delta on the first copy of each break entry whose bit is set.
DecoratedDecomposition decomposition_of(const RationalOrbitLabel& lab);

std::vector<RationalOrbitLabel> split_orbit(const Symbol& s, WittType ambient);

enum class GroupFlavor { O_odd, SO_even };

struct ComponentGroup {
  int rank = 0;
  bool so_splits = false;  // trivial group, the O-orbit is two SO-orbits
};

ComponentGroup component_group_rank(const Symbol& s, GroupFlavor flavor);

PartitionPair label_to_pair(const RationalOrbitLabel& lab);

enum class Flavor { O, SO };

std::vector<RationalOrbitLabel> enumerate_rational_orbits(int n, WittType ambient, Flavor flavor);

struct Representative {
  QuadraticSpace space;
  Matrix t;
};

/// Block-diagonal normal form of decomposition_of(lab). Checks T in o(space),
/// the measured symbol and the Witt type; a failure throws ConsistencyError.
Representative representative(const RationalOrbitLabel& lab, const FieldCtx& ctx);

/// The same orbit transported to standard_space(N, type) via its Witt basis.
/// Tag II is the tag I matrix conjugated by a transvection.
Matrix representative_in_standard(const RationalOrbitLabel& lab, const FieldCtx& ctx);

}  // namespace orbitforge
