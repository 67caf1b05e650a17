#pragma once

// Polynomial 1-forms as (germs of) singular holomorphic foliations:
// saturation, multiplicity, curve invariance, local indices, and the
// classification of a singularity from the linear part of its dual field.

#include <optional>
#include <utility>

#include "fol/polyring.hpp"

namespace fol {

struct ZeroForm : std::runtime_error {
  ZeroForm() : std::runtime_error("both coefficients of the 1-form are zero") {}
};

/// A dx + B dy with exact polynomial coefficients over a common tower.
struct OneForm {
  Poly2 A;
  Poly2 B;

  OneForm(Poly2 a, Poly2 b);

  const TowerPtr& tower() const { return A.tower(); }
  OneForm to_tower(const TowerPtr& t) const { return {A.to_tower(t), B.to_tower(t)}; }
  bool vanishes_at_origin() const {
    return A.eval00().is_zero() && B.eval00().is_zero();
  }
};

/// The exterior derivative df = f_x dx + f_y dy.
OneForm d(const Poly2& f);

/// Divide out gcd(A, B); throws ZeroForm when both are zero.
OneForm saturate(const Poly2& A, const Poly2& B);

/// min(ord A, ord B); the form must be saturated.
long multiplicity(const OneForm& w);

/// Whether f = 0 is invariant: A f_y - B f_x = f * cofactor.
std::pair<bool, std::optional<Poly2>> is_invariant(const OneForm& w,
                                                   const Poly2& f);

/// (f_x, f_y)_0; nullopt encodes infinity (non-isolated critical point).
std::optional<long> milnor_number(const Poly2& f);

/// Poincare-Hopf index (A, B)_0; nullopt encodes infinity.
std::optional<long> ph_index(const OneForm& w);

enum class SingTag { Regular, ReducedNonDegenerate, SaddleNode, NonReduced };

enum class NonReducedKind { None, ResonantRatio, Nilpotent, ZeroLinearPart };

struct SingularityClass {
  SingTag tag = SingTag::Regular;
  NonReducedKind subtag = NonReducedKind::None;
  /// eigenvalues of the linear part of X = B d/dx - A d/dy (absent for
  /// a regular point)
  std::optional<std::pair<AlgebraicElement, AlgebraicElement>> eigenvalues;
  /// eigendirection of the zero eigenvalue, for saddle-nodes
  std::optional<std::pair<AlgebraicElement, AlgebraicElement>> weak_direction;
};

/// Classify the origin from the linear part; may throw SplitError when a
/// zero-divisor is met in a reducible tower.
SingularityClass classify_singularity(const OneForm& w);

}  // namespace fol
