#pragma once

// The family w_{p,q,D} = d(y^p - x^q) + D(x,y) (px dy - qy dx):
// construction, branch parameterizations of y^p - x^q, the intersection
// criteria, GSV indices, pullback orders and the toric chart.

#include <numeric>

#include "fol/reduction.hpp"

namespace fol {

struct NotSaturated : std::runtime_error {
  NotSaturated()
      : std::runtime_error("the cuspidal form has a non-trivial common factor") {}
};

struct OracleMismatch : std::runtime_error {
  explicit OracleMismatch(const std::string& what) : std::runtime_error(what) {}
};

struct UndefinedIndex : std::runtime_error {
  UndefinedIndex()
      : std::runtime_error("GSV index undefined along a branch") {}
};

struct CuspidalSpec {
  long p;
  long q;
  Poly2 delta;

  CuspidalSpec(long p_, long q_, Poly2 delta_)
      : p(p_), q(q_), delta(std::move(delta_)) {}
  long d() const { return std::gcd(p, q); }
  const TowerPtr& tower() const { return delta.tower(); }
};

/// A = -q x^{q-1} - q y D, B = p y^{p-1} + p x D.
OneForm build_cuspidal(const CuspidalSpec& spec);

/// (p-1)(q-1).
long ph_pq(long p, long q);

struct BranchSystem {
  TowerPtr tower;                          // base extended by one root of unity
  std::vector<Parameterization> branches;  // d of them, gamma_i
  std::vector<Poly2> factors;              // y^{p/d} - zeta^i x^{q/d}
};

/// Parameterizations gamma_i(t) = (t^{p/d}, A_i t^{q/d}), A_i^{p/d} = zeta^i.
BranchSystem branch_params(long p, long q, const TowerPtr& base);
inline BranchSystem branch_params(long p, long q) {
  return branch_params(p, q, FieldTower::rationals());
}

/// (D, y^p - x^q)_0 summed over branch substitutions; cross-checked against
/// the resultant-based intersection number. nullopt encodes infinity.
std::optional<long> cusp_intersection(const CuspidalSpec& spec);

struct CuspVerdict {
  bool second_type = false;
  std::optional<bool> generalized_curve;  // nullopt: criterion silent
  std::optional<long> intersection;       // nullopt: infinity
  long ph = 0;
  std::string method;  // "intersection-criterion" or "reduction-oracle"
};

CuspVerdict classify_cuspidal(const CuspidalSpec& spec,
                              bool use_reduction_oracle = false);

/// Sum of branch indices ord_t B(gamma_i) - ord_t (f_i)_y(gamma_i) minus
/// twice the pairwise intersection numbers of the branch factors.
long gsv_total(const OneForm& w, const Poly2& f,
               const std::vector<std::pair<Poly2, Parameterization>>& branches);

/// ord_t of gamma*(w); nullopt (infinity) iff gamma lies on a separatrix.
std::optional<long> pullback_order(const Parameterization& gamma,
                                   const OneForm& w);

struct ToricAnalysis {
  long m = 0, n = 0;                       // m p - n q = d, minimal m >= 1
  OneForm pulled;                          // divided form in (u, v)
  SingularityRecord origin;                // at (u, v) = (0, 0)
  std::vector<SingularityRecord> cluster;  // at u^d = 1, v = 0
};

/// Monomial-map pullback x = u^n v^{p/d}, y = u^m v^{q/d}; requires p > q.
ToricAnalysis toric_pullback(const CuspidalSpec& spec);

/// x (1 + lambda y^p) dy - y^{p+1} dx.
OneForm saddle_node_normal_form(long p, const AlgebraicElement& lambda);

}  // namespace fol
