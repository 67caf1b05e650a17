#pragma once

// Sparse exact bivariate polynomials over a field tower, univariate
// parameter polynomials, orders, weighted orders, resultant-based local
// intersection numbers and substitution along parameterizations.

#include <compare>
#include <map>
#include <optional>

#include "fol/numfield.hpp"

namespace fol {

struct Monomial2 {
  long i = 0;  // x-exponent
  long j = 0;  // y-exponent
  auto operator<=>(const Monomial2&) const = default;
};

/// Graded lexicographic order, x before y.
struct GrlexLess {
  bool operator()(const Monomial2& a, const Monomial2& b) const {
    if (a.i + a.j != b.i + b.j) return a.i + a.j < b.i + b.j;
    return a.i < b.i;
  }
};

class Poly2 {
 public:
  explicit Poly2(TowerPtr tower) : tower_(std::move(tower)) {}

  static Poly2 constant(TowerPtr t, const Rat& r);
  static Poly2 monomial(TowerPtr t, long i, long j, const AlgebraicElement& c);
  static Poly2 monomial(TowerPtr t, long i, long j, const Rat& c = Rat(1));

  const TowerPtr& tower() const { return tower_; }
  const std::map<Monomial2, Nested>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  void add_term(const Monomial2& m, const Nested& c);

  Poly2 operator+(const Poly2& o) const;
  Poly2 operator-(const Poly2& o) const;
  Poly2 operator*(const Poly2& o) const;
  Poly2 operator-() const;
  bool operator==(const Poly2& o) const { return (*this - o).is_zero(); }
  Poly2 scaled(const AlgebraicElement& s) const;
  Poly2 pow(long e) const;

  AlgebraicElement coeff(long i, long j) const;
  AlgebraicElement eval00() const { return coeff(0, 0); }

  /// min of i+j over the support; nullopt encodes infinity (zero poly).
  std::optional<long> total_order() const;
  /// min of (ip+jq)/gcd(p,q) over the support; nullopt for zero.
  std::optional<long> weighted_order(long p, long q) const;

  long deg_x() const;  // -1 for zero
  long deg_y() const;
  long total_degree() const;

  Poly2 partial_x() const;
  Poly2 partial_y() const;

  // substitutions (the result is again a polynomial in two variables; the
  // caller fixes the interpretation of the variables)
  Poly2 subst_y_tx() const;                       // y -> y*x  (blow-up chart 1)
  Poly2 subst_x_sy() const;                       // x -> x*y  (blow-up chart 2)
  Poly2 shift_x(const AlgebraicElement& c) const; // x -> x + c
  Poly2 shift_y(const AlgebraicElement& c) const; // y -> y + c
  Poly2 shear_x(const Rat& c) const;              // x -> x + c*y
  Poly2 swap_vars() const;                        // x <-> y
  /// x -> u^a v^b, y -> u^c v^d (monomial map, all exponents >= 0)
  Poly2 subst_monomial(long a, long b, long c, long d) const;

  Monomial2 monomial_content() const;             // largest (i,j) dividing all terms
  Poly2 divide_monomial(long i, long j) const;    // exact; throws otherwise
  /// Exact polynomial division; nullopt when not divisible.
  std::optional<Poly2> try_divide(const Poly2& divisor) const;

  UPoly eval_x0() const;  // f(0, y) as univariate in y
  UPoly eval_y0() const;  // f(x, 0) as univariate in x
  /// coefficients of y^0..y^deg_y as univariate polynomials in x
  std::vector<UPoly> coeffs_in_y() const;
  static Poly2 from_coeffs_in_y(const TowerPtr& t, const std::vector<UPoly>& c);
  static Poly2 from_upoly_x(const UPoly& p);
  static Poly2 from_upoly_y(const UPoly& p);

  Poly2 to_tower(const TowerPtr& t) const;

  /// Canonical printing: graded lexicographic, x before y, highest first.
  std::string to_string(const std::string& xv = "x",
                        const std::string& yv = "y") const;

 private:
  TowerPtr tower_;
  std::map<Monomial2, Nested> t_;  // no zero coefficients stored
};

/// gcd over the tower (primitive-part subresultant route); normalized so the
/// leading grlex coefficient is 1.
Poly2 poly2_gcd(const Poly2& f, const Poly2& g);

/// Resultant with respect to y, as a univariate polynomial in x.
UPoly resultant_y(const Poly2& f, const Poly2& g);

/// Local intersection multiplicity of f and g at the origin; nullopt is
/// infinity (a common factor through the origin).
std::optional<long> intersection_number(const Poly2& f, const Poly2& g);

/// Polynomial parameterization t -> (x(t), y(t)) with x(0) = y(0) = 0.
struct Parameterization {
  UPoly x_of_t;
  UPoly y_of_t;
  Parameterization(UPoly x, UPoly y);
};

/// Exact f(x(t), y(t)).
UPoly substitute(const Poly2& f, const Parameterization& gamma);

/// Smallest exponent with nonzero coefficient; nullopt (infinity) for zero.
std::optional<long> ord_t(const UPoly& p);

}  // namespace fol
