#pragma once

// Exact coefficient arithmetic over Q and towers of simple algebraic
// extensions, with dynamic-evaluation splitting: moduli are only required
// squarefree, and reducibility is discovered lazily when an inversion runs
// into a zero divisor.

#include <gmpxx.h>

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace fol {

using Int = mpz_class;
using Rat = mpq_class;

std::string rat_to_string(const Rat& r);

/// Exact square root of a nonnegative rational, if it is a perfect square.
std::optional<Rat> rat_sqrt(const Rat& r);

class FieldTower;
using TowerPtr = std::shared_ptr<const FieldTower>;

// Coefficient tree of a tower element. A value at level 0 is the rational
// `leaf`; a value at level k > 0 is the vector `kid` of level-(k-1) values,
// the coordinates in the power basis of the level-k generator, lowest power
// first. Canonical form: no trailing zero coordinates, so zero has an empty
// `kid` at every positive level.
struct Nested {
  Rat leaf{0};
  std::vector<Nested> kid;
};

struct SplitEvent {
  int level = 0;  // 1-based tower level whose modulus factored
  std::vector<Nested> factor1;  // monic, coefficients at level-1
  std::vector<Nested> factor2;
};

/// Thrown when arithmetic meets a zero divisor: the modulus at
/// `event.level` of `tower` splits into the two recorded factors.
/// Callers fork the computation once per factor and continue in each.
class SplitError : public std::runtime_error {
 public:
  SplitError(TowerPtr tower, SplitEvent event)
      : std::runtime_error("modulus split during inversion"),
        tower(std::move(tower)),
        event(std::move(event)) {}
  TowerPtr tower;
  SplitEvent event;
};

class DivisionByZero : public std::runtime_error {
 public:
  DivisionByZero() : std::runtime_error("division by zero") {}
};
class NotSquarefree : public std::runtime_error {
 public:
  NotSquarefree() : std::runtime_error("modulus is not squarefree") {}
};
class NameClash : public std::runtime_error {
 public:
  explicit NameClash(const std::string& n)
      : std::runtime_error("generator name already in use: " + n) {}
};

class AlgebraicElement;

class FieldTower : public std::enable_shared_from_this<FieldTower> {
 public:
  struct Level {
    std::string name;
    std::vector<Nested> modulus;  // monic, entries at the level below
    std::optional<std::string> hint;  // decimal display hint, never used in decisions
  };

  static TowerPtr rationals();

  int height() const { return static_cast<int>(levels_.size()); }
  const Level& level(int k) const { return levels_.at(k - 1); }  // 1-based
  bool has_generator(const std::string& name) const;
  int generator_level(const std::string& name) const;  // 0 if absent

  /// The subtower formed by the first k levels.
  TowerPtr prefix(int k) const;

  /// New tower with the modulus at `level` replaced by a (monic) factor;
  /// moduli above are re-reduced. Used to descend after a SplitEvent.
  TowerPtr with_modulus(int level, const std::vector<Nested>& factor) const;

  /// True when `prefix` is a prefix of this tower (element embedding is
  /// then the identity on coordinates).
  bool extends(const FieldTower& prefix) const;

  // --- internal arithmetic on coefficient trees -------------------------
  bool nz_is_zero(const Nested& a, int lvl) const;
  Nested n_from_rat(const Rat& r, int lvl) const;
  Nested n_add(const Nested& a, const Nested& b, int lvl) const;
  Nested n_sub(const Nested& a, const Nested& b, int lvl) const;
  Nested n_neg(const Nested& a, int lvl) const;
  Nested n_mul(const Nested& a, const Nested& b, int lvl) const;
  Nested n_inv(const Nested& a, int lvl) const;  // throws SplitError / DivisionByZero
  std::optional<Rat> n_rat(const Nested& a, int lvl) const;
  /// Re-reduce a coordinate tree modulo this tower's moduli (used when the
  /// tree was formed over a tower with a larger modulus at some level).
  Nested n_project(const Nested& a, int lvl) const;
  std::string n_to_string(const Nested& a, int lvl) const;

  // univariate helpers over level `lvl` coefficients
  std::vector<Nested> u_rem(std::vector<Nested> a, const std::vector<Nested>& monic,
                            int lvl) const;
  void u_trim(std::vector<Nested>& a, int lvl) const;

 private:
  friend TowerPtr tower_extend_impl(const TowerPtr&, std::vector<Nested>,
                                    const std::string&,
                                    const std::optional<std::string>&);
  std::vector<Level> levels_;
};

/// An exact element of a field tower, canonical (reduced mod the moduli).
class AlgebraicElement {
 public:
  AlgebraicElement() : tower_(FieldTower::rationals()) {}
  AlgebraicElement(TowerPtr tower, Nested v)
      : tower_(std::move(tower)), value_(std::move(v)) {}
  AlgebraicElement(TowerPtr tower, const Rat& r)
      : tower_(std::move(tower)), value_(tower_->n_from_rat(r, tower_->height())) {}
  explicit AlgebraicElement(const Rat& r)
      : AlgebraicElement(FieldTower::rationals(), r) {}

  const TowerPtr& tower() const { return tower_; }
  const Nested& raw() const { return value_; }

  bool is_zero() const { return tower_->nz_is_zero(value_, tower_->height()); }
  bool is_one() const;

  AlgebraicElement operator+(const AlgebraicElement& o) const;
  AlgebraicElement operator-(const AlgebraicElement& o) const;
  AlgebraicElement operator*(const AlgebraicElement& o) const;
  AlgebraicElement operator-() const;
  bool operator==(const AlgebraicElement& o) const;

  /// Multiplicative inverse; throws DivisionByZero or SplitError.
  AlgebraicElement inverse() const;
  AlgebraicElement operator/(const AlgebraicElement& o) const {
    return *this * o.inverse();
  }
  AlgebraicElement pow(long e) const;  // e >= 0

  std::optional<Rat> rational_value() const;

  /// Embed into a tower that extends (or equals) the current one, or
  /// project onto a tower obtained by splitting a modulus.
  AlgebraicElement to_tower(const TowerPtr& t) const;

  std::string to_string() const;

 private:
  TowerPtr tower_;
  Nested value_;
};

/// Dense univariate polynomial over a field tower (lowest coefficient first).
class UPoly {
 public:
  explicit UPoly(TowerPtr tower) : tower_(std::move(tower)) {}
  UPoly(TowerPtr tower, std::vector<Nested> c);
  static UPoly from_elements(const std::vector<AlgebraicElement>& coeffs);

  const TowerPtr& tower() const { return tower_; }
  const std::vector<Nested>& coeffs() const { return c_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return c_.empty(); }
  AlgebraicElement coeff(int i) const;
  AlgebraicElement leading() const;

  UPoly operator+(const UPoly& o) const;
  UPoly operator-(const UPoly& o) const;
  UPoly operator*(const UPoly& o) const;
  UPoly operator-() const;
  bool operator==(const UPoly& o) const { return (*this - o).is_zero(); }
  UPoly scaled(const AlgebraicElement& s) const;

  std::pair<UPoly, UPoly> divrem(const UPoly& divisor) const;  // may split
  UPoly monic() const;                                          // may split
  UPoly gcd(const UPoly& o) const;  // monic gcd, may split
  UPoly derivative() const;
  UPoly squarefree_part() const;
  AlgebraicElement eval(const AlgebraicElement& x) const;
  UPoly shifted(const AlgebraicElement& c) const;  // p(x + c)
  UPoly to_tower(const TowerPtr& t) const;

  std::string to_string(const std::string& var) const;

 private:
  void trim();
  TowerPtr tower_;
  std::vector<Nested> c_;
};

/// Extend a tower by a monic squarefree modulus of degree >= 2.
/// `modulus` is univariate over `tower` with the new generator as variable.
TowerPtr tower_extend(const TowerPtr& tower, const UPoly& modulus,
                      const std::string& name,
                      const std::optional<std::string>& hint = std::nullopt);

/// The level-k generator (1-based) as an element of the tower.
AlgebraicElement tower_generator(const TowerPtr& tower, int k);

/// Returns x^{-1}, or the SplitEvent discovered while inverting.
std::variant<AlgebraicElement, SplitEvent> element_invert(
    const AlgebraicElement& x);

std::optional<Rat> rational_value(const AlgebraicElement& x);

/// n-th cyclotomic polynomial over the given tower (exact, over Q).
UPoly cyclotomic(const TowerPtr& tower, int n);

}  // namespace fol
