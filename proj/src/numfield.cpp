#include "fol/numfield.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace fol {

std::string rat_to_string(const Rat& r) {
  std::ostringstream os;
  os << r;
  return os.str();
}

std::optional<Rat> rat_sqrt(const Rat& r) {
  if (sgn(r) < 0) return std::nullopt;
  Int num = r.get_num(), den = r.get_den();
  Int sn, sd;
  mpz_sqrt(sn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(sd.get_mpz_t(), den.get_mpz_t());
  if (sn * sn != num || sd * sd != den) return std::nullopt;
  return Rat(sn, sd);
}

// ---------------------------------------------------------------------------
// FieldTower

TowerPtr FieldTower::rationals() {
  static TowerPtr q = std::make_shared<FieldTower>();
  return q;
}

bool FieldTower::has_generator(const std::string& name) const {
  return generator_level(name) != 0;
}

int FieldTower::generator_level(const std::string& name) const {
  for (int k = 1; k <= height(); ++k)
    if (levels_[k - 1].name == name) return k;
  return 0;
}

bool FieldTower::extends(const FieldTower& prefix) const {
  if (prefix.height() > height()) return false;
  for (int k = 1; k <= prefix.height(); ++k) {
    const Level& a = levels_[k - 1];
    const Level& b = prefix.levels_[k - 1];
    if (a.name != b.name) return false;
    if (a.modulus.size() != b.modulus.size()) return false;
    for (size_t i = 0; i < a.modulus.size(); ++i)
      if (!nz_is_zero(n_sub(a.modulus[i], b.modulus[i], k - 1), k - 1))
        return false;
  }
  return true;
}

void FieldTower::u_trim(std::vector<Nested>& a, int lvl) const {
  while (!a.empty() && nz_is_zero(a.back(), lvl)) a.pop_back();
}

bool FieldTower::nz_is_zero(const Nested& a, int lvl) const {
  if (lvl == 0) return a.leaf == 0;
  for (const Nested& k : a.kid)
    if (!nz_is_zero(k, lvl - 1)) return false;
  return true;
}

Nested FieldTower::n_from_rat(const Rat& r, int lvl) const {
  Nested n;
  if (lvl == 0) {
    n.leaf = r;
    return n;
  }
  if (r == 0) return n;  // canonical zero: empty kid
  n.kid.push_back(n_from_rat(r, lvl - 1));
  return n;
}

Nested FieldTower::n_add(const Nested& a, const Nested& b, int lvl) const {
  if (lvl == 0) {
    Nested n;
    n.leaf = a.leaf + b.leaf;
    return n;
  }
  Nested n;
  size_t m = std::max(a.kid.size(), b.kid.size());
  n.kid.resize(m);
  for (size_t i = 0; i < m; ++i) {
    if (i < a.kid.size() && i < b.kid.size())
      n.kid[i] = n_add(a.kid[i], b.kid[i], lvl - 1);
    else if (i < a.kid.size())
      n.kid[i] = a.kid[i];
    else
      n.kid[i] = b.kid[i];
  }
  u_trim(n.kid, lvl - 1);
  return n;
}

Nested FieldTower::n_neg(const Nested& a, int lvl) const {
  if (lvl == 0) {
    Nested n;
    n.leaf = -a.leaf;
    return n;
  }
  Nested n;
  n.kid.reserve(a.kid.size());
  for (const Nested& k : a.kid) n.kid.push_back(n_neg(k, lvl - 1));
  return n;
}

Nested FieldTower::n_sub(const Nested& a, const Nested& b, int lvl) const {
  return n_add(a, n_neg(b, lvl), lvl);
}

std::vector<Nested> FieldTower::u_rem(std::vector<Nested> a,
                                      const std::vector<Nested>& monic,
                                      int lvl) const {
  const size_t deg = monic.size() - 1;
  while (a.size() > deg) {
    Nested lead = a.back();
    a.pop_back();
    if (nz_is_zero(lead, lvl)) continue;
    const size_t off = a.size() - deg;
    for (size_t k = 0; k < deg; ++k)
      a[off + k] = n_sub(a[off + k], n_mul(lead, monic[k], lvl), lvl);
  }
  u_trim(a, lvl);
  return a;
}

Nested FieldTower::n_mul(const Nested& a, const Nested& b, int lvl) const {
  if (lvl == 0) {
    Nested n;
    n.leaf = a.leaf * b.leaf;
    return n;
  }
  if (a.kid.empty() || b.kid.empty()) return Nested{};
  std::vector<Nested> prod(a.kid.size() + b.kid.size() - 1);
  for (size_t i = 0; i < a.kid.size(); ++i)
    for (size_t j = 0; j < b.kid.size(); ++j)
      prod[i + j] = n_add(prod[i + j], n_mul(a.kid[i], b.kid[j], lvl - 1), lvl - 1);
  Nested n;
  n.kid = u_rem(std::move(prod), level(lvl).modulus, lvl - 1);
  return n;
}

Nested FieldTower::n_inv(const Nested& a, int lvl) const {
  if (nz_is_zero(a, lvl)) throw DivisionByZero();
  if (lvl == 0) {
    Nested n;
    n.leaf = 1 / a.leaf;
    return n;
  }
  // Extended Euclid of a against the level modulus, over the subtower.
  // r0 = modulus, r1 = a; s measures the cofactor of a.
  std::vector<Nested> r0 = level(lvl).modulus, r1 = a.kid;
  std::vector<Nested> s0, s1{n_from_rat(1, lvl - 1)};
  u_trim(r1, lvl - 1);
  while (true) {
    // make r1 monic
    Nested lcinv = n_inv(r1.back(), lvl - 1);
    for (Nested& c : r1) c = n_mul(c, lcinv, lvl - 1);
    for (Nested& c : s1) c = n_mul(c, lcinv, lvl - 1);
    if (r1.size() == 1) {
      // gcd is 1 (after normalization): s1 * a == 1 mod modulus
      Nested n;
      n.kid = u_rem(std::move(s1), level(lvl).modulus, lvl - 1);
      return n;
    }
    // r0 = q*r1 + r2 ; s2 = s0 - q*s1
    std::vector<Nested> r2 = r0, s2 = s0;
    const size_t d1 = r1.size() - 1;
    while (r2.size() > d1) {
      Nested c = r2.back();
      r2.pop_back();
      if (nz_is_zero(c, lvl - 1)) continue;
      const size_t off = r2.size() - d1;  // exponent of the quotient term
      for (size_t k = 0; k < d1; ++k)
        r2[off + k] = n_sub(r2[off + k], n_mul(c, r1[k], lvl - 1), lvl - 1);
      if (s2.size() < off + s1.size()) s2.resize(off + s1.size());
      for (size_t k = 0; k < s1.size(); ++k)
        s2[off + k] = n_sub(s2[off + k], n_mul(c, s1[k], lvl - 1), lvl - 1);
    }
    u_trim(r2, lvl - 1);
    if (r2.empty()) {
      // r1 is a nontrivial monic factor of the modulus: zero divisor found.
      // Compute the cofactor by exact division of the modulus by r1.
      std::vector<Nested> quot, rem = level(lvl).modulus;
      const size_t d = r1.size() - 1;
      quot.resize(rem.size() - d);
      while (rem.size() > d) {
        Nested c = rem.back();
        rem.pop_back();
        const size_t off = rem.size() - d;
        quot[off] = c;
        if (nz_is_zero(c, lvl - 1)) continue;
        for (size_t k = 0; k < d; ++k)
          rem[off + k] = n_sub(rem[off + k], n_mul(c, r1[k], lvl - 1), lvl - 1);
      }
      SplitEvent ev;
      ev.level = lvl;
      ev.factor1 = r1;
      ev.factor2 = quot;
      throw SplitError(shared_from_this(), ev);
    }
    r0 = std::move(r1);
    s0 = std::move(s1);
    r1 = std::move(r2);
    s1 = std::move(s2);
  }
}

std::optional<Rat> FieldTower::n_rat(const Nested& a, int lvl) const {
  if (lvl == 0) return a.leaf;
  if (a.kid.empty()) return Rat(0);
  for (size_t i = 1; i < a.kid.size(); ++i)
    if (!nz_is_zero(a.kid[i], lvl - 1)) return std::nullopt;
  return n_rat(a.kid[0], lvl - 1);
}

Nested FieldTower::n_project(const Nested& a, int lvl) const {
  if (lvl == 0) return a;
  Nested n;
  n.kid.reserve(a.kid.size());
  for (const Nested& k : a.kid) n.kid.push_back(n_project(k, lvl - 1));
  n.kid = u_rem(std::move(n.kid), level(lvl).modulus, lvl - 1);
  return n;
}

TowerPtr FieldTower::prefix(int k) const {
  if (k == 0) return rationals();
  auto t = std::make_shared<FieldTower>();
  t->levels_.assign(levels_.begin(), levels_.begin() + k);
  return t;
}

TowerPtr FieldTower::with_modulus(int lv, const std::vector<Nested>& factor) const {
  auto t = std::make_shared<FieldTower>();
  t->levels_.assign(levels_.begin(), levels_.begin() + (lv - 1));
  Level nl;
  nl.name = levels_[lv - 1].name;
  nl.hint = levels_[lv - 1].hint;
  nl.modulus = factor;
  t->levels_.push_back(std::move(nl));
  for (int k = lv + 1; k <= height(); ++k) {
    Level up = levels_[k - 1];
    for (Nested& c : up.modulus) c = t->n_project(c, k - 1);
    t->levels_.push_back(std::move(up));
  }
  return t;
}

std::string FieldTower::n_to_string(const Nested& a, int lvl) const {
  if (lvl == 0) return rat_to_string(a.leaf);
  if (nz_is_zero(a, lvl)) return "0";
  std::string out;
  for (size_t i = a.kid.size(); i-- > 0;) {
    if (nz_is_zero(a.kid[i], lvl - 1)) continue;
    std::string c = n_to_string(a.kid[i], lvl - 1);
    bool composite = c.find_first_of("+-") != std::string::npos &&
                     c.find_first_of("+-", 1) != std::string::npos;
    std::string term;
    if (i == 0) {
      term = c;
    } else {
      std::string var = level(lvl).name;
      if (i > 1) var += "^" + std::to_string(i);
      if (c == "1")
        term = var;
      else if (c == "-1")
        term = "-" + var;
      else if (composite)
        term = "(" + c + ")*" + var;
      else
        term = c + "*" + var;
    }
    if (out.empty())
      out = term;
    else if (!term.empty() && term[0] == '-')
      out += " - " + term.substr(1);
    else
      out += " + " + term;
  }
  return out;
}

// ---------------------------------------------------------------------------
// AlgebraicElement

bool AlgebraicElement::is_one() const {
  auto r = rational_value();
  return r && *r == 1;
}

AlgebraicElement AlgebraicElement::operator+(const AlgebraicElement& o) const {
  return {tower_, tower_->n_add(value_, o.value_, tower_->height())};
}
AlgebraicElement AlgebraicElement::operator-(const AlgebraicElement& o) const {
  return {tower_, tower_->n_sub(value_, o.value_, tower_->height())};
}
AlgebraicElement AlgebraicElement::operator*(const AlgebraicElement& o) const {
  return {tower_, tower_->n_mul(value_, o.value_, tower_->height())};
}
AlgebraicElement AlgebraicElement::operator-() const {
  return {tower_, tower_->n_neg(value_, tower_->height())};
}
bool AlgebraicElement::operator==(const AlgebraicElement& o) const {
  return tower_->nz_is_zero(tower_->n_sub(value_, o.value_, tower_->height()),
                            tower_->height());
}
AlgebraicElement AlgebraicElement::inverse() const {
  return {tower_, tower_->n_inv(value_, tower_->height())};
}
AlgebraicElement AlgebraicElement::pow(long e) const {
  AlgebraicElement acc(tower_, Rat(1));
  AlgebraicElement base = *this;
  for (; e > 0; e >>= 1) {
    if (e & 1) acc = acc * base;
    if (e > 1) base = base * base;
  }
  return acc;
}
std::optional<Rat> AlgebraicElement::rational_value() const {
  return tower_->n_rat(value_, tower_->height());
}

AlgebraicElement AlgebraicElement::to_tower(const TowerPtr& t) const {
  if (t.get() == tower_.get()) return *this;
  if (t->extends(*tower_)) {
    // embed: wrap the coordinate tree in single-coordinate layers
    Nested v = value_;
    for (int k = tower_->height(); k < t->height(); ++k) {
      if (t->nz_is_zero(v, k)) {
        v = Nested{};
        continue;
      }
      Nested w;
      w.kid.push_back(std::move(v));
      v = std::move(w);
    }
    return {t, std::move(v)};
  }
  // projection onto a split tower of the same shape
  return {t, t->n_project(value_, t->height())};
}

std::string AlgebraicElement::to_string() const {
  return tower_->n_to_string(value_, tower_->height());
}

// ---------------------------------------------------------------------------
// UPoly

UPoly::UPoly(TowerPtr tower, std::vector<Nested> c)
    : tower_(std::move(tower)), c_(std::move(c)) {
  trim();
}

UPoly UPoly::from_elements(const std::vector<AlgebraicElement>& coeffs) {
  if (coeffs.empty()) throw std::invalid_argument("empty coefficient list");
  TowerPtr t = coeffs.front().tower();
  for (const auto& c : coeffs)
    if (c.tower()->height() > t->height()) t = c.tower();
  std::vector<Nested> v;
  v.reserve(coeffs.size());
  for (const auto& c : coeffs) v.push_back(c.to_tower(t).raw());
  return UPoly(t, std::move(v));
}

void UPoly::trim() { tower_->u_trim(c_, tower_->height()); }

AlgebraicElement UPoly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size()))
    return AlgebraicElement(tower_, Rat(0));
  return {tower_, c_[i]};
}
AlgebraicElement UPoly::leading() const {
  if (c_.empty()) return AlgebraicElement(tower_, Rat(0));
  return {tower_, c_.back()};
}

UPoly UPoly::operator+(const UPoly& o) const {
  const int L = tower_->height();
  std::vector<Nested> r(std::max(c_.size(), o.c_.size()));
  for (size_t i = 0; i < r.size(); ++i) {
    if (i < c_.size() && i < o.c_.size())
      r[i] = tower_->n_add(c_[i], o.c_[i], L);
    else if (i < c_.size())
      r[i] = c_[i];
    else
      r[i] = o.c_[i];
  }
  return UPoly(tower_, std::move(r));
}
UPoly UPoly::operator-() const {
  const int L = tower_->height();
  std::vector<Nested> r(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) r[i] = tower_->n_neg(c_[i], L);
  return UPoly(tower_, std::move(r));
}
UPoly UPoly::operator-(const UPoly& o) const { return *this + (-o); }
UPoly UPoly::operator*(const UPoly& o) const {
  if (c_.empty() || o.c_.empty()) return UPoly(tower_);
  const int L = tower_->height();
  std::vector<Nested> r(c_.size() + o.c_.size() - 1);
  for (size_t i = 0; i < c_.size(); ++i)
    for (size_t j = 0; j < o.c_.size(); ++j)
      r[i + j] = tower_->n_add(r[i + j], tower_->n_mul(c_[i], o.c_[j], L), L);
  return UPoly(tower_, std::move(r));
}
UPoly UPoly::scaled(const AlgebraicElement& s) const {
  const int L = tower_->height();
  Nested sv = s.to_tower(tower_).raw();
  std::vector<Nested> r(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) r[i] = tower_->n_mul(c_[i], sv, L);
  return UPoly(tower_, std::move(r));
}

std::pair<UPoly, UPoly> UPoly::divrem(const UPoly& divisor) const {
  if (divisor.is_zero()) throw DivisionByZero();
  const int L = tower_->height();
  Nested lcinv = tower_->n_inv(divisor.c_.back(), L);
  const size_t d = divisor.c_.size() - 1;
  std::vector<Nested> rem = c_;
  std::vector<Nested> quot(c_.size() > d ? c_.size() - d : 0);
  while (rem.size() > d) {
    Nested q = tower_->n_mul(rem.back(), lcinv, L);
    rem.pop_back();
    const size_t off = rem.size() - d;
    quot[off] = q;
    if (tower_->nz_is_zero(q, L)) continue;
    for (size_t k = 0; k < d; ++k)
      rem[off + k] =
          tower_->n_sub(rem[off + k], tower_->n_mul(q, divisor.c_[k], L), L);
  }
  return {UPoly(tower_, std::move(quot)), UPoly(tower_, std::move(rem))};
}

UPoly UPoly::monic() const {
  if (is_zero()) return *this;
  return scaled(leading().inverse());
}

UPoly UPoly::gcd(const UPoly& o) const {
  UPoly a = *this, b = o;
  while (!b.is_zero()) {
    UPoly r = a.divrem(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  return a.monic();
}

UPoly UPoly::derivative() const {
  const int L = tower_->height();
  std::vector<Nested> r;
  for (size_t i = 1; i < c_.size(); ++i)
    r.push_back(
        tower_->n_mul(c_[i], tower_->n_from_rat(Rat(static_cast<long>(i)), L), L));
  return UPoly(tower_, std::move(r));
}

UPoly UPoly::squarefree_part() const {
  if (degree() <= 1) return *this;
  UPoly g = gcd(derivative());
  if (g.degree() <= 0) return *this;
  return divrem(g).first;
}

AlgebraicElement UPoly::eval(const AlgebraicElement& x) const {
  AlgebraicElement acc(tower_, Rat(0));
  AlgebraicElement xv = x.to_tower(tower_);
  for (size_t i = c_.size(); i-- > 0;)
    acc = acc * xv + AlgebraicElement(tower_, c_[i]);
  return acc;
}

UPoly UPoly::shifted(const AlgebraicElement& cc) const {
  // synthetic Taylor shift
  UPoly res(tower_);
  UPoly lin(tower_, {cc.to_tower(tower_).raw(), tower_->n_from_rat(1, tower_->height())});
  for (size_t i = c_.size(); i-- > 0;) {
    res = res * lin + UPoly(tower_, {c_[i]});
  }
  return res;
}

UPoly UPoly::to_tower(const TowerPtr& t) const {
  std::vector<Nested> r;
  r.reserve(c_.size());
  for (const Nested& n : c_)
    r.push_back(AlgebraicElement(tower_, n).to_tower(t).raw());
  return UPoly(t, std::move(r));
}

std::string UPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  const int L = tower_->height();
  std::string out;
  for (size_t i = c_.size(); i-- > 0;) {
    if (tower_->nz_is_zero(c_[i], L)) continue;
    std::string c = tower_->n_to_string(c_[i], L);
    std::string term;
    if (i == 0) {
      term = c;
    } else {
      std::string v = var;
      if (i > 1) v += "^" + std::to_string(i);
      if (c == "1")
        term = v;
      else if (c == "-1")
        term = "-" + v;
      else if (c.find_first_of("+-", 1) != std::string::npos)
        term = "(" + c + ")*" + v;
      else
        term = c + "*" + v;
    }
    if (out.empty())
      out = term;
    else if (term[0] == '-')
      out += " - " + term.substr(1);
    else
      out += " + " + term;
  }
  return out;
}

// ---------------------------------------------------------------------------
// tower_extend and friends

TowerPtr tower_extend_impl(const TowerPtr& tower, std::vector<Nested> modulus,
                           const std::string& name,
                           const std::optional<std::string>& hint) {
  auto t = std::make_shared<FieldTower>();
  t->levels_ = tower->levels_;
  FieldTower::Level lv;
  lv.name = name;
  lv.modulus = std::move(modulus);
  lv.hint = hint;
  t->levels_.push_back(std::move(lv));
  return t;
}

TowerPtr tower_extend(const TowerPtr& tower, const UPoly& modulus,
                      const std::string& name,
                      const std::optional<std::string>& hint) {
  if (tower->has_generator(name)) throw NameClash(name);
  UPoly m = modulus.to_tower(tower);
  if (m.degree() < 2) throw std::invalid_argument("modulus degree must be >= 2");
  if (!m.leading().is_one()) throw std::invalid_argument("modulus must be monic");
  UPoly g = m.gcd(m.derivative());
  if (g.degree() > 0) throw NotSquarefree();
  return tower_extend_impl(tower, m.coeffs(), name, hint);
}

AlgebraicElement tower_generator(const TowerPtr& tower, int k) {
  Nested v;
  v.kid.resize(2);
  v.kid[1] = tower->n_from_rat(1, k - 1);
  for (int j = k; j < tower->height(); ++j) {
    Nested w;
    w.kid.push_back(std::move(v));
    v = std::move(w);
  }
  return {tower, std::move(v)};
}

std::variant<AlgebraicElement, SplitEvent> element_invert(
    const AlgebraicElement& x) {
  try {
    return x.inverse();
  } catch (const SplitError& e) {
    return e.event;
  }
}

std::optional<Rat> rational_value(const AlgebraicElement& x) {
  return x.rational_value();
}

UPoly cyclotomic(const TowerPtr& tower, int n) {
  TowerPtr q = FieldTower::rationals();
  // x^n - 1 divided by all lower cyclotomics of divisor index
  std::vector<Nested> xn(n + 1);
  xn[0] = q->n_from_rat(-1, 0);
  xn[n] = q->n_from_rat(1, 0);
  UPoly p(q, std::move(xn));
  for (int d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    p = p.divrem(cyclotomic(q, d)).first;
  }
  return p.to_tower(tower);
}

}  // namespace fol
