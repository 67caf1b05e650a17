#include "fol/polyring.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace fol {

namespace {
long gcd_long(long a, long b) { return std::gcd(a, b); }
}  // namespace

// ---------------------------------------------------------------------------
// construction

Poly2 Poly2::constant(TowerPtr t, const Rat& r) {
  Poly2 p(t);
  p.add_term({0, 0}, t->n_from_rat(r, t->height()));
  return p;
}
Poly2 Poly2::monomial(TowerPtr t, long i, long j, const AlgebraicElement& c) {
  Poly2 p(t);
  p.add_term({i, j}, c.to_tower(t).raw());
  return p;
}
Poly2 Poly2::monomial(TowerPtr t, long i, long j, const Rat& c) {
  Poly2 p(t);
  p.add_term({i, j}, t->n_from_rat(c, t->height()));
  return p;
}

void Poly2::add_term(const Monomial2& m, const Nested& c) {
  const int L = tower_->height();
  auto it = t_.find(m);
  if (it == t_.end()) {
    if (!tower_->nz_is_zero(c, L)) t_.emplace(m, c);
    return;
  }
  Nested s = tower_->n_add(it->second, c, L);
  if (tower_->nz_is_zero(s, L))
    t_.erase(it);
  else
    it->second = std::move(s);
}

// ---------------------------------------------------------------------------
// ring operations

Poly2 Poly2::operator+(const Poly2& o) const {
  Poly2 r = *this;
  for (const auto& [m, c] : o.t_) r.add_term(m, c);
  return r;
}
Poly2 Poly2::operator-() const {
  Poly2 r(tower_);
  const int L = tower_->height();
  for (const auto& [m, c] : t_) r.t_.emplace(m, tower_->n_neg(c, L));
  return r;
}
Poly2 Poly2::operator-(const Poly2& o) const { return *this + (-o); }
Poly2 Poly2::operator*(const Poly2& o) const {
  Poly2 r(tower_);
  const int L = tower_->height();
  for (const auto& [m1, c1] : t_)
    for (const auto& [m2, c2] : o.t_)
      r.add_term({m1.i + m2.i, m1.j + m2.j}, tower_->n_mul(c1, c2, L));
  return r;
}
Poly2 Poly2::scaled(const AlgebraicElement& s) const {
  Poly2 r(tower_);
  const int L = tower_->height();
  const Nested sv = s.to_tower(tower_).raw();
  if (tower_->nz_is_zero(sv, L)) return r;
  for (const auto& [m, c] : t_) r.add_term(m, tower_->n_mul(c, sv, L));
  return r;
}
Poly2 Poly2::pow(long e) const {
  Poly2 acc = Poly2::constant(tower_, Rat(1));
  Poly2 base = *this;
  for (; e > 0; e >>= 1) {
    if (e & 1) acc = acc * base;
    if (e > 1) base = base * base;
  }
  return acc;
}

AlgebraicElement Poly2::coeff(long i, long j) const {
  auto it = t_.find({i, j});
  if (it == t_.end()) return AlgebraicElement(tower_, Rat(0));
  return {tower_, it->second};
}

// ---------------------------------------------------------------------------
// orders and degrees

std::optional<long> Poly2::total_order() const {
  if (t_.empty()) return std::nullopt;
  long best = -1;
  for (const auto& [m, c] : t_)
    if (best < 0 || m.i + m.j < best) best = m.i + m.j;
  return best;
}

std::optional<long> Poly2::weighted_order(long p, long q) const {
  if (t_.empty()) return std::nullopt;
  const long d = gcd_long(p, q);
  long best = -1;
  for (const auto& [m, c] : t_) {
    long w = (m.i * p + m.j * q) / d;
    if (best < 0 || w < best) best = w;
  }
  return best;
}

long Poly2::deg_x() const {
  long d = -1;
  for (const auto& [m, c] : t_) d = std::max(d, m.i);
  return d;
}
long Poly2::deg_y() const {
  long d = -1;
  for (const auto& [m, c] : t_) d = std::max(d, m.j);
  return d;
}
long Poly2::total_degree() const {
  long d = -1;
  for (const auto& [m, c] : t_) d = std::max(d, m.i + m.j);
  return d;
}

Poly2 Poly2::partial_x() const {
  Poly2 r(tower_);
  const int L = tower_->height();
  for (const auto& [m, c] : t_)
    if (m.i > 0)
      r.add_term({m.i - 1, m.j},
                 tower_->n_mul(c, tower_->n_from_rat(Rat(m.i), L), L));
  return r;
}
Poly2 Poly2::partial_y() const {
  Poly2 r(tower_);
  const int L = tower_->height();
  for (const auto& [m, c] : t_)
    if (m.j > 0)
      r.add_term({m.i, m.j - 1},
                 tower_->n_mul(c, tower_->n_from_rat(Rat(m.j), L), L));
  return r;
}

// ---------------------------------------------------------------------------
// substitutions

Poly2 Poly2::subst_y_tx() const {
  Poly2 r(tower_);
  for (const auto& [m, c] : t_) r.add_term({m.i + m.j, m.j}, c);
  return r;
}
Poly2 Poly2::subst_x_sy() const {
  Poly2 r(tower_);
  for (const auto& [m, c] : t_) r.add_term({m.i, m.i + m.j}, c);
  return r;
}
Poly2 Poly2::swap_vars() const {
  Poly2 r(tower_);
  for (const auto& [m, c] : t_) r.t_.emplace(Monomial2{m.j, m.i}, c);
  return r;
}

namespace {
// binomial expansion of (v + c)^n as a coefficient table
std::vector<Nested> shift_powers(const TowerPtr& t, const Nested& c, long n) {
  const int L = t->height();
  std::vector<Nested> row{t->n_from_rat(Rat(1), L)};  // (v+c)^0
  std::vector<Nested> out;
  out = row;
  for (long k = 1; k <= n; ++k) {
    std::vector<Nested> next(k + 1);
    for (long m = 0; m <= k; ++m) {
      // next[m] = row[m-1] + c*row[m]
      Nested v{};
      if (m > 0) v = row[m - 1];
      if (m < static_cast<long>(row.size()))
        v = t->n_add(v, t->n_mul(c, row[m], L), L);
      next[m] = std::move(v);
    }
    row = std::move(next);
  }
  return row;
}
}  // namespace

Poly2 Poly2::shift_x(const AlgebraicElement& c) const {
  Poly2 r(tower_);
  const int L = tower_->height();
  const Nested cv = c.to_tower(tower_).raw();
  // cache (x+c)^i rows
  std::map<long, std::vector<Nested>> rows;
  for (const auto& [m, cf] : t_) {
    auto it = rows.find(m.i);
    if (it == rows.end())
      it = rows.emplace(m.i, shift_powers(tower_, cv, m.i)).first;
    const auto& row = it->second;
    for (long k = 0; k < static_cast<long>(row.size()); ++k)
      r.add_term({k, m.j}, tower_->n_mul(cf, row[k], L));
  }
  return r;
}
Poly2 Poly2::shift_y(const AlgebraicElement& c) const {
  return swap_vars().shift_x(c).swap_vars();
}

Poly2 Poly2::shear_x(const Rat& c) const {
  if (c == 0) return *this;
  Poly2 r(tower_);
  const int L = tower_->height();
  const Nested cv = tower_->n_from_rat(c, L);
  std::map<long, std::vector<Nested>> rows;  // (x + c*y)^i expanded in x; row[k] is coeff of x^k y^{i-k}... see below
  for (const auto& [m, cf] : t_) {
    // (x + c y)^i = sum_k binom(i,k) x^k (c y)^{i-k}
    auto it = rows.find(m.i);
    if (it == rows.end()) it = rows.emplace(m.i, shift_powers(tower_, cv, m.i)).first;
    // shift_powers gives coefficients of (v + c)^i in v; reuse with homogenization:
    // coefficient of v^k is binom(i,k) c^{i-k}, exactly what we need with v = x.
    const auto& row = it->second;
    for (long k = 0; k < static_cast<long>(row.size()); ++k)
      r.add_term({k, m.j + (m.i - k)}, tower_->n_mul(cf, row[k], L));
  }
  return r;
}

Poly2 Poly2::subst_monomial(long a, long b, long c, long d) const {
  Poly2 r(tower_);
  for (const auto& [m, cf] : t_)
    r.add_term({a * m.i + c * m.j, b * m.i + d * m.j}, cf);
  return r;
}

Monomial2 Poly2::monomial_content() const {
  if (t_.empty()) return {0, 0};
  long mi = -1, mj = -1;
  for (const auto& [m, c] : t_) {
    mi = (mi < 0) ? m.i : std::min(mi, m.i);
    mj = (mj < 0) ? m.j : std::min(mj, m.j);
  }
  return {mi, mj};
}

Poly2 Poly2::divide_monomial(long i, long j) const {
  Poly2 r(tower_);
  for (const auto& [m, c] : t_) {
    if (m.i < i || m.j < j)
      throw std::invalid_argument("monomial division is not exact");
    r.t_.emplace(Monomial2{m.i - i, m.j - j}, c);
  }
  return r;
}

std::optional<Poly2> Poly2::try_divide(const Poly2& divisor) const {
  if (divisor.is_zero()) throw DivisionByZero();
  const int L = tower_->height();
  Poly2 rem = *this;
  Poly2 quot(tower_);
  // leading term of the divisor under grlex
  const GrlexLess less;
  auto lead_of = [&](const Poly2& p) {
    auto best = p.t_.begin();
    for (auto it = p.t_.begin(); it != p.t_.end(); ++it)
      if (less(best->first, it->first)) best = it;
    return best;
  };
  auto dl = lead_of(divisor);
  const Nested dlcinv = tower_->n_inv(dl->second, L);
  while (!rem.is_zero()) {
    auto rl = lead_of(rem);
    if (rl->first.i < dl->first.i || rl->first.j < dl->first.j)
      return std::nullopt;
    Monomial2 qm{rl->first.i - dl->first.i, rl->first.j - dl->first.j};
    Nested qc = tower_->n_mul(rl->second, dlcinv, L);
    Poly2 qt(tower_);
    qt.t_.emplace(qm, qc);
    quot = quot + qt;
    rem = rem - qt * divisor;
  }
  return quot;
}

// ---------------------------------------------------------------------------
// conversions

UPoly Poly2::eval_x0() const {
  std::vector<Nested> c;
  for (const auto& [m, cf] : t_) {
    if (m.i != 0) continue;
    if (static_cast<long>(c.size()) <= m.j) c.resize(m.j + 1);
    c[m.j] = cf;
  }
  return UPoly(tower_, std::move(c));
}
UPoly Poly2::eval_y0() const { return swap_vars().eval_x0(); }

std::vector<UPoly> Poly2::coeffs_in_y() const {
  const long dy = deg_y();
  std::vector<std::vector<Nested>> rows(dy + 1);
  for (const auto& [m, cf] : t_) {
    auto& row = rows[m.j];
    if (static_cast<long>(row.size()) <= m.i) row.resize(m.i + 1);
    row[m.i] = cf;
  }
  std::vector<UPoly> out;
  out.reserve(rows.size());
  for (auto& row : rows) out.emplace_back(tower_, std::move(row));
  return out;
}

Poly2 Poly2::from_coeffs_in_y(const TowerPtr& t, const std::vector<UPoly>& c) {
  Poly2 p(t);
  for (long j = 0; j < static_cast<long>(c.size()); ++j) {
    const UPoly cj = c[j].to_tower(t);
    for (long i = 0; i <= cj.degree(); ++i) p.add_term({i, j}, cj.coeffs()[i]);
  }
  return p;
}
Poly2 Poly2::from_upoly_x(const UPoly& p) {
  Poly2 r(p.tower());
  for (long i = 0; i <= p.degree(); ++i) r.add_term({i, 0}, p.coeffs()[i]);
  return r;
}
Poly2 Poly2::from_upoly_y(const UPoly& p) {
  return from_upoly_x(p).swap_vars();
}

Poly2 Poly2::to_tower(const TowerPtr& t) const {
  Poly2 r(t);
  for (const auto& [m, c] : t_)
    r.add_term(m, AlgebraicElement(tower_, c).to_tower(t).raw());
  return r;
}

std::string Poly2::to_string(const std::string& xv, const std::string& yv) const {
  if (t_.empty()) return "0";
  std::vector<Monomial2> mons;
  mons.reserve(t_.size());
  for (const auto& [m, c] : t_) mons.push_back(m);
  std::sort(mons.begin(), mons.end(), GrlexLess{});
  std::reverse(mons.begin(), mons.end());
  std::string out;
  for (const Monomial2& m : mons) {
    std::string c = tower_->n_to_string(t_.at(m), tower_->height());
    std::string mon;
    if (m.i > 0) {
      mon = xv;
      if (m.i > 1) mon += "^" + std::to_string(m.i);
    }
    if (m.j > 0) {
      if (!mon.empty()) mon += "*";
      mon += yv;
      if (m.j > 1) mon += "^" + std::to_string(m.j);
    }
    std::string term;
    if (mon.empty()) {
      bool composite = c.find_first_of("+-", 1) != std::string::npos;
      term = composite ? "(" + c + ")" : c;
    } else if (c == "1") {
      term = mon;
    } else if (c == "-1") {
      term = "-" + mon;
    } else if (c.find_first_of("+-", 1) != std::string::npos) {
      term = "(" + c + ")*" + mon;
    } else {
      term = c + "*" + mon;
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
// gcd via primitive PRS in y over K[x]

namespace {

UPoly upoly_content(const std::vector<UPoly>& cs) {
  UPoly g(cs.front().tower());
  for (const UPoly& c : cs) g = g.is_zero() ? c : g.gcd(c);
  return g.is_zero() ? g : g.monic();
}

std::vector<UPoly> divide_all(const std::vector<UPoly>& cs, const UPoly& d) {
  std::vector<UPoly> out;
  out.reserve(cs.size());
  for (const UPoly& c : cs) {
    if (c.is_zero()) {
      out.push_back(c);
      continue;
    }
    auto [q, r] = c.divrem(d);
    if (!r.is_zero()) throw std::logic_error("content division not exact");
    out.push_back(q);
  }
  return out;
}

void trim_top(std::vector<UPoly>& v) {
  while (!v.empty() && v.back().is_zero()) v.pop_back();
}

// pseudo-remainder of a by b in y (coefficients in K[x]);
// lc(b)^(da-db+1) * a = q*b + rem
std::vector<UPoly> pseudo_rem(std::vector<UPoly> a, const std::vector<UPoly>& b) {
  const long db = static_cast<long>(b.size()) - 1;
  const UPoly& lcb = b.back();
  trim_top(a);
  while (static_cast<long>(a.size()) - 1 >= db && !a.empty()) {
    const long da = static_cast<long>(a.size()) - 1;
    UPoly lca = a.back();
    a.pop_back();
    // a = lcb*a - lca * b * y^{da-db}
    for (UPoly& c : a) c = c * lcb;
    const long off = da - db;
    for (long k = 0; k < db; ++k) a[off + k] = a[off + k] - lca * b[k];
    trim_top(a);
  }
  return a;
}

}  // namespace

Poly2 poly2_gcd(const Poly2& f, const Poly2& g) {
  const TowerPtr& t = f.tower();
  auto normalize = [&](Poly2 p) {
    if (p.is_zero()) return p;
    // leading grlex coefficient becomes 1
    GrlexLess less;
    Monomial2 lead{0, 0};
    bool first = true;
    for (const auto& [m, c] : p.terms())
      if (first || less(lead, m)) {
        lead = m;
        first = false;
      }
    return p.scaled(p.coeff(lead.i, lead.j).inverse());
  };
  if (f.is_zero()) return normalize(g);
  if (g.is_zero()) return normalize(f);

  std::vector<UPoly> a = f.coeffs_in_y(), b = g.coeffs_in_y();
  if (a.size() == 1 && b.size() == 1)
    return normalize(Poly2::from_upoly_x(a[0].gcd(b[0])));
  if (a.size() == 1)
    return normalize(Poly2::from_upoly_x(a[0].gcd(upoly_content(b))));
  if (b.size() == 1)
    return normalize(Poly2::from_upoly_x(b[0].gcd(upoly_content(a))));

  UPoly ca = upoly_content(a), cb = upoly_content(b);
  UPoly cg = ca.gcd(cb);
  std::vector<UPoly> r0 = divide_all(a, ca), r1 = divide_all(b, cb);
  if (r0.size() < r1.size()) std::swap(r0, r1);
  while (true) {
    std::vector<UPoly> r2 = pseudo_rem(r0, r1);
    if (r2.empty()) break;
    UPoly c2 = upoly_content(r2);
    r2 = divide_all(r2, c2);
    r0 = std::move(r1);
    r1 = std::move(r2);
  }
  Poly2 pp = Poly2::from_coeffs_in_y(t, r1);
  return normalize(Poly2::from_upoly_x(cg) * pp);
}

// ---------------------------------------------------------------------------
// resultant via fraction-free Bareiss on the Sylvester matrix

UPoly resultant_y(const Poly2& f, const Poly2& g) {
  const TowerPtr& t = f.tower();
  if (f.is_zero() || g.is_zero()) return UPoly(t);
  std::vector<UPoly> a = f.coeffs_in_y(), b = g.coeffs_in_y();
  const long m = static_cast<long>(a.size()) - 1;
  const long n = static_cast<long>(b.size()) - 1;
  if (m == 0 && n == 0) return UPoly::from_elements({AlgebraicElement(t, Rat(1))});
  if (m == 0) {
    UPoly r = UPoly::from_elements({AlgebraicElement(t, Rat(1))});
    for (long k = 0; k < n; ++k) r = r * a[0];
    return r;
  }
  if (n == 0) {
    UPoly r = UPoly::from_elements({AlgebraicElement(t, Rat(1))});
    for (long k = 0; k < m; ++k) r = r * b[0];
    return r;
  }
  const long N = m + n;
  std::vector<std::vector<UPoly>> s(N, std::vector<UPoly>(N, UPoly(t)));
  for (long r = 0; r < n; ++r)
    for (long k = 0; k <= m; ++k) s[r][r + k] = a[m - k];
  for (long r = 0; r < m; ++r)
    for (long k = 0; k <= n; ++k) s[n + r][r + k] = b[n - k];

  int sign = 1;
  UPoly prev = UPoly::from_elements({AlgebraicElement(t, Rat(1))});
  for (long k = 0; k + 1 < N; ++k) {
    long piv = -1;
    for (long r = k; r < N; ++r)
      if (!s[r][k].is_zero()) {
        piv = r;
        break;
      }
    if (piv < 0) return UPoly(t);  // determinant is zero
    if (piv != k) {
      std::swap(s[piv], s[k]);
      sign = -sign;
    }
    for (long r = k + 1; r < N; ++r) {
      for (long c = k + 1; c < N; ++c) {
        UPoly num = s[k][k] * s[r][c] - s[r][k] * s[k][c];
        if (num.is_zero()) {
          s[r][c] = num;
          continue;
        }
        auto [q, rem] = num.divrem(prev);
        if (!rem.is_zero()) throw std::logic_error("Bareiss division not exact");
        s[r][c] = q;
      }
      s[r][k] = UPoly(t);
    }
    prev = s[k][k];
  }
  UPoly det = s[N - 1][N - 1];
  if (sign < 0) det = -det;
  return det;
}

// ---------------------------------------------------------------------------
// intersection number

std::optional<long> intersection_number(const Poly2& f_in, const Poly2& g_in) {
  const TowerPtr& t = f_in.tower()->height() >= g_in.tower()->height()
                          ? f_in.tower()
                          : g_in.tower();
  Poly2 f = f_in.to_tower(t), g = g_in.to_tower(t);
  if (f.is_zero() && g.is_zero()) return std::nullopt;
  if (f.is_zero()) return g.eval00().is_zero() ? std::nullopt : std::optional<long>(0);
  if (g.is_zero()) return f.eval00().is_zero() ? std::nullopt : std::optional<long>(0);
  if (!f.eval00().is_zero() || !g.eval00().is_zero()) return 0;

  Poly2 h = poly2_gcd(f, g);
  if (h.total_degree() >= 1) {
    if (h.eval00().is_zero()) return std::nullopt;  // common factor through 0
    // a common factor that is a unit at the origin does not contribute
    f = *f.try_divide(h);
    g = *g.try_divide(h);
    if (!f.eval00().is_zero() || !g.eval00().is_zero()) return 0;
  }

  for (long ci = 0;; ++ci) {
    const Rat c(ci);
    Poly2 fs = f.shear_x(c), gs = g.shear_x(c);
    // both leading y-coefficients must be units (nonzero constants)
    auto unit_lead = [&](const Poly2& p) {
      auto cs = p.coeffs_in_y();
      return cs.back().degree() == 0;
    };
    if (!unit_lead(fs) || !unit_lead(gs)) continue;
    // the sheared line x = c*y must meet f = g = 0 only at the origin:
    // gcd(fs(0,y), gs(0,y)) has to be a power of y
    UPoly u = fs.eval_x0(), v = gs.eval_x0();
    UPoly hy = u.gcd(v);
    bool pure = true;
    for (long k = 0; k < hy.degree(); ++k)
      if (!hy.coeff(k).is_zero()) {
        pure = false;
        break;
      }
    if (!pure) continue;
    UPoly res = resultant_y(fs, gs);
    if (res.is_zero()) throw std::logic_error("unexpected zero resultant");
    for (long k = 0; k <= res.degree(); ++k)
      if (!res.coeff(k).is_zero()) return k;
    throw std::logic_error("unreachable");
  }
}

// ---------------------------------------------------------------------------
// parameterizations

Parameterization::Parameterization(UPoly x, UPoly y)
    : x_of_t(std::move(x)), y_of_t(std::move(y)) {
  if (x_of_t.is_zero() && y_of_t.is_zero())
    throw std::invalid_argument("zero parameterization");
  if ((!x_of_t.is_zero() && !x_of_t.coeff(0).is_zero()) ||
      (!y_of_t.is_zero() && !y_of_t.coeff(0).is_zero()))
    throw std::invalid_argument("parameterization must satisfy x(0)=y(0)=0");
}

UPoly substitute(const Poly2& f, const Parameterization& gamma) {
  TowerPtr t = f.tower();
  if (gamma.x_of_t.tower()->height() > t->height()) t = gamma.x_of_t.tower();
  if (gamma.y_of_t.tower()->height() > t->height()) t = gamma.y_of_t.tower();
  const Poly2 ff = f.to_tower(t);
  const UPoly xt = gamma.x_of_t.to_tower(t), yt = gamma.y_of_t.to_tower(t);
  const UPoly one = UPoly::from_elements({AlgebraicElement(t, Rat(1))});
  std::vector<UPoly> xp{one}, yp{one};
  auto power = [&](std::vector<UPoly>& cache, const UPoly& base, long e) {
    while (static_cast<long>(cache.size()) <= e)
      cache.push_back(cache.back() * base);
    return cache[e];
  };
  UPoly acc(t);
  for (const auto& [m, c] : ff.terms()) {
    UPoly term = power(xp, xt, m.i) * power(yp, yt, m.j);
    acc = acc + term.scaled(AlgebraicElement(t, c));
  }
  return acc;
}

std::optional<long> ord_t(const UPoly& p) {
  for (long k = 0; k <= p.degree(); ++k)
    if (!p.coeff(k).is_zero()) return k;
  return std::nullopt;
}

}  // namespace fol
