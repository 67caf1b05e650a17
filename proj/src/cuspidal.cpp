#include "fol/cuspidal.hpp"

#include <numeric>

namespace fol {

namespace {

// d(y^p - x^q) + delta (px dy - qy dx), without the saturation check
OneForm cuspidal_raw(const CuspidalSpec& spec) {
  const TowerPtr& t = spec.tower();
  Poly2 x = Poly2::monomial(t, 1, 0), y = Poly2::monomial(t, 0, 1);
  Poly2 A = -x.pow(spec.q - 1).scaled(AlgebraicElement(t, Rat(spec.q))) -
            (y * spec.delta).scaled(AlgebraicElement(t, Rat(spec.q)));
  Poly2 B = y.pow(spec.p - 1).scaled(AlgebraicElement(t, Rat(spec.p))) +
            (x * spec.delta).scaled(AlgebraicElement(t, Rat(spec.p)));
  return {A, B};
}

}  // namespace

OneForm build_cuspidal(const CuspidalSpec& spec) {
  OneForm w = cuspidal_raw(spec);
  if (poly2_gcd(w.A, w.B).total_degree() >= 1) throw NotSaturated();
  return w;
}

long ph_pq(long p, long q) { return (p - 1) * (q - 1); }

namespace {

std::string fresh_cyclo_name(const TowerPtr& t) {
  if (!t->has_generator("e")) return "e";
  for (int k = 1;; ++k) {
    std::string n = "e" + std::to_string(k);
    if (!t->has_generator(n)) return n;
  }
}

}  // namespace

BranchSystem branch_params(long p, long q, const TowerPtr& base) {
  long d = std::gcd(p, q);
  long P = p / d, Q = q / d;

  // one generator: a primitive (P d)-th root of unity supplies both the
  // d-th roots zeta^i and the values A_i with A_i^P = zeta^i
  BranchSystem out;
  AlgebraicElement eps(base, Rat(1));
  if (P * d == 2) {
    out.tower = base;
    eps = AlgebraicElement(base, Rat(-1));
  } else if (P * d >= 3) {
    out.tower = tower_extend(base, cyclotomic(base, P * d),
                             fresh_cyclo_name(base));
    eps = tower_generator(out.tower, out.tower->height());
  } else {
    out.tower = base;
  }
  const TowerPtr& t = out.tower;

  AlgebraicElement zeta = eps.pow(P);
  for (long i = 0; i < d; ++i) {
    AlgebraicElement ai = eps.pow(i);
    std::vector<AlgebraicElement> xc(P + 1, AlgebraicElement(t, Rat(0)));
    xc[P] = AlgebraicElement(t, Rat(1));
    std::vector<AlgebraicElement> yc(Q + 1, AlgebraicElement(t, Rat(0)));
    yc[Q] = ai;
    out.branches.emplace_back(UPoly::from_elements(xc),
                              UPoly::from_elements(yc));
    Poly2 fi = Poly2::monomial(t, 0, P) -
               Poly2::monomial(t, Q, 0, zeta.pow(i));
    out.factors.push_back(fi);
  }
  return out;
}

std::optional<long> cusp_intersection(const CuspidalSpec& spec) {
  const TowerPtr& base = spec.tower();
  Poly2 sep = Poly2::monomial(base, 0, spec.p) -
              Poly2::monomial(base, spec.q, 0);
  std::optional<long> resultant_path = intersection_number(spec.delta, sep);

  std::optional<long> branch_path;
  if (!spec.delta.is_zero()) {
    BranchSystem bs = branch_params(spec.p, spec.q, base);
    Poly2 dl = spec.delta.to_tower(bs.tower);
    long total = 0;
    bool infinite = false;
    for (const Parameterization& g : bs.branches) {
      auto o = ord_t(substitute(dl, g));
      if (!o) {
        infinite = true;
        break;
      }
      total += *o;
    }
    if (!infinite) branch_path = total;
  }

  if (branch_path != resultant_path)
    throw OracleMismatch("branch and resultant intersection numbers differ");
  return branch_path;
}

CuspVerdict classify_cuspidal(const CuspidalSpec& spec,
                              bool use_reduction_oracle) {
  OneForm w = build_cuspidal(spec);
  const TowerPtr& base = spec.tower();
  Poly2 sep = Poly2::monomial(base, 0, spec.p) -
              Poly2::monomial(base, spec.q, 0);
  if (!is_invariant(w, sep).first)
    throw std::logic_error("separatrix certification failed");

  CuspVerdict v;
  v.ph = ph_pq(spec.p, spec.q);
  v.intersection = cusp_intersection(spec);
  v.method = "intersection-criterion";

  if (!v.intersection) {
    v.second_type = true;
    v.generalized_curve = true;
    return v;
  }
  long i = *v.intersection;
  v.second_type = i >= v.ph - 1;
  if (i > v.ph - 1) {
    v.generalized_curve = true;
  } else if (i < v.ph - 1 || spec.d() == 1) {
    v.generalized_curve = false;
  } else if (use_reduction_oracle) {
    ReductionTree tree = reduce(w);
    if (tree.dicritical) throw Dicritical();
    v.generalized_curve = verdict(tree).generalized_curve;
    v.method = "reduction-oracle";
  }
  return v;
}

long gsv_total(
    const OneForm& w, const Poly2& f,
    const std::vector<std::pair<Poly2, Parameterization>>& branches) {
  // the branch factors must multiply back to f
  const TowerPtr& t = branches.empty() ? f.tower() : branches[0].first.tower();
  Poly2 prod = Poly2::constant(t, Rat(1));
  for (const auto& [fi, g] : branches) prod = prod * fi;
  if (!(prod - f.to_tower(t)).is_zero())
    throw std::invalid_argument("branch factors do not multiply to f");

  OneForm wt = w.to_tower(t);
  long total = 0;
  for (const auto& [fi, g] : branches) {
    UPoly b = substitute(wt.B, g);
    UPoly fy = substitute(fi.partial_y(), g);
    UPoly a = substitute(wt.A, g);
    UPoly fx = substitute(fi.partial_x(), g);
    std::optional<long> idx;
    if (!fy.is_zero() && !b.is_zero()) {
      idx = *ord_t(b) - *ord_t(fy);
      // the index is coordinate-symmetric; check against the A/f_x form
      if (!fx.is_zero() && !a.is_zero() && *ord_t(a) - *ord_t(fx) != *idx)
        throw OracleMismatch("GSV index is not coordinate-symmetric");
    } else if (!fx.is_zero() && !a.is_zero()) {
      idx = *ord_t(a) - *ord_t(fx);
    }
    if (!idx) throw UndefinedIndex();
    total += *idx;
  }
  for (size_t i = 0; i < branches.size(); ++i)
    for (size_t j = i + 1; j < branches.size(); ++j) {
      auto inter = intersection_number(branches[i].first, branches[j].first);
      if (!inter) throw std::invalid_argument("branch factors share a branch");
      total -= 2 * *inter;
    }
  return total;
}

std::optional<long> pullback_order(const Parameterization& gamma,
                                   const OneForm& w) {
  OneForm wt = w.to_tower(gamma.x_of_t.tower());
  UPoly pulled = substitute(wt.A, gamma) * gamma.x_of_t.derivative() +
                 substitute(wt.B, gamma) * gamma.y_of_t.derivative();
  return ord_t(pulled);
}

namespace {

Poly2 divide_form_coeff(const Poly2& c, long i, long j) {
  // exact when the paper's exponent applies; otherwise fall back to the
  // largest monomial that does divide
  Monomial2 mc = c.monomial_content();
  return c.divide_monomial(std::min(i, mc.i), std::min(j, mc.j));
}

}  // namespace

ToricAnalysis toric_pullback(const CuspidalSpec& spec) {
  if (spec.p <= spec.q)
    throw std::invalid_argument("toric chart requires p > q");
  long d = spec.d(), P = spec.p / d, Q = spec.q / d;

  long m = 0, n = 0;
  for (m = 1;; ++m) {
    if ((m * spec.p - d) % spec.q == 0 && (m * spec.p - d) / spec.q >= 1) {
      n = (m * spec.p - d) / spec.q;
      break;
    }
  }

  OneForm w = cuspidal_raw(spec);
  const TowerPtr& t = w.tower();
  // x = u^n v^P, y = u^m v^Q
  Poly2 Ae = w.A.subst_monomial(n, P, m, Q);
  Poly2 Be = w.B.subst_monomial(n, P, m, Q);
  // E*w = (A n u^{n-1} v^P + B m u^{m-1} v^Q) du
  //     + (A P u^n v^{P-1} + B Q u^m v^{Q-1}) dv
  Poly2 du = Ae.scaled(AlgebraicElement(t, Rat(n))) *
                 Poly2::monomial(t, n - 1, P) +
             Be.scaled(AlgebraicElement(t, Rat(m))) *
                 Poly2::monomial(t, m - 1, Q);
  Poly2 dv = Ae.scaled(AlgebraicElement(t, Rat(P))) *
                 Poly2::monomial(t, n, P - 1) +
             Be.scaled(AlgebraicElement(t, Rat(Q))) *
                 Poly2::monomial(t, m, Q - 1);
  long eu = n * spec.q - 1, ev = spec.p * spec.q / d - 1;
  OneForm pulled{divide_form_coeff(du, eu, ev), divide_form_coeff(dv, eu, ev)};

  auto record_at = [&](const TowerPtr& tw, const AlgebraicElement& u0,
                       const std::string& label) {
    OneForm local = pulled.to_tower(tw);
    OneForm shifted{local.A.shift_x(u0), local.B.shift_x(u0)};
    SingularityRecord rec;
    rec.chart_path = "toric";
    rec.point = label;
    rec.cls = classify_singularity(shifted);
    if (rec.cls.tag == SingTag::SaddleNode) {
      const auto& [vx, vy] = *rec.cls.weak_direction;
      // the divisor here is v = 0, with tangent direction (1, 0)
      rec.saddle_node_tangency =
          vy.is_zero() ? Tangency::Tangent : Tangency::Transverse;
    }
    return rec;
  };

  SingularityRecord origin = record_at(t, AlgebraicElement(t, Rat(0)), "u=0");

  TowerPtr ct = t;
  AlgebraicElement zeta(t, Rat(1));
  if (d >= 3) {
    ct = tower_extend(t, cyclotomic(t, d), fresh_cyclo_name(t));
    zeta = tower_generator(ct, ct->height());
  } else if (d == 2) {
    zeta = AlgebraicElement(t, Rat(-1));
  }
  std::vector<SingularityRecord> cluster;
  for (long j = 0; j < d; ++j)
    cluster.push_back(record_at(ct, zeta.pow(j), "u=zeta^" + std::to_string(j)));
  return {m, n, std::move(pulled), std::move(origin), std::move(cluster)};
}

OneForm saddle_node_normal_form(long p, const AlgebraicElement& lambda) {
  const TowerPtr& t = lambda.tower();
  Poly2 x = Poly2::monomial(t, 1, 0), y = Poly2::monomial(t, 0, 1);
  Poly2 A = -y.pow(p + 1);
  Poly2 B = x * (Poly2::constant(t, Rat(1)) +
                 y.pow(p).scaled(lambda));
  return {A, B};
}

}  // namespace fol
