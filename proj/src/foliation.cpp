#include "fol/foliation.hpp"

namespace fol {

OneForm::OneForm(Poly2 a, Poly2 b) : A(std::move(a)), B(std::move(b)) {
  if (A.tower() != B.tower()) {
    const TowerPtr& t =
        A.tower()->height() >= B.tower()->height() ? A.tower() : B.tower();
    A = A.to_tower(t);
    B = B.to_tower(t);
  }
}

OneForm d(const Poly2& f) { return {f.partial_x(), f.partial_y()}; }

OneForm saturate(const Poly2& A, const Poly2& B) {
  if (A.is_zero() && B.is_zero()) throw ZeroForm();
  OneForm w(A, B);
  Poly2 g = poly2_gcd(w.A, w.B);
  if (g.total_degree() < 1) return w;
  return {*w.A.try_divide(g), *w.B.try_divide(g)};
}

long multiplicity(const OneForm& w) {
  auto oa = w.A.total_order(), ob = w.B.total_order();
  if (!oa) return *ob;
  if (!ob) return *oa;
  return std::min(*oa, *ob);
}

std::pair<bool, std::optional<Poly2>> is_invariant(const OneForm& w,
                                                   const Poly2& f) {
  if (f.is_zero()) throw std::invalid_argument("invariance of the zero curve");
  OneForm v = w.to_tower(f.tower()->height() >= w.tower()->height()
                             ? f.tower()
                             : w.tower());
  Poly2 fv = f.to_tower(v.tower());
  Poly2 h = v.A * fv.partial_y() - v.B * fv.partial_x();
  auto q = h.try_divide(fv);
  if (!q) return {false, std::nullopt};
  return {true, *q};
}

std::optional<long> milnor_number(const Poly2& f) {
  return intersection_number(f.partial_x(), f.partial_y());
}

std::optional<long> ph_index(const OneForm& w) {
  return intersection_number(w.A, w.B);
}

namespace {

// smallest unused name w, w1, w2, ... for a discriminant square root
std::string fresh_name(const TowerPtr& t) {
  if (!t->has_generator("w")) return "w";
  for (int k = 1;; ++k) {
    std::string n = "w" + std::to_string(k);
    if (!t->has_generator(n)) return n;
  }
}

}  // namespace

SingularityClass classify_singularity(const OneForm& w) {
  SingularityClass out;
  if (!w.vanishes_at_origin()) {
    out.tag = SingTag::Regular;
    return out;
  }
  const TowerPtr& t = w.tower();
  // linear part of the dual field X = B d/dx - A d/dy
  AlgebraicElement m11 = w.B.partial_x().eval00();
  AlgebraicElement m12 = w.B.partial_y().eval00();
  AlgebraicElement m21 = -w.A.partial_x().eval00();
  AlgebraicElement m22 = -w.A.partial_y().eval00();
  AlgebraicElement tr = m11 + m22;
  AlgebraicElement det = m11 * m22 - m12 * m21;

  if (det.is_zero()) {
    out.eigenvalues = {tr, AlgebraicElement(t, Rat(0))};
    if (tr.is_zero()) {
      out.tag = SingTag::NonReduced;
      bool zero_matrix = m11.is_zero() && m12.is_zero() && m21.is_zero() &&
                         m22.is_zero();
      out.subtag = zero_matrix ? NonReducedKind::ZeroLinearPart
                               : NonReducedKind::Nilpotent;
      return out;
    }
    out.tag = SingTag::SaddleNode;
    // kernel vector of the linear part: the zero-eigenvalue direction
    if (!m11.is_zero() || !m12.is_zero())
      out.weak_direction = {m12, -m11};
    else
      out.weak_direction = {m22, -m21};
    return out;
  }

  // eigenvalues
  if (m21.is_zero() || m12.is_zero()) {
    out.eigenvalues = {m11, m22};
  } else {
    AlgebraicElement half(t, Rat(1, 2));
    AlgebraicElement disc = tr * tr - (det + det + det + det);
    if (disc.is_zero()) {
      out.eigenvalues = {tr * half, tr * half};
    } else if (auto dr = disc.rational_value();
               dr && rat_sqrt(*dr).has_value()) {
      AlgebraicElement s(t, *rat_sqrt(*dr));
      out.eigenvalues = {(tr + s) * half, (tr - s) * half};
    } else {
      std::vector<AlgebraicElement> mp = {-disc, AlgebraicElement(t, Rat(0)),
                                          AlgebraicElement(t, Rat(1))};
      auto ext = tower_extend(t, UPoly::from_elements(mp), fresh_name(t));
      AlgebraicElement s = tower_generator(ext, ext->height());
      AlgebraicElement trx = tr.to_tower(ext);
      AlgebraicElement halfx(ext, Rat(1, 2));
      out.eigenvalues = {(trx + s) * halfx, (trx - s) * halfx};
    }
  }

  // rationality and sign of the eigenvalue ratio, decided via trace^2/det
  out.tag = SingTag::ReducedNonDegenerate;
  AlgebraicElement ratio = (tr * tr) / det;  // may throw SplitError
  auto T = ratio.rational_value();
  if (!T) return out;
  // lambda/mu solves r^2 + (2 - T) r + 1 = 0
  Rat D = *T * (*T - 4);
  auto s = rat_sqrt(D);
  if (!s) return out;
  Rat root = ((*T - 2) + *s) / 2;
  if (root > 0) {
    out.tag = SingTag::NonReduced;
    out.subtag = NonReducedKind::ResonantRatio;
  }
  return out;
}

}  // namespace fol
