#include "fol/reduction.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

namespace fol {

namespace {

// x * A_nu + y * B_nu, the contraction of the initial part with the radial
// field; identically zero exactly for dicritical blow-ups
bool dicritical_at(const OneForm& w, long nu) {
  Poly2 h(w.tower());
  for (const auto& [m, c] : w.A.terms())
    if (m.i + m.j == nu) h.add_term({m.i + 1, m.j}, c);
  for (const auto& [m, c] : w.B.terms())
    if (m.i + m.j == nu) h.add_term({m.i, m.j + 1}, c);
  return h.is_zero();
}

}  // namespace

BlowupResult blowup(const OneForm& w) {
  const TowerPtr& t = w.tower();
  long nu = multiplicity(w);
  bool dic = dicritical_at(w, nu);
  long e = nu + (dic ? 1 : 0);

  Poly2 ymon = Poly2::monomial(t, 0, 1), xmon = Poly2::monomial(t, 1, 0);

  // chart C1, y = t x: E*w = (A + t B)(x, tx) dx + x B(x, tx) dt
  Poly2 a1 = w.A.subst_y_tx(), b1 = w.B.subst_y_tx();
  OneForm c1((a1 + ymon * b1).divide_monomial(e, 0),
             (xmon * b1).divide_monomial(e, 0));

  // chart C2, x = s y: E*w = y A(sy, y) ds + (s A + B)(sy, y) dy
  Poly2 a2 = w.A.subst_x_sy(), b2 = w.B.subst_x_sy();
  OneForm c2((ymon * a2).divide_monomial(0, e),
             (xmon * a2 + b2).divide_monomial(0, e));

  return {c1, c2, e, dic};
}

namespace {

// A point on the new divisor axis: either a coordinate in (a possibly
// extended) tower, or a cluster of conjugates sharing a squarefree modulus.
struct AxisPoint {
  TowerPtr tower;
  AlgebraicElement value;
  std::string label;
  bool cluster = false;
};

std::vector<Int> divisors(const Int& n) {
  std::vector<Int> out;
  Int a = abs(n);
  for (Int k = 1; k * k <= a; ++k)
    if (a % k == 0) {
      out.push_back(k);
      out.push_back(a / k);
    }
  return out;
}

// Roots of g on the axis: rational roots are split off one by one; whatever
// remains of degree >= 2 (or with non-rational coefficients) is adjoined as
// one squarefree cluster modulus named `fresh`.
std::vector<AxisPoint> axis_roots(const UPoly& g_in, const std::string& var,
                                  const std::string& fresh) {
  if (g_in.is_zero())
    throw std::logic_error("axis polynomial vanishes identically");
  const TowerPtr& t = g_in.tower();
  UPoly g = g_in.squarefree_part().monic();
  std::vector<AxisPoint> rational_pts;
  std::vector<AxisPoint> other_pts;

  // root at the corner first
  if (g.degree() >= 1 && g.coeff(0).is_zero()) {
    rational_pts.push_back({t, AlgebraicElement(t, Rat(0)), "0", false});
    std::vector<AlgebraicElement> cs;
    for (int k = 1; k <= g.degree(); ++k) cs.push_back(g.coeff(k));
    g = UPoly::from_elements(cs);
  }

  bool all_rational = true;
  for (int k = 0; k <= g.degree(); ++k)
    if (!g.coeff(k).rational_value().has_value()) all_rational = false;

  if (all_rational && g.degree() >= 1) {
    // clear denominators, then try p/q with p | c0 and q | lead
    Int den = 1;
    for (int k = 0; k <= g.degree(); ++k)
      den = lcm(den, g.coeff(k).rational_value()->get_den());
    std::vector<Int> zc;
    for (int k = 0; k <= g.degree(); ++k)
      zc.push_back(Int(*g.coeff(k).rational_value() * Rat(den)));
    std::vector<Rat> found;
    for (const Int& p : divisors(zc.front()))
      for (const Int& q : divisors(zc.back()))
        for (int sign : {1, -1}) {
          Rat r = Rat(sign * p) / Rat(q);
          if (g.eval(AlgebraicElement(t, r)).is_zero() &&
              std::find(found.begin(), found.end(), r) == found.end())
            found.push_back(r);
        }
    std::sort(found.begin(), found.end());
    for (const Rat& r : found) {
      rational_pts.push_back(
          {t, AlgebraicElement(t, r), rat_to_string(r), false});
      std::vector<AlgebraicElement> lin = {AlgebraicElement(t, -r),
                                           AlgebraicElement(t, Rat(1))};
      g = g.divrem(UPoly::from_elements(lin)).first;
    }
  }

  if (g.degree() == 1) {
    AlgebraicElement root = -g.coeff(0);  // g is monic
    other_pts.push_back({t, root, root.to_string(), false});
  } else if (g.degree() >= 2) {
    auto ext = tower_extend(t, g, fresh);
    other_pts.push_back({ext, tower_generator(ext, ext->height()),
                         g.to_string(var), true});
  }

  std::vector<AxisPoint> out = std::move(rational_pts);
  out.insert(out.end(), other_pts.begin(), other_pts.end());
  return out;
}

struct Frame {
  TowerPtr tower;
  OneForm form;
  bool div_first;   // {first coordinate = 0} is a divisor branch
  bool div_second;  // {second coordinate = 0} is a divisor branch
  std::string path;
  std::string point;  // label of the point this frame sits at
  bool cluster;
  int depth;
};

class Engine {
 public:
  explicit Engine(int max_depth) : max_depth_(max_depth) {}

  ReductionTree run(const OneForm& w) {
    process({w.tower(), w, false, false, "", "origin", false, 0});
    std::sort(tree_.centers.begin(), tree_.centers.end());
    std::sort(tree_.leaves.begin(), tree_.leaves.end(),
              [](const SingularityRecord& a, const SingularityRecord& b) {
                return std::tie(a.chart_path, a.point) <
                       std::tie(b.chart_path, b.point);
              });
    tree_.blowup_count = static_cast<long>(tree_.centers.size());
    return tree_;
  }

 private:
  void process(const Frame& fr) {
    try {
      step(fr);
    } catch (const SplitError& e) {
      for (const auto& factor : {e.event.factor1, e.event.factor2}) {
        auto sub = e.tower->with_modulus(e.event.level, factor);
        Frame forked = fr;
        forked.tower = sub;
        forked.form = fr.form.to_tower(sub);
        process(forked);
      }
    }
  }

  void step(const Frame& fr) {
    SingularityClass cls = classify_singularity(fr.form);
    if (cls.tag != SingTag::NonReduced) {
      SingularityRecord rec;
      rec.chart_path = fr.path;
      rec.point = fr.point;
      rec.cluster = fr.cluster;
      rec.cls = cls;
      rec.on_corner = fr.div_first && fr.div_second;
      if (cls.tag == SingTag::SaddleNode) {
        const auto& [vx, vy] = *cls.weak_direction;
        bool tangent = (fr.div_first && vx.is_zero()) ||
                       (fr.div_second && vy.is_zero());
        rec.saddle_node_tangency =
            tangent ? Tangency::Tangent : Tangency::Transverse;
      }
      tree_.leaves.push_back(rec);
      return;
    }

    if (fr.depth >= max_depth_) throw DepthExceeded(max_depth_);
    tree_.centers.push_back(fr.path.empty() ? "/" : fr.path);

    BlowupResult up = blowup(fr.form);
    if (up.dicritical) {
      tree_.dicritical = true;
      return;
    }

    // chart C1 owns every point with finite coordinate t
    UPoly g = up.chart1.A.eval_x0();
    for (const AxisPoint& pt :
         axis_roots(g, "t", "r" + std::to_string(fr.depth + 1))) {
      OneForm local = up.chart1.to_tower(pt.tower);
      Frame child{pt.tower,
                  {local.A.shift_y(pt.value), local.B.shift_y(pt.value)},
                  true,
                  pt.value.is_zero() && !pt.cluster ? fr.div_second : false,
                  fr.path + "/C1(t=" + pt.label + ")",
                  pt.label,
                  pt.cluster,
                  fr.depth + 1};
      process(child);
    }

    // chart C2 owns only s = 0
    if (up.chart2.vanishes_at_origin()) {
      Frame child{fr.tower,
                  up.chart2,
                  fr.div_first,
                  true,
                  fr.path + "/C2(s=0)",
                  "0",
                  false,
                  fr.depth + 1};
      process(child);
    }
  }

  int max_depth_;
  ReductionTree tree_;
};

}  // namespace

ReductionTree reduce(const OneForm& w, int max_depth) {
  return Engine(max_depth).run(w);
}

TreeVerdict verdict(const ReductionTree& tree) {
  if (tree.dicritical) throw Truncated();
  bool any_sn = false, any_tangent = false;
  for (const SingularityRecord& r : tree.leaves)
    if (r.cls.tag == SingTag::SaddleNode) {
      any_sn = true;
      if (r.saddle_node_tangency == Tangency::Tangent) any_tangent = true;
    }
  return {!any_tangent, !any_sn};
}

namespace {

class CurveEngine {
 public:
  explicit CurveEngine(int max_depth) : max_depth_(max_depth) {}

  std::vector<std::string> run(const Poly2& f) {
    process({f, false, false, "", 0});
    std::sort(centers_.begin(), centers_.end());
    return centers_;
  }

 private:
  struct CFrame {
    Poly2 f;
    bool div_first, div_second;
    std::string path;
    int depth;
  };

  void process(const CFrame& fr) {
    try {
      step(fr);
    } catch (const SplitError& e) {
      for (const auto& factor : {e.event.factor1, e.event.factor2}) {
        auto sub = e.tower->with_modulus(e.event.level, factor);
        process({fr.f.to_tower(sub), fr.div_first, fr.div_second, fr.path,
                 fr.depth});
      }
    }
  }

  // normal crossings at this point of the total transform?
  bool needs_blowup(const CFrame& fr) const {
    auto ord = fr.f.total_order();
    if (!ord || *ord == 0) return false;  // no curve branch through the point
    if (*ord >= 2) return true;           // singular strict transform
    if (fr.div_first && fr.div_second) return true;  // corner
    // smooth: tangent to {x=0} iff f_y(0) = 0, to {y=0} iff f_x(0) = 0
    if (fr.div_first && fr.f.partial_y().eval00().is_zero()) return true;
    if (fr.div_second && fr.f.partial_x().eval00().is_zero()) return true;
    return false;
  }

  void step(const CFrame& fr) {
    if (!needs_blowup(fr)) return;
    if (fr.depth >= max_depth_) throw DepthExceeded(max_depth_);
    centers_.push_back(fr.path.empty() ? "/" : fr.path);

    long m = *fr.f.total_order();
    Poly2 f1 = fr.f.subst_y_tx().divide_monomial(m, 0);
    Poly2 f2 = fr.f.subst_x_sy().divide_monomial(0, m);

    UPoly g = f1.eval_x0();
    for (const AxisPoint& pt :
         axis_roots(g, "t", "r" + std::to_string(fr.depth + 1))) {
      Poly2 local = f1.to_tower(pt.tower).shift_y(pt.value);
      process({local, true,
               pt.value.is_zero() && !pt.cluster ? fr.div_second : false,
               fr.path + "/C1(t=" + pt.label + ")", fr.depth + 1});
    }
    if (f2.eval00().is_zero())
      process({f2, fr.div_first, true, fr.path + "/C2(s=0)", fr.depth + 1});
  }

  int max_depth_;
  std::vector<std::string> centers_;
};

}  // namespace

std::vector<std::string> curve_resolution_centers(const Poly2& f,
                                                  int max_depth) {
  return CurveEngine(max_depth).run(f);
}

bool same_reduction(const OneForm& w, const Poly2& f, int max_depth) {
  ReductionTree tree = reduce(w, max_depth);
  if (tree.dicritical) throw Dicritical();
  return tree.centers == curve_resolution_centers(f, max_depth);
}

namespace {

std::string class_label(const SingularityClass& c) {
  switch (c.tag) {
    case SingTag::Regular:
      return "regular";
    case SingTag::ReducedNonDegenerate:
      return "reduced non-degenerate";
    case SingTag::SaddleNode:
      return "saddle-node";
    case SingTag::NonReduced:
      switch (c.subtag) {
        case NonReducedKind::ResonantRatio:
          return "non-reduced (resonant ratio)";
        case NonReducedKind::Nilpotent:
          return "non-reduced (nilpotent)";
        case NonReducedKind::ZeroLinearPart:
          return "non-reduced (zero linear part)";
        default:
          return "non-reduced";
      }
  }
  return "?";
}

}  // namespace

std::string tree_dot(const ReductionTree& tree) {
  std::ostringstream os;
  os << "digraph reduction {\n  rankdir=TB;\n";
  os << "  \"/\" [shape=box,label=\"origin\"];\n";
  auto parent_of = [](const std::string& p) {
    auto k = p.rfind('/');
    return k == 0 ? std::string("/") : p.substr(0, k);
  };
  for (const std::string& c : tree.centers) {
    if (c == "/") continue;
    os << "  \"" << c << "\" [shape=box,label=\"" << c.substr(c.rfind('/') + 1)
       << "\"];\n";
    os << "  \"" << parent_of(c) << "\" -> \"" << c << "\";\n";
  }
  int k = 0;
  for (const SingularityRecord& r : tree.leaves) {
    std::string id = "leaf" + std::to_string(k++);
    std::string color =
        r.saddle_node_tangency == Tangency::Tangent ? "red" : "black";
    os << "  " << id << " [shape=ellipse,color=" << color << ",label=\""
       << r.point << ": " << class_label(r.cls);
    if (r.saddle_node_tangency)
      os << (*r.saddle_node_tangency == Tangency::Tangent ? " (tangent)"
                                                          : " (transverse)");
    os << "\"];\n";
    std::string at = r.chart_path.empty() ? "/" : parent_of(r.chart_path);
    os << "  \"" << at << "\" -> " << id << ";\n";
  }
  os << "}\n";
  return os.str();
}

std::string tree_json(const ReductionTree& tree) {
  nlohmann::ordered_json j;
  j["schema"] = 1;
  j["blowups"] = tree.blowup_count;
  j["dicritical"] = tree.dicritical;
  j["centers"] = tree.centers;
  j["leaves"] = nlohmann::ordered_json::array();
  for (const SingularityRecord& r : tree.leaves) {
    nlohmann::ordered_json l;
    l["chart_path"] = r.chart_path.empty() ? "/" : r.chart_path;
    l["point"] = r.point;
    l["cluster"] = r.cluster;
    l["class"] = class_label(r.cls);
    if (r.cls.eigenvalues) {
      l["eigenvalues"] = {r.cls.eigenvalues->first.to_string(),
                          r.cls.eigenvalues->second.to_string()};
    }
    l["on_corner"] = r.on_corner;
    if (r.saddle_node_tangency)
      l["tangency"] = *r.saddle_node_tangency == Tangency::Tangent
                          ? "tangent"
                          : "transverse";
    j["leaves"].push_back(l);
  }
  return j.dump(2);
}

}  // namespace fol
