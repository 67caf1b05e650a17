#include "fol/newton.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace fol {

Support support_poly(const Poly2& f) {
  Support s;
  for (const auto& [m, c] : f.terms()) s.insert(m);
  return s;
}

Support support_form(const OneForm& w) {
  Support s;
  for (const auto& [m, c] : w.A.terms()) s.insert({m.i + 1, m.j});
  for (const auto& [m, c] : w.B.terms()) s.insert({m.i, m.j + 1});
  return s;
}

namespace {

long cross(const Monomial2& o, const Monomial2& a, const Monomial2& b) {
  return (a.i - o.i) * (b.j - o.j) - (a.j - o.j) * (b.i - o.i);
}

}  // namespace

NewtonPolygon newton_polygon(const Support& T) {
  if (T.empty()) throw EmptySupport();
  // staircase compression: the minimal j for each i
  std::map<long, long> minj;
  for (const Monomial2& m : T) {
    auto it = minj.find(m.i);
    if (it == minj.end() || m.j < it->second) minj[m.i] = m.j;
  }
  // lower-left convex chain over points sorted by increasing i
  std::vector<Monomial2> hull;
  for (const auto& [i, j] : minj) {
    Monomial2 p{i, j};
    while (hull.size() >= 2 &&
           cross(hull[hull.size() - 2], hull.back(), p) <= 0)
      hull.pop_back();
    hull.push_back(p);
  }
  // keep the maximal prefix with strictly decreasing j (the rest of the
  // chain is dominated towards +i)
  NewtonPolygon out;
  out.vertices.push_back(hull.front());
  for (size_t k = 1; k < hull.size(); ++k) {
    if (hull[k].j >= out.vertices.back().j) break;
    out.vertices.push_back(hull[k]);
  }
  for (size_t k = 0; k + 1 < out.vertices.size(); ++k) {
    const Monomial2& a = out.vertices[k];
    const Monomial2& b = out.vertices[k + 1];
    out.compact_sides.push_back({a, b, Rat(b.i - a.i) / Rat(a.j - b.j)});
  }
  return out;
}

bool NewtonPolygon::contains(const Monomial2& m) const {
  if (m.i < vertices.front().i) return false;
  if (m.j < vertices.back().j) return false;
  for (const Side& s : compact_sides) {
    long ni = s.from.j - s.to.j;  // positive
    long nj = s.to.i - s.from.i;  // positive
    if (ni * m.i + nj * m.j < ni * s.from.i + nj * s.from.j) return false;
  }
  return true;
}

bool polygon_equal(const NewtonPolygon& a, const NewtonPolygon& b) {
  return a.vertices == b.vertices;
}

bool newton_second_type_test(const OneForm& w, const Poly2& f) {
  if (!is_invariant(w, f).first) throw NotInvariant();
  return polygon_equal(newton_polygon(support_form(w)),
                       newton_polygon(support_form(d(f))));
}

std::string polygon_ascii(const NewtonPolygon& p, const Support& T) {
  long maxi = 0, maxj = 0;
  for (const Monomial2& m : T) {
    maxi = std::max(maxi, m.i);
    maxj = std::max(maxj, m.j);
  }
  std::set<Monomial2> verts(p.vertices.begin(), p.vertices.end());
  std::ostringstream os;
  for (long j = maxj; j >= 0; --j) {
    os << (j % 5 == 0 ? std::to_string(j) : " ");
    os << " |";
    for (long i = 0; i <= maxi; ++i) {
      Monomial2 m{i, j};
      if (verts.count(m))
        os << " o";
      else if (T.count(m))
        os << " *";
      else
        os << " .";
    }
    os << "\n";
  }
  os << "  +";
  for (long i = 0; i <= maxi; ++i) os << "--";
  os << "\n   ";
  for (long i = 0; i <= maxi; ++i)
    os << " " << (i % 5 == 0 ? std::to_string(i % 10) : " ");
  os << "\n";
  return os.str();
}

std::string polygon_svg(const NewtonPolygon& p, const Support& T) {
  long maxi = 1, maxj = 1;
  for (const Monomial2& m : T) {
    maxi = std::max(maxi, m.i);
    maxj = std::max(maxj, m.j);
  }
  const long u = 24, pad = 20;
  auto X = [&](long i) { return pad + i * u; };
  auto Y = [&](long j) { return pad + (maxj - j) * u; };
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\""
     << 2 * pad + maxi * u << "\" height=\"" << 2 * pad + maxj * u << "\">\n";
  for (long i = 0; i <= maxi; ++i)
    os << "  <line x1=\"" << X(i) << "\" y1=\"" << Y(0) << "\" x2=\"" << X(i)
       << "\" y2=\"" << Y(maxj) << "\" stroke=\"#ddd\"/>\n";
  for (long j = 0; j <= maxj; ++j)
    os << "  <line x1=\"" << X(0) << "\" y1=\"" << Y(j) << "\" x2=\""
       << X(maxi) << "\" y2=\"" << Y(j) << "\" stroke=\"#ddd\"/>\n";
  if (p.vertices.size() > 1) {
    os << "  <polyline fill=\"none\" stroke=\"black\" points=\"";
    for (const Monomial2& v : p.vertices)
      os << X(v.i) << "," << Y(v.j) << " ";
    os << "\"/>\n";
  }
  for (const Monomial2& m : T)
    os << "  <circle cx=\"" << X(m.i) << "\" cy=\"" << Y(m.j)
       << "\" r=\"3\" fill=\"#888\"/>\n";
  for (const Monomial2& v : p.vertices)
    os << "  <circle cx=\"" << X(v.i) << "\" cy=\"" << Y(v.j)
       << "\" r=\"5\" fill=\"black\"/>\n";
  os << "</svg>\n";
  return os.str();
}

std::string polygon_json(const NewtonPolygon& p) {
  std::ostringstream os;
  os << "[";
  for (size_t k = 0; k < p.vertices.size(); ++k) {
    if (k) os << ",";
    os << "[" << p.vertices[k].i << "," << p.vertices[k].j << "]";
  }
  os << "]";
  return os.str();
}

}  // namespace fol
