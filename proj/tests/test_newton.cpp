#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "fol/formparse.hpp"
#include "fol/newton.hpp"

using namespace fol;

namespace {

Poly2 pp(const std::string& s) { return parse_poly(s, ParseContext()); }
OneForm ff(const std::string& s) { return parse_oneform(s, ParseContext()); }

Support sup(std::initializer_list<Monomial2> ms) { return Support(ms); }

}  // namespace

TEST_CASE("supports of 1-forms") {
  CHECK(support_form(ff("(2*y + x^2) dx - x dy")) ==
        sup({{1, 1}, {3, 0}}));
  for (long n = 2; n <= 5; ++n) {
    Poly2 a = pp("y").scaled(AlgebraicElement(Rat(n))) + pp("x").pow(n);
    OneForm w(a, -pp("x"));
    CHECK(support_form(w) == sup({{1, 1}, {n + 1, 0}}));
  }
  CHECK(support_form(ff("(x*y + y^2) dx - x^2 dy")) == sup({{2, 1}, {1, 2}}));
  // for d(f) the support is the support of f (no term has i + j = 0)
  std::mt19937 rng(3);
  std::uniform_int_distribution<long> e(0, 5), c(1, 5);
  auto q = FieldTower::rationals();
  for (int k = 0; k < 50; ++k) {
    Poly2 f(q);
    for (int j = 0; j < 4; ++j)
      f = f + Poly2::monomial(q, e(rng), e(rng), Rat(c(rng)));
    f = f - Poly2::constant(q, f.eval00().rational_value().value_or(Rat(0)));
    if (f.is_zero()) continue;
    CHECK(support_form(d(f)) == support_poly(f));
  }
}

TEST_CASE("polygon vertices and compact sides") {
  NewtonPolygon single = newton_polygon(sup({{1, 1}}));
  CHECK(single.vertices == std::vector<Monomial2>{{1, 1}});
  CHECK(single.compact_sides.empty());

  ParseContext ctx;
  ctx.declare("b: b^2 - 2");
  OneForm w33 = parse_oneform(
      "((b-1)*x*y - y^3) dx + (x*y - b*x^2 + x*y^2) dy", ctx);
  NewtonPolygon p33 = newton_polygon(support_form(w33));
  CHECK(p33.vertices == std::vector<Monomial2>{{1, 2}, {2, 1}});

  for (long p = 2; p <= 5; ++p)
    for (long q = 2; q <= 5; ++q) {
      Poly2 f = pp("y").pow(p) - pp("x").pow(q);
      NewtonPolygon np = newton_polygon(support_form(d(f)));
      CHECK(np.vertices == std::vector<Monomial2>{{0, p}, {q, 0}});
      REQUIRE(np.compact_sides.size() == 1);
      CHECK(np.compact_sides[0].inclination == Rat(q) / Rat(p));
    }

  CHECK_THROWS_AS(newton_polygon(Support{}), EmptySupport);
}

TEST_CASE("dominated points are not vertices") {
  NewtonPolygon p = newton_polygon(sup({{0, 3}, {1, 1}, {1, 3}, {3, 0}, {4, 2}}));
  CHECK(p.vertices == std::vector<Monomial2>{{0, 3}, {1, 1}, {3, 0}});
  // collinear interior points are removed
  NewtonPolygon c = newton_polygon(sup({{0, 2}, {1, 1}, {2, 0}}));
  CHECK(c.vertices == std::vector<Monomial2>{{0, 2}, {2, 0}});
  // horizontal continuation is dominated
  NewtonPolygon h = newton_polygon(sup({{0, 1}, {2, 1}, {5, 1}}));
  CHECK(h.vertices == std::vector<Monomial2>{{0, 1}});
}

TEST_CASE("polygon equality") {
  ParseContext ctx;
  ctx.declare("b: b^2 - 2");
  OneForm w33 = parse_oneform(
      "((b-1)*x*y - y^3) dx + (x*y - b*x^2 + x*y^2) dy", ctx);
  NewtonPolygon pw = newton_polygon(support_form(w33));
  NewtonPolygon pf = newton_polygon(support_form(d(pp("x*y*(x - y)"))));
  CHECK(polygon_equal(pw, pf));
  CHECK(polygon_equal(pw, pw));

  OneForm w46 = ff("(2*y + x^2) dx - x dy");
  CHECK(!polygon_equal(newton_polygon(support_form(w46)),
                       newton_polygon(support_poly(pp("x")))));
}

TEST_CASE("second-type test on the fixture forms") {
  CHECK(!newton_second_type_test(ff("(x*y + y^2) dx - x^2 dy"), pp("x*y")));

  ParseContext ctx;
  ctx.declare("b: b^2 - 2");
  OneForm w33 = parse_oneform(
      "((b-1)*x*y - y^3) dx + (x*y - b*x^2 + x*y^2) dy", ctx);
  CHECK(newton_second_type_test(w33, parse_poly("x*y*(x - y)", ctx)));

  OneForm w46 = ff("(2*y + x^2) dx - x dy");
  CHECK(!newton_second_type_test(w46, pp("x")));

  CHECK_THROWS_AS(newton_second_type_test(ff("dx"), pp("y")), NotInvariant);
}

TEST_CASE("hull properties over random supports") {
  std::mt19937 rng(5);
  std::uniform_int_distribution<long> e(0, 12), n(1, 10);
  for (int k = 0; k < 500; ++k) {
    Support T;
    int cnt = static_cast<int>(n(rng));
    for (int j = 0; j < cnt; ++j) T.insert({e(rng), e(rng)});
    NewtonPolygon p = newton_polygon(T);
    for (const Monomial2& v : p.vertices) CHECK(T.count(v) == 1);
    for (const Monomial2& m : T) CHECK(p.contains(m));
    // idempotence on the vertex set
    NewtonPolygon p2 =
        newton_polygon(Support(p.vertices.begin(), p.vertices.end()));
    CHECK(polygon_equal(p, p2));
    // consecutive inclinations strictly increase
    for (size_t s = 0; s + 1 < p.compact_sides.size(); ++s)
      CHECK(p.compact_sides[s].inclination <
            p.compact_sides[s + 1].inclination);
  }
}

TEST_CASE("multiplicity reads off the support") {
  std::mt19937 rng(9);
  std::uniform_int_distribution<long> e(0, 4), c(1, 3);
  auto q = FieldTower::rationals();
  for (int k = 0; k < 100; ++k) {
    Poly2 A(q), B(q);
    for (int j = 0; j < 3; ++j) {
      A = A + Poly2::monomial(q, e(rng), e(rng), Rat(c(rng)));
      B = B + Poly2::monomial(q, e(rng), e(rng), Rat(c(rng)));
    }
    OneForm w = saturate(A, B);
    long mo = 1000;
    for (const Monomial2& m : support_form(w)) mo = std::min(mo, m.i + m.j - 1);
    CHECK(multiplicity(w) == mo);
  }
}

TEST_CASE("renderings") {
  NewtonPolygon p = newton_polygon(sup({{0, 2}, {1, 1}, {3, 0}}));
  CHECK(polygon_json(p) == "[[0,2],[1,1],[3,0]]");
  std::string art = polygon_ascii(p, sup({{0, 2}, {1, 1}, {3, 0}}));
  CHECK(art.find('o') != std::string::npos);
  std::string svg = polygon_svg(p, sup({{0, 2}, {1, 1}, {3, 0}}));
  CHECK(svg.find("<svg") == 0);
  CHECK(svg.find("polyline") != std::string::npos);
}
