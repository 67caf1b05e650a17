#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "fol/formparse.hpp"

using namespace fol;

TEST_CASE("polynomials parse with required '*' and '^'") {
  ParseContext ctx;
  auto q = ctx.tower();
  Poly2 p = parse_poly("x*y + y^2", ctx);
  CHECK(p.coeff(1, 1).rational_value() == Rat(1));
  CHECK(p.coeff(0, 2).rational_value() == Rat(1));
  CHECK(p.total_order() == 2);

  CHECK(parse_poly("3/4*x - 1/2", ctx).coeff(1, 0).rational_value() ==
        Rat(3, 4));
  CHECK(parse_poly("-x^3 + 2", ctx).coeff(3, 0).rational_value() == Rat(-1));
  CHECK(parse_poly("(x + y)^2", ctx).coeff(1, 1).rational_value() == Rat(2));
  CHECK(parse_poly("0", ctx).is_zero());
}

TEST_CASE("parse errors carry position and expectations") {
  ParseContext ctx;
  CHECK_THROWS_AS(parse_poly("x +", ctx), ParseError);
  CHECK_THROWS_AS(parse_poly("x ^ y", ctx), ParseError);
  CHECK_THROWS_AS(parse_poly("(x", ctx), ParseError);
  CHECK_THROWS_AS(parse_poly("3x", ctx), ParseError);  // '*' is required
  CHECK_THROWS_AS(parse_poly("x $ y", ctx), ParseError);
  CHECK_THROWS_AS(parse_poly("z + 1", ctx), UnknownSymbol);
  try {
    parse_poly("x + * y", ctx);
    CHECK(false);
  } catch (const ParseError& e) {
    CHECK(e.position == 4);
    CHECK(!e.expected.empty());
  }
}

TEST_CASE("1-forms parse termwise") {
  ParseContext ctx;
  OneForm w = parse_oneform("(x*y + y^2) dx - x^2 dy", ctx);
  CHECK(w.A.coeff(1, 1).rational_value() == Rat(1));
  CHECK(w.A.coeff(0, 2).rational_value() == Rat(1));
  CHECK(w.B.coeff(2, 0).rational_value() == Rat(-1));

  OneForm r = parse_oneform("x dy - y dx", ctx);
  CHECK(r.A.coeff(0, 1).rational_value() == Rat(-1));
  CHECK(r.B.coeff(1, 0).rational_value() == Rat(1));

  OneForm bare = parse_oneform("-dx + dy", ctx);
  CHECK(bare.A.coeff(0, 0).rational_value() == Rat(-1));
  CHECK(bare.B.coeff(0, 0).rational_value() == Rat(1));

  // coefficients of repeated differentials accumulate
  OneForm acc = parse_oneform("x dx + y dx", ctx);
  CHECK(acc.A.coeff(1, 0).rational_value() == Rat(1));
  CHECK(acc.A.coeff(0, 1).rational_value() == Rat(1));
  CHECK(acc.B.is_zero());

  CHECK_THROWS_AS(parse_oneform("dx + dz", ctx), ParseError);
  CHECK_THROWS_AS(parse_oneform("x + y", ctx), ParseError);
  CHECK_THROWS_AS(parse_oneform("", ctx), ParseError);
}

TEST_CASE("declared constants resolve in expressions") {
  ParseContext ctx;
  ctx.declare("b: b^2 - 2 ~ 1.4142");
  CHECK(ctx.tower()->height() == 1);
  OneForm w = parse_oneform(
      "((b-1)*x*y - y^3) dx + (x*y - b*x^2 + x*y^2) dy", ctx);
  auto b = tower_generator(ctx.tower(), 1);
  CHECK((b * b).rational_value() == Rat(2));
  CHECK(w.A.coeff(1, 1) == b - AlgebraicElement(ctx.tower(), Rat(1)));
  CHECK(w.B.coeff(2, 0) == -b);
  CHECK(w.A.coeff(0, 3).rational_value() == Rat(-1));

  CHECK_THROWS_AS(ctx.declare("x: x^2 - 2"), NameClash);
  CHECK_THROWS_AS(ctx.declare("b: b^2 - 3"), NameClash);
  CHECK_THROWS_AS(ctx.declare("c: c^2"), NotSquarefree);
  ctx.declare("z: z^2 + z + 1");
  CHECK(ctx.tower()->height() == 2);
  auto z = tower_generator(ctx.tower(), 2);
  CHECK(z.pow(3).rational_value() == Rat(1));
}

TEST_CASE("printing and parsing round-trip") {
  ParseContext ctx;
  ctx.declare("b: b^2 - 2");
  auto t = ctx.tower();
  auto b = tower_generator(t, 1);
  std::mt19937 rng(31);
  std::uniform_int_distribution<long> e(0, 5), c(-3, 3), pick(0, 3);
  for (int k = 0; k < 100; ++k) {
    Poly2 p(t);
    for (int j = 0; j < 4; ++j) {
      AlgebraicElement coef =
          AlgebraicElement(t, Rat(c(rng))) +
          (pick(rng) == 0 ? b * AlgebraicElement(t, Rat(c(rng)))
                          : AlgebraicElement(t, Rat(0)));
      p = p + Poly2::monomial(t, e(rng), e(rng), coef);
    }
    CHECK(parse_poly(p.to_string(), ctx) == p);
    OneForm w(p, p.partial_x() - Poly2::constant(t, Rat(1)));
    OneForm back = parse_oneform(oneform_to_string(w), ctx);
    CHECK(back.A == w.A);
    CHECK(back.B == w.B);
  }
}

TEST_CASE("univariate parameter polynomials") {
  ParseContext ctx;
  UPoly p = parse_upoly_t("t^3 + 2*t", ctx);
  CHECK(p.degree() == 3);
  CHECK(p.coeff(1).rational_value() == Rat(2));
  CHECK_THROWS_AS(parse_upoly_t("x + t", ctx), UnknownSymbol);
}
