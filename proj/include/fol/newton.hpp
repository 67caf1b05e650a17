#pragma once

// Supports, Newton polygons (boundary of the staircase hull T + R^2_{>=0}),
// polygon comparison, and the Newton-polygon second-type test.

#include <set>
#include <string>
#include <vector>

#include "fol/foliation.hpp"

namespace fol {

struct EmptySupport : std::runtime_error {
  EmptySupport() : std::runtime_error("empty support has no Newton polygon") {}
};

struct NotInvariant : std::runtime_error {
  NotInvariant()
      : std::runtime_error(
            "the curve is not invariant by the foliation") {}
};

using Support = std::set<Monomial2>;

Support support_poly(const Poly2& f);
/// sop(x A) union sop(y B).
Support support_form(const OneForm& w);

struct NewtonPolygon {
  struct Side {
    Monomial2 from;
    Monomial2 to;
    Rat inclination;  // delta i / delta j, positive for compact sides
    bool operator==(const Side&) const = default;
  };
  /// extreme points, strictly increasing i and strictly decreasing j
  std::vector<Monomial2> vertices;
  std::vector<Side> compact_sides;

  /// whether (i, j) lies in the region bounded below-left by the polygon
  bool contains(const Monomial2& m) const;
};

NewtonPolygon newton_polygon(const Support& T);

bool polygon_equal(const NewtonPolygon& a, const NewtonPolygon& b);

/// Newton polygons of the form and of d(f) coincide; f must be invariant.
bool newton_second_type_test(const OneForm& w, const Poly2& f);

std::string polygon_ascii(const NewtonPolygon& p, const Support& T);
std::string polygon_svg(const NewtonPolygon& p, const Support& T);
/// exact vertex list "[[i,j],...]"
std::string polygon_json(const NewtonPolygon& p);

}  // namespace fol
