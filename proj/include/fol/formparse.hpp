#pragma once

// Text input: polynomials, 1-forms, and declarations of algebraic
// constants ("name: minimal polynomial [~ decimal hint]").

#include <stdexcept>
#include <string>
#include <vector>

#include "fol/foliation.hpp"

namespace fol {

struct ParseError : std::runtime_error {
  ParseError(std::size_t pos, std::vector<std::string> exp, std::string found);
  std::size_t position;           // 0-based offset into the input
  std::vector<std::string> expected;
  std::string found;
};

struct UnknownSymbol : ParseError {
  UnknownSymbol(std::size_t pos, std::string sym);
  std::string symbol;
};

/// Name resolution and the working field tower. The variable names x, y, t
/// and the differentials dx, dy are reserved.
class ParseContext {
 public:
  ParseContext() : tower_(FieldTower::rationals()) {}
  explicit ParseContext(TowerPtr tower) : tower_(std::move(tower)) {}

  const TowerPtr& tower() const { return tower_; }

  /// Process "name: minpoly [~ hint]"; extends the tower by one generator.
  void declare(const std::string& text);

 private:
  TowerPtr tower_;
};

Poly2 parse_poly(const std::string& text, const ParseContext& ctx);
OneForm parse_oneform(const std::string& text, const ParseContext& ctx);
/// Univariate polynomial in the parameter t (for parameterizations).
UPoly parse_upoly_t(const std::string& text, const ParseContext& ctx);

/// Canonical printing of a 1-form; parse_oneform(oneform_to_string(w)) == w.
std::string oneform_to_string(const OneForm& w);

}  // namespace fol
