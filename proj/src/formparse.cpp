#include "fol/formparse.hpp"

#include <cctype>
#include <map>
#include <sstream>

namespace fol {

namespace {

std::string describe_expected(const std::vector<std::string>& exp) {
  std::string s;
  for (size_t i = 0; i < exp.size(); ++i) {
    if (i) s += exp.size() == 2 ? " or " : ", ";
    s += exp[i];
  }
  return s;
}

std::string parse_error_message(std::size_t pos,
                                const std::vector<std::string>& exp,
                                const std::string& found) {
  std::ostringstream os;
  os << "parse error at position " << pos << ": expected "
     << describe_expected(exp) << ", found " << found;
  return os.str();
}

}  // namespace

ParseError::ParseError(std::size_t pos, std::vector<std::string> exp,
                       std::string fnd)
    : std::runtime_error(parse_error_message(pos, exp, fnd)),
      position(pos),
      expected(std::move(exp)),
      found(std::move(fnd)) {}

UnknownSymbol::UnknownSymbol(std::size_t pos, std::string sym)
    : ParseError(pos, {"a declared name"}, "'" + sym + "'"),
      symbol(std::move(sym)) {}

namespace {

struct Token {
  enum Kind { Num, Name, Sym, End } kind;
  std::string text;
  std::size_t pos;
};

std::vector<Token> lex(const std::string& s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j])))
        ++j;
      out.push_back({Token::Num, s.substr(i, j - i), i});
      i = j;
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) ||
                              s[j] == '_'))
        ++j;
      out.push_back({Token::Name, s.substr(i, j - i), i});
      i = j;
      continue;
    }
    if (std::string("+-*^()/:~").find(c) != std::string::npos) {
      out.push_back({Token::Sym, std::string(1, c), i});
      ++i;
      continue;
    }
    throw ParseError(i, {"a token"}, "'" + std::string(1, c) + "'");
  }
  out.push_back({Token::End, "", s.size()});
  return out;
}

class Parser {
 public:
  Parser(std::vector<Token> tokens, TowerPtr tower,
         std::map<std::string, Poly2> vars)
      : ts_(std::move(tokens)), tower_(std::move(tower)),
        vars_(std::move(vars)) {}

  const Token& peek() const { return ts_[i_]; }
  Token next() { return ts_[i_++]; }
  bool at_sym(const std::string& s) const {
    return peek().kind == Token::Sym && peek().text == s;
  }
  void expect_end() {
    if (peek().kind != Token::End)
      throw ParseError(peek().pos, {"end of input", "an operator"},
                       "'" + peek().text + "'");
  }

  // expr := ['-'] term (('+'|'-') term)*
  Poly2 expr() {
    bool neg = false;
    if (at_sym("-")) {
      next();
      neg = true;
    }
    Poly2 p = term();
    if (neg) p = -p;
    while (at_sym("+") || at_sym("-")) {
      bool minus = next().text == "-";
      Poly2 q = term();
      p = minus ? p - q : p + q;
    }
    return p;
  }

  // term := factor ('*' factor)*
  Poly2 term() {
    Poly2 p = factor();
    while (at_sym("*")) {
      next();
      p = p * factor();
    }
    return p;
  }

  // factor := base ('^' natural)?
  Poly2 factor() {
    Poly2 p = base();
    if (at_sym("^")) {
      next();
      if (peek().kind != Token::Num)
        throw ParseError(peek().pos, {"an exponent"}, "'" + peek().text + "'");
      p = p.pow(std::stol(next().text));
    }
    return p;
  }

  // base := rational | name | '(' expr ')'
  Poly2 base() {
    const Token t = peek();
    if (t.kind == Token::Num) {
      next();
      Rat r(Int(t.text));
      if (at_sym("/") && ts_[i_ + 1].kind == Token::Num) {
        next();
        Int den(next().text);
        if (den == 0) throw ParseError(t.pos, {"a nonzero denominator"}, "0");
        r /= Rat(den);
      }
      return Poly2::constant(tower_, r);
    }
    if (t.kind == Token::Name) {
      next();
      auto it = vars_.find(t.text);
      if (it != vars_.end()) return it->second;
      if (tower_->has_generator(t.text)) {
        return Poly2(tower_) +
               Poly2::monomial(tower_, 0, 0,
                               tower_generator(tower_, tower_->generator_level(
                                                           t.text)));
      }
      throw UnknownSymbol(t.pos, t.text);
    }
    if (at_sym("(")) {
      next();
      Poly2 p = expr();
      if (!at_sym(")"))
        throw ParseError(peek().pos, {"')'"}, "'" + peek().text + "'");
      next();
      return p;
    }
    throw ParseError(t.pos, {"a number", "a name", "'('"},
                     t.kind == Token::End ? "end of input"
                                          : "'" + t.text + "'");
  }

 private:
  std::vector<Token> ts_;
  std::size_t i_ = 0;
  TowerPtr tower_;
  std::map<std::string, Poly2> vars_;
};

std::map<std::string, Poly2> xy_vars(const TowerPtr& t) {
  return {{"x", Poly2::monomial(t, 1, 0)}, {"y", Poly2::monomial(t, 0, 1)}};
}

bool reserved_name(const std::string& n) {
  return n == "x" || n == "y" || n == "t" || n == "dx" || n == "dy";
}

}  // namespace

Poly2 parse_poly(const std::string& text, const ParseContext& ctx) {
  Parser p(lex(text), ctx.tower(), xy_vars(ctx.tower()));
  Poly2 r = p.expr();
  p.expect_end();
  return r;
}

UPoly parse_upoly_t(const std::string& text, const ParseContext& ctx) {
  Parser p(lex(text), ctx.tower(),
           {{"t", Poly2::monomial(ctx.tower(), 1, 0)}});
  Poly2 r = p.expr();
  p.expect_end();
  return r.eval_y0();
}

OneForm parse_oneform(const std::string& text, const ParseContext& ctx) {
  const TowerPtr& t = ctx.tower();
  Parser p(lex(text), t, xy_vars(t));
  Poly2 A(t), B(t);
  bool first = true;
  for (;;) {
    Rat sign(1);
    if (first) {
      if (p.at_sym("-")) {
        p.next();
        sign = -1;
      }
    } else {
      if (p.peek().kind == Token::End) break;
      if (p.at_sym("+")) {
        p.next();
      } else if (p.at_sym("-")) {
        p.next();
        sign = -1;
      } else {
        throw ParseError(p.peek().pos, {"'+'", "'-'", "end of input"},
                         "'" + p.peek().text + "'");
      }
    }
    first = false;
    Poly2 coeff(t);
    bool bare = p.peek().kind == Token::Name &&
                (p.peek().text == "dx" || p.peek().text == "dy");
    if (bare)
      coeff = Poly2::constant(t, Rat(1));
    else
      coeff = p.expr();
    if (p.peek().kind != Token::Name ||
        (p.peek().text != "dx" && p.peek().text != "dy"))
      throw ParseError(p.peek().pos, {"'dx'", "'dy'"},
                       p.peek().kind == Token::End ? "end of input"
                                                   : "'" + p.peek().text + "'");
    bool is_dx = p.next().text == "dx";
    Poly2 signed_coeff = coeff.scaled(AlgebraicElement(t, sign));
    if (is_dx)
      A = A + signed_coeff;
    else
      B = B + signed_coeff;
  }
  if (first)
    throw ParseError(0, {"a 1-form"}, "end of input");
  return {A, B};
}

void ParseContext::declare(const std::string& text) {
  std::string head = text, hint;
  if (auto tilde = text.find('~'); tilde != std::string::npos) {
    head = text.substr(0, tilde);
    hint = text.substr(tilde + 1);
    while (!hint.empty() && std::isspace(static_cast<unsigned char>(hint.front())))
      hint.erase(hint.begin());
    while (!hint.empty() && std::isspace(static_cast<unsigned char>(hint.back())))
      hint.pop_back();
  }
  auto tokens = lex(head);
  if (tokens.size() < 3 || tokens[0].kind != Token::Name)
    throw ParseError(0, {"a generator name"},
                     tokens.empty() ? "end of input" : "'" + tokens[0].text + "'");
  std::string name = tokens[0].text;
  if (reserved_name(name)) throw NameClash(name);
  if (!(tokens[1].kind == Token::Sym && tokens[1].text == ":"))
    throw ParseError(tokens[1].pos, {"':'"}, "'" + tokens[1].text + "'");
  std::vector<Token> rest(tokens.begin() + 2, tokens.end());
  Parser p(std::move(rest), tower_,
           {{name, Poly2::monomial(tower_, 1, 0)}});
  Poly2 mp = p.expr();
  p.expect_end();
  tower_ = tower_extend(tower_, mp.eval_y0(), name, hint);
}

std::string oneform_to_string(const OneForm& w) {
  auto piece = [](const Poly2& c, const std::string& d) -> std::string {
    std::string s = c.to_string();
    if (s == "1") return d;
    return "(" + s + ") " + d;
  };
  std::string out;
  if (!w.A.is_zero()) out = piece(w.A, "dx");
  if (!w.B.is_zero()) {
    if (!out.empty()) out += " + ";
    out += piece(w.B, "dy");
  }
  if (out.empty()) out = "(0) dx";
  return out;
}

}  // namespace fol
