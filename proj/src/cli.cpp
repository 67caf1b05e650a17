#include "fol/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include "fol/cuspidal.hpp"
#include "fol/formparse.hpp"
#include "fol/newton.hpp"
#include "fol/reduction.hpp"

namespace fol {

namespace {

using ordered_json = nlohmann::ordered_json;

struct CliFailure {
  int code;
  std::string type;
  std::string message;
  std::optional<long> position;
};

void emit_error(std::ostream& err, const CliFailure& f) {
  ordered_json j;
  j["schema"] = 1;
  j["error"]["type"] = f.type;
  j["error"]["message"] = f.message;
  if (f.position) j["error"]["position"] = *f.position;
  err << j.dump(2) << "\n";
}

ParseContext context_with(const std::vector<std::string>& algs) {
  ParseContext ctx;
  for (const std::string& decl : algs) ctx.declare(decl);
  return ctx;
}

ordered_json polygon_report(const NewtonPolygon& p) {
  ordered_json j;
  j["schema"] = 1;
  j["vertices"] = ordered_json::array();
  for (const Monomial2& v : p.vertices)
    j["vertices"].push_back({v.i, v.j});
  j["compact_sides"] = ordered_json::array();
  for (const NewtonPolygon::Side& s : p.compact_sides) {
    ordered_json side;
    side["from"] = {s.from.i, s.from.j};
    side["to"] = {s.to.i, s.to.j};
    side["inclination"] = s.inclination.get_str();
    j["compact_sides"].push_back(side);
  }
  return j;
}

int cmd_polygon(const std::string& form, const std::vector<std::string>& algs,
                const std::string& format, std::ostream& out) {
  OneForm w = parse_oneform(form, context_with(algs));
  Support T = support_form(w);
  NewtonPolygon p = newton_polygon(T);
  if (format == "ascii")
    out << polygon_ascii(p, T);
  else if (format == "svg")
    out << polygon_svg(p, T);
  else
    out << polygon_report(p).dump(2) << "\n";
  return 0;
}

int cmd_classify(const std::string& form, const std::string& separatrix,
                 const std::vector<std::string>& algs, int max_depth,
                 std::ostream& out, std::ostream& err) {
  ParseContext ctx = context_with(algs);
  OneForm w = parse_oneform(form, ctx);
  ReductionTree tree = reduce(w, max_depth);
  if (tree.dicritical) {
    emit_error(err, {2, "dicritical", Dicritical().what(), std::nullopt});
    return 2;
  }
  TreeVerdict tv = verdict(tree);

  std::optional<bool> newton_equal;
  if (!separatrix.empty())
    newton_equal = newton_second_type_test(w, parse_poly(separatrix, ctx));

  ordered_json j;
  j["schema"] = 1;
  j["second_type"] = tv.second_type;
  j["generalized_curve"] = tv.generalized_curve;
  if (newton_equal) j["newton_equal"] = *newton_equal;
  j["blowups"] = tree.blowup_count;
  out << j.dump(2) << "\n";

  if (newton_equal && *newton_equal != tv.second_type) {
    emit_error(err, {5, "oracle",
                     "Newton-polygon test disagrees with the reduction "
                     "verdict",
                     std::nullopt});
    return 5;
  }
  return 0;
}

int cmd_reduce(const std::string& form, const std::vector<std::string>& algs,
               int max_depth, const std::string& format, std::ostream& out,
               std::ostream& err) {
  OneForm w = parse_oneform(form, context_with(algs));
  ReductionTree tree = reduce(w, max_depth);
  out << (format == "dot" ? tree_dot(tree) : tree_json(tree));
  if (tree.dicritical) {
    emit_error(err, {2, "dicritical", Dicritical().what(), std::nullopt});
    return 2;
  }
  return 0;
}

int cmd_cuspidal(long p, long q, const std::string& delta,
                 const std::vector<std::string>& algs, bool oracle,
                 std::ostream& out) {
  ParseContext ctx = context_with(algs);
  CuspidalSpec spec(p, q, parse_poly(delta, ctx));
  CuspVerdict v = classify_cuspidal(spec, oracle);

  bool same;
  try {
    Poly2 sep = Poly2::monomial(spec.tower(), 0, p) -
                Poly2::monomial(spec.tower(), q, 0);
    same = same_reduction(build_cuspidal(spec), sep);
  } catch (const Dicritical&) {
    same = false;  // a truncated foliation tree never matches the curve's
  }

  ordered_json j;
  j["schema"] = 1;
  j["ph"] = v.ph;
  if (v.intersection)
    j["intersection"] = *v.intersection;
  else
    j["intersection"] = nullptr;
  j["second_type"] = v.second_type;
  if (v.generalized_curve)
    j["generalized_curve"] = *v.generalized_curve;
  else
    j["generalized_curve"] = nullptr;
  j["same_reduction"] = same;
  j["method"] = v.method;
  out << j.dump(2) << "\n";
  return 0;
}

int cmd_gsv(long p, long q, const std::string& delta,
            const std::vector<std::string>& algs, std::ostream& out) {
  ParseContext ctx = context_with(algs);
  CuspidalSpec spec(p, q, parse_poly(delta, ctx));
  OneForm w = build_cuspidal(spec);
  BranchSystem bs = branch_params(p, q, spec.tower());
  Poly2 f = Poly2::monomial(bs.tower, 0, p) - Poly2::monomial(bs.tower, q, 0);
  std::vector<std::pair<Poly2, Parameterization>> br;
  for (size_t i = 0; i < bs.branches.size(); ++i)
    br.emplace_back(bs.factors[i], bs.branches[i]);
  long total = gsv_total(w.to_tower(bs.tower), f, br);

  ordered_json j;
  j["schema"] = 1;
  j["gsv"] = total;
  j["branches"] = (long)bs.branches.size();
  out << j.dump(2) << "\n";
  return 0;
}

int cmd_pullback(const std::string& form, const std::string& gamma,
                 const std::vector<std::string>& algs, std::ostream& out) {
  ParseContext ctx = context_with(algs);
  OneForm w = parse_oneform(form, ctx);
  std::size_t comma = gamma.find(',');
  if (comma == std::string::npos)
    throw std::invalid_argument("--gamma expects \"x(t),y(t)\"");
  Parameterization g(parse_upoly_t(gamma.substr(0, comma), ctx),
                     parse_upoly_t(gamma.substr(comma + 1), ctx));
  auto order = pullback_order(g, w);

  ordered_json j;
  j["schema"] = 1;
  if (order)
    j["order"] = *order;
  else
    j["order"] = nullptr;
  out << j.dump(2) << "\n";
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Exact classification of plane polynomial 1-forms"};
  app.require_subcommand(1);

  std::string form, separatrix, gamma, delta;
  std::vector<std::string> algs;
  std::string format = "json";
  int max_depth = 30;
  long p = 0, q = 0;
  bool oracle = false;

  CLI::App* polygon = app.add_subcommand("polygon", "Newton polygon of a form");
  polygon->add_option("--form", form)->required();
  polygon->add_option("--alg", algs);
  polygon->add_option("--format", format)
      ->check(CLI::IsMember({"json", "ascii", "svg"}));

  CLI::App* classify =
      app.add_subcommand("classify", "Second-type / generalized-curve verdict");
  classify->add_option("--form", form)->required();
  classify->add_option("--separatrix", separatrix);
  classify->add_option("--alg", algs);
  classify->add_option("--max-depth", max_depth);

  CLI::App* reduce_cmd =
      app.add_subcommand("reduce", "Reduction of singularities tree");
  reduce_cmd->add_option("--form", form)->required();
  reduce_cmd->add_option("--alg", algs);
  reduce_cmd->add_option("--max-depth", max_depth);
  reduce_cmd->add_option("--format", format)
      ->check(CLI::IsMember({"json", "dot"}));

  CLI::App* cuspidal =
      app.add_subcommand("cuspidal", "Classify a member of the cuspidal family");
  cuspidal->add_option("--p", p)->required();
  cuspidal->add_option("--q", q)->required();
  cuspidal->add_option("--delta", delta)->required();
  cuspidal->add_option("--alg", algs);
  cuspidal->add_flag("--oracle", oracle);

  CLI::App* gsv = app.add_subcommand("gsv", "Total GSV index along the curve");
  gsv->add_option("--p", p)->required();
  gsv->add_option("--q", q)->required();
  gsv->add_option("--delta", delta)->required();
  gsv->add_option("--alg", algs);

  CLI::App* pullback =
      app.add_subcommand("pullback", "Order of the pullback along a curve");
  pullback->add_option("--form", form)->required();
  pullback->add_option("--gamma", gamma)->required();
  pullback->add_option("--alg", algs);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    emit_error(err, {4, "usage", e.what(), std::nullopt});
    return 4;
  }

  try {
    if (polygon->parsed()) return cmd_polygon(form, algs, format, out);
    if (classify->parsed())
      return cmd_classify(form, separatrix, algs, max_depth, out, err);
    if (reduce_cmd->parsed())
      return cmd_reduce(form, algs, max_depth, format, out, err);
    if (cuspidal->parsed()) return cmd_cuspidal(p, q, delta, algs, oracle, out);
    if (gsv->parsed()) return cmd_gsv(p, q, delta, algs, out);
    if (pullback->parsed()) return cmd_pullback(form, gamma, algs, out);
  } catch (const ParseError& e) {
    emit_error(err, {4, "parse", e.what(), (long)e.position});
    return 4;
  } catch (const DepthExceeded& e) {
    emit_error(err, {3, "depth", e.what(), std::nullopt});
    return 3;
  } catch (const Dicritical& e) {
    emit_error(err, {2, "dicritical", e.what(), std::nullopt});
    return 2;
  } catch (const OracleMismatch& e) {
    emit_error(err, {5, "oracle", e.what(), std::nullopt});
    return 5;
  } catch (const std::exception& e) {
    emit_error(err, {4, "input", e.what(), std::nullopt});
    return 4;
  }
  return 0;
}

}  // namespace fol
