#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>
#include <sstream>

#include "fol/cli.hpp"

using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = fol::run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("classify with a separatrix") {
  Run r = run({"classify", "--form", "(x*y+y^2) dx - x^2 dy", "--separatrix",
               "x*y"});
  CHECK(r.code == 0);
  json j = json::parse(r.out);
  CHECK(j["schema"] == 1);
  CHECK(j["second_type"] == false);
  CHECK(j["generalized_curve"] == false);
  CHECK(j["newton_equal"] == false);
  CHECK(j["blowups"] == 1);
}

TEST_CASE("classify with an algebraic declaration") {
  std::vector<std::string> args = {
      "classify", "--form", "((b-1)*x*y - y^3) dx + (x*y - b*x^2 + x*y^2) dy",
      "--alg",    "b: b^2 - 2 ~ 1.4142"};
  Run r = run(args);
  CHECK(r.code == 0);
  json j = json::parse(r.out);
  CHECK(j["second_type"] == true);
  CHECK(j["generalized_curve"] == false);
  CHECK(j["blowups"] == 1);

  args.push_back("--separatrix");
  args.push_back("x*y*(x-y)");
  Run s = run(args);
  CHECK(s.code == 0);
  CHECK(json::parse(s.out)["newton_equal"] == true);
}

TEST_CASE("cuspidal verdict") {
  Run r = run({"cuspidal", "--p", "6", "--q", "3", "--delta", "x*y"});
  CHECK(r.code == 0);
  json j = json::parse(r.out);
  CHECK(j["ph"] == 10);
  CHECK(j["intersection"] == 9);
  CHECK(j["second_type"] == true);
  CHECK(j["same_reduction"] == true);
  CHECK(j["generalized_curve"].is_null());

  Run o = run({"cuspidal", "--p", "6", "--q", "3", "--delta", "x*y",
               "--oracle"});
  CHECK(o.code == 0);
  json k = json::parse(o.out);
  CHECK(k["method"] == "reduction-oracle");
  CHECK(k["generalized_curve"].is_boolean());
}

TEST_CASE("reduce: dicritical forms exit 2") {
  Run r = run({"reduce", "--form", "x dy - y dx"});
  CHECK(r.code == 2);
  json e = json::parse(r.err);
  CHECK(e["error"]["type"] == "dicritical");
  // the truncated tree is still printed
  CHECK(json::parse(r.out)["dicritical"] == true);
}

TEST_CASE("reduce: formats and depth limit") {
  Run dot = run({"reduce", "--form", "-3*x^2 dx + 2*y dy", "--format", "dot"});
  CHECK(dot.code == 0);
  CHECK(dot.out.find("digraph") != std::string::npos);

  Run deep = run({"reduce", "--form", "-3*x^2 dx + 2*y dy", "--max-depth",
                  "1"});
  CHECK(deep.code == 3);
  CHECK(json::parse(deep.err)["error"]["type"] == "depth");
}

TEST_CASE("polygon outputs") {
  Run r = run({"polygon", "--form", "(x*y+y^2) dx - x^2 dy"});
  CHECK(r.code == 0);
  json j = json::parse(r.out);
  CHECK(j["vertices"] == json::parse("[[1,2],[2,1]]"));
  CHECK(j["compact_sides"][0]["inclination"] == "1");

  Run ascii = run({"polygon", "--form", "(x*y+y^2) dx - x^2 dy", "--format",
                   "ascii"});
  CHECK(ascii.code == 0);
  CHECK(!ascii.out.empty());

  Run svg = run({"polygon", "--form", "(x*y+y^2) dx - x^2 dy", "--format",
                 "svg"});
  CHECK(svg.code == 0);
  CHECK(svg.out.find("<svg") != std::string::npos);
}

TEST_CASE("pullback orders") {
  Run r = run({"pullback", "--form", "-3*x^2 dx + 2*y dy", "--gamma",
               "t^2,t^3"});
  CHECK(r.code == 0);
  CHECK(json::parse(r.out)["order"].is_null());

  Run s = run({"pullback", "--form",
               "((b-1)*x*y - y^3) dx + (x*y - b*x^2 + x*y^2) dy", "--alg",
               "b: b^2 - 2 ~ 1.4142", "--gamma", "t,2*t"});
  CHECK(s.code == 0);
  CHECK(json::parse(s.out)["order"] == 2);
}

TEST_CASE("gsv totals") {
  Run r = run({"gsv", "--p", "2", "--q", "3", "--delta", "1"});
  CHECK(r.code == 0);
  json j = json::parse(r.out);
  CHECK(j["gsv"] == -1);
  CHECK(j["branches"] == 1);

  Run s = run({"gsv", "--p", "6", "--q", "3", "--delta", "x^2*y"});
  CHECK(s.code == 0);
  json k = json::parse(s.out);
  CHECK(k["gsv"] == 0);
  CHECK(k["branches"] == 3);
}

TEST_CASE("errors are structured and coded") {
  Run parse = run({"classify", "--form", "dx + dz"});
  CHECK(parse.code == 4);
  json e = json::parse(parse.err);
  CHECK(e["error"]["type"] == "parse");
  CHECK(e["error"].contains("position"));

  Run usage = run({"spin", "--form", "x dx"});
  CHECK(usage.code == 4);
  CHECK(json::parse(usage.err)["error"]["type"] == "usage");

  Run help = run({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("polygon") != std::string::npos);
}

TEST_CASE("outputs are byte-identical across runs") {
  std::vector<std::vector<std::string>> cases = {
      {"classify", "--form", "(x*y+y^2) dx - x^2 dy", "--separatrix", "x*y"},
      {"cuspidal", "--p", "6", "--q", "3", "--delta", "x*y"},
      {"reduce", "--form", "-3*x^2 dx + 2*y dy"},
      {"polygon", "--form", "(x*y+y^2) dx - x^2 dy", "--format", "svg"}};
  for (const auto& c : cases) {
    Run a = run(c), b = run(c);
    CHECK(a.code == b.code);
    CHECK(a.out == b.out);
  }
}
