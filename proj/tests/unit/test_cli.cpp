#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "xytr/cli/cli.hpp"
#include "xytr/errors.hpp"
#include "xytr/io/parser.hpp"
#include "test_util.hpp"

using namespace xytr;
using xytr::test::P;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(XYTR_TEST_DATA) + "/" + name; }

}  // namespace

TEST_CASE("cli tree counts") {
  CHECK(run({"trees", "--n", "0", "--m", "4", "--count"}).out == "29\n");
  CHECK(run({"trees", "--n", "0", "--m", "3", "--count"}).out == "4\n");
  CHECK(run({"trees", "--n", "0", "--m", "1", "--count"}).code == kExitUsage);
  Run r = run({"trees", "--n", "2", "--m", "1", "--format", "json"});
  CHECK(r.code == kExitOk);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["count"] == 2);
  CHECK(j["trees"].size() == 2);
}

TEST_CASE("cli verification suites") {
  Run r = run({"verify", "--curve", data("q.curve"), "--suite", "xy-g0", "--max-m", "3"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("FAIL") == std::string::npos);
  Run g = run({"verify", "--curve", data("q.curve"), "--suite", "genus1", "--format", "json"});
  CHECK(g.code == kExitOk);
  auto j = nlohmann::json::parse(g.out);
  CHECK(j["report"]["status"] == "pass");
  CHECK(j["curve"]["fingerprint"].get<std::string>().size() == 16);
  Run f = run({"free", "--curve", data("free.curve"), "--order", "4"});
  CHECK(f.code == kExitOk);
  CHECK(f.out.find("M_1 = ") != std::string::npos);
}

TEST_CASE("cli correlator output") {
  Run r = run({"tr", "--x", "z^2", "--y", "z", "--g", "0", "--n", "3", "--format", "json"});
  REQUIRE(r.code == kExitOk);
  auto j = nlohmann::json::parse(r.out);
  const auto& w = j["values"][1]["value"];
  CHECK(parse_expr(w["text"].get<std::string>(), {"z1", "z2", "z3"}) == P("-1/(16*z1^3*z2^3*z3^3)"));
  CHECK(w["vars"] == nlohmann::json::array({"z1", "z2", "z3"}));
  CHECK(w["num"][0]["coeff"] == "-1/16");
  CHECK(w["den"][0]["exps"] == nlohmann::json::array({3, 3, 3}));
  Run l = run({"xy", "--curve", data("airy.curve"), "--m", "2", "--format", "latex"});
  CHECK(l.code == kExitOk);
  CHECK(l.out.rfind("\\begin{align*}", 0) == 0);
}

TEST_CASE("cli output is deterministic") {
  std::vector<std::string> args{"verify", "--curve", data("q.curve"), "--suite", "stirling", "--format", "json"};
  CHECK(run(args).out == run(args).out);
}

TEST_CASE("curve file round trip") {
  CurveSpec s = parse_curve_text("# c\nx = z^2\n  y = z^2 + z   # trailing\noption expansion = 1/2\n");
  CHECK(P(s.x_expr.c_str()) == P("z^2"));
  CHECK(P(s.y_expr.c_str()) == P("z+z^2"));
  CHECK(s.options.at("expansion") == "1/2");
  CHECK(s.y_line == 3);
  CHECK(s.y_col == 7);
  CurveSpec t = parse_curve_text("x = " + P("z^2+1/z").to_string() + "\ny = " + P("z").to_string() + "\n");
  CHECK(P(t.x_expr.c_str()) == P("z^2+1/z"));
  try {
    parse_curve_text("x = z^2\ny = z^(-1)\n");
    FAIL("expected a syntax error");
  } catch (const SyntaxError& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() == 7);
  }
}

TEST_CASE("cli exit codes") {
  CHECK(run({"tr", "--curve", data("bad_syntax.curve")}).code == kExitUsage);
  CHECK(run({"tr", "--curve", data("rejected.curve")}).code == kExitCurveRejected);
  CHECK(run({"tr", "--x", "z^2", "--y", "z", "--n", "1"}).code == kExitUsage);
  CHECK(run({"tr", "--x", "z^2", "--y", "1/(z-z)"}).code == kExitUsage);
  CHECK(run({"nonsense"}).code == kExitUsage);
  CHECK(run({"trees", "--n", "x"}).code == kExitUsage);
  CHECK(run({"tr", "--x", "z^2"}).code == kExitUsage);
  Run r = run({"free", "--x", "z+1/z", "--y", "1+z"});
  CHECK(r.code == kExitCurveRejected);
  CHECK(!r.err.empty());
  CHECK(run({"--version"}).code == kExitOk);
}
