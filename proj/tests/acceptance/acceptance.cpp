#include <chrono>
#include <cstdlib>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "xytr/cli/cli.hpp"
#include "xytr/free/free_probability.hpp"
#include "xytr/genus1/genus_one.hpp"
#include "xytr/io/parser.hpp"
#include "xytr/stirling/stirling.hpp"
#include "xytr/tr/properties.hpp"
#include "xytr/trees/trees.hpp"
#include "xytr/xy/xy_transform.hpp"

using namespace xytr;

namespace {

const std::set<std::string> kVars{"z", "z1", "z2", "z3", "z4", "u", "w", "w1", "w2"};

RF P(const std::string& s) { return parse_expr(s, kVars); }

SpectralCurve curve(const char* x, const char* y) { return SpectralCurve::validate(P(x), P(y)); }

struct Log {
  std::vector<std::string> failures;
  bool check(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
    return ok;
  }
  void report(const Report& r, const std::string& prefix) {
    for (const auto& c : r.checks) check(c.pass, prefix + ": " + c.identity);
  }
};

struct Criterion {
  int id;
  std::string title;
  double limit;
  std::function<void(Log&)> run;
};

std::string data(const std::string& name) { return std::string(XYTR_TEST_DATA) + "/" + name; }

std::string cli(const std::vector<std::string>& args, int& code) {
  std::ostringstream out, err;
  code = run_cli(args, out, err);
  return out.str();
}

void criterion1(Log& log) {
  SpectralCurve airy = curve("z^2", "z");
  TrEngine e(airy);
  log.check(e.form_density(0, 3) == P("-1/(2*z1^2*z2^2*z3^2)"), "omega^(0)_3 on Airy");
  log.check(e.form_density(0, 4) == P("3/4*(1/z1^2+1/z2^2+1/z3^2+1/z4^2)/(z1^2*z2^2*z3^2*z4^2)"), "omega^(0)_4 on Airy");
  log.check(tr_correlator(airy, 0, 3).value == P("-1/(16*z1^3*z2^3*z3^3)"), "W^(0)_{3,0} = omega / prod dx");
}

void criterion2(Log& log) {
  SpectralCurve airy = curve("z^2", "z");
  TrEngine e(airy);
  log.check(enumerate_trees(0, 3).size() == 4, "|G_{0,3}| = 4");
  log.check(enumerate_trees(0, 4).size() == 29, "|G_{0,4}| = 29");
  log.check(xy_w0m(e, 3).value.is_zero(), "Airy W_{0,3} tree sum vanishes");
  log.check(xy_w0m(e, 4).value.is_zero(), "Airy W_{0,4} tree sum vanishes");
}

void criterion3(Log& log) {
  for (auto [n, m, k] : {std::tuple{2, 1, 2}, std::tuple{1, 2, 3}, std::tuple{3, 1, 5}, std::tuple{0, 3, 4}, std::tuple{0, 4, 29}})
    log.check(enumerate_trees(n, m).size() == static_cast<std::size_t>(k),
              "|G_{" + std::to_string(n) + "," + std::to_string(m) + "}| = " + std::to_string(k));
  std::vector<long> row{1}, bell{1};
  for (int n = 1; n <= 6; ++n) {
    std::vector<long> next{row.back()};
    for (long v : row) next.push_back(next.back() + v);
    row = next;
    bell.push_back(row.front());
  }
  for (int n = 1; n <= 6; ++n) {
    long partitions = 0;
    for_each_set_partition(n, [&](const std::vector<int>&, int) { ++partitions; });
    log.check(partitions == bell[n], "set partition enumerator gives Bell(" + std::to_string(n) + ")");
    log.check(static_cast<long>(enumerate_trees(n, 1).size()) == bell[n], "|G_{" + std::to_string(n) + ",1}| = Bell");
  }
  auto nonempty = [](int a, int b) { return a + b >= 1 && !(b == 0 && a < 2) && !(a == 0 && b == 1); };
  for (int total = 1; total <= 6; ++total)
    for (int n = 0; n <= total; ++n) {
      const int m = total - n;
      if (!nonempty(n, m)) continue;
      TreeSet here = enumerate_trees(n, m);
      const std::string tag = "G_{" + std::to_string(n) + "," + std::to_string(m) + "}";
      if (n >= 1 && nonempty(n - 1, m)) log.check(grow_box(enumerate_trees(n - 1, m), n - 1, m) == here, "box generator for " + tag);
      if (m >= 1 && nonempty(n, m - 1))
        log.check(grow_circle(enumerate_trees(n, m - 1), n, m - 1) == here, "circle generator for " + tag);
    }
}

void criterion4(Log& log) {
  SpectralCurve c = curve("z^2", "z^2+z");
  TrEngine e(c);
  for (int m : {3, 4}) {
    std::map<std::string, std::string> names;
    for (int i = 1; i <= m; ++i) names["z" + std::to_string(i)] = "w" + std::to_string(i);
    RF oracle = rename(tr_correlator(c.swap(), 0, m).value, names);
    log.check(!oracle.is_zero(), "swapped-curve W_{0," + std::to_string(m) + "} is nonzero");
    log.check(xy_w0m(e, m).value == oracle, "W_{0," + std::to_string(m) + "} = TR on swapped curve");
  }
}

void criterion5(Log& log) {
  for (auto [x, y] : {std::pair{"z^2", "z^2+z"}, std::pair{"z^2", "z^3-3*z"}}) {
    const std::string tag = std::string(" on x = ") + x + ", y = " + y;
    SpectralCurve c = curve(x, y);
    TrEngine e(c);
    log.check(xy_wnm(e, 1, 1).value == w11_closed_form(c, "z1", "w1"), "W_{1,1} closed form" + tag);
    log.check(xy_wnm(e, 2, 1).value == w21_closed_form(e, 1), "W_{2,1} closed form" + tag);
    for (int n = 1; n <= 4; ++n)
      log.check(xy_wnm(e, n, 1).value == wn1_partition(e, n).value, "W_{" + std::to_string(n) + ",1} partition form" + tag);
  }
}

void criterion6(Log& log) {
  TrEngine e(curve("z^2", "z^2+z"));
  RF diff = wn1_partition(e, 3).value - wn1_partition(e, 3, 2).value;
  log.check(!diff.is_zero(), "k <= 2 truncation of the W_{3,1} partition sum differs from the full sum");
}

void criterion7(Log& log) {
  for (int r = 0; r <= 8; ++r) log.check(operator_identity_check(r), "Stirling operator identity r = " + std::to_string(r));
  for (auto [x, y] : {std::pair{"z^2", "z^2+z"}, std::pair{"z^2+z^3", "z"}}) {
    SpectralCurve c = curve(x, y);
    std::vector<RF> fs = standard_test_functions(c, "w", "a");
    log.check(fs.size() == 4, "four test functions");
    log.report(stirling_suite(c, fs, "w", 8, 5, 6), std::string("stirling on x = ") + x + ", y = " + y);
  }
}

void criterion8(Log& log) {
  for (auto [x, y] : {std::pair{"z+1/z", "z"}, std::pair{"z+1/z", "z+z^2"}}) {
    SpectralCurve c = curve(x, y);
    Report r = free_suite(c, BigRat(0), 6);
    log.check(r.checks.size() >= 5, "free suite has all checks");
    log.report(r, std::string("free on x = ") + x + ", y = " + y);
  }
}

void criterion9(Log& log) {
  SpectralCurve c = curve("z^2", "z^2+z");
  Report r = genus_one_suite(c);
  log.report(r, "genus one on x = z^2, y = z^2+z");
  TrEngine e(c), s(c.swap());
  log.check(omega1_sum_check(e, s), "one-point relation");
  log.check(w1_01(e).value == w1_01_oracle(s), "W^(1)_{0,1}");
  RF oracle = w1_02_oracle(s);
  log.check(w1_02(e).value == oracle, "W^(1)_{0,2}");
  log.check(w1_02(e, false).value != oracle, "negative control: W^(1)_{0,2} without the final two lines");
  log.check(diagonal_w2(curve("z^2", "z"), "z").value == P("1/(16*z^4)"), "Airy regularized diagonal");
}

void criterion10(Log& log) {
  for (auto [x, y] : {std::pair{"z^2", "z"}, std::pair{"z^2", "z^2+z"}, std::pair{"z^2", "z^3-3*z"}}) {
    SpectralCurve c = curve(x, y);
    const std::string tag = std::string(" on x = ") + x + ", y = " + y;
    log.report(tr_suite(c), "tr properties" + tag);
    TrEngine e(c), s(c.swap());
    for (int m : {2, 3, 4}) log.report(verify_xy(e, s, 0, m), "xy" + tag);
    for (auto [n, m] : {std::pair{1, 1}, std::pair{2, 1}, std::pair{1, 2}}) log.report(verify_xy(e, s, n, m), "mixed" + tag);
  }
  for (const std::vector<std::string>& args :
       {std::vector<std::string>{"verify", "--curve", data("q.curve"), "--suite", "all", "--format", "json"},
        std::vector<std::string>{"verify", "--curve", data("free.curve"), "--suite", "free", "--format", "json"},
        std::vector<std::string>{"tr", "--curve", data("q.curve"), "--g", "1", "--n", "2", "--format", "latex"},
        std::vector<std::string>{"xy", "--curve", data("q.curve"), "--n", "1", "--m", "2"}}) {
    std::vector<std::string> outs;
    for (const char* threads : {"1", "2", "1"}) {
      setenv("XYTR_THREADS", threads, 1);
      int code = 0;
      outs.push_back(cli(args, code));
      log.check(code == kExitOk, "cli exit status for " + args[0] + " " + args.back());
    }
    log.check(outs[0] == outs[1] && outs[1] == outs[2], "byte-identical reruns of " + args[0] + " " + args[3] + " " + args.back());
  }
  unsetenv("XYTR_THREADS");
}

}  // namespace

int main(int argc, char** argv) {
  std::set<int> only;
  for (int i = 1; i < argc; ++i) only.insert(std::atoi(argv[i]));
  const std::vector<Criterion> criteria{
      {1, "Airy TR values", 5, criterion1},
      {2, "Airy tree sums vanish for m = 3, 4", 30, criterion2},
      {3, "tree counts, Bell numbers and generators", 0, criterion3},
      {4, "tree sums equal TR on the swapped curve, m = 3, 4", 300, criterion4},
      {5, "mixed correlators: closed forms and partition form, two curves", 0, criterion5},
      {6, "negative control: valence-two truncation", 0, criterion6},
      {7, "Stirling operator identities", 0, criterion7},
      {8, "free probability relations through order 6", 0, criterion8},
      {9, "genus-one relations", 600, criterion9},
      {10, "property suites and byte-identical reruns", 0, criterion10},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    if (!only.empty() && !only.count(c.id)) continue;
    Log log;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      c.run(log);
    } catch (const std::exception& e) {
      log.failures.push_back(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (c.limit > 0 && secs >= c.limit) log.failures.push_back("runtime limit exceeded");
    const bool ok = log.failures.empty();
    failed += !ok;
    std::cout << "criterion " << std::setw(2) << c.id << ": " << (ok ? "PASS" : "FAIL") << "  " << c.title << "  (" << std::fixed
              << std::setprecision(2) << secs << " s";
    if (c.limit > 0) std::cout << ", limit " << std::setprecision(0) << c.limit << " s";
    std::cout << ")\n";
    for (const auto& f : log.failures) std::cout << "    failed: " << f << "\n";
    std::cout.flush();
  }
  return failed ? 1 : 0;
}
