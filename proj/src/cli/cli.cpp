#include "xytr/cli/cli.hpp"

#include <atomic>
#include <cstdlib>
#include <functional>
#include <optional>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"
#include "xytr/free/free_probability.hpp"
#include "xytr/genus1/genus_one.hpp"
#include "xytr/io/latex.hpp"
#include "xytr/io/parser.hpp"
#include "xytr/stirling/stirling.hpp"
#include "xytr/tr/properties.hpp"
#include "xytr/xy/xy_transform.hpp"

namespace xytr {

namespace {

using Json = nlohmann::ordered_json;

struct NamedValue {
  std::string name;
  std::string latex;
  RF value;
};

struct NamedSeries {
  std::string name;
  std::vector<std::string> vars;
  TruncatedSeries series;
};

struct Document {
  std::string command;
  std::optional<SpectralCurve> curve;
  std::vector<NamedValue> values;
  std::vector<NamedSeries> series;
  std::vector<std::pair<std::string, Json>> facts;
  std::vector<std::string> trees;
  std::optional<long> count;
  std::optional<Report> report;
};

std::string latex_escape(const std::string& s) {
  std::string r;
  for (char ch : s) {
    switch (ch) {
      case '_': r += "\\_"; break;
      case '^': r += "\\^{}"; break;
      case '{': r += "\\{"; break;
      case '}': r += "\\}"; break;
      case '&': r += "\\&"; break;
      case '%': r += "\\%"; break;
      case '#': r += "\\#"; break;
      case '$': r += "\\$"; break;
      case '~': r += "\\~{}"; break;
      case '\\': r += "\\textbackslash{}"; break;
      default: r += ch;
    }
  }
  return r;
}

Json poly_json(const Poly& p, const VarsPtr& vars, const BigRat& scale) {
  Json terms = Json::array();
  Poly q = p.remap(vars);
  for (const auto& t : q.terms()) {
    Json exps = Json::array();
    for (int v = 0; v < vars->size(); ++v) exps.push_back(static_cast<int>(Poly::exp(t.mono, v)));
    BigRat c = scale * BigRat(t.coef);
    terms.push_back(Json{{"coeff", c.get_str()}, {"exps", exps}});
  }
  return terms;
}

Json rf_json(const RF& f) {
  VarsPtr vars = merge_vars(f.num().vars(), f.den().vars());
  Json names = Json::array();
  for (const auto& n : vars->names()) names.push_back(n);
  return Json{{"vars", names},
              {"num", poly_json(f.num(), vars, f.is_zero() ? BigRat(0) : f.scale())},
              {"den", poly_json(f.den(), vars, BigRat(1))},
              {"text", f.to_string()}};
}

Json series_json(const NamedSeries& s) {
  Json terms = Json::array();
  for (const auto& [e, c] : s.series.sorted_terms()) terms.push_back(Json{{"coeff", c.get_str()}, {"exps", e}});
  return Json{{"name", s.name}, {"vars", s.vars}, {"order", s.series.order()}, {"terms", terms}};
}

Json report_json(const Report& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks)
    checks.push_back(Json{{"identity", c.identity},
                          {"anchor", c.anchor},
                          {"status", c.pass ? "pass" : "fail"},
                          {"lhs_minus_rhs", c.lhs_minus_rhs},
                          {"details", c.details}});
  return Json{{"tool_version", r.tool_version},
              {"fingerprint", r.fingerprint},
              {"status", r.ok() ? "pass" : "fail"},
              {"checks", checks},
              {"assumptions", r.assumptions}};
}

std::string series_latex(const NamedSeries& s) {
  std::string out;
  bool first = true;
  for (const auto& [e, c] : s.series.sorted_terms()) {
    BigRat a = abs(c);
    out += sgn(c) < 0 ? (first ? "-" : " - ") : (first ? "" : " + ");
    first = false;
    std::string mono;
    for (std::size_t k = 0; k < e.size(); ++k) {
      if (!e[k]) continue;
      if (!mono.empty()) mono += " ";
      mono += latex_name(s.vars[k]);
      if (e[k] > 1) mono += "^{" + std::to_string(e[k]) + "}";
    }
    std::string coeff = a.get_den() == 1 ? a.get_num().get_str()
                                         : "\\frac{" + a.get_num().get_str() + "}{" + a.get_den().get_str() + "}";
    out += mono.empty() ? coeff : (a == 1 ? mono : coeff + " " + mono);
  }
  if (first) out = "0";
  return out + " + O(" + std::to_string(s.series.order() + 1) + ")";
}

void render_text(const Document& d, std::ostream& out) {
  if (d.count && d.trees.empty()) {
    out << *d.count << "\n";
    return;
  }
  for (const auto& v : d.values) out << v.name << " = " << v.value.to_string() << "\n";
  for (const auto& s : d.series) out << s.name << " = " << s.series.to_string(s.vars) << "\n";
  for (const auto& [k, v] : d.facts) out << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
  for (const auto& t : d.trees) out << t << "\n";
  if (d.count) out << "count: " << *d.count << "\n";
  if (d.report) {
    int passed = 0;
    for (const auto& c : d.report->checks) {
      passed += c.pass;
      out << (c.pass ? "PASS  " : "FAIL  ") << c.identity << "  [" << c.anchor << "]";
      if (!c.pass && !c.lhs_minus_rhs.empty()) out << "  lhs-rhs = " << c.lhs_minus_rhs;
      out << "\n";
    }
    for (const auto& a : d.report->assumptions) out << "assumption: " << a << "\n";
    out << "result: " << passed << "/" << d.report->checks.size() << " checks passed\n";
  }
}

void render_json(const Document& d, std::ostream& out) {
  Json j;
  j["tool_version"] = tool_version();
  j["command"] = d.command;
  if (d.curve)
    j["curve"] = Json{{"x", d.curve->x().to_string()}, {"y", d.curve->y().to_string()}, {"fingerprint", d.curve->fingerprint()}};
  if (!d.values.empty()) {
    Json vs = Json::array();
    for (const auto& v : d.values) {
      Json e = rf_json(v.value);
      vs.push_back(Json{{"name", v.name}, {"value", e}});
    }
    j["values"] = vs;
  }
  if (!d.series.empty()) {
    Json ss = Json::array();
    for (const auto& s : d.series) ss.push_back(series_json(s));
    j["series"] = ss;
  }
  if (!d.facts.empty()) {
    Json fs = Json::object();
    for (const auto& [k, v] : d.facts) fs[k] = v;
    j["facts"] = fs;
  }
  if (!d.trees.empty()) j["trees"] = d.trees;
  if (d.count) j["count"] = *d.count;
  if (d.report) j["report"] = report_json(*d.report);
  out << j.dump(2) << "\n";
}

void render_latex(const Document& d, std::ostream& out) {
  if (d.count && d.trees.empty()) {
    out << "$" << *d.count << "$\n";
    return;
  }
  if (!d.values.empty() || !d.series.empty()) {
    out << "\\begin{align*}\n";
    std::vector<std::string> lines;
    for (const auto& v : d.values) lines.push_back(v.latex + " &= " + to_latex(v.value));
    for (const auto& s : d.series) lines.push_back(s.name + " &= " + series_latex(s));
    for (std::size_t i = 0; i < lines.size(); ++i) out << lines[i] << (i + 1 < lines.size() ? " \\\\\n" : "\n");
    out << "\\end{align*}\n";
  }
  for (const auto& [k, v] : d.facts)
    out << "\\noindent " << latex_escape(k) << ": " << latex_escape(v.is_string() ? v.get<std::string>() : v.dump()) << "\n\n";
  if (!d.trees.empty()) {
    out << "\\begin{itemize}\n";
    for (const auto& t : d.trees) out << "\\item $" << latex_escape(t) << "$\n";
    out << "\\end{itemize}\n";
  }
  if (d.count) out << "count: $" << *d.count << "$\n";
  if (d.report) {
    out << "\\begin{itemize}\n";
    for (const auto& c : d.report->checks)
      out << "\\item[" << (c.pass ? "pass" : "FAIL") << "] " << latex_escape(c.identity) << " (" << latex_escape(c.anchor) << ")\n";
    out << "\\end{itemize}\n";
  }
}

void render(const Document& d, const std::string& format, std::ostream& out) {
  if (format == "json")
    render_json(d, out);
  else if (format == "latex")
    render_latex(d, out);
  else
    render_text(d, out);
}

struct CurveOptions {
  std::string file;
  std::string x;
  std::string y;
};

struct LoadedCurve {
  SpectralCurve curve;
  std::map<std::string, std::string> options;
};

LoadedCurve load_curve(const CurveOptions& o) {
  CurveSpec spec;
  if (!o.file.empty()) {
    spec = read_curve_file(o.file);
  } else {
    spec.x_expr = o.x;
    spec.y_expr = o.y;
    spec.x_line = spec.y_line = 1;
  }
  if (!o.x.empty()) spec.x_expr = o.x;
  if (!o.y.empty()) spec.y_expr = o.y;
  if (spec.x_expr.empty() || spec.y_expr.empty()) throw std::invalid_argument("a curve is required: --curve FILE or --x EXPR --y EXPR");
  if (!o.x.empty()) spec.x_line = spec.x_col = 1;
  if (!o.y.empty()) spec.y_line = spec.y_col = 1;
  RF x = parse_expr(spec.x_expr, {"z"}, spec.x_line ? spec.x_line : 1, spec.x_col);
  RF y = parse_expr(spec.y_expr, {"z"}, spec.y_line ? spec.y_line : 1, spec.y_col);
  return LoadedCurve{SpectralCurve::validate(x, y), spec.options};
}

BigRat parse_constant(const std::string& s) {
  RF v = parse_expr(s, {});
  return v.constant_value();
}

std::vector<Report> run_parallel(const std::vector<std::function<Report()>>& tasks, int threads) {
  std::vector<Report> out(tasks.size());
  std::vector<std::exception_ptr> errors(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      try {
        out[i] = tasks[i]();
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const int n = std::max(1, std::min<int>(threads, static_cast<int>(tasks.size())));
  std::vector<std::thread> pool;
  for (int i = 1; i < n; ++i) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

Report xy_g0_suite(const SpectralCurve& c, int max_m) {
  TrEngine e(c), s(c.swap());
  Report rep;
  rep.tool_version = tool_version();
  rep.fingerprint = c.fingerprint();
  for (int m = 2; m <= max_m; ++m) rep.merge(verify_xy(e, s, 0, m));
  for (auto [n, m] : {std::pair{1, 1}, std::pair{2, 1}, std::pair{3, 1}, std::pair{1, 2}}) rep.merge(verify_xy(e, s, n, m));
  return rep;
}

std::function<Report()> suite_task(const std::string& name, const LoadedCurve& lc, int max_m, const BigRat& z0, int order) {
  const SpectralCurve c = lc.curve;
  if (name == "tr") return [c] { return tr_suite(c); };
  if (name == "xy-g0") return [c, max_m] { return xy_g0_suite(c, max_m); };
  if (name == "stirling") return [c] { return stirling_suite(c, standard_test_functions(c, "w", "a"), "w"); };
  if (name == "free") return [c, z0, order] { return free_suite(c, z0, order); };
  if (name == "genus1") return [c] { return genus_one_suite(c); };
  throw std::invalid_argument("unknown suite " + name);
}

Report finish(std::vector<Report> parts, const SpectralCurve& c) {
  Report rep;
  rep.tool_version = tool_version();
  rep.fingerprint = c.fingerprint();
  for (const auto& p : parts) rep.merge(p);
  return rep;
}

}  // namespace

int thread_count_from_env() {
  const char* v = std::getenv("XYTR_THREADS");
  if (!v || !*v) return std::max(1u, std::thread::hardware_concurrency());
  std::string s(v);
  std::size_t pos = 0;
  int n = 0;
  try {
    n = std::stoi(s, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos != s.size() || n < 1) throw std::invalid_argument("XYTR_THREADS must be a positive integer, got '" + s + "'");
  return n;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact topological recursion and x-y swap verification"};
  app.name("xytr");
  app.require_subcommand(1);
  app.set_version_flag("--version", tool_version());

  std::string format;
  CurveOptions co;
  auto add_common = [&](CLI::App* sub, bool curve) {
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json", "latex"}));
    if (curve) {
      sub->add_option("--curve", co.file, "Curve file");
      sub->add_option("--x", co.x, "x(z) expression");
      sub->add_option("--y", co.y, "y(z) expression");
    }
  };

  int g = 0, n = 3, m = 3, order = -1, rmax = 8, max_m = 4;
  bool count = false;
  std::string suite = "xy-g0", expansion;

  auto* tr = app.add_subcommand("tr", "Topological recursion correlator W^(g)_{n,0}");
  add_common(tr, true);
  tr->add_option("--g", g, "Genus")->check(CLI::NonNegativeNumber);
  tr->add_option("--n", n, "Number of points")->check(CLI::NonNegativeNumber);

  int xy_n = 0;
  auto* xy = app.add_subcommand("xy", "Tree formula W_{n,m} from x-side data");
  add_common(xy, true);
  xy->add_option("--n", xy_n, "x-type points")->check(CLI::NonNegativeNumber);
  xy->add_option("--m", m, "y-type points")->check(CLI::NonNegativeNumber);

  int tn = 0, tm = 3;
  auto* trees = app.add_subcommand("trees", "Trees of G_{n,m}");
  add_common(trees, false);
  trees->add_option("--n", tn, "Boxes")->check(CLI::Range(0, 16));
  trees->add_option("--m", tm, "Circles")->check(CLI::Range(0, 16));
  trees->add_flag("--count", count, "Print only the number of trees");

  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  add_common(verify, true);
  verify->add_option("--suite", suite, "Suite; all runs free only when an expansion point is given")->check(CLI::IsMember({"tr", "xy-g0", "stirling", "free", "genus1", "all"}));
  verify->add_option("--max-m", max_m, "Largest m for W_{0,m} in xy-g0")->check(CLI::Range(2, 6));
  verify->add_option("--order", order, "Series order for the free suite")->check(CLI::Range(1, 12));
  verify->add_option("--expansion", expansion, "Expansion point for the free suite");

  auto* stir = app.add_subcommand("stirling", "Stirling numbers and the operator identities");
  add_common(stir, true);
  stir->add_option("--rmax", rmax, "Largest r")->check(CLI::Range(0, 20));

  auto* fr = app.add_subcommand("free", "Moment and cumulant series and their relations");
  add_common(fr, true);
  fr->add_option("--order", order, "Total order")->check(CLI::Range(1, 12));
  fr->add_option("--expansion", expansion, "Expansion point z0 (x has a simple pole, y a simple zero)");

  auto* g1 = app.add_subcommand("genus1", "Genus-one relations");
  add_common(g1, true);

  std::vector<const char*> argv{"xytr"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    const int threads = thread_count_from_env();
    Document d;
    std::optional<LoadedCurve> lc;
    auto need_curve = [&]() -> LoadedCurve& {
      if (!lc) lc = load_curve(co);
      d.curve = lc->curve;
      return *lc;
    };
    auto option_or = [&](const std::string& key, const std::string& dflt) {
      if (lc) {
        auto it = lc->options.find(key);
        if (it != lc->options.end()) return it->second;
      }
      return dflt;
    };
    int status = kExitOk;

    if (*tr) {
      d.command = "tr";
      SpectralCurve c = need_curve().curve;
      Correlator w = tr_correlator(c, g, n);
      TrEngine e(c);
      const std::string tag = "(" + std::to_string(g) + ")";
      std::string dz;
      for (const auto& v : w.vars) dz += (dz.empty() ? "" : " ") + ("d" + v);
      std::string dzl;
      for (const auto& v : w.vars) dzl += "\\,d" + latex_name(v);
      d.values.push_back({"omega^" + tag + "_" + std::to_string(n) + " / (" + dz + ")",
                          "\\omega^{" + tag + "}_{" + std::to_string(n) + ",0} / (" + dzl.substr(2) + ")", e.form_density(g, n)});
      d.values.push_back({"W^" + tag + "_{" + std::to_string(n) + ",0}", "W^{" + tag + "}_{" + std::to_string(n) + ",0}", w.value});
    } else if (*xy) {
      d.command = "xy";
      SpectralCurve c = need_curve().curve;
      if (xy_n + m < 1) throw std::invalid_argument("need n + m >= 1");
      Correlator w = xy_wnm(c, xy_n, m);
      const std::string idx = std::to_string(xy_n) + "," + std::to_string(m);
      d.values.push_back({"W^(0)_{" + idx + "}", "W^{(0)}_{" + idx + "}", w.value});
    } else if (*trees) {
      d.command = "trees";
      TreeSet ts = enumerate_trees(tn, tm);
      d.count = static_cast<long>(ts.size());
      if (!count)
        for (const auto& t : ts) d.trees.push_back(to_string(t) + (aut(t) == 1 ? "" : "  aut " + std::to_string(aut(t))));
    } else if (*verify) {
      d.command = "verify";
      LoadedCurve& l = need_curve();
      const BigRat z0 = parse_constant(expansion.empty() ? option_or("expansion", "0") : expansion);
      const int ord = order > 0 ? order : std::stoi(option_or("order", "6"));
      std::vector<std::string> names{suite};
      if (suite == "all") {
        names = {"tr", "xy-g0", "stirling", "genus1"};
        if (!expansion.empty() || l.options.count("expansion")) names.push_back("free");
      }
      std::vector<std::function<Report()>> tasks;
      for (const auto& s : names) tasks.push_back(suite_task(s, l, max_m, z0, ord));
      d.facts.push_back({"suite", suite});
      d.report = finish(run_parallel(tasks, threads), l.curve);
      if (!d.report->ok()) status = kExitVerificationFailed;
    } else if (*stir) {
      d.command = "stirling";
      auto table = stirling_table(rmax);
      Json rows = Json::array();
      for (int r = 0; r <= rmax; ++r) {
        Json row = Json::array();
        for (int k = 0; k <= r; ++k) row.push_back(table[r][k].get_str());
        rows.push_back(row);
      }
      d.facts.push_back({"stirling s(r,k), rows r = 0.." + std::to_string(rmax), rows});
      if (!co.file.empty() || !co.x.empty()) {
        SpectralCurve c = need_curve().curve;
        d.report = stirling_suite(c, standard_test_functions(c, "w", "a"), "w", std::min(rmax, 8), std::min(rmax, 5),
                                  std::min(rmax, 6));
      } else {
        Report rep;
        rep.tool_version = tool_version();
        for (int r = 0; r <= rmax; ++r)
          rep.add(expect("operator power r=" + std::to_string(r) + " = Stirling sum", "Stirling operator identity", operator_identity_check(r)));
        d.report = rep;
      }
      if (!d.report->ok()) status = kExitVerificationFailed;
    } else if (*fr) {
      d.command = "free";
      LoadedCurve& l = need_curve();
      const BigRat z0 = parse_constant(expansion.empty() ? option_or("expansion", "0") : expansion);
      const int ord = order > 0 ? order : std::stoi(option_or("order", "6"));
      FreeSeriesData data(l.curve, z0, ord);
      d.facts.push_back({"expansion point", z0.get_str()});
      d.series.push_back({"M_1", {"X"}, data.moments(1)});
      d.series.push_back({"C_1", {"Y"}, data.cumulants(1)});
      d.series.push_back({"M_2", {"X1", "X2"}, data.moments(2)});
      d.series.push_back({"C_2", {"Y1", "Y2"}, data.cumulants(2)});
      d.series.push_back({"M_3", {"X1", "X2", "X3"}, data.moments(3)});
      d.series.push_back({"C_3", {"Y1", "Y2", "Y3"}, data.cumulants(3)});
      d.report = free_suite(l.curve, z0, ord);
      if (!d.report->ok()) status = kExitVerificationFailed;
    } else if (*g1) {
      d.command = "genus1";
      SpectralCurve c = need_curve().curve;
      d.values.push_back({"What^(0)_{2,0}(x(u),x(u))", "\\hat W^{(0)}_{2,0}(x(u),x(u))", diagonal_w2(c, "u").value});
      d.values.push_back({"W^(1)_{0,1}(y(w))", "W^{(1)}_{0,1}(y(w))", w1_01(c).value});
      d.report = genus_one_suite(c);
      if (!d.report->ok()) status = kExitVerificationFailed;
    }
    const std::string fmt = !format.empty() ? format : option_or("format", "text");
    if (fmt != "text" && fmt != "json" && fmt != "latex") throw std::invalid_argument("unknown format " + fmt);
    render(d, fmt, out);
    return status;
  } catch (const CurveRejected& e) {
    err << "curve rejected: " << e.what() << "\n";
    return kExitCurveRejected;
  } catch (const NonInvertibleY& e) {
    err << "curve rejected: " << e.what() << "\n";
    return kExitCurveRejected;
  } catch (const SyntaxError& e) {
    err << "syntax error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace xytr
