#include "xytr/genus1/genus_one.hpp"

#include "xytr/xy/xy_transform.hpp"

namespace xytr {

namespace {

const std::string kZ = SpectralCurve::kVar;

RF on(const RF& f, const std::string& w) { return rename(f, {{kZ, w}}); }

RF dy(const RF& f, const std::string& w, const SpectralCurve& c, int times = 1) {
  RF g = f;
  for (int i = 0; i < times; ++i) g = y_derivative(g, w, c);
  return g;
}

Correlator make(int n, std::vector<std::string> vars, RF value, const std::string& provenance) {
  Correlator r;
  r.g = 1;
  r.n = 0;
  r.m = n;
  r.vars = std::move(vars);
  r.value = std::move(value);
  r.provenance = provenance;
  return r;
}

// W^{(1)}_{k,0} at x(args), from the engine.
RF w1_at(TrEngine& e, const std::vector<std::string>& args) {
  RF f = e.density(1, static_cast<int>(args.size()));
  std::map<std::string, std::string> names;
  for (std::size_t i = 0; i < args.size(); ++i) names["z" + std::to_string(i + 1)] = args[i];
  return rename(f, names);
}

// W^{(0)}_{3,0}(x(a), x(a), x(b)) as a limit of distinct arguments.
RF w3_doubled(TrEngine& e, const std::string& a, const std::string& b) {
  RF f = w0_at(e, {a, "s", b});
  return limit_at(f, "s", RF::variable(a));
}

}  // namespace

RegularizedDiagonal diagonal_w2(const SpectralCurve& c, const std::string& u) {
  const std::string v = u == "v" ? "v_" : "v";
  RF xu = on(c.x(), u), xv = on(c.x(), v);
  RF w2 = bergman_density(u, v) / (on(c.dx(), u) * on(c.dx(), v));
  RF f = w2 - (xu - xv).pow(2).inverse();
  return RegularizedDiagonal{u, limit_at(f, v, RF::variable(u))};
}

RF omega1_bracket_density(const SpectralCurve& c) {
  RF x1 = c.dx(), y1 = c.dy();
  RF x2 = diff(x1, kZ), y2 = diff(y1, kZ);
  RF x3 = diff(x2, kZ), y3 = diff(y2, kZ);
  RF inner = x2 * y2 / (x1 * y1) + x2.pow(2) / x1.pow(2) - x3 / x1 + y2.pow(2) / y1.pow(2) - y3 / y1;
  return diff(inner / (x1 * y1), kZ) * BigRat(1, 24);
}

bool omega1_sum_check(TrEngine& e, TrEngine& swapped) {
  RF lhs = e.form_density(1, 1) + swapped.form_density(1, 1);
  return lhs == rename(omega1_bracket_density(e.curve()), {{kZ, "z1"}});
}

bool omega1_sum_check(const SpectralCurve& c) {
  TrEngine e(c), s(c.swap());
  return omega1_sum_check(e, s);
}

Correlator w1_01(TrEngine& e) {
  const SpectralCurve& c = e.curve();
  const std::string w = "w";
  RF X = dx_dy(c, w);
  RF first = -X * w1_at(e, {w});
  RF second = dy(X * diagonal_w2(c, w).value, w, c) * BigRat(1, 2);
  RF third = dy(X.inverse(), w, c, 3) * BigRat(-1, 24);
  return make(1, {w}, first + second + third, "genus-one relation");
}

Correlator w1_01(const SpectralCurve& c) {
  TrEngine e(c);
  return w1_01(e);
}

Correlator w1_02(TrEngine& e, bool with_new_structure) {
  const SpectralCurve& c = e.curve();
  const std::string a = "w1", b = "w2";
  RF Xa = dx_dy(c, a), Xb = dx_dy(c, b);
  RF pre = Xa * Xb;
  RF w2 = w0_at(e, {a, b});
  const BigRat half(1, 2);
  RF sum = pre * w1_at(e, {a, b});
  sum -= dy(pre * w1_at(e, {a}) * w2, a, c);
  sum -= dy(pre * w1_at(e, {b}) * w2, b, c);
  sum -= dy(pre * w3_doubled(e, a, b), a, c) * half;
  sum -= dy(pre * w3_doubled(e, b, a), b, c) * half;
  sum += dy(pre * diagonal_w2(c, a).value * w2, a, c, 2) * half;
  sum += dy(pre * diagonal_w2(c, b).value * w2, b, c, 2) * half;
  sum += dy(dy(pre * w2 * w2, a, c), b, c) * half;
  if (with_new_structure) {
    RF inner = pre * w2;
    sum += dy(Xa.pow(-2) * dy(inner, a, c), a, c, 3) * BigRat(1, 24);
    sum += dy(Xb.pow(-2) * dy(inner, b, c), b, c, 3) * BigRat(1, 24);
  }
  return make(2, {a, b}, sum, with_new_structure ? "genus-one relation" : "genus-one relation without the d^3/dy^3 lines");
}

Correlator w1_02(const SpectralCurve& c, bool with_new_structure) {
  TrEngine e(c);
  return w1_02(e, with_new_structure);
}

RF w1_01_oracle(TrEngine& swapped) { return rename(swapped.density(1, 1), {{"z1", "w"}}); }

RF w1_02_oracle(TrEngine& swapped) { return rename(swapped.density(1, 2), {{"z1", "w1"}, {"z2", "w2"}}); }

Report genus_one_suite(const SpectralCurve& c) {
  Report rep;
  rep.tool_version = tool_version();
  rep.fingerprint = c.fingerprint();
  TrEngine e(c), s(c.swap());
  rep.add(expect("omega^(1)_{1,0} + omega^(1)_{0,1} = (1/24) d[bracket]", "genus-one one-point relation", omega1_sum_check(e, s)));
  RegularizedDiagonal diag = diagonal_w2(c, "u");
  rep.add(expect("regularized diagonal of W^(0)_{2,0} is finite", "regularized diagonal", true,
                 "value " + diag.value.to_string() + "; denominator " + diag.value.den().to_string()));
  rep.add(compare("W^(1)_{0,1} from x-side data = TR on swapped curve", "genus-one y-plane relation", w1_01(e).value, w1_01_oracle(s)));
  RF oracle = w1_02_oracle(s);
  Correlator full = w1_02(e);
  rep.add(compare("W^(1)_{0,2} from x-side data = TR on swapped curve", "genus-one two-point relation", full.value, oracle));
  rep.add(expect("W^(1)_{0,2} relation symmetric in w1, w2", "symmetry",
                 rename(full.value, {{"w1", "w2"}, {"w2", "w1"}}) == full.value));
  rep.add(compare_differs("W^(1)_{0,2} without the d^3/dy^3 lines differs from TR", "negative control", w1_02(e, false).value,
                          oracle));
  return rep;
}

}  // namespace xytr
