#include "xytr/stirling/stirling.hpp"

#include "xytr/tr/engine.hpp"
#include "xytr/xy/xy_transform.hpp"

namespace xytr {

namespace {

const std::string kZ = SpectralCurve::kVar;

RF on(const RF& f, const std::string& w) { return rename(f, {{kZ, w}}); }

RF y_power(const RF& f, int times, const SpectralCurve& c, const std::string& w) {
  RF g = f;
  for (int i = 0; i < times; ++i) g = y_derivative(g, w, c);
  return g;
}

}  // namespace

std::vector<std::vector<BigRat>> stirling_table(int rmax) {
  std::vector<std::vector<BigRat>> s(rmax + 1, std::vector<BigRat>(rmax + 1, BigRat(0)));
  s[0][0] = 1;
  for (int r = 0; r < rmax; ++r)
    for (int k = 0; k <= r + 1; ++k) {
      BigRat prev = k >= 1 ? s[r][k - 1] : BigRat(0);
      BigRat same = k <= r ? s[r][k] : BigRat(0);
      s[r + 1][k] = prev - BigRat(r) * same;
    }
  return s;
}

BigRat stirling(int r, int k) {
  if (r < 0 || k < 0) throw std::invalid_argument("Stirling indices must be nonnegative");
  if (k > r) return BigRat(0);
  return stirling_table(r)[r][k];
}

RF stirling_operator_power(int r) {
  RF p = RF::variable("p"), v = RF::variable("v");
  RF f(1);
  for (int i = 0; i < r; ++i) f = diff(f, "p") + v / p * f;
  return f;
}

bool operator_identity_check(int r) {
  auto s = stirling_table(r);
  RF p = RF::variable("p"), v = RF::variable("v");
  RF sum;
  for (int k = 0; k <= r; ++k) sum += RF(s[r][k]) * v.pow(k);
  return stirling_operator_power(r) == sum / p.pow(r);
}

RF log_y_form(int r, const SpectralCurve& c, const RF& f, const std::string& w) {
  RF x = on(c.x(), w), y = on(c.y(), w);
  if (x.is_zero() || y.is_zero()) throw std::invalid_argument("log_y_form needs x and y not identically zero");
  auto s = stirling_table(r - 1);
  RF p = x * y;
  RF total;
  for (int k = 0; k <= r - 1; ++k) {
    if (sgn(s[r - 1][k]) == 0) continue;
    RF coeff = RF(s[r - 1][k]) / p.pow(r - 1);
    RF g = y / x * coeff * x.pow(r) * f;
    for (int i = 0; i < k; ++i) g = -y * y_derivative(g, w, c);
    total += g;
  }
  return total / y;
}

RF simplified_form(int r, const SpectralCurve& c, const RF& f, const std::string& w) {
  RF g = y_power(f, r - 1, c, w);
  return (r - 1) % 2 ? -g : g;
}

bool leibniz_check(int r, const SpectralCurve& c, const RF& f, const std::string& w) {
  if (r < 2) throw std::invalid_argument("Leibniz identity needs r >= 2");
  RF y = on(c.y(), w);
  RF q = f / y;
  RF lhs = y * y_power(q, r - 1, c, w) + RF(r - 1) * y_power(q, r - 2, c, w);
  return lhs == y_power(f, r - 1, c, w);
}

std::vector<RF> standard_test_functions(const SpectralCurve& c, const std::string& w, const std::string& a) {
  RF wv = RF::variable(w);
  RF w2 = bergman_density(a, w) / (on(c.dx(), a) * on(c.dx(), w));
  return {RF(1), wv, on(c.dx(), w), w2};
}

Report stirling_suite(const SpectralCurve& c, const std::vector<RF>& functions, const std::string& w, int rmax_operator,
                      int rmax_forms, int rmax_leibniz) {
  Report rep;
  rep.tool_version = tool_version();
  rep.fingerprint = c.fingerprint();
  for (int r = 0; r <= rmax_operator; ++r)
    rep.add(expect("operator power r=" + std::to_string(r) + " = Stirling sum", "Stirling operator identity", operator_identity_check(r)));
  for (std::size_t i = 0; i < functions.size(); ++i) {
    const std::string fi = "f" + std::to_string(i + 1);
    for (int r = 1; r <= rmax_forms; ++r)
      rep.add(compare("ln-y form = d/dy form, r=" + std::to_string(r) + ", " + fi, "operator simplification",
                      log_y_form(r, c, functions[i], w), simplified_form(r, c, functions[i], w)));
    for (int r = 2; r <= rmax_leibniz; ++r)
      rep.add(expect("Leibniz identity r=" + std::to_string(r) + ", " + fi, "Leibniz rule", leibniz_check(r, c, functions[i], w)));
  }
  return rep;
}

}  // namespace xytr
