#include "xytr/tr/properties.hpp"

namespace xytr {

bool symmetric_in(const RF& f, const std::vector<std::string>& vars) {
  for (std::size_t i = 0; i + 1 < vars.size(); ++i)
    if (rename(f, {{vars[i], vars[i + 1]}, {vars[i + 1], vars[i]}}) != f) return false;
  return true;
}

bool involution_identities(const SpectralCurve& c, int order) {
  for (const auto& a : c.alpha().points) {
    NumericSeries d = involution_displacement(c, a, order);
    NumericSeries twice = compose(d, d);
    if (twice.trunc() < order) return false;
    for (int k = 1; k <= order; ++k)
      if (twice.coeff(k) != (k == 1 ? 1 : 0)) return false;
    NumericSeries xa = numeric_series_at(c.x(), SpectralCurve::kVar, a, order);
    NumericSeries delta = compose(xa, d) - xa;
    for (int k = 0; k <= std::min(order, delta.trunc()); ++k)
      if (delta.coeff(k) != 0) return false;
  }
  return true;
}

bool residue_of_derivative_vanishes(const RF& f, const std::string& var, const std::vector<BigRat>& points) {
  RF df = diff(f, var);
  for (const auto& a : points)
    if (!residue_at(df, var, a).is_zero()) return false;
  return true;
}

Report tr_suite(const SpectralCurve& c, const std::vector<std::pair<int, int>>& gn) {
  Report rep;
  rep.tool_version = tool_version();
  rep.fingerprint = c.fingerprint();
  TrEngine e(c), wide(c, 4);
  rep.add(expect("sigma(sigma(t)) = t and x(sigma(t)) = x(t) through t^9", "local involution", involution_identities(c, 9)));
  for (auto [g, n] : gn) {
    const std::string tag = "omega^(" + std::to_string(g) + ")_" + std::to_string(n);
    RF f = e.form_density(g, n);
    std::vector<std::string> zs = numbered("z", n);
    rep.add(expect(tag + " symmetric", "symmetry", symmetric_in(f, zs)));
    rep.add(expect(tag + " poles only at ramification points", "pole location", poles_only_at(f, zs, c.alpha().points)));
    rep.add(compare(tag + " unchanged with truncation order +4", "truncation stability", f, wide.form_density(g, n)));
    rep.add(expect(tag + " residue of d/dz1 vanishes at each ramification point", "residue of a total derivative",
                   residue_of_derivative_vanishes(f, "z1", c.alpha().points)));
  }
  return rep;
}

}  // namespace xytr
