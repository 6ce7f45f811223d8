#include "xytr/cas/local_series.hpp"

namespace xytr {

namespace {

// The other variables of f, for the coefficient ring.
VarsPtr without(const VarsPtr& vars, int idx) {
  std::vector<std::string> names;
  for (int v = 0; v < vars->size(); ++v)
    if (v != idx) names.push_back(vars->name(v));
  return VarList::make(std::move(names));
}

}  // namespace

LocalSeries series_at(const RF& f, const std::string& var, const BigRat& a, int order, const std::string& t) {
  int i = f.vars()->index(var);
  if (f.is_zero()) return LocalSeries::zero(t, a, order);
  if (i < 0 || !f.depends_on(var)) return LocalSeries::monomial(t, a, f, 0, order);
  auto [ns, nq] = taylor_shift(f.num(), i, a);
  auto [ds, dq] = taylor_shift(f.den(), i, a);
  auto nu = ns.to_univariate(i);
  auto du = ds.to_univariate(i);
  std::size_t u = 0, v = 0;
  while (nu[u].is_zero()) ++u;
  while (du[v].is_zero()) ++v;
  int min_order = static_cast<int>(u) - static_cast<int>(v);
  VarsPtr rest = without(f.vars(), i);
  BigRat scale = f.scale() * BigRat(dq) / BigRat(nq);
  scale.canonicalize();
  int count = order - min_order + 1;
  std::vector<RF> coeffs;
  if (count <= 0) return LocalSeries(t, a, min_order, {}, order);
  const Poly& d0 = du[v];
  std::vector<Poly> q;
  std::vector<Poly> d0pow{Poly::constant(d0.vars(), 1)};
  for (int k = 0; k < count; ++k) {
    d0pow.push_back(d0pow.back() * d0);
    Poly acc = u + k < nu.size() ? nu[u + k] * d0pow[k] : Poly(d0.vars());
    for (int j = 1; j <= k; ++j) {
      if (v + j >= du.size()) break;
      if (du[v + j].is_zero()) continue;
      acc -= du[v + j] * q[k - j] * d0pow[j - 1];
    }
    q.push_back(acc);
    coeffs.push_back(RF::fraction(scale, acc.remap(rest), d0pow[k + 1].remap(rest)));
  }
  return LocalSeries(t, a, min_order, std::move(coeffs), order);
}

NumericSeries numeric_series_at(const RF& f, const std::string& var, const BigRat& a, int order) {
  LocalSeries s = series_at(f, var, a, order);
  std::vector<BigRat> c;
  for (const auto& r : s.coeffs()) c.push_back(r.is_zero() ? BigRat(0) : r.constant_value());
  return NumericSeries(s.var(), a, s.min_order(), std::move(c), s.trunc());
}

RF residue_at(const RF& f, const std::string& var, const BigRat& a) {
  if (!f.depends_on(var)) return RF();
  int val = valuation_at(f, var, a);
  if (val >= 0) return RF();
  return series_at(f, var, a, -1).coeff(-1);
}

}  // namespace xytr
