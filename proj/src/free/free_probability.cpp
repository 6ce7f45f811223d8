#include "xytr/free/free_probability.hpp"

#include <algorithm>

#include "xytr/trees/trees.hpp"

namespace xytr {

namespace {

const std::string kZ = SpectralCurve::kVar;

using Exps = TruncatedSeries::Exps;

Exps ones(int n) { return Exps(n, 1); }

TruncatedSeries require_order(const TruncatedSeries& s, int order) {
  if (s.order() < order)
    throw InsufficientOrder("series known through " + std::to_string(s.order()) + ", need " + std::to_string(order));
  return s.truncated(order);
}

// X1 X2 [D'(X1) D'(X2) / (D(X1) - D(X2))^2 - 1/(X1 - X2)^2] for a local coordinate D(X).
TruncatedSeries two_point(const TruncatedSeries& d) {
  TruncatedSeries dp = d.derivative(0);
  TruncatedSeries q = divided_difference(d, 2, 0, 1);
  TruncatedSeries q2 = q * q;
  TruncatedSeries num = dp.embed(2, {0}) * dp.embed(2, {1}) - q2;
  TruncatedSeries f = (num * q2.inverse()).divide_difference(0, 1).divide_difference(0, 1);
  return f.times_monomial({1, 1});
}

// p / prod (X_i - X_j)^e_ij over i < j.
struct Singular {
  TruncatedSeries p;
  std::map<std::pair<int, int>, int> e;
};

Singular multiply(const Singular& a, const Singular& b) {
  Singular r{a.p * b.p, a.e};
  for (const auto& [k, v] : b.e) r.e[k] += v;
  return r;
}

Singular raise(const Singular& a, const std::map<std::pair<int, int>, int>& target) {
  Singular r{a.p, target};
  for (const auto& [k, v] : target) {
    auto it = a.e.find(k);
    int have = it == a.e.end() ? 0 : it->second;
    for (int i = have; i < v; ++i) r.p = r.p.times_difference(k.first, k.second);
  }
  return r;
}

Singular add(const Singular& a, const Singular& b) {
  std::map<std::pair<int, int>, int> target = a.e;
  for (const auto& [k, v] : b.e) target[k] = std::max(target[k], v);
  Singular ra = raise(a, target), rb = raise(b, target);
  return Singular{ra.p + rb.p, target};
}

// X_i^2 d/dX_i
Singular euler(const Singular& a, int i) {
  const int n = a.p.nvars();
  std::vector<std::pair<std::pair<int, int>, int>> touching;
  for (const auto& [k, v] : a.e)
    if (v > 0 && (k.first == i || k.second == i)) touching.push_back({k, v});
  auto times_others = [&](TruncatedSeries s, std::size_t skip) {
    for (std::size_t t = 0; t < touching.size(); ++t)
      if (t != skip) s = s.times_difference(touching[t].first.first, touching[t].first.second);
    return s;
  };
  TruncatedSeries p = times_others(a.p.derivative(i), touching.size());
  for (std::size_t t = 0; t < touching.size(); ++t) {
    const auto& [k, v] = touching[t];
    const int sign = k.first == i ? 1 : -1;
    p = p - times_others(a.p, t) * BigRat(v * sign);
  }
  Singular r{p, a.e};
  for (const auto& [k, v] : touching) r.e[k] = v + 1;
  Exps sq(n, 0);
  sq[i] = 2;
  r.p = r.p.times_monomial(sq);
  return r;
}

TruncatedSeries regular_part(const Singular& a) {
  TruncatedSeries p = a.p;
  for (const auto& [k, v] : a.e)
    for (int i = 0; i < v; ++i) p = p.divide_difference(k.first, k.second);
  return p;
}

std::vector<int> members(LabelMask mask, int n) {
  std::vector<int> out;
  for (int j = 0; j < n; ++j)
    if (mask & (1u << j)) out.push_back(j);
  return out;
}

}  // namespace

FreeSeriesData::FreeSeriesData(const SpectralCurve& c, const BigRat& z0, int order)
    : curve_(c), z0_(z0), order_(order), work_(order + 12) {
  if (valuation_at(c.x(), kZ, z0) != -1) throw std::invalid_argument("x must have a simple pole at the expansion point");
  if (valuation_at(c.y(), kZ, z0) != 1) throw NonInvertibleY("y must have a simple zero at the expansion point");
  engine_ = std::make_unique<TrEngine>(c);
  swapped_ = std::make_unique<TrEngine>(c.swap());
  x_of_z_ = TruncatedSeries::from_local(numeric_series_at(c.x().inverse(), kZ, z0, work_), 1, 0);
  y_of_z_ = TruncatedSeries::from_local(numeric_series_at(c.y(), kZ, z0, work_), 1, 0);
  z_of_x_ = reversion(x_of_z_);
  z_of_y_ = reversion(y_of_z_);
  y_of_x_ = compose(y_of_z_, {z_of_x_});
}

TruncatedSeries FreeSeriesData::moments(int n) {
  if (n < 1) throw std::invalid_argument("moment series need n >= 1");
  auto it = moments_.find(n);
  if (it != moments_.end()) return it->second;
  TruncatedSeries r;
  if (n == 1) {
    r = y_of_x_.divide_monomial({1});
  } else if (n == 2) {
    r = two_point(z_of_x_);
  } else {
    std::vector<TruncatedSeries> subs;
    TruncatedSeries pre = TruncatedSeries::constant(n, BigRat(1));
    const TruncatedSeries dz = z_of_x_.derivative(0).times_monomial({2}) * BigRat(-1);
    for (int i = 0; i < n; ++i) {
      subs.push_back(TruncatedSeries::constant(n, z0_) + z_of_x_.embed(n, {i}));
      pre = pre * dz.embed(n, {i});
    }
    r = (series_of(engine_->form_density(0, n), numbered("z", n), subs) * pre).divide_monomial(ones(n));
  }
  r = require_order(r, order_);
  moments_[n] = r;
  return r;
}

TruncatedSeries FreeSeriesData::cumulants(int m) {
  if (m < 1) throw std::invalid_argument("cumulant series need m >= 1");
  auto it = cumulants_.find(m);
  if (it != cumulants_.end()) return it->second;
  TruncatedSeries r;
  if (m == 1) {
    r = compose(x_of_z_, {z_of_y_}).divide_monomial({1}).inverse();
  } else if (m == 2) {
    r = two_point(z_of_y_);
  } else {
    std::vector<TruncatedSeries> subs;
    TruncatedSeries pre = TruncatedSeries::constant(m, BigRat(1));
    const TruncatedSeries dz = z_of_y_.derivative(0).times_monomial({1});
    for (int i = 0; i < m; ++i) {
      subs.push_back(TruncatedSeries::constant(m, z0_) + z_of_y_.embed(m, {i}));
      pre = pre * dz.embed(m, {i});
    }
    r = series_of(swapped_->form_density(0, m), numbered("z", m), subs) * pre;
  }
  r = require_order(r, order_);
  cumulants_[m] = r;
  return r;
}

bool first_order_check(const TruncatedSeries& m1, const TruncatedSeries& c1, int order) {
  TruncatedSeries y = m1.times_monomial({1});
  return compose(c1, {y}).equal_through(m1, order);
}

TruncatedSeries solve_first_order(const TruncatedSeries& m1, int order) {
  TruncatedSeries y = m1.times_monomial({1}).truncated(order + 1);
  if (y.valuation() != 1) throw NonInvertibleY("X M_1(X) has no linear term");
  return compose(m1, {reversion(y)}).truncated(order);
}

bool second_order_check(const TruncatedSeries& m2, const TruncatedSeries& c2, const TruncatedSeries& y_of_x, int order) {
  if (y_of_x.valuation() != 1) throw NonInvertibleY("Y(X) has no linear term");
  const int top = order + 2;
  TruncatedSeries y = y_of_x.truncated(top + 2);
  TruncatedSeries x1x2 = TruncatedSeries::monomial(2, {1, 1}, BigRat(1));
  TruncatedSeries lhs = m2.times_difference(0, 1).times_difference(0, 1) + x1x2;
  TruncatedSeries dlog = y.derivative(0) * y.divide_monomial({1}).inverse();
  TruncatedSeries y1 = y.embed(2, {0}), y2 = y.embed(2, {1});
  TruncatedSeries q = divided_difference(y, 2, 0, 1);
  TruncatedSeries bracket = compose(c2, {y1, y2}).times_difference(0, 1).times_difference(0, 1) + y1 * y2 * (q * q).inverse();
  TruncatedSeries rhs = dlog.embed(2, {0}) * dlog.embed(2, {1}) * bracket;
  return lhs.equal_through(rhs, top);
}

TruncatedSeries moments_from_cumulants(const std::map<int, TruncatedSeries>& cumulants, const TruncatedSeries& y_of_x, int n,
                                    int order) {
  if (n < 3) throw std::invalid_argument("the tree sum needs n >= 3");
  if (y_of_x.valuation() != 1) throw NonInvertibleY("Y(X) has no linear term");
  const TruncatedSeries y = y_of_x.truncated(order + 2 * n);
  std::vector<TruncatedSeries> ys;
  TruncatedSeries pre = TruncatedSeries::constant(n, BigRat(1));
  const TruncatedSeries dy = y.derivative(0).times_monomial({2});
  for (int i = 0; i < n; ++i) {
    ys.push_back(y.embed(n, {i}));
    pre = pre * dy.embed(n, {i});
  }
  std::map<LabelMask, Singular> factors;
  auto factor = [&](LabelMask mask) -> const Singular& {
    auto it = factors.find(mask);
    if (it != factors.end()) return it->second;
    std::vector<int> js = members(mask, n);
    const int k = static_cast<int>(js.size());
    auto ct = cumulants.find(k);
    if (ct == cumulants.end()) throw std::invalid_argument("missing cumulant series C_" + std::to_string(k));
    std::vector<TruncatedSeries> inner;
    for (int j : js) inner.push_back(ys[j]);
    Singular f{compose(ct->second.divide_monomial(ones(k)), inner), {}};
    if (k == 2) {
      TruncatedSeries q = divided_difference(y, n, js[0], js[1]);
      f = add(f, Singular{(q * q).inverse(), {{{js[0], js[1]}, 2}}});
    }
    return factors[mask] = f;
  };
  Singular total{TruncatedSeries(n, TruncatedSeries::kExact), {}};
  for (const auto& t : enumerate_trees(0, n)) {
    Singular w{pre, {}};
    for (const auto& b : t.blacks) w = multiply(w, factor(b.J));
    std::vector<int> r = valences(t);
    for (int j = 0; j < n; ++j)
      for (int s = 1; s < r[j]; ++s) w = euler(w, j);
    w.p = w.p * BigRat(1, aut(t));
    total = add(total, w);
  }
  return require_order(regular_part(total), order);
}

Report free_suite(const SpectralCurve& c, const BigRat& z0, int order) {
  Report rep;
  rep.tool_version = tool_version();
  rep.fingerprint = c.fingerprint();
  rep.assumptions.push_back("series data are expansions of the curve's correlators; no probabilistic interpretation is asserted");
  FreeSeriesData d(c, z0, order + 3);
  const std::string through = " through order " + std::to_string(order);
  TruncatedSeries m1 = d.moments(1), c1 = d.cumulants(1);
  rep.add(expect("C_1(X M_1(X)) = M_1(X)" + through, "first-order moment-cumulant relation", first_order_check(m1, c1, order)));
  TruncatedSeries m2 = d.moments(2), c2 = d.cumulants(2);
  rep.add(expect("second-order relation" + through, "second-order moment-cumulant relation",
                 second_order_check(m2, c2, d.y_of_x(), order)));
  std::map<int, TruncatedSeries> cs{{2, c2}, {3, d.cumulants(3)}};
  TruncatedSeries tree = moments_from_cumulants(cs, d.y_of_x(), 3, order + 3);
  TruncatedSeries m3 = d.moments(3).times_monomial(ones(3));
  rep.add(expect("tree sum for M_3 X1X2X3 = TR-derived series" + through, "moments from cumulants via trees",
                 tree.equal_through(m3, order + 3)));
  TruncatedSeries c2p = c2;
  c2p.add_to({1, 1}, BigRat(1));
  rep.add(expect("perturbed C_2 breaks the second-order relation", "negative control",
                 !second_order_check(m2, c2p, d.y_of_x(), order)));
  std::map<int, TruncatedSeries> csp = cs;
  csp[3].add_to({1, 1, 1}, BigRat(1));
  rep.add(expect("perturbed C_3 breaks the tree sum", "negative control",
                 !moments_from_cumulants(csp, d.y_of_x(), 3, order + 3).equal_through(m3, order + 3)));
  return rep;
}

}  // namespace xytr
