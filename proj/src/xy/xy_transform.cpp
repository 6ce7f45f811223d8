#include "xytr/xy/xy_transform.hpp"

#include <algorithm>
#include <map>

#include "xytr/tr/properties.hpp"

namespace xytr {

namespace {

const std::string kZ = SpectralCurve::kVar;

std::map<std::string, std::string> exchange_names(int n, int m) {
  std::map<std::string, std::string> r;
  for (int i = 1; i <= std::max(n, m); ++i) {
    r["z" + std::to_string(i)] = "w" + std::to_string(i);
    r["w" + std::to_string(i)] = "z" + std::to_string(i);
  }
  return r;
}

Correlator make(int n, int m, RF value, const std::string& provenance) {
  Correlator c;
  c.g = 0;
  c.n = n;
  c.m = m;
  MixedVars v = MixedVars::standard(n, m);
  c.vars = v.zs;
  c.vars.insert(c.vars.end(), v.ws.begin(), v.ws.end());
  c.value = std::move(value);
  c.provenance = provenance;
  return c;
}

}  // namespace

MixedVars MixedVars::standard(int n, int m) { return MixedVars{numbered("z", n), numbered("w", m)}; }

RF y_derivative(const RF& f, const std::string& w, const SpectralCurve& c) {
  if (!f.depends_on(w)) return RF();
  return diff(f, w) / rename(c.dy(), {{kZ, w}});
}

RF dx_dy(const SpectralCurve& c, const std::string& w) {
  return rename(c.dx(), {{kZ, w}}) / rename(c.dy(), {{kZ, w}});
}

RF w0_at(TrEngine& e, const std::vector<std::string>& args) {
  RF f = e.density(0, static_cast<int>(args.size()));
  std::map<std::string, std::string> names;
  for (std::size_t i = 0; i < args.size(); ++i) names["z" + std::to_string(i + 1)] = args[i];
  return rename(f, names);
}

RF tree_weight(const Tree& t, TrEngine& e, const MixedVars& v) {
  const SpectralCurve& c = e.curve();
  RF f(1);
  for (const auto& w : v.ws) f *= -dx_dy(c, w);
  for (const auto& b : t.blacks) {
    std::vector<std::string> args;
    for (int i = 0; i < t.n; ++i)
      if (b.I & (1u << i)) args.push_back(v.zs[i]);
    for (int j = 0; j < t.m; ++j)
      if (b.J & (1u << j)) args.push_back(v.ws[j]);
    f *= w0_at(e, args);
  }
  std::vector<int> r = valences(t);
  for (int j = 0; j < t.m; ++j)
    for (int k = 1; k < r[j]; ++k) f = -y_derivative(f, v.ws[j], c);
  return f;
}

Correlator xy_wnm(TrEngine& e, int n, int m) {
  MixedVars v = MixedVars::standard(n, m);
  RF sum;
  for (const auto& t : enumerate_trees(n, m)) sum += tree_weight(t, e, v) * BigRat(1, aut(t));
  return make(n, m, sum, "tree");
}

Correlator xy_wnm(const SpectralCurve& c, int n, int m) {
  TrEngine e(c);
  return xy_wnm(e, n, m);
}

Correlator xy_w0m(TrEngine& e, int m) { return xy_wnm(e, 0, m); }

Correlator xy_w0m(const SpectralCurve& c, int m) {
  TrEngine e(c);
  return xy_w0m(e, m);
}

Correlator wn1_partition(TrEngine& e, int n, int max_blocks) {
  const SpectralCurve& c = e.curve();
  const std::string w = "w1";
  const std::vector<std::string> zs = numbered("z", n);
  // orderings of the same blocks give the same term; their weights are collected first
  std::map<std::vector<LabelMask>, BigRat> weight;
  for_each_ordered_partition((1u << n) - 1, [&](const std::vector<LabelMask>& blocks) {
    const int k = static_cast<int>(blocks.size());
    if (max_blocks > 0 && k > max_blocks) return;
    std::vector<LabelMask> key = blocks;
    std::sort(key.begin(), key.end());
    Integer fact = 1;
    for (int i = 2; i <= k; ++i) fact *= i;
    weight[key] += BigRat(k % 2 ? -1 : 1, fact);
  });
  RF sum;
  for (const auto& [blocks, coeff] : weight) {
    if (sgn(coeff) == 0) continue;
    RF f = dx_dy(c, w);
    for (LabelMask b : blocks) {
      std::vector<std::string> args;
      for (int i = 0; i < n; ++i)
        if (b & (1u << i)) args.push_back(zs[i]);
      args.push_back(w);
      f *= w0_at(e, args);
    }
    for (std::size_t d = 1; d < blocks.size(); ++d) f = y_derivative(f, w, c);
    sum += f * coeff;
  }
  return make(n, 1, sum, "partition");
}

Correlator wn1_partition(const SpectralCurve& c, int n, int max_blocks) {
  TrEngine e(c);
  return wn1_partition(e, n, max_blocks);
}

RF w11_closed_form(const SpectralCurve& c, const std::string& z, const std::string& w) {
  RF xp = rename(c.dx(), {{kZ, z}});
  RF yp = rename(c.dy(), {{kZ, w}});
  return -(xp * yp * (RF::variable(z) - RF::variable(w)).pow(2)).inverse();
}

RF w21_closed_form(TrEngine& e, int sign) {
  const SpectralCurve& c = e.curve();
  RF X = dx_dy(c, "w1");
  RF first = -X * w0_at(e, {"z1", "z2", "w1"});
  RF second = y_derivative(X * w0_at(e, {"z2", "w1"}) * w0_at(e, {"z1", "w1"}), "w1", c);
  return sign > 0 ? first + second : first - second;
}

RF w03_closed_form(TrEngine& e) {
  const SpectralCurve& c = e.curve();
  RF pre = dx_dy(c, "w1") * dx_dy(c, "w2") * dx_dy(c, "w3");
  RF w12 = w0_at(e, {"w1", "w2"}), w13 = w0_at(e, {"w1", "w3"}), w23 = w0_at(e, {"w2", "w3"});
  RF r = -pre * w0_at(e, {"w1", "w2", "w3"});
  r += y_derivative(pre * w12 * w13, "w1", c);
  r += y_derivative(pre * w12 * w23, "w2", c);
  r += y_derivative(pre * w13 * w23, "w3", c);
  return r;
}

Report verify_xy(TrEngine& e, TrEngine& swapped, int n, int m) {
  const SpectralCurve& c = e.curve();
  Report rep;
  rep.tool_version = tool_version();
  rep.fingerprint = c.fingerprint();
  rep.assumptions.push_back("loop insertion operators commute with each other (used by the tree relations, not checked)");
  const std::string tag = "(" + std::to_string(n) + "," + std::to_string(m) + ")";
  Correlator tree = xy_wnm(e, n, m);
  const MixedVars v = MixedVars::standard(n, m);
  rep.add(expect("W" + tag + " tree sum symmetric", "symmetry", symmetric_in(tree.value, v.zs) && symmetric_in(tree.value, v.ws)));
  if (n == 0) {
    RF oracle = rename(swapped.density(0, m), exchange_names(0, m));
    rep.add(compare("W" + tag + " tree sum = TR on swapped curve", "x-y swap tree formula", tree.value, oracle));
    if (m >= 3)
      rep.add(expect("W" + tag + " poles only at y-ramification points", "pole cancellation",
                     poles_only_at(tree.value, v.ws, c.beta().points)));
    if (m == 3) rep.add(compare("W" + tag + " tree sum = pair-of-pants form", "pair of pants relation", tree.value, w03_closed_form(e)));
    return rep;
  }
  if (m == 0) {
    rep.add(compare("W" + tag + " single tree = TR", "unique tree", tree.value, e.density(0, n)));
    return rep;
  }
  if (m == 1) {
    rep.add(compare("W" + tag + " tree sum = ordered partition sum", "partition form", tree.value, wn1_partition(e, n).value));
    if (n == 1)
      rep.add(compare("W" + tag + " tree sum = cylinder closed form", "cylinder correlator", tree.value, w11_closed_form(c, "z1", "w1")));
    if (n == 2) rep.add(compare("W" + tag + " tree sum = closed form", "W_{2,1} closed form", tree.value, w21_closed_form(e, 1)));
  }
  RF exchanged = rename(xy_wnm(swapped, m, n).value, exchange_names(n, m));
  rep.add(compare("W" + tag + " tree sum = swapped-curve tree sum with roles exchanged", "x-y exchange", tree.value, exchanged));
  return rep;
}

Report verify_xy(const SpectralCurve& c, int n, int m) {
  TrEngine e(c), s(c.swap());
  return verify_xy(e, s, n, m);
}

}  // namespace xytr
