#include "xytr/tr/engine.hpp"

#include "xytr/errors.hpp"

namespace xytr {

namespace {

const std::string kZ = SpectralCurve::kVar;
constexpr int kMaxEscalations = 6;

LocalSeries lift(const NumericSeries& s) {
  std::vector<RF> c;
  for (const auto& v : s.coeffs()) c.emplace_back(v);
  return LocalSeries(s.var(), s.base(), s.min_order(), std::move(c), s.trunc());
}

LocalSeries rename_series(const LocalSeries& s, const std::map<std::string, std::string>& names) {
  std::vector<RF> c;
  c.reserve(s.coeffs().size());
  for (const auto& v : s.coeffs()) c.push_back(rename(v, names));
  return LocalSeries(s.var(), s.base(), s.min_order(), std::move(c), s.trunc());
}

KernelSeries kernel_impl(const SpectralCurve& c, const BigRat& alpha, const std::string& z, int order,
                         bool with_sigma_prime) {
  const int n = order + 6;
  NumericSeries s = involution_displacement(c, alpha, n + 2);
  NumericSeries ys = numeric_series_at(c.y(), kZ, alpha, n + 2);
  NumericSeries dy = ys - compose(ys, s);
  NumericSeries xp = numeric_series_at(c.dx(), kZ, alpha, n + 2);
  NumericSeries d = dy * xp;
  if (d.known_zero() || d.min_order() != 2) throw DegenerateKernel("kernel denominator does not vanish to order two");
  NumericSeries r = d.inverse() * BigRat(1, 2);
  if (with_sigma_prime) r = r * s.derivative();
  NumericSeries t = NumericSeries::monomial("t", BigRat(0), BigRat(1), 1, n + 2);
  RF zma = RF::variable(z) - RF(alpha);
  KernelSeries out;
  out.alpha = alpha;
  out.spectator = z;
  out.lo = -1;
  out.trunc = order;
  out.coeffs.assign(order + 2, RF());
  NumericSeries tk = t, sk = s;
  for (int k = 1; k <= order + 2; ++k) {
    NumericSeries u = (tk - sk) * r;
    RF w = zma.pow(-(k + 1));
    for (int j = std::max(-1, u.min_order()); j <= order; ++j) {
      BigRat cj = u.coeff(j);
      if (sgn(cj) != 0) out.coeffs[j + 1] += w * cj;
    }
    tk = tk * t;
    sk = sk * s;
  }
  return out;
}

}  // namespace

std::vector<std::string> numbered(const std::string& prefix, int count, int first) {
  std::vector<std::string> v;
  for (int i = 0; i < count; ++i) v.push_back(prefix + std::to_string(first + i));
  return v;
}

RF bergman_density(const std::string& u, const std::string& v) {
  return (RF::variable(u) - RF::variable(v)).pow(-2);
}

KernelSeries kernel_series(const SpectralCurve& c, const BigRat& alpha, const std::string& z, int order) {
  return kernel_impl(c, alpha, z, order, false);
}

KernelSeries pulled_back_kernel_series(const SpectralCurve& c, const BigRat& alpha, const std::string& z, int order) {
  return kernel_impl(c, alpha, z, order, true);
}

TrEngine::TrEngine(SpectralCurve curve, int extra_order) : curve_(std::move(curve)), extra_order_(extra_order) {}

RF TrEngine::form_density(int g, int n) {
  std::lock_guard<std::recursive_mutex> lock(mutex_);
  if (g < 0 || n < 1 || (g == 0 && n == 1))
    throw UnsupportedEulerCharacteristic("no density for (g, n) = (" + std::to_string(g) + ", " + std::to_string(n) + ")");
  auto it = forms_.find({g, n});
  if (it != forms_.end()) return it->second;
  RF f = (g == 0 && n == 2) ? bergman_density("z1", "z2") : compute(g, n);
  forms_.emplace(std::make_pair(g, n), f);
  return f;
}

RF TrEngine::density(int g, int n) {
  RF f = form_density(g, n);
  for (const auto& v : numbered("z", n)) f /= rename(curve_.dx(), {{kZ, v}});
  return f;
}

Correlator TrEngine::correlator(int g, int n) {
  Correlator c;
  c.g = g;
  c.n = n;
  c.m = 0;
  c.vars = numbered("z", n);
  c.value = density(g, n);
  c.provenance = "tr";
  return c;
}

RF TrEngine::compute(int g, int n) {
  RF total;
  for (std::size_t ai = 0; ai < curve_.alpha().points.size(); ++ai) {
    int extra = extra_order_;
    for (int attempt = 0;; ++attempt) {
      try {
        total += alpha_contribution(g, n, ai, extra);
        break;
      } catch (const InsufficientOrder&) {
        if (attempt >= kMaxEscalations) throw;
        extra += 4;
        ++escalations_;
      }
    }
  }
  return total;
}

int TrEngine::pole_order(int g, int k, std::size_t ai) {
  if (g == 0 && k == 1) return 0;
  RF f = form_density(g, k + 1);
  return std::max(0, -valuation_at(f, "z" + std::to_string(k + 1), curve_.alpha().points[ai]));
}

LocalSeries TrEngine::expand(int g, int k, std::size_t ai, int order) {
  auto key = std::make_tuple(g, k, ai);
  auto it = expansions_.find(key);
  if (it != expansions_.end() && it->second.trunc() >= order) return it->second.truncated(order);
  RF f = form_density(g, k + 1);
  LocalSeries s = series_at(f, "z" + std::to_string(k + 1), curve_.alpha().points[ai], order);
  expansions_[key] = s;
  return s;
}

const NumericSeries& TrEngine::displacement(std::size_t ai, int order) {
  auto found = displacements_.lower_bound({ai, order});
  if (found != displacements_.end() && found->first.first == ai) return found->second;
  auto [it, ok] = displacements_.emplace(std::make_pair(ai, order), involution_displacement(curve_, curve_.alpha().points[ai], order));
  return it->second;
}

const KernelSeries& TrEngine::kernel(std::size_t ai, int order) {
  auto found = kernels_.lower_bound({ai, order});
  if (found != kernels_.end() && found->first.first == ai) return found->second;
  auto [it, ok] = kernels_.emplace(std::make_pair(ai, order), pulled_back_kernel_series(curve_, curve_.alpha().points[ai], "z", order));
  return it->second;
}

RF TrEngine::alpha_contribution(int g, int n1, std::size_t ai, int extra) {
  const int n = n1 - 1;
  const BigRat& alpha = curve_.alpha().points[ai];
  const std::vector<std::string> in = numbered("z", n);
  const std::string spectator = "z" + std::to_string(n1);

  struct Split {
    int g1, g2;
    unsigned m1, m2;
    int p1, p2;
  };
  std::vector<Split> splits;
  int pmax = 0;
  const unsigned full = (1u << n) - 1;
  for (int g1 = 0; g1 <= g; ++g1) {
    for (unsigned m1 = 0; m1 <= full; ++m1) {
      const int g2 = g - g1;
      const unsigned m2 = full & ~m1;
      if ((g1 == 0 && m1 == 0) || (g2 == 0 && m2 == 0)) continue;
      Split s{g1, g2, m1, m2, pole_order(g1, __builtin_popcount(m1), ai), pole_order(g2, __builtin_popcount(m2), ai)};
      pmax = std::max(pmax, s.p1 + s.p2);
      splits.push_back(s);
    }
  }
  int pdiag = 0;
  if (g >= 1) {
    pdiag = (g == 1 && n == 0) ? 2 : 2 * pole_order(g - 1, n + 1, ai);
    pmax = std::max(pmax, pdiag);
  }
  const NumericSeries& s = displacement(ai, 2 * pmax + 4 + extra);

  auto names_for = [&](unsigned mask) {
    std::map<std::string, std::string> m;
    int k = 1;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) m["z" + std::to_string(k++)] = in[i];
    return m;
  };

  LocalSeries stuff = LocalSeries::zero("t", alpha, 0);
  for (const auto& sp : splits) {
    LocalSeries a = rename_series(expand(sp.g1, __builtin_popcount(sp.m1), ai, sp.p2 + extra), names_for(sp.m1));
    LocalSeries b = rename_series(expand(sp.g2, __builtin_popcount(sp.m2), ai, sp.p1 + extra), names_for(sp.m2));
    stuff = stuff + a * compose(b, s);
  }
  if (g >= 1) {
    if (g == 1 && n == 0) {
      NumericSeries t = NumericSeries::monomial("t", alpha, BigRat(1), 1, s.trunc());
      stuff = stuff + lift((t - s).pow(-2));
    } else {
      const int p = pdiag / 2;
      RF f = form_density(g - 1, n + 2);
      const std::string u = "z" + std::to_string(n + 1), v = "z" + std::to_string(n + 2);
      LocalSeries su = series_at(f, u, alpha, p + extra);
      for (int k = su.min_order(); k <= su.trunc() && !su.known_zero(); ++k) {
        RF ck = su.coeff(k);
        if (ck.is_zero()) continue;
        LocalSeries cv = series_at(ck, v, alpha, -k + extra);
        stuff = stuff + compose(cv, s).shifted(k);
      }
    }
  }
  if (stuff.known_zero() || stuff.min_order() > 0) return RF();
  const int need = -1 - stuff.min_order();
  const KernelSeries& ker = kernel(ai, need);
  RF res;
  for (int j = -1; j <= need; ++j) {
    RF sc = stuff.coeff(-1 - j);
    if (sc.is_zero()) continue;
    const RF& kj = ker.coeffs[j + 1];
    if (kj.is_zero()) continue;
    res += rename(kj, {{"z", spectator}}) * sc;
  }
  return res;
}

bool poles_only_at(const RF& f, const std::vector<std::string>& vars, const std::vector<BigRat>& points) {
  if (f.is_zero()) return true;
  for (const auto& v : vars) {
    RF g = f;
    for (const auto& p : points) {
      int val = valuation_at(g, v, p);
      if (val < 0) g *= (RF::variable(v) - RF(p)).pow(-val);
    }
    if (RF(g.den()).depends_on(v)) return false;
  }
  return true;
}

Correlator tr_correlator(const SpectralCurve& c, int g, int n) {
  if (n < 1 || 2 * g + n - 2 < 1)
    throw UnsupportedEulerCharacteristic("topological recursion needs 2g + n - 2 >= 1 and n >= 1");
  TrEngine e(c);
  return e.correlator(g, n);
}

}  // namespace xytr
