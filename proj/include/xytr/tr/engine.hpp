#pragma once

#include <map>
#include <mutex>
#include <string>
#include <tuple>
#include <vector>

#include "xytr/curve/spectral_curve.hpp"

namespace xytr {

struct Correlator {
  int g = 0;
  int n = 0;
  int m = 0;
  std::vector<std::string> vars;
  RF value;
  std::string provenance;
};

std::vector<std::string> numbered(const std::string& prefix, int count, int first = 1);

RF bergman_density(const std::string& u, const std::string& v);

struct KernelSeries {
  BigRat alpha;
  std::string spectator;
  // coefficient of t^(lo + i)
  int lo = -1;
  std::vector<RF> coeffs;
  int trunc = -2;
};

// [1/(z-q) - 1/(z-sigma(q))] / (2 (y(q)-y(sigma(q))) x'(q)), q = alpha + t,
// expanded through t^order.
KernelSeries kernel_series(const SpectralCurve& c, const BigRat& alpha, const std::string& z, int order);

// The same kernel times sigma'(t), which absorbs the pullback of the forms
// evaluated at sigma(q); this is what the residue sum uses.
KernelSeries pulled_back_kernel_series(const SpectralCurve& c, const BigRat& alpha, const std::string& z, int order);

// Topological recursion on one curve. Densities with respect to dz are
// cached by (g, n) in canonical variables z1..zn.
class TrEngine {
 public:
  explicit TrEngine(SpectralCurve curve, int extra_order = 0);

  const SpectralCurve& curve() const { return curve_; }

  // omega^{(g)}_n / (dz_1 ... dz_n); (0,2) gives the Bergman density.
  RF form_density(int g, int n);
  // omega^{(g)}_n / (dx_1 ... dx_n).
  RF density(int g, int n);
  Correlator correlator(int g, int n);

  int escalations() const { return escalations_; }

 private:
  SpectralCurve curve_;
  int extra_order_;
  int escalations_ = 0;
  std::recursive_mutex mutex_;
  std::map<std::pair<int, int>, RF> forms_;
  std::map<std::tuple<int, int, std::size_t>, LocalSeries> expansions_;
  std::map<std::pair<std::size_t, int>, NumericSeries> displacements_;
  std::map<std::pair<std::size_t, int>, KernelSeries> kernels_;

  RF compute(int g, int n);
  RF alpha_contribution(int g, int n, std::size_t ai, int extra);
  int pole_order(int g, int k, std::size_t ai);
  LocalSeries expand(int g, int k, std::size_t ai, int order);
  const NumericSeries& displacement(std::size_t ai, int order);
  const KernelSeries& kernel(std::size_t ai, int order);
};

// True when, in each listed variable, f has poles only at the given points.
bool poles_only_at(const RF& f, const std::vector<std::string>& vars, const std::vector<BigRat>& points);

// Fresh engine per call; throws UnsupportedEulerCharacteristic for
// 2g + n - 2 < 1.
Correlator tr_correlator(const SpectralCurve& c, int g, int n);

}  // namespace xytr
