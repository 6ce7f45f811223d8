#pragma once

#include <string>
#include <vector>

#include "xytr/cas/local_series.hpp"

namespace xytr {

enum class Side { X, Y };

struct RamificationSet {
  std::vector<BigRat> points;
  Side which = Side::X;
};

// Genus-zero spectral curve x(z), y(z) with the fixed kernel dz dz/(z-z)^2.
class SpectralCurve {
 public:
  static constexpr const char* kVar = "z";

  // Throws CurveRejected naming the violated assumption.
  static SpectralCurve validate(const RF& x, const RF& y);

  const RF& x() const { return x_; }
  const RF& y() const { return y_; }
  const RF& dx() const { return dx_; }
  const RF& dy() const { return dy_; }
  const RamificationSet& alpha() const { return alpha_; }
  const RamificationSet& beta() const { return beta_; }
  const std::string& fingerprint() const { return fingerprint_; }

  SpectralCurve swap() const;

 private:
  RF x_, y_, dx_, dy_;
  RamificationSet alpha_, beta_;
  std::string fingerprint_;
};

// sigma(alpha + t) = alpha - t + sum_{k>=2} c_k t^k through t^order.
NumericSeries galois_involution_series(const SpectralCurve& c, const BigRat& alpha, int order);

// The same series without the constant alpha.
NumericSeries involution_displacement(const SpectralCurve& c, const BigRat& alpha, int order);

std::string fingerprint_of(const std::string& text);

}  // namespace xytr
