#pragma once

#include <string>

#include "xytr/report.hpp"
#include "xytr/tr/engine.hpp"

namespace xytr {

// Limit v -> u of W^{(0)}_{2,0}(x(u), x(v)) - 1/(x(u) - x(v))^2.
struct RegularizedDiagonal {
  std::string var;
  RF value;
};

RegularizedDiagonal diagonal_w2(const SpectralCurve& c, const std::string& u);

// (1/24) d/dz [ (x''y''/(x'y') + x''^2/x'^2 - x'''/x' + y''^2/y'^2 - y'''/y') / (x'y') ] in z.
RF omega1_bracket_density(const SpectralCurve& c);
// omega^{(1)}_{1,0} + omega^{(1)}_{0,1} against the bracket, as dz-densities.
bool omega1_sum_check(const SpectralCurve& c);
bool omega1_sum_check(TrEngine& e, TrEngine& swapped);

// W^{(1)}_{0,1}(y(w)) from the x-side data of the curve.
Correlator w1_01(TrEngine& e);
Correlator w1_01(const SpectralCurve& c);

// W^{(1)}_{0,2}(y(w1), y(w2)) from the x-side data; with_new_structure = false
// drops the two d^3/dy^3 lines.
Correlator w1_02(TrEngine& e, bool with_new_structure = true);
Correlator w1_02(const SpectralCurve& c, bool with_new_structure = true);

// TR oracles on the swapped curve: W^{(1)}_{0,1}(w), W^{(1)}_{0,2}(w1, w2).
RF w1_01_oracle(TrEngine& swapped);
RF w1_02_oracle(TrEngine& swapped);

Report genus_one_suite(const SpectralCurve& c);

}  // namespace xytr
