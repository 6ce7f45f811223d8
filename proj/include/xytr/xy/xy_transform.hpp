#pragma once

#include <string>
#include <vector>

#include "xytr/report.hpp"
#include "xytr/tr/engine.hpp"
#include "xytr/trees/trees.hpp"

namespace xytr {

// z_1..z_n carry x-type arguments, w_1..w_m y-type arguments.
struct MixedVars {
  std::vector<std::string> zs;
  std::vector<std::string> ws;
  static MixedVars standard(int n, int m);
};

// (1/y'(w)) df/dw
RF y_derivative(const RF& f, const std::string& w, const SpectralCurve& c);
// x'(w)/y'(w)
RF dx_dy(const SpectralCurve& c, const std::string& w);

// W^{(0)}_{k,0}(x(a_1), ..., x(a_k)) on the z-plane, from the engine.
RF w0_at(TrEngine& e, const std::vector<std::string>& args);

RF tree_weight(const Tree& t, TrEngine& e, const MixedVars& v);

Correlator xy_wnm(TrEngine& e, int n, int m);
Correlator xy_wnm(const SpectralCurve& c, int n, int m);
Correlator xy_w0m(TrEngine& e, int m);
Correlator xy_w0m(const SpectralCurve& c, int m);

// Ordered-partition form; max_blocks > 0 keeps only k <= max_blocks.
Correlator wn1_partition(TrEngine& e, int n, int max_blocks = 0);
Correlator wn1_partition(const SpectralCurve& c, int n, int max_blocks = 0);

// -1/(x'(z) y'(w) (z-w)^2)
RF w11_closed_form(const SpectralCurve& c, const std::string& z, const std::string& w);
// -X' W_3(z1,z2,w1) + sign * d/dy (X' W_2(z2,w1) W_2(z1,w1)); sign = +1 agrees with
// the tree formula, sign = -1 is the variant with the opposite derivative term.
RF w21_closed_form(TrEngine& e, int sign = 1);
// Pair-of-pants relation for W_{0,3} in w1, w2, w3.
RF w03_closed_form(TrEngine& e);

Report verify_xy(const SpectralCurve& c, int n, int m);
Report verify_xy(TrEngine& e, TrEngine& swapped, int n, int m);

}  // namespace xytr
