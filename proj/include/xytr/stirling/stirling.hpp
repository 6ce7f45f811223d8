#pragma once

#include <string>
#include <vector>

#include "xytr/curve/spectral_curve.hpp"
#include "xytr/report.hpp"

namespace xytr {

// s_{r+1,k} = s_{r,k-1} - r s_{r,k}, s_{0,0} = 1.
BigRat stirling(int r, int k);
std::vector<std::vector<BigRat>> stirling_table(int rmax);

// (d/dp + v/p)^r applied to 1, computed in Q(p, v).
RF stirling_operator_power(int r);
bool operator_identity_check(int r);

// (1/y) sum_k (-y d/dy)^k (y/x) [v^k](d/dp + v/p)^{r-1} 1 |_{p = x y} x^r f
RF log_y_form(int r, const SpectralCurve& c, const RF& f, const std::string& w);
// (-1)^{r-1} (d/dy)^{r-1} f
RF simplified_form(int r, const SpectralCurve& c, const RF& f, const std::string& w);
// [y d^{r-1}/dy^{r-1} + (r-1) d^{r-2}/dy^{r-2}](f/y) = d^{r-1}/dy^{r-1} f, r >= 2
bool leibniz_check(int r, const SpectralCurve& c, const RF& f, const std::string& w);

// Operator identity for r <= rmax_operator, form equivalence for r <= rmax_forms on
// the given test functions (in w), Leibniz identity for 2 <= r <= rmax_leibniz.
Report stirling_suite(const SpectralCurve& c, const std::vector<RF>& functions, const std::string& w, int rmax_operator = 8,
                      int rmax_forms = 5, int rmax_leibniz = 6);

// 1, w, x'(w), W_{2,0}(x(a), x(w)).
std::vector<RF> standard_test_functions(const SpectralCurve& c, const std::string& w, const std::string& a);

}  // namespace xytr
