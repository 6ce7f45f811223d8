#pragma once

#include <map>
#include <memory>
#include <vector>

#include "xytr/free/series.hpp"
#include "xytr/report.hpp"
#include "xytr/tr/engine.hpp"

namespace xytr {

// Moment and cumulant generating series of a curve, expanded at a point z0
// where x has a simple pole and y a simple zero. X = 1/x and Y = y are the
// local coordinates; both sides come from topological recursion.
class FreeSeriesData {
 public:
  // Series are produced through total degree `order`.
  FreeSeriesData(const SpectralCurve& c, const BigRat& z0, int order);

  const SpectralCurve& curve() const { return curve_; }
  const BigRat& z0() const { return z0_; }
  int order() const { return order_; }

  // z - z0 as a series in X, and in Y.
  const TruncatedSeries& z_of_x() const { return z_of_x_; }
  const TruncatedSeries& z_of_y() const { return z_of_y_; }
  // Y = X M_1(X).
  const TruncatedSeries& y_of_x() const { return y_of_x_; }

  // M_n(X_1..X_n), from W_{n,0}(1/X)/(X_1...X_n) minus the n = 2 kernel.
  TruncatedSeries moments(int n);
  // C_m(Y_1..Y_m), from Y_1...Y_m W_{0,m}(Y) minus the m = 2 kernel.
  TruncatedSeries cumulants(int m);

 private:
  SpectralCurve curve_;
  BigRat z0_;
  int order_;
  int work_;
  std::unique_ptr<TrEngine> engine_, swapped_;
  TruncatedSeries x_of_z_, y_of_z_, z_of_x_, z_of_y_, y_of_x_;
  std::map<int, TruncatedSeries> moments_, cumulants_;
};

// C_1(X M_1(X)) = M_1(X) through `order`.
bool first_order_check(const TruncatedSeries& m1, const TruncatedSeries& c1, int order);

// C_1 determined by M_1; throws NonInvertibleY when X M_1(X) has no linear term.
TruncatedSeries solve_first_order(const TruncatedSeries& m1, int order);

// M_2 + X1X2/(X1-X2)^2 = (dlnY1/dlnX1)(dlnY2/dlnX2)(C_2(Y1,Y2) + Y1Y2/(Y1-Y2)^2),
// both sides multiplied by (X1-X2)^2, compared for M_2 through `order`.
bool second_order_check(const TruncatedSeries& m2, const TruncatedSeries& c2, const TruncatedSeries& y_of_x, int order);

// Tree sum over G_{0,n} giving M_n X_1...X_n through total degree `order`;
// cumulants[k] = C_k for 2 <= k <= n.
TruncatedSeries moments_from_cumulants(const std::map<int, TruncatedSeries>& cumulants, const TruncatedSeries& y_of_x, int n,
                                    int order);

// First- and second-order relations, the n = 3 tree sum and negative controls.
Report free_suite(const SpectralCurve& c, const BigRat& z0, int order);

}  // namespace xytr
