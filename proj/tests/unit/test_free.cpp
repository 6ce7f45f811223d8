#include "doctest.h"

#include "test_util.hpp"
#include "xytr/free/free_probability.hpp"

using namespace xytr;
using xytr::test::P;

namespace {

using Exps = TruncatedSeries::Exps;

SpectralCurve curve(const char* x, const char* y) { return SpectralCurve::validate(P(x), P(y)); }

TruncatedSeries univariate(const std::vector<long>& c, int order) {
  TruncatedSeries s(1, order);
  for (std::size_t k = 0; k < c.size(); ++k) s.set({static_cast<int>(k)}, BigRat(c[k]));
  return s;
}

BigRat binomial(int n, int k) {
  Integer r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return BigRat(r);
}

// The four trees of G_{0,3} with C_2 = C_3 = 0, summed as a rational function.
RF kernel_trees(const RF& y) {
  std::vector<std::string> xs = {"X1", "X2", "X3"};
  std::vector<RF> ys, pre;
  for (const auto& v : xs) {
    RF yi = rename(y, {{"X", v}});
    ys.push_back(yi);
    pre.push_back(RF::variable(v).pow(2) * diff(yi, v));
  }
  RF prefactor = pre[0] * pre[1] * pre[2];
  RF sum;
  for (int j = 0; j < 3; ++j) {
    int i = (j + 1) % 3, k = (j + 2) % 3;
    RF w = prefactor / ((ys[i] - ys[j]).pow(2) * (ys[j] - ys[k]).pow(2));
    sum += RF::variable(xs[j]).pow(2) * diff(w, xs[j]);
  }
  return sum;
}

TruncatedSeries scaled(const TruncatedSeries& s, const BigRat& lambda, int shift) {
  TruncatedSeries r(s.nvars(), s.order());
  for (const auto& [e, c] : s.coeffs()) {
    BigRat f = 1;
    for (int i = 0; i < total_degree(e) + shift; ++i) f *= lambda;
    r.set(e, c * f);
  }
  return r;
}

}  // namespace

TEST_CASE("truncated series arithmetic") {
  TruncatedSeries one_minus_x = univariate({1, -1}, 8);
  TruncatedSeries geo = one_minus_x.inverse();
  for (int k = 0; k <= 8; ++k) CHECK(geo.coeff({k}) == 1);
  CHECK_THROWS_AS(geo.coeff({9}), InsufficientOrder);

  TruncatedSeries x = TruncatedSeries::variable(1, 0, 8);
  TruncatedSeries r = reversion(x + x * x);
  for (int k = 1; k <= 8; ++k) {
    // (-1)^{k-1} Catalan(k-1)
    BigRat cat = binomial(2 * k - 2, k - 1) / BigRat(k);
    CHECK(r.coeff({k}) == (k % 2 ? cat : -cat));
  }
  CHECK(compose(x + x * x, {r}).equal_through(x, 8));

  TruncatedSeries f = univariate({0, 1, 3, 0, 5}, 6);
  TruncatedSeries dd = divided_difference(f, 2, 0, 1);
  TruncatedSeries diffs = f.embed(2, {0}) - f.embed(2, {1});
  CHECK(dd.times_difference(0, 1).equal_through(diffs, 6));
  CHECK(diffs.divide_difference(0, 1).equal_through(dd, 5));
  CHECK_THROWS_AS(f.embed(2, {0}).divide_difference(0, 1), std::domain_error);

  TruncatedSeries s = series_of(P("1/(1-z)"), {"z"}, {x});
  CHECK(s.equal_through(geo, 8));
  CHECK(TruncatedSeries::monomial(2, {1, 2}, BigRat(3)).divide_monomial({1, 1}).coeff({0, 1}) == 3);
}

TEST_CASE("first-order relation") {
  TruncatedSeries zero(1, 6);
  CHECK(first_order_check(zero, zero, 6));
  CHECK_THROWS_AS(solve_first_order(univariate({0, 1}, 6), 6), NonInvertibleY);

  // order-by-order oracle: c_k = m_k - [X^k] sum_{j<k} c_j Y^j with Y = X M_1
  TruncatedSeries m1 = univariate({1, 2, -1, 3, 0, 1, 4}, 6);
  TruncatedSeries y = m1.times_monomial({1}).truncated(7);
  TruncatedSeries c1(1, 6);
  for (int k = 0; k <= 6; ++k) {
    BigRat acc = 0;
    TruncatedSeries yp = TruncatedSeries::constant(1, BigRat(1), 7);
    for (int j = 0; j < k; ++j) {
      acc += c1.coeff({j}) * yp.coeff({k});
      yp = yp * y;
    }
    c1.set({k}, m1.coeff({k}) - acc);
  }
  CHECK(solve_first_order(m1, 6).equal_through(c1, 6));
  CHECK(first_order_check(m1, c1, 6));
  TruncatedSeries bad = c1;
  bad.add_to({4}, BigRat(1));
  CHECK_FALSE(first_order_check(m1, bad, 6));
}

TEST_CASE("series data from curve expansions") {
  SpectralCurve semi = curve("z+1/z", "z");
  FreeSeriesData d(semi, 0, 8);
  TruncatedSeries m1 = d.moments(1);
  for (int k = 0; k <= 4; ++k) CHECK(m1.coeff({2 * k}) == binomial(2 * k, k) / BigRat(k + 1));
  CHECK(m1.coeff({3}) == 0);
  CHECK(d.cumulants(1).equal_through(univariate({1, 0, 1}, 8), 8));
  CHECK(d.cumulants(2).known_zero());
  CHECK(d.cumulants(3).known_zero());
  CHECK(first_order_check(m1, d.cumulants(1), 8));

  CHECK_THROWS_AS(FreeSeriesData(curve("z+1/z", "z+1"), 0, 4), NonInvertibleY);
  CHECK_THROWS_AS(FreeSeriesData(curve("z^2", "z"), 0, 4), std::invalid_argument);
}

TEST_CASE("second-order relation") {
  TruncatedSeries x = TruncatedSeries::variable(1, 0, 10);
  TruncatedSeries zero(2, 8);
  CHECK(second_order_check(zero, zero, x, 6));

  SpectralCurve c = curve("z+1/z", "z+z^2");
  FreeSeriesData d(c, 0, 8);
  TruncatedSeries m2 = d.moments(2), c2 = d.cumulants(2);
  CHECK_FALSE(c2.known_zero());
  CHECK(second_order_check(m2, c2, d.y_of_x(), 6));
  CHECK(first_order_check(d.moments(1), d.cumulants(1), 6));
  for (const auto& e : std::vector<Exps>{{1, 1}, {2, 1}, {3, 3}}) {
    TruncatedSeries p = c2;
    p.add_to(e, BigRat(1, 7));
    CHECK_FALSE(second_order_check(m2, p, d.y_of_x(), 6));
  }
}

TEST_CASE("tree sum for moments from cumulants") {
  SpectralCurve semi = curve("z+1/z", "z");
  FreeSeriesData ds(semi, 0, 9);
  std::map<int, TruncatedSeries> zero{{2, TruncatedSeries(2, 12)}, {3, TruncatedSeries(3, 12)}};
  TruncatedSeries t = moments_from_cumulants(zero, ds.y_of_x(), 3, 9);
  CHECK(t.equal_through(ds.moments(3).times_monomial({1, 1, 1}), 9));

  // C = 0 with a polynomial Y against the explicit trees
  RF y = P("X+X^2", {"X"});
  TruncatedSeries ys = univariate({0, 1, 1}, 16);
  TruncatedSeries brute = series_of(kernel_trees(y), {"X1", "X2", "X3"},
                                    {TruncatedSeries::variable(3, 0, 14), TruncatedSeries::variable(3, 1, 14),
                                     TruncatedSeries::variable(3, 2, 14)});
  TruncatedSeries tz = moments_from_cumulants(zero, ys, 3, 10);
  CHECK(tz.equal_through(brute, 10));
  CHECK_FALSE(tz.known_zero());

  SpectralCurve c = curve("z+1/z", "z+z^2");
  FreeSeriesData d(c, 0, 9);
  std::map<int, TruncatedSeries> cs{{2, d.cumulants(2)}, {3, d.cumulants(3)}};
  TruncatedSeries tc = moments_from_cumulants(cs, d.y_of_x(), 3, 9);
  TruncatedSeries m3 = d.moments(3).times_monomial({1, 1, 1});
  CHECK(tc.equal_through(m3, 9));
  for (const auto& perm : std::vector<std::vector<int>>{{1, 0, 2}, {0, 2, 1}, {2, 0, 1}})
    CHECK(tc.embed(3, perm).equal_through(tc, 9));

  // finite window: a degree-6 cumulant coefficient cannot reach degree <= 6
  std::map<int, TruncatedSeries> late = cs;
  late[3].add_to({2, 2, 2}, BigRat(1));
  TruncatedSeries tl = moments_from_cumulants(late, d.y_of_x(), 3, 9);
  CHECK(tl.equal_through(tc, 6));
  CHECK_FALSE(tl.equal_through(tc, 9));

  // X -> lambda X with Y -> Y(lambda X)/lambda and C_k(Y) -> C_k(lambda Y)
  const BigRat lambda(2);
  std::map<int, TruncatedSeries> cl{{2, scaled(cs[2], lambda, 0)}, {3, scaled(cs[3], lambda, 0)}};
  TruncatedSeries tlam = moments_from_cumulants(cl, scaled(d.y_of_x(), lambda, -1), 3, 9);
  CHECK(tlam.equal_through(scaled(tc, lambda, -3), 9));

  CHECK_THROWS_AS(moments_from_cumulants(cs, univariate({0, 0, 1}, 12), 3, 6), NonInvertibleY);
  CHECK(free_suite(c, 0, 6).ok());
}
