#include "doctest.h"

#include "test_util.hpp"
#include "xytr/xy/xy_transform.hpp"

using namespace xytr;
using xytr::test::P;

namespace {

SpectralCurve curve(const char* x, const char* y) { return SpectralCurve::validate(P(x), P(y)); }

}  // namespace

TEST_CASE("y derivative") {
  SpectralCurve airy = curve("z^2", "z");
  CHECK(y_derivative(P("w"), "w", airy) == RF(1));
  CHECK(y_derivative(P("w^2"), "w", airy) == P("2*w"));
  CHECK(y_derivative(P("z1^3"), "w", airy).is_zero());
  SpectralCurve q = curve("z^2", "z^2+z");
  CHECK(y_derivative(P("w^2+w"), "w", q) == RF(1));
  CHECK(dx_dy(airy, "w") == P("2*w"));
}

TEST_CASE("tree weights on the Airy curve") {
  TrEngine e(curve("z^2", "z"));
  MixedVars v = MixedVars::standard(0, 3);
  Tree one = Tree::make(0, 3, {{0, 7}});
  CHECK(tree_weight(one, e, v) == P("-(-2*w1)*(-2*w2)*(-2*w3)/(16*w1^3*w2^3*w3^3)"));
  Tree cyl = Tree::make(1, 1, {{1, 1}});
  CHECK(tree_weight(cyl, e, MixedVars::standard(1, 1)) == w11_closed_form(e.curve(), "z1", "w1"));
}

TEST_CASE("Airy W_{0,m} tree sums vanish") {
  TrEngine e(curve("z^2", "z"));
  CHECK(xy_w0m(e, 3).value.is_zero());
  CHECK(xy_w0m(e, 4).value.is_zero());
}

TEST_CASE("two-point transfer") {
  for (auto [x, y] : {std::pair{"z^2", "z"}, std::pair{"z^2", "z^2+z"}}) {
    SpectralCurve c = curve(x, y);
    Report r = verify_xy(c, 0, 2);
    CHECK(r.ok());
  }
}

TEST_CASE("W_{0,3} against TR on the swapped curve") {
  SpectralCurve c = curve("z^2", "z^2+z");
  Report r = verify_xy(c, 0, 3);
  for (const auto& k : r.checks) {
    INFO(k.identity << " " << k.lhs_minus_rhs);
    CHECK(k.pass);
  }
  CHECK_FALSE(xy_w0m(c, 3).value.is_zero());
}

TEST_CASE("mixed correlators: closed forms, partitions and exchange") {
  for (auto [x, y] : {std::pair{"z^2", "z^2+z"}, std::pair{"z^2+z^3", "z"}}) {
    SpectralCurve c = curve(x, y);
    TrEngine e(c), s(c.swap());
    for (auto [n, m] : {std::pair{1, 1}, std::pair{2, 1}, std::pair{3, 1}, std::pair{1, 2}}) {
      Report r = verify_xy(e, s, n, m);
      for (const auto& k : r.checks) {
        INFO(x << " " << y << " " << k.identity << " " << k.lhs_minus_rhs);
        CHECK(k.pass);
      }
    }
    if (c.x() == xytr::test::P("z^2")) CHECK(xy_wnm(e, 4, 1).value == wn1_partition(e, 4).value);
    CHECK(wn1_partition(e, 1).value == w11_closed_form(c, "z1", "w1"));
    CHECK(wn1_partition(e, 2).value == w21_closed_form(e, 1));
    CHECK(w21_closed_form(e, -1) != w21_closed_form(e, 1));
  }
}

TEST_CASE("valence-two truncation differs from the full partition sum") {
  TrEngine e(curve("z^2", "z^2+z"));
  RF full = wn1_partition(e, 3).value;
  RF trunc = wn1_partition(e, 3, 2).value;
  CHECK_FALSE((full - trunc).is_zero());
  CHECK(wn1_partition(e, 2, 2).value == wn1_partition(e, 2).value);
}
