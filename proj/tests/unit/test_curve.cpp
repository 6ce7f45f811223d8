#include "doctest.h"

#include "test_util.hpp"
#include "xytr/curve/spectral_curve.hpp"
#include "xytr/errors.hpp"

using namespace xytr;
using xytr::test::P;

namespace {

Rejection rejection_of(const char* x, const char* y) {
  try {
    SpectralCurve::validate(P(x), P(y));
  } catch (const CurveRejected& e) {
    return e.kind();
  }
  FAIL("curve unexpectedly accepted");
  return Rejection::RegularityViolation;
}

}  // namespace

TEST_CASE("validation accepts the standard curves") {
  SpectralCurve airy = SpectralCurve::validate(P("z^2"), P("z"));
  CHECK(airy.alpha().points == std::vector<BigRat>{BigRat(0)});
  CHECK(airy.beta().points.empty());
  SpectralCurve q = SpectralCurve::validate(P("z^2"), P("z^2+z"));
  CHECK(q.alpha().points == std::vector<BigRat>{BigRat(0)});
  CHECK(q.beta().points == std::vector<BigRat>{BigRat(-1, 2)});
  SpectralCurve f = SpectralCurve::validate(P("z+1/z"), P("z+z^2"));
  CHECK(f.alpha().points == std::vector<BigRat>{BigRat(-1), BigRat(1)});
}

TEST_CASE("validation rejections") {
  CHECK(rejection_of("z^2", "z^2") == Rejection::CoincidingRamification);
  CHECK(rejection_of("z^3", "z") == Rejection::NonSimpleRamification);
  CHECK(rejection_of("z^3+3*z", "z") == Rejection::IrrationalRamification);
  CHECK(rejection_of("z^2", "1/z") == Rejection::RegularityViolation);
  CHECK(rejection_of("7", "z") == Rejection::RegularityViolation);
}

TEST_CASE("swap") {
  SpectralCurve airy = SpectralCurve::validate(P("z^2"), P("z"));
  SpectralCurve s = airy.swap();
  CHECK(s.x() == P("z"));
  CHECK(s.y() == P("z^2"));
  CHECK(s.swap().x() == airy.x());
  CHECK(s.swap().fingerprint() == airy.fingerprint());
  SpectralCurve q = SpectralCurve::validate(P("z^2"), P("z^2+z")).swap();
  SpectralCurve revalidated = SpectralCurve::validate(q.x(), q.y());
  CHECK(revalidated.alpha().points == std::vector<BigRat>{BigRat(-1, 2)});
  CHECK(revalidated.beta().points == std::vector<BigRat>{BigRat(0)});
  CHECK(q.alpha().points == revalidated.alpha().points);
}

TEST_CASE("local Galois involution") {
  SpectralCurve airy = SpectralCurve::validate(P("z^2"), P("z"));
  NumericSeries s = galois_involution_series(airy, BigRat(0), 8);
  CHECK(s.coeff(1) == -1);
  for (int k = 2; k <= 8; ++k) CHECK(s.coeff(k) == 0);

  SpectralCurve cubic = SpectralCurve::validate(P("z^2+z^3"), P("z+1"));
  NumericSeries c = galois_involution_series(cubic, BigRat(0), 2);
  CHECK(c.coeff(0) == 0);
  CHECK(c.coeff(1) == -1);
  CHECK(c.coeff(2) == -1);
  NumericSeries xs = numeric_series_at(P("z^2+z^3"), "z", BigRat(0), 3);
  NumericSeries diffx = compose(xs, involution_displacement(cubic, BigRat(0), 2)) - xs;
  for (int k = 0; k <= std::min(3, diffx.trunc()); ++k) CHECK(diffx.coeff(k) == 0);

  CHECK_THROWS_AS(galois_involution_series(cubic, BigRat(0), 0), InvalidOrder);

  for (const char* xe : {"z^2+z^3", "z+1/z", "z^2/(1-z)", "z^3-3*z"}) {
    RF x = P(xe);
    SpectralCurve cv = SpectralCurve::validate(x, P("z+5"));
    for (const auto& a : cv.alpha().points) {
      const int order = 9;
      NumericSeries d = involution_displacement(cv, a, order);
      CHECK(d.coeff(1) == -1);
      NumericSeries twice = compose(d, d);
      CHECK(twice.trunc() >= order);
      for (int k = 1; k <= order; ++k) CHECK(twice.coeff(k) == (k == 1 ? 1 : 0));
      NumericSeries xa = numeric_series_at(x, "z", a, order);
      NumericSeries delta = compose(xa, d) - xa;
      for (int k = 0; k <= order; ++k) CHECK(delta.coeff(k) == 0);
    }
  }
}
