#include "xytr/curve/spectral_curve.hpp"

#include <cstdio>

#include "xytr/errors.hpp"

namespace xytr {

namespace {

const std::string kZ = SpectralCurve::kVar;

void require_univariate(const RF& f, const char* which) {
  for (const auto& v : f.used_variables())
    if (v != kZ) throw CurveRejected(Rejection::RegularityViolation, std::string(which) + " depends on " + v);
}

RamificationSet ramification(const RF& f, const RF& df, Side side) {
  const char* name = side == Side::X ? "x" : "y";
  if (!df.depends_on(kZ) && df.is_zero())
    throw CurveRejected(Rejection::RegularityViolation, std::string("d") + name + "/dz vanishes identically");
  RamificationSet out;
  out.which = side;
  if (df.num().is_constant()) return out;
  RationalRoots rr = rational_roots(df.num());
  if (!rr.exhausted)
    throw CurveRejected(Rejection::IrrationalRamification,
                        std::string("zeros of d") + name + "/dz are not all rational");
  for (const auto& [r, mult] : rr.roots) {
    if (mult != 1)
      throw CurveRejected(Rejection::NonSimpleRamification,
                          std::string("d") + name + "/dz has a multiple zero at z = " + r.get_str());
    if (root_multiplicity(f.den(), kZ, r) > 0) continue;
    out.points.push_back(r);
  }
  return out;
}

void check_regular(const RF& f, const RF& df, const RamificationSet& at, const char* fname, const char* where) {
  for (const auto& p : at.points) {
    if (root_multiplicity(f.den(), kZ, p) > 0)
      throw CurveRejected(Rejection::RegularityViolation,
                          std::string(fname) + " has a pole at the " + where + "-ramification point " + p.get_str());
    if (evaluate(df, kZ, p).is_zero())
      throw CurveRejected(Rejection::RegularityViolation,
                          std::string("d") + fname + "/dz vanishes at the " + where + "-ramification point " + p.get_str());
  }
}

}  // namespace

std::string fingerprint_of(const std::string& text) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

SpectralCurve SpectralCurve::validate(const RF& x, const RF& y) {
  require_univariate(x, "x");
  require_univariate(y, "y");
  SpectralCurve c;
  c.x_ = x.pruned();
  c.y_ = y.pruned();
  c.dx_ = diff(c.x_, kZ);
  c.dy_ = diff(c.y_, kZ);
  c.alpha_ = ramification(c.x_, c.dx_, Side::X);
  c.beta_ = ramification(c.y_, c.dy_, Side::Y);
  for (const auto& a : c.alpha_.points)
    for (const auto& b : c.beta_.points)
      if (a == b) throw CurveRejected(Rejection::CoincidingRamification, "x and y both ramify at z = " + a.get_str());
  check_regular(c.y_, c.dy_, c.alpha_, "y", "x");
  check_regular(c.x_, c.dx_, c.beta_, "x", "y");
  c.fingerprint_ = fingerprint_of("x=" + c.x_.to_string() + ";y=" + c.y_.to_string());
  return c;
}

SpectralCurve SpectralCurve::swap() const {
  SpectralCurve c;
  c.x_ = y_;
  c.y_ = x_;
  c.dx_ = dy_;
  c.dy_ = dx_;
  c.alpha_ = beta_;
  c.alpha_.which = Side::X;
  c.beta_ = alpha_;
  c.beta_.which = Side::Y;
  c.fingerprint_ = fingerprint_of("x=" + c.x_.to_string() + ";y=" + c.y_.to_string());
  return c;
}

NumericSeries involution_displacement(const SpectralCurve& c, const BigRat& alpha, int order) {
  if (order < 1) throw InvalidOrder("involution order must be at least 1");
  bool known = false;
  for (const auto& a : c.alpha().points) known = known || a == alpha;
  if (!known) throw std::invalid_argument("not a ramification point of x: " + alpha.get_str());
  NumericSeries x = numeric_series_at(c.x() - RF(evaluate(c.x(), kZ, alpha)), kZ, alpha, order + 1);
  BigRat a2 = x.coeff(2);
  std::vector<BigRat> s(order, BigRat(0));
  s[0] = -1;
  for (int n = 2; n <= order; ++n) {
    NumericSeries sn("t", alpha, 1, s, order + 1);
    NumericSeries e = compose(x, sn) - x;
    s[n - 1] = e.coeff(n + 1) / (2 * a2);
  }
  return NumericSeries("t", alpha, 1, s, order);
}

NumericSeries galois_involution_series(const SpectralCurve& c, const BigRat& alpha, int order) {
  NumericSeries d = involution_displacement(c, alpha, order);
  return d + NumericSeries::monomial("t", alpha, alpha, 0, order);
}

}  // namespace xytr
