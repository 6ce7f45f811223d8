#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "xytr/cas/poly.hpp"

namespace xytr {

// Canonical form: value = scale * num / den with num, den primitive integer
// polynomials, positive leading coefficients, gcd(num, den) = 1. Zero is
// scale 0 over 1/1. The numerator with rational coefficients is scale * num.
class RationalFunction {
 public:
  RationalFunction();
  RationalFunction(long v);  // NOLINT(google-explicit-constructor)
  RationalFunction(const BigRat& v);  // NOLINT(google-explicit-constructor)
  explicit RationalFunction(const Poly& p);

  static RationalFunction variable(const std::string& name);
  // Reduces num/den; throws DivisionByZero when den is zero.
  static RationalFunction fraction(const Poly& num, const Poly& den);
  static RationalFunction fraction(const BigRat& scale, const Poly& num, const Poly& den);

  const BigRat& scale() const { return scale_; }
  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  const VarsPtr& vars() const { return num_.vars(); }
  // Numerator with rational coefficients, i.e. scale * num, as
  // (integer polynomial, positive integer divisor).
  std::pair<Poly, Integer> rational_numerator() const;

  bool is_zero() const { return sgn(scale_) == 0; }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  BigRat constant_value() const;
  bool depends_on(const std::string& var) const;
  std::vector<std::string> used_variables() const;

  RationalFunction operator-() const;
  RationalFunction inverse() const;
  RationalFunction pow(int e) const;

  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const BigRat& c);
  friend RationalFunction operator*(const BigRat& c, const RationalFunction& a) { return a * c; }
  RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
  RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
  RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
  RationalFunction& operator/=(const RationalFunction& o) { return *this = *this / o; }

  // Structural equality of canonical forms (variable lists unified first).
  friend bool operator==(const RationalFunction& a, const RationalFunction& b);
  friend bool operator!=(const RationalFunction& a, const RationalFunction& b) { return !(a == b); }

  RationalFunction pruned() const;
  RationalFunction remap(const VarsPtr& vars) const;

  std::string to_string() const;

 private:
  BigRat scale_;
  Poly num_;
  Poly den_;

  // Inputs already coprime; only contents and signs are normalized.
  static RationalFunction from_coprime(BigRat scale, Poly num, Poly den);
};

using RF = RationalFunction;

bool equals(const RF& f, const RF& g);
RF normalize(const Poly& num, const Poly& den);
RF diff(const RF& f, const std::string& var);
RF substitute(const RF& f, const std::string& var, const RF& g);
// Simultaneous renaming; names not in the map are kept.
RF rename(const RF& f, const std::map<std::string, std::string>& names);
RF limit_at(const RF& f, const std::string& var, const RF& a);
RF evaluate(const RF& f, const std::string& var, const BigRat& a);

// Multiplicity of var = a as a root of p (p nonzero).
int root_multiplicity(const Poly& p, const std::string& var, const BigRat& a);
// Order of f at var = a: negative for poles.
int valuation_at(const RF& f, const std::string& var, const BigRat& a);

struct RationalRoots {
  std::vector<std::pair<BigRat, int>> roots;
  bool exhausted = false;
};

// p univariate; roots sorted increasingly.
RationalRoots rational_roots(const Poly& p);

// Shifted polynomial p(var = a + var) scaled by q^deg for a = p/q; returns
// (shifted, q^deg).
std::pair<Poly, Integer> taylor_shift(const Poly& p, int var, const BigRat& a);

}  // namespace xytr
