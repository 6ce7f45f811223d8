#pragma once

#include <map>
#include <string>
#include <vector>

#include "xytr/cas/local_series.hpp"

namespace xytr {

// Multivariate power series sum c_e X^e known for total degree <= order.
// Exact polynomials carry order kExact.
class TruncatedSeries {
 public:
  using Exps = std::vector<int>;
  static constexpr int kExact = 1 << 28;

  TruncatedSeries() = default;
  TruncatedSeries(int nvars, int order) : nvars_(nvars), order_(order) {}

  static TruncatedSeries constant(int nvars, const BigRat& c, int order = kExact);
  static TruncatedSeries variable(int nvars, int var, int order = kExact);
  static TruncatedSeries monomial(int nvars, const Exps& e, const BigRat& c, int order = kExact);
  // A displacement series sum_k c_k t^k (min order >= 0) placed in variable var.
  static TruncatedSeries from_local(const NumericSeries& s, int nvars, int var);

  int nvars() const { return nvars_; }
  int order() const { return order_; }
  const std::map<Exps, BigRat>& coeffs() const { return coeffs_; }
  // Lowest total degree with a nonzero coefficient; order + 1 when none.
  int valuation() const;
  bool known_zero() const { return coeffs_.empty(); }

  BigRat coeff(const Exps& e) const;
  void set(const Exps& e, const BigRat& c);
  void add_to(const Exps& e, const BigRat& c);

  TruncatedSeries truncated(int order) const;
  TruncatedSeries operator-() const;
  friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator*(const TruncatedSeries& a, const BigRat& c);
  TruncatedSeries& operator+=(const TruncatedSeries& o) { return *this = *this + o; }
  TruncatedSeries& operator*=(const TruncatedSeries& o) { return *this = *this * o; }

  // Needs a nonzero constant term.
  TruncatedSeries inverse() const;
  TruncatedSeries pow(int e) const;
  TruncatedSeries derivative(int var) const;
  TruncatedSeries times_monomial(const Exps& e) const;
  // Exact division by X^e; throws if some coefficient is not divisible.
  TruncatedSeries divide_monomial(const Exps& e) const;
  TruncatedSeries times_difference(int i, int j) const;
  // Exact quotient by X_i - X_j; throws std::domain_error if not divisible.
  TruncatedSeries divide_difference(int i, int j) const;
  // Variable k goes to positions[k] of a series in nvars variables.
  TruncatedSeries embed(int nvars, const std::vector<int>& positions) const;

  // Coefficient equality for total degree <= order.
  bool equal_through(const TruncatedSeries& o, int order) const;

  // Coefficients as "e1,e2,...: c" lines in increasing degree order.
  std::vector<std::pair<Exps, BigRat>> sorted_terms() const;
  std::string to_string(const std::vector<std::string>& names) const;

 private:
  int nvars_ = 0;
  int order_ = -1;
  std::map<Exps, BigRat> coeffs_;
};

int total_degree(const TruncatedSeries::Exps& e);

// Every exponent vector in nvars variables with total degree <= order, by degree.
std::vector<TruncatedSeries::Exps> exponents_up_to(int nvars, int order);

// g(s_1, ..., s_k) for inner series without constant terms.
TruncatedSeries compose(const TruncatedSeries& g, const std::vector<TruncatedSeries>& s);

// (f(X_a) - f(X_b)) / (X_a - X_b) for univariate f, in nvars variables.
TruncatedSeries divided_difference(const TruncatedSeries& f, int nvars, int a, int b);

// Compositional inverse of a univariate series with valuation 1.
TruncatedSeries reversion(const TruncatedSeries& s);

// f with vars[k] replaced by subs[k]; other variables are not allowed.
TruncatedSeries series_of(const RF& f, const std::vector<std::string>& vars, const std::vector<TruncatedSeries>& subs);

}  // namespace xytr
