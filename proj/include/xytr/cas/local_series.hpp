#pragma once

#include <algorithm>
#include <climits>
#include <string>
#include <vector>

#include "xytr/cas/rational_function.hpp"
#include "xytr/errors.hpp"

namespace xytr {

inline bool is_zero(const RationalFunction& f) { return f.is_zero(); }

// Truncated Laurent series sum_k c_k t^k, k from min_order, known through
// t^trunc. A series whose known coefficients all vanish is stored with
// min_order = trunc + 1 and no coefficients.
template <class C>
class BasicLocalSeries {
 public:
  BasicLocalSeries() = default;
  BasicLocalSeries(std::string var, BigRat base, int min_order, std::vector<C> coeffs, int trunc)
      : var_(std::move(var)), base_(std::move(base)), min_order_(min_order), trunc_(trunc), coeffs_(std::move(coeffs)) {
    coeffs_.resize(std::max(0, trunc_ - min_order_ + 1));
    normalize();
  }

  static BasicLocalSeries zero(std::string var, BigRat base, int trunc) {
    return BasicLocalSeries(std::move(var), std::move(base), trunc + 1, {}, trunc);
  }
  static BasicLocalSeries monomial(std::string var, BigRat base, C c, int k, int trunc) {
    if (k > trunc) return zero(std::move(var), std::move(base), trunc);
    return BasicLocalSeries(std::move(var), std::move(base), k, {std::move(c)}, trunc);
  }

  const std::string& var() const { return var_; }
  const BigRat& base() const { return base_; }
  int min_order() const { return min_order_; }
  int trunc() const { return trunc_; }
  bool known_zero() const { return coeffs_.empty(); }
  const std::vector<C>& coeffs() const { return coeffs_; }

  C coeff(int k) const {
    if (k > trunc_) throw InsufficientOrder("coefficient t^" + std::to_string(k) + " beyond truncation " + std::to_string(trunc_));
    if (k < min_order_) return C();
    return coeffs_[k - min_order_];
  }

  BasicLocalSeries truncated(int t) const {
    if (t >= trunc_) return *this;
    std::vector<C> c;
    for (int k = min_order_; k <= t; ++k) c.push_back(coeffs_[k - min_order_]);
    return BasicLocalSeries(var_, base_, std::min(min_order_, t + 1), std::move(c), t);
  }

  BasicLocalSeries operator-() const {
    BasicLocalSeries r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
  }

  friend BasicLocalSeries operator+(const BasicLocalSeries& a, const BasicLocalSeries& b) {
    int t = std::min(a.trunc_, b.trunc_);
    int m = std::min(a.min_order_, b.min_order_);
    std::vector<C> c;
    for (int k = m; k <= t; ++k) {
      bool ia = k >= a.min_order_ && k <= a.trunc_ && !a.coeffs_.empty();
      bool ib = k >= b.min_order_ && k <= b.trunc_ && !b.coeffs_.empty();
      if (ia && ib)
        c.push_back(a.coeffs_[k - a.min_order_] + b.coeffs_[k - b.min_order_]);
      else if (ia)
        c.push_back(a.coeffs_[k - a.min_order_]);
      else if (ib)
        c.push_back(b.coeffs_[k - b.min_order_]);
      else
        c.push_back(C());
    }
    return BasicLocalSeries(a.var_, a.base_, std::min(m, t + 1), std::move(c), t);
  }
  friend BasicLocalSeries operator-(const BasicLocalSeries& a, const BasicLocalSeries& b) { return a + (-b); }

  friend BasicLocalSeries operator*(const BasicLocalSeries& a, const BasicLocalSeries& b) {
    int m = a.min_order_ + b.min_order_;
    int t = std::min(a.trunc_ + b.min_order_, b.trunc_ + a.min_order_);
    if (a.coeffs_.empty() || b.coeffs_.empty()) return zero(a.var_, a.base_, t);
    std::vector<C> c;
    for (int k = m; k <= t; ++k) c.push_back(product_coeff(a, b, k));
    return BasicLocalSeries(a.var_, a.base_, std::min(m, t + 1), std::move(c), t);
  }

  // Coefficient of t^k in a*b, checking that it is determined.
  static C product_coeff(const BasicLocalSeries& a, const BasicLocalSeries& b, int k) {
    int t = std::min(a.trunc_ + b.min_order_, b.trunc_ + a.min_order_);
    if (k > t) throw InsufficientOrder("product coefficient beyond truncation");
    C s = C();
    int lo = std::max(a.min_order_, k - (b.min_order_ + static_cast<int>(b.coeffs_.size()) - 1));
    int hi = std::min(a.min_order_ + static_cast<int>(a.coeffs_.size()) - 1, k - b.min_order_);
    for (int i = lo; i <= hi; ++i) {
      const C& x = a.coeffs_[i - a.min_order_];
      const C& y = b.coeffs_[k - i - b.min_order_];
      if (is_zero(x) || is_zero(y)) continue;
      s += x * y;
    }
    return s;
  }

  friend BasicLocalSeries operator*(const BasicLocalSeries& a, const C& s) {
    BasicLocalSeries r = a;
    for (auto& c : r.coeffs_) c = c * s;
    r.normalize();
    return r;
  }

  BasicLocalSeries shifted(int k) const {
    BasicLocalSeries r = *this;
    r.min_order_ += k;
    r.trunc_ += k;
    return r;
  }

  BasicLocalSeries inverse() const {
    if (coeffs_.empty()) throw DivisionByZero("inverse of a series with no known nonzero coefficient");
    int m = min_order_;
    int rel = trunc_ - m;
    std::vector<C> inv(rel + 1);
    C lead_inv = C(1) / coeffs_[0];
    inv[0] = lead_inv;
    for (int k = 1; k <= rel; ++k) {
      C s = C();
      for (int j = 1; j <= k; ++j) {
        if (is_zero(coeffs_[j])) continue;
        s += coeffs_[j] * inv[k - j];
      }
      inv[k] = -(s * lead_inv);
    }
    return BasicLocalSeries(var_, base_, -m, std::move(inv), trunc_ - 2 * m);
  }

  friend BasicLocalSeries operator/(const BasicLocalSeries& a, const BasicLocalSeries& b) { return a * b.inverse(); }

  BasicLocalSeries derivative() const {
    std::vector<C> c;
    int m = min_order_ - 1;
    for (int k = min_order_; k <= trunc_ && !coeffs_.empty(); ++k) c.push_back(coeffs_[k - min_order_] * C(k));
    if (coeffs_.empty()) return zero(var_, base_, trunc_ - 1);
    return BasicLocalSeries(var_, base_, m, std::move(c), trunc_ - 1);
  }

  BasicLocalSeries pow(int e) const {
    if (e < 0) return inverse().pow(-e);
    BasicLocalSeries r = monomial(var_, base_, C(1), 0, trunc_ - min_order_);
    BasicLocalSeries b = *this;
    bool first = true;
    while (e > 0) {
      if (e & 1) {
        r = first ? b : r * b;
        first = false;
      }
      e >>= 1;
      if (e) b = b * b;
    }
    return r;
  }

  // Residue: the coefficient of t^{-1}.
  C residue() const { return coeff(-1); }

 private:
  std::string var_;
  BigRat base_;
  int min_order_ = 0;
  int trunc_ = -1;
  std::vector<C> coeffs_;

  void normalize() {
    std::size_t lead = 0;
    while (lead < coeffs_.size() && is_zero(coeffs_[lead])) ++lead;
    if (lead) {
      coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<long>(lead));
      min_order_ += static_cast<int>(lead);
    }
    if (coeffs_.empty()) min_order_ = trunc_ + 1;
  }
};

using LocalSeries = BasicLocalSeries<RationalFunction>;
using NumericSeries = BasicLocalSeries<BigRat>;

// Laurent expansion of f in t = var - a through t^order.
LocalSeries series_at(const RF& f, const std::string& var, const BigRat& a, int order, const std::string& t = "t");
NumericSeries numeric_series_at(const RF& f, const std::string& var, const BigRat& a, int order);
RF residue_at(const RF& f, const std::string& var, const BigRat& a);

// g(S(t)) for S of positive valuation; S is the displacement, so g is read
// as a series in its own local variable.
template <class C>
BasicLocalSeries<C> compose(const BasicLocalSeries<C>& g, const NumericSeries& s) {
  if (s.known_zero() || s.min_order() < 1) throw std::invalid_argument("inner series must have positive valuation");
  int v = s.min_order();
  int mg = g.min_order();
  int kmin = mg != 0 ? mg : 1;
  int t_g = (g.trunc() + 1) * v - 1;
  int t_s = (kmin - 1) * v + s.trunc();
  int t = std::min(t_g, t_s);
  if (g.known_zero()) return BasicLocalSeries<C>::zero(g.var(), g.base(), t_g);
  int top = g.min_order() + static_cast<int>(g.coeffs().size()) - 1;
  std::vector<C> out(std::max(0, t - mg * v + 1));
  auto accumulate = [&](const C& gk, const NumericSeries& p) {
    for (int j = std::max(p.min_order(), mg * v); j <= t; ++j) {
      BigRat pj = p.coeff(j);
      if (!is_zero(pj)) out[j - mg * v] += gk * pj;
    }
  };
  if (mg < 0) {
    NumericSeries p = s.pow(mg);
    for (int k = mg; k < 0 && k <= top; ++k) {
      if (!is_zero(g.coeffs()[k - mg])) accumulate(g.coeffs()[k - mg], p);
      if (k + 1 < 0) p = p * s;
    }
  }
  if (mg <= 0 && top >= 0 && 0 <= t) out[-mg * v] += g.coeffs()[-mg];
  const int first = std::max(1, mg);
  NumericSeries p;
  for (int k = first; k <= top && k * v <= t; ++k) {
    p = k == first ? s.pow(k) : p * s;
    if (!is_zero(g.coeffs()[k - mg])) accumulate(g.coeffs()[k - mg], p);
  }
  return BasicLocalSeries<C>(g.var(), g.base(), mg * v, std::move(out), t);
}

}  // namespace xytr
