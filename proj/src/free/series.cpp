#include "xytr/free/series.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace xytr {

namespace {

int cap(long v) { return static_cast<int>(std::min<long>(v, TruncatedSeries::kExact)); }

TruncatedSeries::Exps add_exps(const TruncatedSeries::Exps& a, const TruncatedSeries::Exps& b) {
  TruncatedSeries::Exps r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

int max_degree(const TruncatedSeries& f) {
  int d = 0;
  for (const auto& [e, c] : f.coeffs()) d = std::max(d, total_degree(e));
  return d;
}

}  // namespace

int total_degree(const TruncatedSeries::Exps& e) { return std::accumulate(e.begin(), e.end(), 0); }

std::vector<TruncatedSeries::Exps> exponents_up_to(int nvars, int order) {
  std::vector<TruncatedSeries::Exps> out;
  TruncatedSeries::Exps e(nvars, 0);
  for (int d = 0; d <= order; ++d) {
    std::function<void(int, int)> rec = [&](int i, int left) {
      if (i == nvars - 1) {
        e[i] = left;
        out.push_back(e);
        return;
      }
      for (int k = left; k >= 0; --k) {
        e[i] = k;
        rec(i + 1, left - k);
      }
    };
    if (nvars == 0) {
      if (d == 0) out.push_back(e);
      continue;
    }
    rec(0, d);
  }
  return out;
}

TruncatedSeries TruncatedSeries::constant(int nvars, const BigRat& c, int order) {
  TruncatedSeries r(nvars, order);
  r.set(Exps(nvars, 0), c);
  return r;
}

TruncatedSeries TruncatedSeries::variable(int nvars, int var, int order) {
  Exps e(nvars, 0);
  e[var] = 1;
  return monomial(nvars, e, BigRat(1), order);
}

TruncatedSeries TruncatedSeries::monomial(int nvars, const Exps& e, const BigRat& c, int order) {
  TruncatedSeries r(nvars, order);
  if (total_degree(e) <= order) r.set(e, c);
  return r;
}

TruncatedSeries TruncatedSeries::from_local(const NumericSeries& s, int nvars, int var) {
  if (!s.known_zero() && s.min_order() < 0) throw std::invalid_argument("series has a pole");
  TruncatedSeries r(nvars, s.trunc());
  for (int k = std::max(0, s.min_order()); k <= s.trunc(); ++k) {
    Exps e(nvars, 0);
    e[var] = k;
    r.set(e, s.coeff(k));
  }
  return r;
}

int TruncatedSeries::valuation() const {
  int v = order_ + 1;
  for (const auto& [e, c] : coeffs_) v = std::min(v, total_degree(e));
  return v;
}

BigRat TruncatedSeries::coeff(const Exps& e) const {
  if (total_degree(e) > order_) throw InsufficientOrder("coefficient beyond total order " + std::to_string(order_));
  auto it = coeffs_.find(e);
  return it == coeffs_.end() ? BigRat(0) : it->second;
}

void TruncatedSeries::set(const Exps& e, const BigRat& c) {
  if (static_cast<int>(e.size()) != nvars_) throw std::invalid_argument("exponent vector has the wrong length");
  if (total_degree(e) > order_) return;
  if (sgn(c) == 0)
    coeffs_.erase(e);
  else
    coeffs_[e] = c;
}

void TruncatedSeries::add_to(const Exps& e, const BigRat& c) {
  if (sgn(c) == 0 || total_degree(e) > order_) return;
  auto it = coeffs_.find(e);
  if (it == coeffs_.end()) {
    coeffs_.emplace(e, c);
    return;
  }
  it->second += c;
  if (sgn(it->second) == 0) coeffs_.erase(it);
}

TruncatedSeries TruncatedSeries::truncated(int order) const {
  TruncatedSeries r(nvars_, std::min(order, order_));
  for (const auto& [e, c] : coeffs_)
    if (total_degree(e) <= r.order_) r.coeffs_.emplace(e, c);
  return r;
}

TruncatedSeries TruncatedSeries::operator-() const {
  TruncatedSeries r = *this;
  for (auto& [e, c] : r.coeffs_) c = -c;
  return r;
}

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (a.nvars_ != b.nvars_) throw std::invalid_argument("series in different numbers of variables");
  TruncatedSeries r = a.truncated(b.order_);
  for (const auto& [e, c] : b.coeffs_) r.add_to(e, c);
  return r;
}

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) { return a + (-b); }

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (a.nvars_ != b.nvars_) throw std::invalid_argument("series in different numbers of variables");
  const int ord = cap(std::min(static_cast<long>(a.order_) + b.valuation(), static_cast<long>(b.order_) + a.valuation()));
  TruncatedSeries r(a.nvars_, ord);
  for (const auto& [ea, ca] : a.coeffs_) {
    const int da = total_degree(ea);
    if (da > ord) continue;
    for (const auto& [eb, cb] : b.coeffs_) {
      if (da + total_degree(eb) > ord) continue;
      r.add_to(add_exps(ea, eb), ca * cb);
    }
  }
  return r;
}

TruncatedSeries operator*(const TruncatedSeries& a, const BigRat& c) {
  if (sgn(c) == 0) return TruncatedSeries(a.nvars_, a.order_);
  TruncatedSeries r = a;
  for (auto& [e, v] : r.coeffs_) v *= c;
  return r;
}

TruncatedSeries TruncatedSeries::inverse() const {
  const Exps zero(nvars_, 0);
  auto it = coeffs_.find(zero);
  if (it == coeffs_.end()) throw DivisionByZero("series without constant term has no inverse");
  if (order_ >= kExact) {
    if (coeffs_.size() == 1) return constant(nvars_, BigRat(1) / it->second);
    throw std::invalid_argument("inverse of an exact polynomial needs a truncation order");
  }
  const BigRat lead_inv = BigRat(1) / it->second;
  TruncatedSeries r(nvars_, order_);
  for (const auto& e : exponents_up_to(nvars_, order_)) {
    if (e == zero) {
      r.set(e, lead_inv);
      continue;
    }
    BigRat s = 0;
    for (const auto& [ea, ca] : coeffs_) {
      if (ea == zero) continue;
      Exps rest(nvars_);
      bool inside = true;
      for (int i = 0; i < nvars_ && inside; ++i) {
        rest[i] = e[i] - ea[i];
        inside = rest[i] >= 0;
      }
      if (!inside) continue;
      auto jt = r.coeffs_.find(rest);
      if (jt != r.coeffs_.end()) s += ca * jt->second;
    }
    r.set(e, -s * lead_inv);
  }
  return r;
}

TruncatedSeries TruncatedSeries::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  TruncatedSeries r = constant(nvars_, BigRat(1));
  for (int i = 0; i < e; ++i) r = r * *this;
  return r;
}

TruncatedSeries TruncatedSeries::derivative(int var) const {
  TruncatedSeries r(nvars_, order_ >= kExact ? kExact : order_ - 1);
  for (const auto& [e, c] : coeffs_) {
    if (e[var] == 0) continue;
    Exps d = e;
    --d[var];
    r.set(d, c * e[var]);
  }
  return r;
}

TruncatedSeries TruncatedSeries::times_monomial(const Exps& m) const {
  TruncatedSeries r(nvars_, cap(static_cast<long>(order_) + total_degree(m)));
  for (const auto& [e, c] : coeffs_) r.coeffs_.emplace(add_exps(e, m), c);
  return r;
}

TruncatedSeries TruncatedSeries::divide_monomial(const Exps& m) const {
  TruncatedSeries r(nvars_, order_ >= kExact ? kExact : order_ - total_degree(m));
  for (const auto& [e, c] : coeffs_) {
    Exps d(nvars_);
    for (int i = 0; i < nvars_; ++i) {
      d[i] = e[i] - m[i];
      if (d[i] < 0) throw std::domain_error("series is not divisible by the monomial");
    }
    r.coeffs_.emplace(d, c);
  }
  return r;
}

TruncatedSeries TruncatedSeries::times_difference(int i, int j) const {
  TruncatedSeries r(nvars_, cap(static_cast<long>(order_) + 1));
  for (const auto& [e, c] : coeffs_) {
    Exps a = e, b = e;
    ++a[i];
    ++b[j];
    r.add_to(a, c);
    r.add_to(b, -c);
  }
  return r;
}

TruncatedSeries TruncatedSeries::divide_difference(int i, int j) const {
  const bool exact = order_ >= kExact;
  const int top = exact ? max_degree(*this) : order_;
  TruncatedSeries r(nvars_, exact ? kExact : order_ - 1);
  std::vector<int> others;
  for (int k = 0; k < nvars_; ++k)
    if (k != i && k != j) others.push_back(k);
  for (const auto& rest : exponents_up_to(static_cast<int>(others.size()), top)) {
    const int dr = total_degree(rest);
    for (int s = 0; dr + s + 1 <= top; ++s) {
      auto at = [&](int a, int b) {
        Exps e(nvars_, 0);
        for (std::size_t k = 0; k < others.size(); ++k) e[others[k]] = rest[k];
        e[i] = a;
        e[j] = b;
        return e;
      };
      BigRat g = 0;
      for (int a = s; a >= 0; --a) {
        g = coeff(at(a + 1, s - a)) + g;
        r.set(at(a, s - a), g);
      }
      if (coeff(at(0, s + 1)) + g != 0) throw std::domain_error("series is not divisible by the difference");
    }
  }
  for (const auto& [e, c] : coeffs_)
    if (e[i] == 0 && e[j] == 0) throw std::domain_error("series is not divisible by the difference");
  return r;
}

TruncatedSeries TruncatedSeries::embed(int nvars, const std::vector<int>& positions) const {
  TruncatedSeries r(nvars, order_);
  for (const auto& [e, c] : coeffs_) {
    Exps d(nvars, 0);
    for (int k = 0; k < nvars_; ++k) d[positions[k]] += e[k];
    r.coeffs_.emplace(d, c);
  }
  return r;
}

bool TruncatedSeries::equal_through(const TruncatedSeries& o, int order) const {
  if (order > order_ || order > o.order_) throw InsufficientOrder("comparison beyond the known order");
  TruncatedSeries d = (*this - o).truncated(order);
  return d.known_zero();
}

std::vector<std::pair<TruncatedSeries::Exps, BigRat>> TruncatedSeries::sorted_terms() const {
  std::vector<std::pair<Exps, BigRat>> t(coeffs_.begin(), coeffs_.end());
  std::stable_sort(t.begin(), t.end(), [](const auto& a, const auto& b) {
    int da = total_degree(a.first), db = total_degree(b.first);
    if (da != db) return da < db;
    return a.first > b.first;
  });
  return t;
}

std::string TruncatedSeries::to_string(const std::vector<std::string>& names) const {
  std::string s;
  for (const auto& [e, c] : sorted_terms()) {
    std::string mono;
    for (int k = 0; k < nvars_; ++k) {
      if (e[k] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += names[k];
      if (e[k] > 1) mono += "^" + std::to_string(e[k]);
    }
    if (!s.empty()) s += sgn(c) < 0 ? " - " : " + ";
    else if (sgn(c) < 0) s += "-";
    std::string mag = BigRat(abs(c)).get_str();
    if (mono.empty())
      s += mag;
    else if (mag == "1")
      s += mono;
    else
      s += mag + "*" + mono;
  }
  if (s.empty()) s = "0";
  if (order_ < kExact) s += " + O(" + std::to_string(order_ + 1) + ")";
  return s;
}

TruncatedSeries compose(const TruncatedSeries& g, const std::vector<TruncatedSeries>& s) {
  if (static_cast<int>(s.size()) != g.nvars()) throw std::invalid_argument("compose needs one inner series per variable");
  if (s.empty()) return g;
  const int n = s[0].nvars();
  int vmin = TruncatedSeries::kExact;
  for (const auto& si : s) {
    if (si.nvars() != n) throw std::invalid_argument("inner series in different numbers of variables");
    if (si.coeffs().count(TruncatedSeries::Exps(n, 0))) throw std::invalid_argument("inner series must vanish at the origin");
    vmin = std::min(vmin, si.valuation());
  }
  const int limit = g.order() >= TruncatedSeries::kExact ? TruncatedSeries::kExact
                                                         : cap(static_cast<long>(g.order() + 1) * vmin - 1);
  const int ord = limit;
  std::vector<std::vector<TruncatedSeries>> pw(s.size());
  auto power = [&](int k, int e) -> const TruncatedSeries& {
    auto& v = pw[k];
    if (v.empty()) v.push_back(TruncatedSeries::constant(n, BigRat(1)));
    while (static_cast<int>(v.size()) <= e) v.push_back((v.back() * s[k]).truncated(limit));
    return v[e];
  };
  TruncatedSeries r(n, ord);
  for (const auto& [e, c] : g.coeffs()) {
    TruncatedSeries t = TruncatedSeries::constant(n, c);
    for (int k = 0; k < g.nvars(); ++k)
      if (e[k]) t = t * power(k, e[k]);
    r += t.truncated(limit);
  }
  return r.truncated(ord);
}

TruncatedSeries divided_difference(const TruncatedSeries& f, int nvars, int a, int b) {
  if (f.nvars() != 1) throw std::invalid_argument("divided difference needs a univariate series");
  TruncatedSeries r(nvars, f.order() >= TruncatedSeries::kExact ? TruncatedSeries::kExact : f.order() - 1);
  for (const auto& [e, c] : f.coeffs()) {
    for (int p = 0; p < e[0]; ++p) {
      TruncatedSeries::Exps m(nvars, 0);
      m[a] = p;
      m[b] = e[0] - 1 - p;
      r.add_to(m, c);
    }
  }
  return r;
}

TruncatedSeries reversion(const TruncatedSeries& s) {
  if (s.nvars() != 1 || s.valuation() != 1) throw std::invalid_argument("reversion needs a univariate series of valuation 1");
  const int ord = s.order();
  const BigRat c1 = s.coeff({1});
  TruncatedSeries x = TruncatedSeries::variable(1, 0);
  TruncatedSeries r = (x * (BigRat(1) / c1)).truncated(ord);
  for (int it = 1; it < ord; ++it) {
    TruncatedSeries err = compose(s, {r}) - x;
    r = (r - err * (BigRat(1) / c1)).truncated(ord);
  }
  return r;
}

TruncatedSeries series_of(const RF& f, const std::vector<std::string>& vars, const std::vector<TruncatedSeries>& subs) {
  if (vars.size() != subs.size() || subs.empty()) throw std::invalid_argument("series_of needs one substitution per variable");
  const int n = subs[0].nvars();
  const VarList& vl = *f.vars();
  std::vector<int> slot(vl.size(), -1);
  for (int i = 0; i < vl.size(); ++i) {
    auto it = std::find(vars.begin(), vars.end(), vl.name(i));
    if (it == vars.end()) {
      if (f.num().degree(i) || f.den().degree(i)) throw std::invalid_argument("unexpected variable " + vl.name(i));
      continue;
    }
    slot[i] = static_cast<int>(it - vars.begin());
  }
  std::vector<std::vector<TruncatedSeries>> pw(subs.size());
  auto power = [&](int k, unsigned e) -> const TruncatedSeries& {
    auto& v = pw[k];
    if (v.empty()) v.push_back(TruncatedSeries::constant(n, BigRat(1)));
    while (v.size() <= e) v.push_back(v.back() * subs[k]);
    return v[e];
  };
  auto eval = [&](const Poly& p) {
    TruncatedSeries r(n, TruncatedSeries::kExact);
    for (const auto& t : p.terms()) {
      TruncatedSeries m = TruncatedSeries::constant(n, BigRat(t.coef));
      for (int i = 0; i < vl.size(); ++i) {
        unsigned e = Poly::exp(t.mono, i);
        if (e) m = m * power(slot[i], e);
      }
      r += m;
    }
    return r;
  };
  TruncatedSeries num = eval(f.num()) * f.scale();
  return num * eval(f.den()).inverse();
}

}  // namespace xytr
