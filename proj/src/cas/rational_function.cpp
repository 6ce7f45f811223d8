#include "xytr/cas/rational_function.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "xytr/errors.hpp"

namespace xytr {

namespace {

Poly one_over(const VarsPtr& v) { return Poly::constant(v, 1); }

// Sign-adjusted content: p / c is primitive with positive leading coefficient.
Integer signed_content(const Poly& p) {
  Integer c = p.content();
  if (sgn(p.lc()) < 0) c = -c;
  return c;
}

Poly exact_quotient(const Poly& a, const Poly& b) {
  auto q = divide_exact(a, b);
  if (!q) throw std::logic_error("expected exact polynomial division");
  return *q;
}

std::string coef_times(const BigRat& c, const std::string& mono) {
  if (mono.empty()) return c.get_str();
  if (c == 1) return mono;
  if (c == -1) return "-" + mono;
  return c.get_str() + "*" + mono;
}

std::string mono_string(const VarsPtr& vars, Poly::Mono m) {
  std::string s;
  for (int v = 0; v < vars->size(); ++v) {
    unsigned e = Poly::exp(m, v);
    if (!e) continue;
    if (!s.empty()) s += "*";
    s += vars->name(v);
    if (e > 1) s += "^" + std::to_string(e);
  }
  return s;
}

}  // namespace

RationalFunction::RationalFunction() : scale_(0), num_(one_over(VarList::empty())), den_(one_over(VarList::empty())) {}

RationalFunction::RationalFunction(long v) : RationalFunction(BigRat(v)) {}

RationalFunction::RationalFunction(const BigRat& v) : RationalFunction() {
  scale_ = v;
}

RationalFunction::RationalFunction(const Poly& p) : RationalFunction() {
  if (p.is_zero()) return;
  *this = from_coprime(1, p, one_over(p.vars()));
}

RationalFunction RationalFunction::variable(const std::string& name) { return RationalFunction(Poly::variable(name)); }

RationalFunction RationalFunction::from_coprime(BigRat scale, Poly num, Poly den) {
  if (den.is_zero()) throw DivisionByZero();
  if (num.is_zero() || sgn(scale) == 0) return RationalFunction();
  unify(num, den);
  Integer cn = signed_content(num), cd = signed_content(den);
  RationalFunction r;
  r.scale_ = scale * BigRat(cn) / BigRat(cd);
  r.num_ = cn == 1 ? std::move(num) : num.divexact(cn);
  r.den_ = cd == 1 ? std::move(den) : den.divexact(cd);
  return r;
}

RationalFunction RationalFunction::fraction(const BigRat& scale, const Poly& num0, const Poly& den0) {
  if (den0.is_zero()) throw DivisionByZero();
  if (num0.is_zero() || sgn(scale) == 0) return RationalFunction();
  Poly num = num0, den = den0;
  unify(num, den);
  if (!den.is_constant() && !num.is_constant()) {
    Poly g = gcd(num, den);
    if (!g.is_constant()) {
      num = exact_quotient(num, g);
      den = exact_quotient(den, g);
    }
  }
  return from_coprime(scale, std::move(num), std::move(den));
}

RationalFunction RationalFunction::fraction(const Poly& num, const Poly& den) { return fraction(1, num, den); }

std::pair<Poly, Integer> RationalFunction::rational_numerator() const {
  Integer q = scale_.get_den();
  return {num_ * Integer(scale_.get_num()), q};
}

BigRat RationalFunction::constant_value() const {
  if (!is_constant()) throw std::logic_error("rational function is not constant");
  return scale_;
}

bool RationalFunction::depends_on(const std::string& var) const {
  int i = vars()->index(var);
  if (i < 0 || is_zero()) return false;
  return ((num_.support() | den_.support()) >> i) & 1u;
}

std::vector<std::string> RationalFunction::used_variables() const {
  std::vector<std::string> out;
  if (is_zero()) return out;
  unsigned mask = num_.support() | den_.support();
  for (int v = 0; v < vars()->size(); ++v)
    if (mask & (1u << v)) out.push_back(vars()->name(v));
  return out;
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction r = *this;
  r.scale_ = -r.scale_;
  return r;
}

RationalFunction RationalFunction::inverse() const {
  if (is_zero()) throw DivisionByZero();
  return from_coprime(1 / scale_, den_, num_);
}

RationalFunction RationalFunction::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  if (e == 0) return RationalFunction(1);
  if (is_zero()) return *this;
  RationalFunction r;
  mpz_pow_ui(r.scale_.get_num_mpz_t(), scale_.get_num_mpz_t(), e);
  mpz_pow_ui(r.scale_.get_den_mpz_t(), scale_.get_den_mpz_t(), e);
  r.num_ = num_.pow(e);
  r.den_ = den_.pow(e);
  return r;
}

RationalFunction operator+(const RationalFunction& a0, const RationalFunction& b0) {
  if (a0.is_zero()) return b0;
  if (b0.is_zero()) return a0;
  Poly n1 = a0.num_, d1 = a0.den_, n2 = b0.num_, d2 = b0.den_;
  if (!same_vars(n1.vars(), n2.vars())) {
    VarsPtr m = merge_vars(n1.vars(), n2.vars());
    n1 = n1.remap(m), d1 = d1.remap(m), n2 = n2.remap(m), d2 = d2.remap(m);
  }
  Integer p1 = a0.scale_.get_num(), q1 = a0.scale_.get_den();
  Integer p2 = b0.scale_.get_num(), q2 = b0.scale_.get_den();
  BigRat scale(1, 1);
  mpz_mul(scale.get_den_mpz_t(), q1.get_mpz_t(), q2.get_mpz_t());
  scale.canonicalize();
  Integer f1 = p1 * q2, f2 = p2 * q1;
  if (d1 == d2) {
    Poly s = n1 * f1 + n2 * f2;
    if (s.is_zero()) return RationalFunction();
    return RationalFunction::fraction(scale, s, d1);
  }
  Poly g = gcd(d1, d2);
  if (g.is_constant()) {
    Poly s = n1 * d2 * f1 + n2 * d1 * f2;
    if (s.is_zero()) return RationalFunction();
    return RationalFunction::from_coprime(scale, std::move(s), d1 * d2);
  }
  Poly e1 = exact_quotient(d1, g), e2 = exact_quotient(d2, g);
  Poly s = n1 * e2 * f1 + n2 * e1 * f2;
  if (s.is_zero()) return RationalFunction();
  Poly h = gcd(s, g);
  if (!h.is_constant()) {
    s = exact_quotient(s, h);
    g = exact_quotient(g, h);
  }
  return RationalFunction::from_coprime(scale, std::move(s), g * e1 * e2);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }

RationalFunction operator*(const RationalFunction& a0, const RationalFunction& b0) {
  if (a0.is_zero() || b0.is_zero()) return RationalFunction();
  Poly n1 = a0.num_, d1 = a0.den_, n2 = b0.num_, d2 = b0.den_;
  if (!same_vars(n1.vars(), n2.vars())) {
    VarsPtr m = merge_vars(n1.vars(), n2.vars());
    n1 = n1.remap(m), d1 = d1.remap(m), n2 = n2.remap(m), d2 = d2.remap(m);
  }
  if (!n1.is_constant() && !d2.is_constant()) {
    Poly g = gcd(n1, d2);
    if (!g.is_constant()) {
      n1 = exact_quotient(n1, g);
      d2 = exact_quotient(d2, g);
    }
  }
  if (!n2.is_constant() && !d1.is_constant()) {
    Poly g = gcd(n2, d1);
    if (!g.is_constant()) {
      n2 = exact_quotient(n2, g);
      d1 = exact_quotient(d1, g);
    }
  }
  return RationalFunction::from_coprime(a0.scale_ * b0.scale_, n1 * n2, d1 * d2);
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) { return a * b.inverse(); }

RationalFunction operator*(const RationalFunction& a, const BigRat& c) {
  if (sgn(c) == 0) return RationalFunction();
  RationalFunction r = a;
  r.scale_ *= c;
  return r;
}

bool operator==(const RationalFunction& a, const RationalFunction& b) {
  if (a.scale_ != b.scale_) return false;
  if (a.is_zero()) return true;
  return a.num_ == b.num_ && a.den_ == b.den_;
}

RationalFunction RationalFunction::pruned() const {
  if (is_zero()) return RationalFunction();
  unsigned mask = num_.support() | den_.support();
  std::vector<std::string> names;
  for (int v = 0; v < vars()->size(); ++v)
    if (mask & (1u << v)) names.push_back(vars()->name(v));
  if (static_cast<int>(names.size()) == vars()->size()) return *this;
  return remap(VarList::make(std::move(names)));
}

RationalFunction RationalFunction::remap(const VarsPtr& v) const {
  if (is_zero()) return RationalFunction();
  RationalFunction r = *this;
  r.num_ = num_.remap(v);
  r.den_ = den_.remap(v);
  return r;
}

std::string RationalFunction::to_string() const {
  if (is_zero()) return "0";
  RationalFunction p = pruned();
  std::string n;
  bool first = true;
  for (const auto& t : p.num_.terms()) {
    BigRat c = p.scale_ * BigRat(t.coef);
    std::string piece = coef_times(c, mono_string(p.vars(), t.mono));
    if (!first && piece[0] != '-') n += "+";
    n += piece;
    first = false;
  }
  if (p.den_.is_constant()) return n;
  std::string d = p.den_.to_string();
  bool den_simple = p.den_.size() == 1 && d.find('*') == std::string::npos;
  if (p.num_.size() > 1) n = "(" + n + ")";
  return n + "/" + (den_simple ? d : "(" + d + ")");
}

bool equals(const RF& f, const RF& g) { return (f - g).is_zero(); }

RF normalize(const Poly& num, const Poly& den) { return RF::fraction(num, den); }

RF diff(const RF& f, const std::string& var) {
  int i = f.vars()->index(var);
  if (i < 0 || f.is_zero()) return RF();
  const Poly& n = f.num();
  const Poly& d = f.den();
  Poly dn = n.derivative(i);
  if (d.degree(i) == 0) return RF::fraction(f.scale(), dn, d);
  Poly dd = d.derivative(i);
  Poly g = gcd(d, dd);
  Poly e = exact_quotient(d, g), de = exact_quotient(dd, g);
  Poly t = dn * e - n * de;
  return RF::fraction(f.scale(), t, d * e);
}

namespace {

struct Homogenized {
  Poly value;
  unsigned degree;
};

// Sum_k P_k GN^k GD^(d-k) for P = Sum_k P_k var^k.
Homogenized horner(const Poly& p, int var, const Poly& gn, const std::vector<Poly>& gd_pow) {
  auto coeffs = p.to_univariate(var);
  unsigned d = static_cast<unsigned>(coeffs.size()) - 1;
  Poly h = coeffs[d];
  for (int k = static_cast<int>(d) - 1; k >= 0; --k) {
    h = h * gn;
    if (!coeffs[k].is_zero()) h += coeffs[k] * gd_pow[d - k];
  }
  return {h, d};
}

}  // namespace

RF substitute(const RF& f, const std::string& var, const RF& g) {
  if (!f.depends_on(var)) return f;
  VarsPtr m = merge_vars(f.vars(), g.is_zero() ? VarList::empty() : g.vars());
  int i = m->index(var);
  Poly fn = f.num().remap(m), fd = f.den().remap(m);
  Poly gn = g.is_zero() ? Poly(m) : g.num().remap(m) * Integer(g.scale().get_num());
  Poly gd = g.is_zero() ? Poly::constant(m, 1) : g.den().remap(m) * Integer(g.scale().get_den());
  unsigned maxd = std::max(fn.degree(i), fd.degree(i));
  std::vector<Poly> gd_pow(maxd + 1);
  gd_pow[0] = Poly::constant(m, 1);
  for (unsigned k = 1; k <= maxd; ++k) gd_pow[k] = gd_pow[k - 1] * gd;
  Homogenized hn = horner(fn, i, gn, gd_pow);
  Homogenized hd = horner(fd, i, gn, gd_pow);
  if (hd.value.is_zero()) throw PoleEverywhere();
  Poly num = hn.value, den = hd.value;
  if (hd.degree > hn.degree)
    num = num * gd_pow[hd.degree - hn.degree];
  else if (hn.degree > hd.degree)
    den = den * gd_pow[hn.degree - hd.degree];
  return RF::fraction(f.scale(), num, den).pruned();
}

RF rename(const RF& f, const std::map<std::string, std::string>& names) {
  if (f.is_zero()) return f;
  RF p = f.pruned();
  std::vector<std::string> target;
  for (const auto& n : p.vars()->names()) {
    auto it = names.find(n);
    target.push_back(it == names.end() ? n : it->second);
  }
  std::set<std::string> uniq(target.begin(), target.end());
  if (uniq.size() != target.size()) throw std::invalid_argument("rename maps two variables to one name");
  VarsPtr nv = VarList::make(target);
  std::vector<int> dest;
  for (const auto& t : target) dest.push_back(nv->index(t));
  auto move_poly = [&](const Poly& q) {
    std::vector<Poly::Term> terms;
    terms.reserve(q.size());
    for (const auto& t : q.terms()) {
      Poly::Mono mm = 0;
      for (int v = 0; v < q.vars()->size(); ++v) {
        unsigned e = Poly::exp(t.mono, v);
        if (e) mm += Poly::Mono{e} << Poly::shift(dest[v]);
      }
      terms.push_back({mm, t.coef});
    }
    return Poly::from_terms(nv, std::move(terms));
  };
  return RF::fraction(p.scale(), move_poly(p.num()), move_poly(p.den()));
}

RF limit_at(const RF& f, const std::string& var, const RF& a) {
  if (!f.depends_on(var)) return f;
  RF den_at = substitute(RF(f.den()), var, a);
  if (den_at.is_zero()) throw PoleAtLimit();
  return substitute(f, var, a);
}

RF evaluate(const RF& f, const std::string& var, const BigRat& a) { return substitute(f, var, RF(a)); }

std::pair<Poly, Integer> taylor_shift(const Poly& p, int var, const BigRat& a) {
  auto coeffs = p.to_univariate(var);
  unsigned d = static_cast<unsigned>(coeffs.size()) - 1;
  Integer P = a.get_num(), Q = a.get_den();
  Poly lin = Poly::variable(p.vars(), var) * Q + Poly::constant(p.vars(), P);
  std::vector<Integer> qpow(d + 1);
  qpow[0] = 1;
  for (unsigned k = 1; k <= d; ++k) qpow[k] = qpow[k - 1] * Q;
  Poly h = coeffs[d];
  for (int k = static_cast<int>(d) - 1; k >= 0; --k) {
    h = h * lin;
    if (!coeffs[k].is_zero()) h += coeffs[k] * qpow[d - k];
  }
  return {h, qpow[d]};
}

int root_multiplicity(const Poly& p, const std::string& var, const BigRat& a) {
  int i = p.vars()->index(var);
  if (i < 0 || p.degree(i) == 0) return 0;
  Poly s = taylor_shift(p, i, a).first;
  unsigned best = Poly::kMaxExp + 1;
  for (const auto& t : s.terms()) best = std::min(best, Poly::exp(t.mono, i));
  return static_cast<int>(best);
}

int valuation_at(const RF& f, const std::string& var, const BigRat& a) {
  if (f.is_zero()) throw std::domain_error("valuation of zero");
  return root_multiplicity(f.num(), var, a) - root_multiplicity(f.den(), var, a);
}

namespace {

std::vector<Integer> divisors(Integer n) {
  n = abs(n);
  std::vector<std::pair<Integer, int>> factors;
  Integer d = 2;
  while (d * d <= n) {
    if (d > 10000000) throw std::runtime_error("coefficient too large for rational root search");
    int e = 0;
    while (mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t())) {
      n /= d;
      ++e;
    }
    if (e) factors.push_back({d, e});
    d += d == 2 ? 1 : 2;
  }
  if (n > 1) factors.push_back({n, 1});
  std::vector<Integer> out{1};
  for (const auto& [pr, e] : factors) {
    std::size_t base = out.size();
    Integer pk = 1;
    for (int k = 1; k <= e; ++k) {
      pk *= pr;
      for (std::size_t j = 0; j < base; ++j) out.push_back(out[j] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

RationalRoots rational_roots(const Poly& p0) {
  if (p0.is_zero()) throw std::domain_error("rational_roots of zero polynomial");
  Poly p = p0.pruned().primitive();
  RationalRoots out;
  if (p.vars()->size() > 1) throw std::invalid_argument("rational_roots expects a univariate polynomial");
  if (p.vars()->size() == 0 || p.degree(0) == 0) {
    out.exhausted = true;
    return out;
  }
  const int var = 0;
  const unsigned degree = p.degree(var);
  unsigned low = Poly::kMaxExp;
  for (const auto& t : p.terms()) low = std::min(low, Poly::exp(t.mono, var));
  unsigned found = 0;
  if (low > 0) {
    out.roots.push_back({BigRat(0), static_cast<int>(low)});
    found += low;
    std::vector<Poly::Term> shifted;
    for (const auto& t : p.terms()) shifted.push_back({t.mono - low * Poly::unit(var), t.coef});
    p = Poly::from_terms(p.vars(), std::move(shifted));
  }
  if (p.degree(var) > 0) {
    auto coeffs = p.to_univariate(var);
    auto nums = divisors(coeffs.front().constant_value());
    auto dens = divisors(coeffs.back().constant_value());
    std::set<BigRat> candidates;
    for (const auto& r : nums)
      for (const auto& s : dens) {
        candidates.insert(make_rat(r, s));
        candidates.insert(make_rat(-r, s));
      }
    for (const auto& c : candidates) {
      if (p.degree(var) == 0) break;
      Poly lin = Poly::variable(p.vars(), var) * Integer(c.get_den()) - Poly::constant(p.vars(), c.get_num());
      int mult = 0;
      while (p.degree(var) > 0) {
        auto q = divide_exact(p, lin);
        if (!q) break;
        p = *q;
        ++mult;
      }
      if (mult) {
        out.roots.push_back({c, mult});
        found += mult;
      }
    }
  }
  std::sort(out.roots.begin(), out.roots.end());
  out.exhausted = found == degree;
  return out;
}

}  // namespace xytr
