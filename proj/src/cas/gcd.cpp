#include <algorithm>
#include <optional>
#include <stdexcept>

#include "xytr/cas/poly.hpp"

namespace xytr {

namespace {

constexpr int kHeuristicTries = 6;

struct HeuFailed {};

struct GcdTriple {
  Poly h, cf, cg;
};

int highest_var(unsigned mask) {
  for (int v = VarList::kMaxVars - 1; v >= 0; --v)
    if (mask & (1u << v)) return v;
  return -1;
}

Integer symmetric_mod(const Integer& c, const Integer& x) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), c.get_mpz_t(), x.get_mpz_t());
  Integer twice = 2 * r;
  if (twice > x) r -= x;
  return r;
}

// Reconstructs a polynomial in var from its value at var = x, reading the
// coefficients as balanced digits in base x.
Poly interpolate(Poly h, const Integer& x, int var) {
  std::vector<Poly> digits;
  while (!h.is_zero()) {
    std::vector<Poly::Term> g;
    for (const auto& t : h.terms()) {
      Integer r = symmetric_mod(t.coef, x);
      if (sgn(r) != 0) g.push_back({t.mono, r});
    }
    Poly gp = Poly::from_terms(h.vars(), std::move(g));
    h -= gp;
    h = h.divexact(x);
    digits.push_back(std::move(gp));
  }
  Poly f = Poly::from_univariate(digits, var);
  if (!f.is_zero() && sgn(f.lc()) < 0) f = -f;
  return f;
}

Integer integer_sqrt(const Integer& v) {
  Integer r;
  mpz_sqrt(r.get_mpz_t(), v.get_mpz_t());
  return r;
}

// Heuristic gcd by evaluation at large integers and balanced-digit
// interpolation, one variable at a time. Inputs nonzero.
GcdTriple heu_gcd(const Poly& f, const Poly& g) {
  unsigned mask = f.support() | g.support();
  if (mask == 0) {
    Integer a = f.constant_value(), b = g.constant_value();
    Integer h;
    mpz_gcd(h.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return {Poly::constant(f.vars(), h), Poly::constant(f.vars(), a / h), Poly::constant(f.vars(), b / h)};
  }
  int var = highest_var(mask);
  Integer cf = f.content(), cg = g.content();
  Integer common;
  mpz_gcd(common.get_mpz_t(), cf.get_mpz_t(), cg.get_mpz_t());
  Poly ff = f.divexact(common), gg = g.divexact(common);

  Integer fn = ff.max_norm(), gn = gg.max_norm();
  Integer b = 2 * std::min(fn, gn) + 29;
  Integer rf = fn / abs(ff.lc()), rg = gn / abs(gg.lc());
  Integer lower = 2 * std::min(rf, rg) + 4;
  Integer root_bound = 99 * integer_sqrt(b);
  Integer x = std::max(std::min(b, root_bound), lower);

  for (int attempt = 0; attempt < kHeuristicTries; ++attempt) {
    Poly fe = ff.evaluate(var, x), ge = gg.evaluate(var, x);
    if (!fe.is_zero() && !ge.is_zero()) {
      GcdTriple low = heu_gcd(fe, ge);
      Poly h = interpolate(low.h, x, var).primitive();
      if (!h.is_zero()) {
        if (auto qf = divide_exact(ff, h)) {
          if (auto qg = divide_exact(gg, h)) return {h * common, *qf, *qg};
        }
      }
      Poly cff = interpolate(low.cf, x, var);
      if (!cff.is_zero()) {
        if (auto hh = divide_exact(ff, cff)) {
          if (auto qg = divide_exact(gg, *hh)) return {*hh * common, cff, *qg};
        }
      }
      Poly cfg = interpolate(low.cg, x, var);
      if (!cfg.is_zero()) {
        if (auto hh = divide_exact(gg, cfg)) {
          if (auto qf = divide_exact(ff, *hh)) return {*hh * common, *qf, cfg};
        }
      }
    }
    x = 73794 * x * integer_sqrt(integer_sqrt(x)) / 27011;
  }
  throw HeuFailed{};
}

Poly gcd_primitive_inputs(const Poly& f, const Poly& g);

// Pseudo-remainder of univariate coefficient vectors.
std::vector<Poly> prem(std::vector<Poly> a, const std::vector<Poly>& b) {
  int db = static_cast<int>(b.size()) - 1;
  const Poly& lb = b.back();
  while (static_cast<int>(a.size()) - 1 >= db && !a.empty()) {
    int da = static_cast<int>(a.size()) - 1;
    Poly la = a.back();
    for (auto& c : a) c = c * lb;
    for (int k = 0; k <= db; ++k) a[da - db + k] -= la * b[k];
    while (!a.empty() && a.back().is_zero()) a.pop_back();
  }
  return a;
}

Poly content_in(const std::vector<Poly>& coeffs) {
  Poly c;
  bool first = true;
  for (const auto& p : coeffs) {
    if (p.is_zero()) continue;
    c = first ? p : gcd(c, p);
    first = false;
    if (c.is_constant() && abs(c.constant_value()) == 1) break;
  }
  return c;
}

std::vector<Poly> divide_all(const std::vector<Poly>& v, const Poly& c) {
  std::vector<Poly> out;
  out.reserve(v.size());
  for (const auto& p : v) {
    auto q = divide_exact(p, c);
    if (!q) throw std::logic_error("content does not divide " + p.to_string() + " by " + c.to_string());
    out.push_back(std::move(*q));
  }
  return out;
}

// Recursive primitive PRS in the highest common variable.
Poly prs_gcd(const Poly& f, const Poly& g) {
  unsigned mask = f.support() & g.support();
  int var = highest_var(mask);
  if (var < 0) return gcd_primitive_inputs(f, g);
  auto fu = f.to_univariate(var), gu = g.to_univariate(var);
  Poly cf = content_in(fu), cg = content_in(gu);
  Poly cont = gcd(cf, cg);
  auto a = divide_all(fu, cf), b = divide_all(gu, cg);
  if (a.size() < b.size()) std::swap(a, b);
  while (b.size() > 1) {
    auto r = prem(a, b);
    if (r.empty()) break;
    a = std::move(b);
    b = divide_all(r, content_in(r));
  }
  Poly h = b.size() > 1 ? Poly::from_univariate(divide_all(b, content_in(b)), var) : Poly::constant(f.vars(), 1);
  return (h * cont).primitive();
}

// f, g nonzero with positive-lc primitive parts handled by caller.
Poly gcd_primitive_inputs(const Poly& f, const Poly& g) {
  if (f.is_constant() || g.is_constant()) return Poly::constant(f.vars(), 1);
  if (f == g) return f;
  unsigned sf = f.support(), sg = g.support();
  unsigned only_f = sf & ~sg, only_g = sg & ~sf;
  if (only_f || only_g) {
    std::vector<Poly> parts;
    if (only_f) {
      auto c = f.coefficients_in(only_f);
      parts.insert(parts.end(), c.begin(), c.end());
    } else {
      parts.push_back(f);
    }
    if (only_g) {
      auto c = g.coefficients_in(only_g);
      parts.insert(parts.end(), c.begin(), c.end());
    } else {
      parts.push_back(g);
    }
    std::sort(parts.begin(), parts.end(), [](const Poly& a, const Poly& b) { return a.size() < b.size(); });
    Poly h = parts[0].primitive();
    for (std::size_t i = 1; i < parts.size() && !h.is_constant(); ++i) h = gcd_primitive_inputs(h, parts[i].primitive());
    return h;
  }
  if (f.size() <= g.size()) {
    if (auto q = divide_exact(g, f)) return f;
  } else if (auto q = divide_exact(f, g)) {
    return g;
  }
  try {
    return heu_gcd(f, g).h.primitive();
  } catch (const HeuFailed&) {
    return prs_gcd(f, g);
  }
}

}  // namespace

namespace detail {

Poly gcd_prs(const Poly& a0, const Poly& b0) {
  Poly a = a0.primitive(), b = b0.primitive();
  unify(a, b);
  if (a.is_constant() || b.is_constant()) return Poly::constant(a.vars(), 1);
  return prs_gcd(a, b);
}

}  // namespace detail

Poly gcd(const Poly& a0, const Poly& b0) {
  Poly a = a0, b = b0;
  unify(a, b);
  if (a.is_zero()) return b.is_zero() ? b : (sgn(b.lc()) < 0 ? -b : b);
  if (b.is_zero()) return sgn(a.lc()) < 0 ? -a : a;
  Integer ca = a.content(), cb = b.content();
  Integer c;
  mpz_gcd(c.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
  Poly h = gcd_primitive_inputs(a.primitive(), b.primitive());
  return h * c;
}

}  // namespace xytr
