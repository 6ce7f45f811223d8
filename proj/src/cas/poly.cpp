#include "xytr/cas/poly.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <stdexcept>
#include <unordered_map>

namespace xytr {

namespace {

void sort_terms(std::vector<Poly::Term>& t) {
  std::sort(t.begin(), t.end(), [](const Poly::Term& a, const Poly::Term& b) { return a.mono > b.mono; });
}

// Sorted input, merges equal monomials and drops zeros in place.
void combine_sorted(std::vector<Poly::Term>& t) {
  std::size_t out = 0;
  for (std::size_t i = 0; i < t.size();) {
    std::size_t j = i + 1;
    Integer c = std::move(t[i].coef);
    while (j < t.size() && t[j].mono == t[i].mono) {
      c += t[j].coef;
      ++j;
    }
    if (sgn(c) != 0) {
      t[out].mono = t[i].mono;
      t[out].coef = std::move(c);
      ++out;
    }
    i = j;
  }
  t.resize(out);
}

bool mono_divides(Poly::Mono d, Poly::Mono m) {
  for (int v = 0; v < VarList::kMaxVars; ++v)
    if (Poly::exp(d, v) > Poly::exp(m, v)) return false;
  return true;
}

void check_product_degrees(const Poly& a, const Poly& b) {
  auto da = a.degrees(), db = b.degrees();
  for (int v = 0; v < VarList::kMaxVars; ++v)
    if (da[v] + db[v] > Poly::kMaxExp) throw std::overflow_error("exponent exceeds 255");
}

}  // namespace

Poly Poly::constant(VarsPtr vars, const Integer& c) {
  Poly p(std::move(vars));
  if (sgn(c) != 0) p.terms_.push_back({0, c});
  return p;
}

Poly Poly::variable(VarsPtr vars, int idx) {
  Poly p(std::move(vars));
  p.terms_.push_back({unit(idx), Integer(1)});
  return p;
}

Poly Poly::variable(const std::string& name) { return variable(VarList::make({name}), 0); }

Poly Poly::from_terms(VarsPtr vars, std::vector<Term> terms) {
  Poly p(std::move(vars));
  sort_terms(terms);
  combine_sorted(terms);
  p.terms_ = std::move(terms);
  return p;
}

Integer Poly::constant_value() const {
  if (terms_.empty()) return 0;
  if (terms_.size() != 1 || terms_[0].mono != 0) throw std::logic_error("polynomial is not constant");
  return terms_[0].coef;
}

unsigned Poly::degree(int var) const {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max(d, exp(t.mono, var));
  return d;
}

std::array<unsigned, VarList::kMaxVars> Poly::degrees() const {
  std::array<unsigned, VarList::kMaxVars> d{};
  for (const auto& t : terms_)
    for (int v = 0; v < vars_->size(); ++v) d[v] = std::max(d[v], exp(t.mono, v));
  return d;
}

unsigned Poly::support() const {
  Mono all = 0;
  for (const auto& t : terms_) all |= t.mono;
  unsigned mask = 0;
  for (int v = 0; v < VarList::kMaxVars; ++v)
    if (exp(all, v) != 0) mask |= 1u << v;
  return mask;
}

int Poly::total_degree() const {
  int best = -1;
  for (const auto& t : terms_) {
    int s = 0;
    for (int v = 0; v < VarList::kMaxVars; ++v) s += static_cast<int>(exp(t.mono, v));
    best = std::max(best, s);
  }
  return best;
}

Integer Poly::content() const {
  Integer g = 0;
  for (const auto& t : terms_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coef.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

Integer Poly::max_norm() const {
  Integer m = 0;
  for (const auto& t : terms_)
    if (mpz_cmpabs(t.coef.get_mpz_t(), m.get_mpz_t()) > 0) m = abs(t.coef);
  return m;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& t : r.terms_) t.coef = -t.coef;
  return r;
}

namespace {

template <bool Subtract>
void merge_into(std::vector<Poly::Term>& acc, const std::vector<Poly::Term>& other) {
  std::vector<Poly::Term> out;
  out.reserve(acc.size() + other.size());
  std::size_t i = 0, j = 0;
  while (i < acc.size() || j < other.size()) {
    if (j == other.size() || (i < acc.size() && acc[i].mono > other[j].mono)) {
      out.push_back(std::move(acc[i++]));
    } else if (i == acc.size() || other[j].mono > acc[i].mono) {
      out.push_back(other[j++]);
      if constexpr (Subtract) out.back().coef = -out.back().coef;
    } else {
      Integer c = std::move(acc[i].coef);
      if constexpr (Subtract)
        c -= other[j].coef;
      else
        c += other[j].coef;
      if (sgn(c) != 0) out.push_back({acc[i].mono, std::move(c)});
      ++i;
      ++j;
    }
  }
  acc = std::move(out);
}

}  // namespace

void unify(Poly& a, Poly& b) {
  if (same_vars(a.vars(), b.vars())) return;
  VarsPtr m = merge_vars(a.vars(), b.vars());
  if (!same_vars(m, a.vars())) a = a.remap(m);
  if (!same_vars(m, b.vars())) b = b.remap(m);
}

Poly& Poly::operator+=(const Poly& o) {
  if (!same_vars(vars_, o.vars_)) {
    Poly b = o;
    unify(*this, b);
    merge_into<false>(terms_, b.terms_);
    return *this;
  }
  merge_into<false>(terms_, o.terms_);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (!same_vars(vars_, o.vars_)) {
    Poly b = o;
    unify(*this, b);
    merge_into<true>(terms_, b.terms_);
    return *this;
  }
  merge_into<true>(terms_, o.terms_);
  return *this;
}

Poly& Poly::operator*=(const Integer& c) {
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coef *= c;
  return *this;
}

Poly& Poly::operator*=(const Poly& o) { return *this = *this * o; }

Poly operator*(const Poly& a0, const Poly& b0) {
  if (!same_vars(a0.vars_, b0.vars_)) {
    Poly a = a0, b = b0;
    unify(a, b);
    return a * b;
  }
  if (a0.is_zero() || b0.is_zero()) return Poly(a0.vars_);
  check_product_degrees(a0, b0);
  const Poly& a = a0.size() >= b0.size() ? a0 : b0;
  const Poly& b = a0.size() >= b0.size() ? b0 : a0;
  Poly r(a.vars_);
  if (b.size() == 1) {
    r.terms_.reserve(a.size());
    for (const auto& t : a.terms_) r.terms_.push_back({t.mono + b.terms_[0].mono, t.coef * b.terms_[0].coef});
    return r;
  }
  std::unordered_map<Poly::Mono, std::size_t> index;
  index.reserve(2 * a.size() * b.size());
  std::vector<Poly::Term> acc;
  for (const auto& s : a.terms_) {
    for (const auto& t : b.terms_) {
      Poly::Mono m = s.mono + t.mono;
      auto [it, fresh] = index.emplace(m, acc.size());
      if (fresh) {
        acc.push_back({m, Integer()});
        mpz_mul(acc.back().coef.get_mpz_t(), s.coef.get_mpz_t(), t.coef.get_mpz_t());
      } else {
        mpz_addmul(acc[it->second].coef.get_mpz_t(), s.coef.get_mpz_t(), t.coef.get_mpz_t());
      }
    }
  }
  acc.erase(std::remove_if(acc.begin(), acc.end(), [](const Poly::Term& t) { return sgn(t.coef) == 0; }), acc.end());
  sort_terms(acc);
  r.terms_ = std::move(acc);
  return r;
}

bool operator==(const Poly& a, const Poly& b) {
  if (!same_vars(a.vars_, b.vars_)) {
    Poly x = a, y = b;
    unify(x, y);
    return x == y;
  }
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (a.terms_[i].mono != b.terms_[i].mono || a.terms_[i].coef != b.terms_[i].coef) return false;
  return true;
}

Poly Poly::divexact(const Integer& c) const {
  Poly r = *this;
  for (auto& t : r.terms_) mpz_divexact(t.coef.get_mpz_t(), t.coef.get_mpz_t(), c.get_mpz_t());
  return r;
}

Poly Poly::pow(unsigned e) const {
  Poly result = constant(vars_, 1);
  Poly base = *this;
  while (e > 0) {
    if (e & 1u) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

Poly Poly::derivative(int var) const {
  Poly r(vars_);
  if (var < 0) return r;
  for (const auto& t : terms_) {
    unsigned e = exp(t.mono, var);
    if (e == 0) continue;
    r.terms_.push_back({t.mono - unit(var), t.coef * e});
  }
  return r;
}

Poly Poly::evaluate(int var, const Integer& v) const {
  unsigned d = degree(var);
  if (d == 0) return *this;
  std::vector<Integer> pw(d + 1);
  pw[0] = 1;
  for (unsigned k = 1; k <= d; ++k) pw[k] = pw[k - 1] * v;
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    unsigned e = exp(t.mono, var);
    Integer c = t.coef * pw[e];
    if (sgn(c) != 0) out.push_back({t.mono - e * unit(var), std::move(c)});
  }
  return from_terms(vars_, std::move(out));
}

std::vector<Poly> Poly::to_univariate(int var) const {
  std::vector<Poly> out(degree(var) + 1, Poly(vars_));
  for (const auto& t : terms_) {
    unsigned e = exp(t.mono, var);
    out[e].terms_.push_back({t.mono - e * unit(var), t.coef});
  }
  return out;
}

Poly Poly::from_univariate(const std::vector<Poly>& coeffs, int var) {
  VarsPtr vars = coeffs.empty() ? VarList::empty() : coeffs[0].vars_;
  std::vector<Term> all;
  for (std::size_t e = 0; e < coeffs.size(); ++e) {
    if (e > kMaxExp && !coeffs[e].is_zero()) throw std::overflow_error("exponent exceeds 255");
    for (const auto& t : coeffs[e].terms_) all.push_back({t.mono + e * unit(var), t.coef});
  }
  Poly r(vars);
  sort_terms(all);
  r.terms_ = std::move(all);
  return r;
}

std::vector<Poly> Poly::coefficients_in(unsigned mask) const {
  Mono bits = 0;
  for (int v = 0; v < VarList::kMaxVars; ++v)
    if (mask & (1u << v)) bits |= Mono{0xff} << shift(v);
  std::map<Mono, Poly, std::greater<Mono>> groups;
  for (const auto& t : terms_) {
    auto it = groups.try_emplace(t.mono & bits, Poly(vars_)).first;
    it->second.terms_.push_back({t.mono & ~bits, t.coef});
  }
  std::vector<Poly> out;
  out.reserve(groups.size());
  for (auto& [k, p] : groups) out.push_back(std::move(p));
  return out;
}

Poly Poly::remap(const VarsPtr& target) const {
  if (same_vars(vars_, target)) {
    Poly r = *this;
    r.vars_ = target;
    return r;
  }
  unsigned used = support();
  std::vector<int> dest(vars_->size(), -1);
  for (int v = 0; v < vars_->size(); ++v) {
    dest[v] = target->index(vars_->name(v));
    if (dest[v] < 0 && (used & (1u << v))) throw std::logic_error("remap target lacks variable " + vars_->name(v));
  }
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    Mono m = 0;
    for (int v = 0; v < vars_->size(); ++v) {
      unsigned e = exp(t.mono, v);
      if (e) m += Mono{e} << shift(dest[v]);
    }
    out.push_back({m, t.coef});
  }
  Poly r(target);
  sort_terms(out);
  r.terms_ = std::move(out);
  return r;
}

Poly Poly::pruned() const {
  unsigned used = support();
  std::vector<std::string> names;
  for (int v = 0; v < vars_->size(); ++v)
    if (used & (1u << v)) names.push_back(vars_->name(v));
  if (static_cast<int>(names.size()) == vars_->size()) return *this;
  return remap(VarList::make(std::move(names)));
}

Poly Poly::multiply_mono(Mono m) const {
  Poly r = *this;
  for (auto& t : r.terms_) t.mono += m;
  return r;
}

Poly Poly::primitive() const {
  if (is_zero()) return *this;
  Integer c = content();
  if (sgn(lc()) < 0) c = -c;
  return c == 1 ? *this : divexact(c);
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& t : terms_) {
    Integer c = t.coef;
    if (sgn(c) < 0) {
      s += "-";
      c = -c;
    } else if (!first) {
      s += "+";
    }
    first = false;
    std::string mono;
    for (int v = 0; v < vars_->size(); ++v) {
      unsigned e = exp(t.mono, v);
      if (!e) continue;
      if (!mono.empty()) mono += "*";
      mono += vars_->name(v);
      if (e > 1) mono += "^" + std::to_string(e);
    }
    if (mono.empty())
      s += c.get_str();
    else if (c == 1)
      s += mono;
    else
      s += c.get_str() + "*" + mono;
  }
  return s;
}

namespace {

struct HeapEntry {
  Poly::Mono mono;
  std::uint32_t qi;
  std::uint32_t bj;
  bool operator<(const HeapEntry& o) const { return mono < o.mono; }
};

}  // namespace

std::optional<Poly> divide_exact(const Poly& a0, const Poly& b0) {
  if (b0.is_zero()) throw std::domain_error("polynomial division by zero");
  Poly a = a0, b = b0;
  unify(a, b);
  if (a.is_zero()) return Poly(a.vars());
  auto da = a.degrees(), db = b.degrees();
  for (int v = 0; v < VarList::kMaxVars; ++v)
    if (db[v] > da[v]) return std::nullopt;
  if (b.size() == 1) {
    std::vector<Poly::Term> q;
    for (const auto& t : a.terms()) {
      if (!mono_divides(b.lm(), t.mono) || !mpz_divisible_p(t.coef.get_mpz_t(), b.lc().get_mpz_t()))
        return std::nullopt;
      Integer c;
      mpz_divexact(c.get_mpz_t(), t.coef.get_mpz_t(), b.lc().get_mpz_t());
      q.push_back({t.mono - b.lm(), std::move(c)});
    }
    return Poly::from_terms(a.vars(), std::move(q));
  }
  const auto& at = a.terms();
  const auto& bt = b.terms();
  std::vector<Poly::Term> q;
  std::priority_queue<HeapEntry> heap;
  std::size_t ai = 0;
  Integer c, prod;
  while (ai < at.size() || !heap.empty()) {
    Poly::Mono m;
    if (heap.empty() || (ai < at.size() && at[ai].mono >= heap.top().mono))
      m = at[ai].mono;
    else
      m = heap.top().mono;
    c = 0;
    if (ai < at.size() && at[ai].mono == m) c = at[ai++].coef;
    while (!heap.empty() && heap.top().mono == m) {
      HeapEntry e = heap.top();
      heap.pop();
      mpz_submul(c.get_mpz_t(), q[e.qi].coef.get_mpz_t(), bt[e.bj].coef.get_mpz_t());
      if (e.bj + 1 < bt.size()) heap.push({q[e.qi].mono + bt[e.bj + 1].mono, e.qi, e.bj + 1});
    }
    if (sgn(c) == 0) continue;
    if (!mono_divides(b.lm(), m) || !mpz_divisible_p(c.get_mpz_t(), b.lc().get_mpz_t())) return std::nullopt;
    Poly::Mono qm = m - b.lm();
    for (int v = 0; v < VarList::kMaxVars; ++v)
      if (Poly::exp(qm, v) + db[v] > da[v]) return std::nullopt;
    Integer qc;
    mpz_divexact(qc.get_mpz_t(), c.get_mpz_t(), b.lc().get_mpz_t());
    q.push_back({qm, std::move(qc)});
    heap.push({qm + bt[1].mono, static_cast<std::uint32_t>(q.size() - 1), 1});
  }
  return Poly::from_terms(a.vars(), std::move(q));
}

}  // namespace xytr
