#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "xytr/cas/bigrat.hpp"
#include "xytr/cas/varlist.hpp"

namespace xytr {

// Multivariate polynomial with integer coefficients. Exponents are packed
// into one 64-bit word, eight bits per variable, the first variable in the
// most significant byte; comparing words is then lexicographic order.
// Terms are kept strictly decreasing in that order with no zero coefficients.
class Poly {
 public:
  using Mono = std::uint64_t;
  static constexpr unsigned kMaxExp = 255;

  struct Term {
    Mono mono;
    Integer coef;
  };

  Poly() : vars_(VarList::empty()) {}
  explicit Poly(VarsPtr vars) : vars_(std::move(vars)) {}

  static Poly constant(VarsPtr vars, const Integer& c);
  static Poly variable(VarsPtr vars, int idx);
  static Poly variable(const std::string& name);
  // Takes ownership of unsorted terms; combines duplicates and drops zeros.
  static Poly from_terms(VarsPtr vars, std::vector<Term> terms);

  const VarsPtr& vars() const { return vars_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono == 0); }
  Integer constant_value() const;
  const Integer& lc() const { return terms_.front().coef; }
  Mono lm() const { return terms_.front().mono; }

  static unsigned exp(Mono m, int var) { return static_cast<unsigned>((m >> shift(var)) & 0xffu); }
  static Mono unit(int var) { return Mono{1} << shift(var); }
  static int shift(int var) { return 8 * (VarList::kMaxVars - 1 - var); }

  unsigned degree(int var) const;
  std::array<unsigned, VarList::kMaxVars> degrees() const;
  // Bit mask of variable indices actually occurring.
  unsigned support() const;
  int total_degree() const;

  Integer content() const;
  Integer max_norm() const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  Poly& operator*=(const Integer& c);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Integer& c) { return a *= c; }
  friend bool operator==(const Poly& a, const Poly& b);

  // Divides every coefficient exactly by c.
  Poly divexact(const Integer& c) const;
  Poly pow(unsigned e) const;
  Poly derivative(int var) const;
  // Value with variable var set to v (the variable stays in the list).
  Poly evaluate(int var, const Integer& v) const;
  // Coefficients with respect to one variable, index = exponent.
  std::vector<Poly> to_univariate(int var) const;
  static Poly from_univariate(const std::vector<Poly>& coeffs, int var);
  // Coefficients with respect to the variables in mask; each coefficient
  // is free of those variables.
  std::vector<Poly> coefficients_in(unsigned mask) const;
  // Same polynomial over a superset (or any list containing the support).
  Poly remap(const VarsPtr& target) const;
  // Drops unused variables from the list.
  Poly pruned() const;
  Poly multiply_mono(Mono m) const;
  Poly primitive() const;

  std::string to_string() const;

 private:
  VarsPtr vars_;
  std::vector<Term> terms_;
};

// Brings two polynomials onto a common variable list.
void unify(Poly& a, Poly& b);

// Exact quotient a / b if b divides a over the integers.
std::optional<Poly> divide_exact(const Poly& a, const Poly& b);

// Greatest common divisor with positive leading coefficient.
Poly gcd(const Poly& a, const Poly& b);

namespace detail {
// Primitive-PRS gcd of the primitive parts, bypassing the heuristic.
Poly gcd_prs(const Poly& a, const Poly& b);
}  // namespace detail

}  // namespace xytr
