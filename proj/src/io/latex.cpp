#include "xytr/io/latex.hpp"

#include <cctype>

namespace xytr {

namespace {

std::string rational_latex(const BigRat& c) {
  if (c.get_den() == 1) return c.get_num().get_str();
  return "\\frac{" + c.get_num().get_str() + "}{" + c.get_den().get_str() + "}";
}

// Terms of c * p with a leading sign handled by the caller.
std::string terms_latex(const Poly& p, const BigRat& scale) {
  if (p.is_zero() || sgn(scale) == 0) return "0";
  std::string s;
  bool first = true;
  for (const auto& t : p.terms()) {
    BigRat c = scale * BigRat(t.coef);
    if (sgn(c) < 0) {
      s += first ? "-" : " - ";
      c = -c;
    } else if (!first) {
      s += " + ";
    }
    first = false;
    std::string mono;
    for (int v = 0; v < p.vars()->size(); ++v) {
      unsigned e = Poly::exp(t.mono, v);
      if (!e) continue;
      if (!mono.empty()) mono += " ";
      mono += latex_name(p.vars()->name(v));
      if (e > 1) mono += "^{" + std::to_string(e) + "}";
    }
    if (mono.empty())
      s += rational_latex(c);
    else if (c == 1)
      s += mono;
    else
      s += rational_latex(c) + " " + mono;
  }
  return s;
}

}  // namespace

std::string latex_name(const std::string& var) {
  std::size_t k = var.size();
  while (k > 0 && std::isdigit(static_cast<unsigned char>(var[k - 1]))) --k;
  if (k == 0 || k == var.size()) return var;
  return var.substr(0, k) + "_{" + var.substr(k) + "}";
}

std::string to_latex(const Poly& p) { return terms_latex(p, BigRat(1)); }

std::string to_latex(const RF& f) {
  if (f.is_zero()) return "0";
  if (f.den().is_constant()) return terms_latex(f.num(), f.scale() / BigRat(f.den().constant_value()));
  BigRat s = f.scale();
  std::string sign;
  if (sgn(s) < 0) {
    sign = "-";
    s = -s;
  }
  BigRat num_scale(s.get_num());
  std::string num = terms_latex(f.num(), num_scale);
  Poly den = f.den() * Integer(s.get_den());
  return sign + "\\frac{" + num + "}{" + to_latex(den) + "}";
}

}  // namespace xytr
