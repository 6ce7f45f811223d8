#pragma once

#include <gmpxx.h>

#include <string>

namespace xytr {

using Integer = mpz_class;
using BigRat = mpq_class;

inline BigRat make_rat(const Integer& num, const Integer& den = 1) {
  BigRat r(num, den);
  r.canonicalize();
  return r;
}

inline std::string to_string(const Integer& v) { return v.get_str(); }

// "p" or "p/q"
inline std::string to_string(const BigRat& v) { return v.get_str(); }

inline bool is_zero(const BigRat& v) { return sgn(v) == 0; }

}  // namespace xytr
