#pragma once

#include <gmpxx.h>

#include <string>

namespace weitz {

// Exact coefficients. mpq_class keeps values canonical (lowest terms,
// positive denominator) after every arithmetic operation.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational make_rational(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

// "p" or "p/q"
inline std::string to_string(const Rational& r) { return r.get_str(); }

} // namespace weitz
