#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace ellfib {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Rational make_rational(long long num, long long den = 1) {
  return Rational(Integer(num), Integer(den));
}

// x^e for non-negative integer exponents.
inline Rational rational_pow(const Rational& x, int e) {
  Rational r = 1;
  Rational base = x;
  for (; e > 0; e >>= 1) {
    if (e & 1) r *= base;
    if (e > 1) base *= base;
  }
  return r;
}

// Largest integer <= q.
inline Integer floor_of(const Rational& q) {
  Integer n = numerator(q), d = denominator(q);
  Integer f = n / d;
  if (n % d != 0 && n < 0) --f;
  return f;
}

// q - floor(q), in [0, 1).
inline Rational fractional_part(const Rational& q) {
  return q - Rational(floor_of(q));
}

// "7/6" for non-integers, "1" for integers.
inline std::string rational_to_string(const Rational& q) {
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

}  // namespace ellfib
