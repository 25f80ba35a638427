#pragma once

#include <gmpxx.h>

#include <string>

namespace picard {

// Arbitrary-precision rational scalar. mpq_class keeps values canonical
// (gcd-reduced, positive denominator), which is exactly the invariant we need.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational rational_pow(const Rational& base, unsigned long e) {
  Rational r(1);
  Rational b = base;
  while (e) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

// 2^e as a rational, e may be negative.
inline Rational pow2(long e) {
  Rational r(1);
  if (e >= 0)
    mpq_mul_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<unsigned long>(e));
  else
    mpq_div_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<unsigned long>(-e));
  return r;
}

std::string rational_to_string(const Rational& q);

}  // namespace picard
