#pragma once

#include <stdexcept>

#include "picard/cyclotomic.hpp"
#include "picard/rational.hpp"

namespace picard {

struct PrecisionExceeded : std::runtime_error {
  explicit PrecisionExceeded(long bits)
      : std::runtime_error("sign undecided at " + std::to_string(bits) +
                           " bits; value may not be exactly representable") {}
};

/// A closed interval with dyadic endpoints (denominators are powers of two).
/// All operations round outward, so an interval built for a value always
/// encloses it.
struct DyadicInterval {
  Rational lo{0};
  Rational hi{0};

  DyadicInterval() = default;
  DyadicInterval(Rational l, Rational h) : lo(std::move(l)), hi(std::move(h)) {}
  static DyadicInterval point(const Rational& q) { return {q, q}; }

  Rational width() const { return hi - lo; }
  bool contains_zero() const { return lo <= 0 && hi >= 0; }

  friend DyadicInterval operator+(const DyadicInterval& a,
                                  const DyadicInterval& b) {
    return {a.lo + b.lo, a.hi + b.hi};
  }
  friend DyadicInterval operator-(const DyadicInterval& a,
                                  const DyadicInterval& b) {
    return {a.lo - b.hi, a.hi - b.lo};
  }
  friend DyadicInterval operator*(const DyadicInterval& a,
                                  const DyadicInterval& b);
  /// Scale by an exact rational.
  friend DyadicInterval operator*(const Rational& q, const DyadicInterval& a) {
    return q >= 0 ? DyadicInterval{q * a.lo, q * a.hi}
                  : DyadicInterval{q * a.hi, q * a.lo};
  }

  /// Round endpoints outward onto the 2^-bits grid.
  DyadicInterval rounded(long bits) const;
};

/// Axis-aligned rectangle enclosing a complex value.
struct ComplexInterval {
  DyadicInterval re;
  DyadicInterval im;

  friend ComplexInterval operator+(const ComplexInterval& a,
                                   const ComplexInterval& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend ComplexInterval operator*(const Rational& q,
                                   const ComplexInterval& a) {
    return {q * a.re, q * a.im};
  }
  Rational width() const {
    Rational wr = re.width(), wi = im.width();
    return wr > wi ? wr : wi;
  }
};

/// Enclosure of pi with width <= 2^-bits.
DyadicInterval pi_enclosure(long bits);

/// Enclosure of zeta_36^k = e^{i k pi/18} with both box sides <= 2^-bits.
ComplexInterval zeta36_enclosure(long k, long bits);

/// Rigorous enclosure of the distinguished embedding of a field element.
/// Postcondition: each side width <= 2^(4-bits) * (1 + sum |c_i|).
ComplexInterval to_interval(const CycNum& a, long bits);

enum class Sign { negative = -1, zero = 0, positive = 1 };

struct SignOptions {
  long start_bits = 64;
  long max_bits = 4096;
};

/// Exact sign of a conjugation-fixed field element. Zero is decided by exact
/// coefficient comparison; a nonzero sign by interval refinement at doubling
/// precision, which terminates for every nonzero input. Throws
/// PrecisionExceeded past max_bits (unreachable for exact nonzero values of
/// moderate height) and NotReal if the argument is not conjugation-fixed.
Sign sign_real(const RealCyc& a, const SignOptions& opts = {});

/// Convenience overload that checks realness first.
Sign sign_real(const CycNum& a, const SignOptions& opts = {});

inline bool is_positive(const RealCyc& a) {
  return sign_real(a) == Sign::positive;
}
inline bool is_negative(const RealCyc& a) {
  return sign_real(a) == Sign::negative;
}

}  // namespace picard
