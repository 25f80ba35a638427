#include "picard/interval.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace picard {

DyadicInterval operator*(const DyadicInterval& a, const DyadicInterval& b) {
  Rational p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo,
           p4 = a.hi * b.hi;
  return {std::min(std::min(p1, p2), std::min(p3, p4)),
          std::max(std::max(p1, p2), std::max(p3, p4))};
}

namespace {

Rational floor_to_grid(const Rational& q, long bits) {
  Rational scaled = q;
  mpq_mul_2exp(scaled.get_mpq_t(), scaled.get_mpq_t(),
               static_cast<unsigned long>(bits));
  Integer f;
  mpz_fdiv_q(f.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
  Rational r(f);
  mpq_div_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<unsigned long>(bits));
  return r;
}

Rational ceil_to_grid(const Rational& q, long bits) {
  Rational scaled = q;
  mpq_mul_2exp(scaled.get_mpq_t(), scaled.get_mpq_t(),
               static_cast<unsigned long>(bits));
  Integer c;
  mpz_cdiv_q(c.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
  Rational r(c);
  mpq_div_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<unsigned long>(bits));
  return r;
}

// arctan(1/n) enclosed by consecutive partial sums of the alternating series.
DyadicInterval atan_inv(long n, long bits) {
  // terms (-1)^k / ((2k+1) n^(2k+1)); stop once the next term < 2^-(bits+2)
  Rational sum(0);
  Rational npow(1, n);
  Rational n2(1, n * n);
  Rational tol = pow2(-(bits + 2));
  long k = 0;
  Rational last_mag;
  while (true) {
    Rational term = npow / Rational(2 * k + 1);
    if (k % 2 == 0)
      sum += term;
    else
      sum -= term;
    npow *= n2;
    last_mag = npow / Rational(2 * k + 3);
    if (last_mag < tol) break;
    ++k;
  }
  // remainder has the sign of the next term and magnitude below last_mag
  if (k % 2 == 0) return {sum - last_mag, sum};
  return {sum, sum + last_mag};
}

}  // namespace

DyadicInterval DyadicInterval::rounded(long bits) const {
  return {floor_to_grid(lo, bits), ceil_to_grid(hi, bits)};
}

DyadicInterval pi_enclosure(long bits) {
  // Machin: pi = 16 atan(1/5) - 4 atan(1/239)
  long b = bits + 8;
  DyadicInterval a5 = atan_inv(5, b);
  DyadicInterval a239 = atan_inv(239, b);
  DyadicInterval pi = Rational(16) * a5 - Rational(4) * a239;
  return pi.rounded(bits + 4);
}

namespace {

// cos/sin on [0, pi/2] via Taylor with alternating-series remainder.
// x is an enclosure of the true angle.
DyadicInterval cos_taylor(const DyadicInterval& x, long bits) {
  DyadicInterval sum = DyadicInterval::point(Rational(1));
  DyadicInterval x2 = x * x;
  DyadicInterval term = DyadicInterval::point(Rational(1));
  Rational tol = pow2(-(bits + 4));
  long k = 1;
  while (true) {
    term = term * x2;
    term = Rational(1, (2 * k - 1) * 2 * k) * term;
    if (k % 2 == 1)
      sum = sum - term;
    else
      sum = sum + term;
    // once (2k+1)(2k+2) > x_hi^2 the terms decrease; x <= 1.58 so always true
    Rational bound = term.hi * x2.hi / Rational((2 * k + 1) * (2 * k + 2));
    if (bound < tol && bound > -tol) {
      sum.lo -= bound;
      sum.hi += bound;
      break;
    }
    ++k;
  }
  return sum.rounded(bits);
}

DyadicInterval sin_taylor(const DyadicInterval& x, long bits) {
  DyadicInterval sum = x;
  DyadicInterval x2 = x * x;
  DyadicInterval term = x;
  Rational tol = pow2(-(bits + 4));
  long k = 1;
  while (true) {
    term = term * x2;
    term = Rational(1, 2 * k * (2 * k + 1)) * term;
    if (k % 2 == 1)
      sum = sum - term;
    else
      sum = sum + term;
    Rational bound = term.hi * x2.hi / Rational((2 * k + 2) * (2 * k + 3));
    if (bound < tol && bound > -tol) {
      sum.lo -= bound;
      sum.hi += bound;
      break;
    }
    ++k;
  }
  return sum.rounded(bits);
}

struct ZetaTable {
  std::mutex mutex;
  std::map<long, std::array<ComplexInterval, 36>> by_bits;
};

ZetaTable& zeta_table() {
  static ZetaTable t;
  return t;
}

std::array<ComplexInterval, 36> compute_zeta_row(long bits) {
  long b = bits + 6;
  DyadicInterval pi = pi_enclosure(b + 6);
  // base angles m*pi/18 for m in [0, 9] (first quadrant)
  std::array<DyadicInterval, 10> cosv, sinv;
  for (long m = 0; m <= 9; ++m) {
    DyadicInterval x = Rational(m, 18) * pi;
    cosv[static_cast<std::size_t>(m)] = cos_taylor(x, b);
    sinv[static_cast<std::size_t>(m)] = sin_taylor(x, b);
  }
  auto neg = [](const DyadicInterval& d) {
    return DyadicInterval{-d.hi, -d.lo};
  };
  std::array<ComplexInterval, 36> row;
  for (long k = 0; k < 36; ++k) {
    long m = k;
    ComplexInterval z;
    if (m <= 9) {
      z = {cosv[static_cast<std::size_t>(m)], sinv[static_cast<std::size_t>(m)]};
    } else if (m <= 18) {
      z = {neg(cosv[static_cast<std::size_t>(18 - m)]),
           sinv[static_cast<std::size_t>(18 - m)]};
    } else if (m <= 27) {
      z = {neg(cosv[static_cast<std::size_t>(m - 18)]),
           neg(sinv[static_cast<std::size_t>(m - 18)])};
    } else {
      z = {cosv[static_cast<std::size_t>(36 - m)],
           neg(sinv[static_cast<std::size_t>(36 - m)])};
    }
    row[static_cast<std::size_t>(k)] = z;
  }
  return row;
}

}  // namespace

ComplexInterval zeta36_enclosure(long k, long bits) {
  k %= 36;
  if (k < 0) k += 36;
  ZetaTable& t = zeta_table();
  std::lock_guard<std::mutex> lock(t.mutex);
  auto it = t.by_bits.find(bits);
  if (it == t.by_bits.end())
    it = t.by_bits.emplace(bits, compute_zeta_row(bits)).first;
  return it->second[static_cast<std::size_t>(k)];
}

ComplexInterval to_interval(const CycNum& a, long bits) {
  if (bits < 16) throw std::invalid_argument("to_interval: bits must be >= 16");
  ComplexInterval acc;
  for (int k = 0; k < CycNum::kDegree; ++k) {
    const Rational& c = a.coeff(k);
    if (c == 0) continue;
    acc = acc + c * zeta36_enclosure(k, bits);
  }
  acc.re = acc.re.rounded(bits);
  acc.im = acc.im.rounded(bits);
  return acc;
}

Sign sign_real(const RealCyc& a, const SignOptions& opts) {
  if (a.is_zero()) return Sign::zero;
  for (long bits = opts.start_bits; bits <= opts.max_bits; bits *= 2) {
    ComplexInterval box = to_interval(a.value(), bits);
    if (box.re.lo > 0) return Sign::positive;
    if (box.re.hi < 0) return Sign::negative;
  }
  throw PrecisionExceeded(opts.max_bits);
}

Sign sign_real(const CycNum& a, const SignOptions& opts) {
  return sign_real(RealCyc(a), opts);
}

}  // namespace picard
