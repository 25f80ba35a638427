#pragma once

#include <array>
#include <complex>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "picard/rational.hpp"

namespace picard {

struct DivisionByZero : std::domain_error {
  DivisionByZero() : std::domain_error("division by zero in Q(zeta_36)") {}
};
struct NotReal : std::domain_error {
  explicit NotReal(const std::string& what) : std::domain_error(what) {}
};
struct ParseError : std::runtime_error {
  ParseError(const std::string& what, std::size_t pos)
      : std::runtime_error(what + " at position " + std::to_string(pos)),
        position(pos) {}
  std::size_t position;
};

/// An element of the cyclotomic field Q(zeta_36), zeta = e^{2 pi i / 36}.
///
/// Coordinates are rationals over the power basis 1, zeta, ..., zeta^11 with
/// the reduction zeta^12 = zeta^6 - 1 (the minimal polynomial is
/// Phi_36(x) = x^12 - x^6 + 1). Every value is kept reduced, so equality is
/// coefficient-wise. The field contains omega = e^{2 pi i/3}, i, sqrt(3),
/// e^{pi i/9}, sin(pi/9) and every root of unity of order dividing 36.
class CycNum {
 public:
  static constexpr int kDegree = 12;
  using Coeffs = std::array<Rational, kDegree>;

  CycNum() = default;
  CycNum(long n) { c_[0] = n; }  // NOLINT: implicit by design
  CycNum(const Rational& q) { c_[0] = q; }  // NOLINT
  explicit CycNum(Coeffs c) : c_(std::move(c)) {}

  /// zeta^k for any integer k (reduced mod 36 and mod Phi_36).
  static CycNum zeta_pow(long k);

  const Rational& coeff(int i) const { return c_[static_cast<std::size_t>(i)]; }
  const Coeffs& coeffs() const { return c_; }

  bool is_zero() const;
  bool is_one() const { return *this == CycNum(1); }
  bool is_rational() const;
  /// True iff fixed by complex conjugation.
  bool is_real() const;

  friend CycNum operator+(const CycNum& a, const CycNum& b);
  friend CycNum operator-(const CycNum& a, const CycNum& b);
  friend CycNum operator*(const CycNum& a, const CycNum& b);
  friend CycNum operator/(const CycNum& a, const CycNum& b);
  CycNum operator-() const;
  CycNum& operator+=(const CycNum& o) { return *this = *this + o; }
  CycNum& operator-=(const CycNum& o) { return *this = *this - o; }
  CycNum& operator*=(const CycNum& o) { return *this = *this * o; }
  CycNum& operator/=(const CycNum& o) { return *this = *this / o; }
  friend bool operator==(const CycNum& a, const CycNum& b) {
    return a.c_ == b.c_;
  }
  friend bool operator!=(const CycNum& a, const CycNum& b) {
    return !(a == b);
  }

  /// Image under zeta -> zeta^-1; complex conjugation in the distinguished
  /// embedding.
  friend CycNum conj(const CycNum& a);

  /// Multiplicative inverse. Throws DivisionByZero on zero.
  CycNum inverse() const;

  /// 53-bit floating approximation in the distinguished embedding
  /// (unvalidated; exact predicates never use it).
  std::complex<double> to_double() const;

  /// Total order on coefficient vectors, used for canonical sorting only.
  static int compare(const CycNum& a, const CycNum& b);

  /// Polynomial text form in `z`, e.g. "1/2*z^6 - 1/2". Round-trips through
  /// parse(). Whitespace-insensitive on input.
  std::string to_string() const;
  static CycNum parse(const std::string& text);

 private:
  Coeffs c_{};  // value-initialized: all zero

  static void reduce(std::vector<Rational>& raw, Coeffs& out);
};

std::ostream& operator<<(std::ostream& os, const CycNum& x);

// Named constants of the field.
enum class Constant { omega, i, sqrt3, zeta18, zeta9, zeta36, sin_pi_9 };

/// Exact representative of a named constant.
CycNum embed(Constant name);

/// Real part (x + conj x)/2 and 2*Im(x) = -i (x - conj x); both stay in the
/// field and are conjugation-fixed.
CycNum real_part(const CycNum& x);
CycNum imag_part(const CycNum& x);  // the actual imaginary part, a real value

/// |x|^2 = x * conj(x), conjugation-fixed.
CycNum abs_sq(const CycNum& x);

/// A conjugation-fixed element of Q(zeta_36); the constructor checks the
/// invariant. Admits a total order via the distinguished embedding (see
/// sign_real in interval.hpp).
class RealCyc {
 public:
  RealCyc() = default;
  RealCyc(long n) : v_(n) {}          // NOLINT
  RealCyc(const Rational& q) : v_(q) {}  // NOLINT
  explicit RealCyc(CycNum v) : v_(std::move(v)) {
    if (!v_.is_real()) throw NotReal("value is not conjugation-fixed");
  }
  const CycNum& value() const { return v_; }
  operator const CycNum&() const { return v_; }  // NOLINT: cheap view

  bool is_zero() const { return v_.is_zero(); }
  friend RealCyc operator+(const RealCyc& a, const RealCyc& b) {
    return RealCyc::unchecked(a.v_ + b.v_);
  }
  friend RealCyc operator-(const RealCyc& a, const RealCyc& b) {
    return RealCyc::unchecked(a.v_ - b.v_);
  }
  friend RealCyc operator*(const RealCyc& a, const RealCyc& b) {
    return RealCyc::unchecked(a.v_ * b.v_);
  }
  friend RealCyc operator/(const RealCyc& a, const RealCyc& b) {
    return RealCyc::unchecked(a.v_ / b.v_);
  }
  friend bool operator==(const RealCyc& a, const RealCyc& b) {
    return a.v_ == b.v_;
  }

  static RealCyc unchecked(CycNum v) {
    RealCyc r;
    r.v_ = std::move(v);
    return r;
  }

 private:
  CycNum v_;
};

}  // namespace picard
