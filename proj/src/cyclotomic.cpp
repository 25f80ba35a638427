#include "picard/cyclotomic.hpp"

#include <cctype>
#include <cmath>
#include <ostream>
#include <sstream>
#include <vector>

namespace picard {

std::string rational_to_string(const Rational& q) {
  std::ostringstream os;
  os << q;
  return os.str();
}

void CycNum::reduce(std::vector<Rational>& raw, Coeffs& out) {
  // x^d = x^(d-6) - x^(d-12) for d >= 12, top down.
  for (int d = static_cast<int>(raw.size()) - 1; d >= kDegree; --d) {
    Rational c = raw[static_cast<std::size_t>(d)];
    if (c == 0) continue;
    raw[static_cast<std::size_t>(d - 6)] += c;
    raw[static_cast<std::size_t>(d - 12)] -= c;
    raw[static_cast<std::size_t>(d)] = 0;
  }
  for (int i = 0; i < kDegree; ++i)
    out[static_cast<std::size_t>(i)] =
        static_cast<std::size_t>(i) < raw.size()
            ? raw[static_cast<std::size_t>(i)]
            : Rational(0);
}

CycNum CycNum::zeta_pow(long k) {
  k %= 36;
  if (k < 0) k += 36;
  std::vector<Rational> raw(static_cast<std::size_t>(k) + 1, Rational(0));
  raw[static_cast<std::size_t>(k)] = 1;
  CycNum r;
  reduce(raw, r.c_);
  return r;
}

bool CycNum::is_zero() const {
  for (const auto& q : c_)
    if (q != 0) return false;
  return true;
}

bool CycNum::is_rational() const {
  for (int i = 1; i < kDegree; ++i)
    if (c_[static_cast<std::size_t>(i)] != 0) return false;
  return true;
}

bool CycNum::is_real() const { return conj(*this) == *this; }

CycNum operator+(const CycNum& a, const CycNum& b) {
  CycNum r;
  for (std::size_t i = 0; i < CycNum::kDegree; ++i) r.c_[i] = a.c_[i] + b.c_[i];
  return r;
}

CycNum operator-(const CycNum& a, const CycNum& b) {
  CycNum r;
  for (std::size_t i = 0; i < CycNum::kDegree; ++i) r.c_[i] = a.c_[i] - b.c_[i];
  return r;
}

CycNum CycNum::operator-() const {
  CycNum r;
  for (std::size_t i = 0; i < kDegree; ++i) r.c_[i] = -c_[i];
  return r;
}

CycNum operator*(const CycNum& a, const CycNum& b) {
  std::vector<Rational> raw(2 * CycNum::kDegree - 1, Rational(0));
  for (std::size_t i = 0; i < CycNum::kDegree; ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < CycNum::kDegree; ++j) {
      if (b.c_[j] == 0) continue;
      raw[i + j] += a.c_[i] * b.c_[j];
    }
  }
  CycNum r;
  CycNum::reduce(raw, r.c_);
  return r;
}

CycNum operator/(const CycNum& a, const CycNum& b) { return a * b.inverse(); }

CycNum conj(const CycNum& a) {
  // zeta^k -> zeta^(36-k), then reduce.
  std::vector<Rational> raw(36, Rational(0));
  raw[0] = a.c_[0];
  for (std::size_t k = 1; k < CycNum::kDegree; ++k)
    raw[36 - k] += a.c_[k];
  CycNum r;
  CycNum::reduce(raw, r.c_);
  return r;
}

namespace {

// Dense polynomials over Q, little-endian.
using Poly = std::vector<Rational>;

void poly_trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  poly_trim(r);
  return r;
}

Poly poly_sub(const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()), Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  poly_trim(r);
  return r;
}

// a = q*b + r with deg r < deg b.
void poly_divmod(const Poly& a, const Poly& b, Poly& q, Poly& r) {
  q.assign(a.size(), Rational(0));
  r = a;
  while (r.size() >= b.size() && !r.empty()) {
    Rational f = r.back() / b.back();
    std::size_t shift = r.size() - b.size();
    q[shift] += f;
    for (std::size_t i = 0; i < b.size(); ++i) r[shift + i] -= f * b[i];
    poly_trim(r);
  }
  poly_trim(q);
}

}  // namespace

CycNum CycNum::inverse() const {
  if (is_zero()) throw DivisionByZero();
  // Extended Euclid for gcd(a, Phi_36) = 1: u*a + v*Phi = 1, inverse = u.
  Poly phi(kDegree + 1, Rational(0));
  phi[0] = 1;
  phi[6] = -1;
  phi[12] = 1;
  Poly a(c_.begin(), c_.end());
  poly_trim(a);

  Poly r0 = phi, r1 = a;
  Poly u0 = {}, u1 = {Rational(1)};
  while (!r1.empty()) {
    Poly q, r2;
    poly_divmod(r0, r1, q, r2);
    Poly u2 = poly_sub(u0, poly_mul(q, u1));
    r0 = std::move(r1);
    r1 = std::move(r2);
    u0 = std::move(u1);
    u1 = std::move(u2);
  }
  // r0 is the gcd, a nonzero constant since Phi_36 is irreducible.
  Rational g = r0[0];
  CycNum inv;
  for (std::size_t i = 0; i < u0.size() && i < kDegree; ++i)
    inv.c_[i] = u0[i] / g;
  return inv;
}

std::complex<double> CycNum::to_double() const {
  std::complex<double> r = 0;
  for (int k = 0; k < kDegree; ++k) {
    const Rational& q = c_[static_cast<std::size_t>(k)];
    if (q == 0) continue;
    double angle = M_PI * static_cast<double>(k) / 18.0;
    r += q.get_d() * std::complex<double>(std::cos(angle), std::sin(angle));
  }
  return r;
}

int CycNum::compare(const CycNum& a, const CycNum& b) {
  for (std::size_t i = 0; i < kDegree; ++i) {
    int c = mpq_cmp(a.c_[i].get_mpq_t(), b.c_[i].get_mpq_t());
    if (c != 0) return c < 0 ? -1 : 1;
  }
  return 0;
}

std::string CycNum::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (int d = kDegree - 1; d >= 0; --d) {
    const Rational& q = c_[static_cast<std::size_t>(d)];
    if (q == 0) continue;
    Rational aq = abs(q);
    if (first) {
      if (q < 0) os << "-";
      first = false;
    } else {
      os << (q < 0 ? " - " : " + ");
    }
    if (d == 0) {
      os << aq;
    } else {
      if (aq != 1) os << aq << "*";
      os << "z";
      if (d > 1) os << "^" << d;
    }
  }
  if (first) os << "0";
  return os.str();
}

namespace {

struct CycParser {
  const std::string& s;
  std::size_t pos = 0;

  explicit CycParser(const std::string& text) : s(text) {}

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos])))
      ++pos;
  }
  bool peek(char c) {
    skip_ws();
    return pos < s.size() && s[pos] == c;
  }
  bool eat(char c) {
    if (peek(c)) {
      ++pos;
      return true;
    }
    return false;
  }

  Rational parse_unsigned_rational() {
    skip_ws();
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
      ++pos;
    if (pos == start) throw ParseError("expected number", pos);
    Integer num(s.substr(start, pos - start));
    Integer den(1);
    if (eat('/')) {
      skip_ws();
      std::size_t dstart = pos;
      while (pos < s.size() &&
             std::isdigit(static_cast<unsigned char>(s[pos])))
        ++pos;
      if (pos == dstart) throw ParseError("expected denominator", pos);
      den = Integer(s.substr(dstart, pos - dstart));
      if (den == 0) throw ParseError("zero denominator", dstart);
    }
    Rational q(num, den);
    q.canonicalize();
    return q;
  }

  long parse_exponent() {
    skip_ws();
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
      ++pos;
    if (pos == start) throw ParseError("expected exponent", pos);
    return std::stol(s.substr(start, pos - start));
  }

  // term := rational ['*'? zpow] | zpow ['*'? rational]? ; zpow := 'z'['^'int]
  CycNum parse_term() {
    skip_ws();
    Rational coef(1);
    bool have_coef = false;
    long zexp = -1;
    if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      coef = parse_unsigned_rational();
      have_coef = true;
      if (eat('*')) {
        // explicit product, a z-power must follow
        skip_ws();
      }
    }
    skip_ws();
    if (pos < s.size() && (s[pos] == 'z' || s[pos] == 'Z')) {
      ++pos;
      zexp = eat('^') ? parse_exponent() : 1;
      if (zexp < 0) throw ParseError("negative exponent", pos);
    } else if (!have_coef) {
      throw ParseError("expected coefficient or z", pos);
    }
    CycNum t = (zexp >= 0) ? CycNum::zeta_pow(zexp) : CycNum(1);
    return CycNum(coef) * t;
  }

  CycNum parse_sum() {
    CycNum acc;
    bool neg = false;
    skip_ws();
    if (eat('-'))
      neg = true;
    else
      eat('+');
    while (true) {
      CycNum t = parse_term();
      acc = neg ? acc - t : acc + t;
      skip_ws();
      if (eat('+'))
        neg = false;
      else if (eat('-'))
        neg = true;
      else
        break;
    }
    skip_ws();
    if (pos != s.size()) throw ParseError("trailing input", pos);
    return acc;
  }
};

}  // namespace

CycNum CycNum::parse(const std::string& text) {
  CycParser p(text);
  return p.parse_sum();
}

std::ostream& operator<<(std::ostream& os, const CycNum& x) {
  return os << x.to_string();
}

CycNum embed(Constant name) {
  switch (name) {
    case Constant::omega:
      return CycNum::zeta_pow(12);  // zeta^6 - 1
    case Constant::i:
      return CycNum::zeta_pow(9);
    case Constant::sqrt3:
      return CycNum::zeta_pow(3) + CycNum::zeta_pow(-3);
    case Constant::zeta18:
      return CycNum::zeta_pow(2);
    case Constant::zeta9:
      return CycNum::zeta_pow(4);
    case Constant::zeta36:
      return CycNum::zeta_pow(1);
    case Constant::sin_pi_9:
      return (CycNum::zeta_pow(2) - CycNum::zeta_pow(-2)) /
             (CycNum(2) * CycNum::zeta_pow(9));
  }
  throw std::logic_error("unknown constant");
}

CycNum real_part(const CycNum& x) {
  return (x + conj(x)) / CycNum(2);
}

CycNum imag_part(const CycNum& x) {
  // (x - conj x) / (2i)
  return (x - conj(x)) / (CycNum(2) * embed(Constant::i));
}

CycNum abs_sq(const CycNum& x) { return x * conj(x); }

}  // namespace picard
