#include <doctest.h>

#include <cmath>
#include <random>

#include "picard/cyclotomic.hpp"
#include "picard/interval.hpp"

using namespace picard;

namespace {

CycNum zeta(long k) { return CycNum::zeta_pow(k); }

std::mt19937_64 rng(12345);

CycNum random_cyc() {
  std::uniform_int_distribution<int> pos(0, 11);
  std::uniform_int_distribution<long> num(-9, 9);
  std::uniform_int_distribution<long> den(1, 9);
  CycNum::Coeffs c{};
  for (int k = 0; k < 3; ++k) {
    Rational q(num(rng), den(rng));
    q.canonicalize();
    c[static_cast<std::size_t>(pos(rng))] = q;
  }
  return CycNum(std::move(c));
}

}  // namespace

TEST_CASE("defining relation of the 36th cyclotomic polynomial") {
  // zeta^12 = zeta^6 - 1 exactly
  CHECK(zeta(6) * zeta(6) == zeta(6) - CycNum(1));
  CHECK(zeta(12) == zeta(6) - CycNum(1));
  CHECK(zeta(36) == CycNum(1));
  CHECK(zeta(-1) == zeta(35));
}

TEST_CASE("omega is a primitive cube root of unity") {
  CycNum w = embed(Constant::omega);
  CHECK(w == zeta(6) - CycNum(1));
  CHECK(w * w * w == CycNum(1));
  CHECK(w != CycNum(1));
  CHECK(w + conj(w) == CycNum(-1));
  CHECK(conj(w) == w * w);
  CHECK(CycNum(1) + w + w * w == CycNum(0));
}

TEST_CASE("i squares to -1 and conjugates to -i") {
  CycNum i = embed(Constant::i);
  CHECK(i == zeta(9));
  CHECK(i * i == CycNum(-1));
  CHECK(conj(i) == -i);
}

TEST_CASE("sqrt3 and sin(pi/9) against numeric oracles") {
  CycNum s3 = embed(Constant::sqrt3);
  CHECK(s3 * s3 == CycNum(3));
  CHECK(conj(s3) == s3);
  CHECK(std::abs(s3.to_double().real() - std::sqrt(3.0)) < 1e-12);
  CHECK(std::abs(s3.to_double().imag()) < 1e-12);

  CycNum s = embed(Constant::sin_pi_9);
  CHECK(conj(s) == s);
  CHECK(std::abs(s.to_double().real() - std::sin(M_PI / 9)) < 1e-12);

  CHECK(std::abs(embed(Constant::zeta18).to_double().real() -
                 std::cos(M_PI / 9)) < 1e-12);
  CHECK(embed(Constant::zeta9) == zeta(4));
}

TEST_CASE("field axioms on random triples") {
  for (int n = 0; n < 1000; ++n) {
    CycNum a = random_cyc(), b = random_cyc(), c = random_cyc();
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(conj(a * b) == conj(a) * conj(b));
    CHECK(conj(conj(a)) == a);
    if (!a.is_zero()) CHECK(a * a.inverse() == CycNum(1));
  }
}

TEST_CASE("division by zero raises") {
  CHECK_THROWS_AS(CycNum(1) / CycNum(0), DivisionByZero);
}

TEST_CASE("conjugation is an automorphism of every power basis element") {
  for (long k = 0; k < 36; ++k) {
    CHECK(conj(zeta(k)) == zeta(-k));
    CHECK(zeta(k) * zeta(-k) == CycNum(1));
  }
}

TEST_CASE("text form round-trips") {
  CHECK(CycNum::parse("1/2*z^6 - 1/2").to_string() == "1/2*z^6 - 1/2");
  CHECK(CycNum::parse("  z ^ 2 + 3 ") == zeta(2) + CycNum(3));
  CHECK(CycNum::parse("z^12") == zeta(6) - CycNum(1));
  CHECK(CycNum::parse("0") == CycNum(0));
  CHECK(CycNum::parse("-z") == -zeta(1));
  for (int n = 0; n < 200; ++n) {
    CycNum a = random_cyc();
    CHECK(CycNum::parse(a.to_string()) == a);
  }
  CHECK_THROWS_AS(CycNum::parse("1/0"), ParseError);
  CHECK_THROWS_AS(CycNum::parse("z^-2"), ParseError);
  CHECK_THROWS_AS(CycNum::parse("q + 1"), ParseError);
}

TEST_CASE("sign oracle: exact zeros and certified nonzeros") {
  CHECK(sign_real(CycNum(0)) == Sign::zero);
  CycNum w = embed(Constant::omega);
  CHECK(sign_real(w + w * w + CycNum(1)) == Sign::zero);
  CHECK(sign_real(embed(Constant::sqrt3) - CycNum(2)) == Sign::negative);
  CHECK(sign_real(embed(Constant::sqrt3) - CycNum(1)) == Sign::positive);
  // 2 cos(pi/18) - 2 sin(pi/18) > 0, a closer call than the above
  CycNum close = zeta(1) + zeta(-1) - (zeta(1) - zeta(-1)) / embed(Constant::i);
  CHECK(sign_real(close) == Sign::positive);
  CHECK_THROWS_AS(sign_real(zeta(1)), NotReal);
}

TEST_CASE("sign oracle agrees with 53-bit floats on random real values") {
  int compared = 0;
  int draws = 0;
  while (compared < 1000 && draws < 100000) {
    ++draws;
    CycNum a = random_cyc();
    CycNum r = a + conj(a);
    if (r.is_zero()) continue;
    double x = r.to_double().real();
    if (std::abs(x) < 1e-9) continue;
    ++compared;
    CHECK(sign_real(r) == (x > 0 ? Sign::positive : Sign::negative));
  }
  CHECK(compared == 1000);
}

TEST_CASE("interval enclosures are rigorous and shrink") {
  ComplexInterval one = to_interval(CycNum(1), 32);
  CHECK(one.re.lo == 1);
  CHECK(one.re.hi == 1);
  CHECK(one.im.lo == 0);
  CHECK(one.im.hi == 0);

  ComplexInterval i32 = to_interval(embed(Constant::i), 32);
  CHECK(i32.im.lo <= 1);
  CHECK(i32.im.hi >= 1);
  CHECK(i32.re.contains_zero());
  CHECK(i32.im.width() <= pow2(-28));

  ComplexInterval w53 = to_interval(embed(Constant::omega), 53);
  CHECK(w53.re.lo <= Rational(-1, 2));
  CHECK(w53.re.hi >= Rational(-1, 2));
  // imag part encloses sqrt(3)/2 ~ 0.8660254
  CHECK(w53.im.lo <= Rational(8660255, 10000000));
  CHECK(w53.im.hi >= Rational(8660254, 10000000));

  for (long bits : {64L, 128L, 256L}) {
    CycNum a = random_cyc();
    ComplexInterval box = to_interval(a, bits);
    Rational sum_abs(1);
    for (int k = 0; k < CycNum::kDegree; ++k) sum_abs += abs(a.coeff(k));
    CHECK(box.re.width() <= pow2(4 - bits) * sum_abs);
    CHECK(box.im.width() <= pow2(4 - bits) * sum_abs);
    // the float evaluation must land inside a slightly padded box
    std::complex<double> x = a.to_double();
    CHECK(box.re.lo.get_d() - 1e-9 <= x.real());
    CHECK(x.real() <= box.re.hi.get_d() + 1e-9);
  }
}

TEST_CASE("pi enclosure") {
  DyadicInterval pi = pi_enclosure(128);
  // pin 20 digits: the enclosure must overlap the decimal sandwich, and its
  // width is far below the sandwich gap
  Rational lo_ref(Integer("31415926535897932384"), Integer("10000000000000000000"));
  Rational hi_ref(Integer("31415926535897932385"), Integer("10000000000000000000"));
  CHECK(pi.lo < hi_ref);
  CHECK(pi.hi > lo_ref);
  CHECK(pi.width() <= pow2(-128));
  // coarse classical sandwich 333/106 < pi < 355/113
  CHECK(pi.lo > Rational(333, 106));
  CHECK(pi.hi < Rational(355, 113));
}

TEST_CASE("real subfield membership") {
  CHECK(embed(Constant::sqrt3).is_real());
  CHECK(!embed(Constant::i).is_real());
  CHECK_THROWS_AS(RealCyc(zeta(5)), NotReal);
}
