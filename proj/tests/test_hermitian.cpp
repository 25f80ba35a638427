#include <doctest.h>

#include <random>

#include "picard/group.hpp"
#include "picard/hermitian.hpp"
#include "picard/points.hpp"

using namespace picard;

namespace {

std::mt19937_64 rng(777);

CycNum random_cyc() {
  std::uniform_int_distribution<int> pos(0, 11);
  std::uniform_int_distribution<long> num(-5, 5);
  std::uniform_int_distribution<long> den(1, 5);
  CycNum::Coeffs c{};
  for (int k = 0; k < 2; ++k) {
    Rational q(num(rng), den(rng));
    q.canonicalize();
    c[static_cast<std::size_t>(pos(rng))] = q;
  }
  return CycNum(std::move(c));
}

Vec3 random_negative() {
  HoroPoint p;
  p.z = random_cyc();
  std::uniform_int_distribution<long> t(-9, 9), u(1, 9);
  p.t = RealCyc(Rational(t(rng)));
  p.u = RealCyc(Rational(u(rng)));
  return lift(p);
}

}  // namespace

TEST_CASE("hermitian form values on the named points") {
  CHECK(herm(named_point("qinf"), named_point("qinf")) == CycNum(0));
  CHECK(herm(named_point("z0"), named_point("z0")) == CycNum(-1));
  CHECK(herm(named_point("n1"), named_point("n1")) == CycNum(1));

  CHECK(classify_vector(named_point("z0")) == PointClass::negative);
  CHECK(classify_vector(named_point("z1")) == PointClass::negative);
  CHECK(classify_vector(named_point("z2")) == PointClass::negative);
  CHECK(classify_vector(named_point("z3")) == PointClass::negative);
  CHECK(classify_vector(named_point("w3")) == PointClass::negative);
  CHECK(classify_vector(named_point("w4")) == PointClass::negative);
  CHECK(classify_vector(named_point("w12")) == PointClass::negative);
  CHECK(classify_vector(named_point("qinf")) == PointClass::null);
  CHECK(classify_vector(named_point("n1")) == PointClass::positive);
  CHECK(classify_vector(named_point("n2")) == PointClass::positive);
  CHECK(classify_vector(named_point("n3")) == PointClass::positive);

  Vec3 zero = Vec3::Zero();
  CHECK_THROWS_AS(classify_vector(zero), ZeroVector);
}

TEST_CASE("herm is conjugate-symmetric sesquilinear") {
  for (int n = 0; n < 100; ++n) {
    Vec3 a = random_negative(), b = random_negative();
    CHECK(herm(a, b) == conj(herm(b, a)));
  }
}

TEST_CASE("lift and horospherical coordinates invert each other") {
  HoroPoint p{embed(Constant::omega), RealCyc(1), RealCyc(2)};
  HoroPoint q = horo_coords(lift(p));
  CHECK(q.z == p.z);
  CHECK(q.t.value() == p.t.value());
  CHECK(q.u.value() == p.u.value());

  // the origin lifts to (0, 0, 1)
  Vec3 origin = lift(HoroPoint{CycNum(0), RealCyc(0), RealCyc(0)});
  CHECK(origin(0) == CycNum(0));
  CHECK(origin(1) == CycNum(0));
  CHECK(origin(2) == CycNum(1));

  // z0 = (conj(omega), 0, 1): t = 2 Im(conj(omega)) = -sqrt3, u = 1
  HoroPoint z0 = horo_coords(named_point("z0"));
  CHECK(z0.z == CycNum(0));
  CHECK(z0.t.value() == -embed(Constant::sqrt3));
  CHECK(z0.u.value() == CycNum(1));

  CHECK_THROWS_AS(horo_coords(named_point("qinf")), PointAtInfinity);
  CHECK_THROWS_AS(horo_coords(named_point("n2")), NotInClosure);
}

TEST_CASE("heisenberg group law") {
  HeisenbergPoint a{CycNum(0), RealCyc(1)};
  HeisenbergPoint b{CycNum(0), RealCyc(2)};
  HeisenbergPoint ab = heis_mul(a, b);
  CHECK(ab.z == CycNum(0));
  CHECK(ab.t.value() == CycNum(3));

  HeisenbergPoint c{CycNum(1), RealCyc(0)};
  HeisenbergPoint d{embed(Constant::i), RealCyc(0)};
  HeisenbergPoint cd = heis_mul(c, d);
  CHECK(cd.z == CycNum(1) + embed(Constant::i));
  CHECK(cd.t.value() == CycNum(-2));

  for (int n = 0; n < 50; ++n) {
    HeisenbergPoint p{random_cyc(), RealCyc(Rational(n - 25))};
    HeisenbergPoint e = heis_mul(p, heis_inverse(p));
    CHECK(e.z.is_zero());
    CHECK(e.t.is_zero());
  }
}

TEST_CASE("heisenberg translations act as left multiplication") {
  CHECK(mat_equal(heis_translation({CycNum(0), RealCyc(0)}),
                  Mat3::Identity()));
  Mat3 vert = heis_translation({CycNum(0), RealCyc(5)});
  CHECK(vert(0, 2) == embed(Constant::i) * CycNum(5) / CycNum(2));

  for (int n = 0; n < 50; ++n) {
    HeisenbergPoint p{random_cyc(), RealCyc(Rational(n))};
    HeisenbergPoint q{random_cyc(), RealCyc(Rational(-n))};
    CHECK(mat_equal(heis_translation(p) * heis_translation(q),
                    heis_translation(heis_mul(p, q))));
    CHECK(is_h_unitary(heis_translation(p)));
    CHECK(proj_equal(heis_translation(p) * lift(q), lift(heis_mul(p, q))));
  }
}

TEST_CASE("bergman distance form") {
  const Vec3& z0 = named_point("z0");
  const Vec3& z3 = named_point("z3");
  CHECK(bergman_cosh2(z0, z0) == RealCyc(1));
  RealCyc d03 = bergman_cosh2(z0, z3);
  CHECK(d03 == RealCyc(4));  // <z0,z3> = 2 conj(omega), norms -1
  CHECK(sign_real(RealCyc::unchecked(d03.value() - CycNum(1))) ==
        Sign::positive);
  CHECK_THROWS_AS(bergman_cosh2(z0, named_point("qinf")), NotInClosure);

  for (int n = 0; n < 30; ++n) {
    Vec3 u = random_negative(), v = random_negative();
    RealCyc c = bergman_cosh2(u, v);
    CHECK(sign_real(RealCyc::unchecked(c.value() - CycNum(1))) !=
          Sign::negative);
    for (Gen g : {Gen::P, Gen::Q, Gen::R, Gen::J}) {
      const Mat3& m = generator_matrix(g);
      CHECK(bergman_cosh2(m * u, m * v) == c);
    }
  }
}

TEST_CASE("geodesic betweenness") {
  const Vec3& z0 = named_point("z0");
  const Vec3& z2 = named_point("z2");
  const Vec3& z3 = named_point("z3");
  CHECK(on_geodesic_between(z0, z0, z2));
  CHECK(on_geodesic_between(z0, z2, z2));
  CHECK(on_geodesic_between(z0, named_point("w4"), z2));
  CHECK(on_geodesic_between(z0, named_point("w12"), z3));
  CHECK(on_geodesic_between(z2, named_point("w4"), z0));  // symmetric
  CHECK(!on_geodesic_between(z0, z3, z2));
  CHECK(!on_geodesic_between(z0, named_point("w12"), z2));

  // perturbing the midpoint off the geodesic fails the exact identity
  Vec3 off = named_point("w4");
  off(1) += CycNum(Rational(1, 1000));
  CHECK(!on_geodesic_between(z0, off, z2));
}

TEST_CASE("common complex line and polar vectors") {
  auto polar = common_complex_line(
      {named_point("z0"), named_point("z3"), named_point("qinf")});
  REQUIRE(polar.has_value());
  CHECK(proj_equal(*polar, named_point("n1")));

  CHECK(!common_complex_line({named_point("z0"), named_point("z1"),
                              named_point("z2")})
             .has_value());
  CHECK(!common_complex_line({named_point("z0"), named_point("z0")})
             .has_value());
}

TEST_CASE("hermitian triple products detect real planes") {
  const Vec3& z0 = named_point("z0");
  const Vec3& z1 = named_point("z1");
  const Vec3& z2 = named_point("z2");
  const Vec3& z3 = named_point("z3");
  CHECK(triple_product_is_real(z0, z3, z1));
  CHECK(triple_product_is_real(z0, z3, z2));
  CHECK(triple_product_is_real(z0, z0, z1));  // |<u,v>|^2 <u,u> is real
  CHECK_THROWS_AS(
      triple_product_is_real(named_point("qinf"), named_point("n1"), z0),
      DegeneratePair);
}

TEST_CASE("cygan distance fourth powers") {
  HoroPoint o{CycNum(0), RealCyc(0), RealCyc(0)};
  CHECK(cygan_dist4(o, o) == RealCyc(0));
  HoroPoint vt{CycNum(0), RealCyc(1), RealCyc(0)};
  CHECK(cygan_dist4(o, vt) == RealCyc(1));
  HoroPoint up{CycNum(0), RealCyc(0), RealCyc(4)};
  CHECK(cygan_dist4(up, o) == RealCyc(16));
  // |u - v| is resolved exactly in both orders
  CHECK(cygan_dist4(o, up) == RealCyc(16));

  for (int n = 0; n < 30; ++n) {
    HoroPoint p{random_cyc(), RealCyc(Rational(n - 15)),
                RealCyc(Rational(n))};
    HoroPoint q{random_cyc(), RealCyc(Rational(7 - n)),
                RealCyc(Rational(2 * n + 1))};
    CHECK(cygan_dist4(p, q) == cygan_dist4(q, p));
    CHECK(cygan_dist4(p, p) == RealCyc(0));
  }
}

TEST_CASE("boundary points round-trip through horospherical coordinates") {
  HeisenbergPoint b{embed(Constant::i) + CycNum(2), RealCyc(Rational(3, 2))};
  Vec3 v = lift(b);
  CHECK(classify_vector(v) == PointClass::null);
  HoroPoint back = horo_coords(v);
  CHECK(back.z == b.z);
  CHECK(back.t.value() == b.t.value());
  CHECK(back.u.is_zero());
}

TEST_CASE("isometric spheres") {
  Mat3 r = generator_matrix(Gen::R);
  IsometricSphereData s = isometric_sphere(r);
  CHECK(s.center.z.is_zero());
  CHECK(s.center.t.is_zero());
  CHECK(s.radius4 == RealCyc(4));

  Mat3 rp = eval("R*P").matrix;
  CHECK(isometric_sphere(rp).radius4 == RealCyc(4));
  // the partner sphere is the unit Cygan sphere about the origin
  IsometricSphereData partner = isometric_sphere(eval("(R*P)^-1").matrix);
  CHECK(partner.center.z.is_zero());
  CHECK(partner.center.t.is_zero());
  CHECK(partner.radius4 == RealCyc(4));

  CHECK_THROWS_AS(isometric_sphere(generator_matrix(Gen::P)), FixesInfinity);
  CHECK_THROWS_AS(isometric_sphere(generator_matrix(Gen::Q)), FixesInfinity);
}

TEST_CASE("ford sides of the sphere pair of RP") {
  // all four simplex vertices lie on I((RP)^-1); the first three lie on
  // I(RP) as well, z3 strictly outside
  Mat3 g0 = eval("(R*P)^-1").matrix;
  for (const char* n : {"z0", "z1", "z2", "z3"})
    CHECK(ford_side(named_point(n), g0) == FordSide::on);
  Mat3 rp = eval("R*P").matrix;
  for (const char* n : {"z0", "z1", "z2"})
    CHECK(ford_side(named_point(n), rp) == FordSide::on);
  CHECK(ford_side(named_point("z3"), rp) == FordSide::exterior);

  CHECK(ford_side(named_point("qinf"), g0) == FordSide::exterior);
  // the sphere's center is maximally interior
  Vec3 center = lift(isometric_sphere(g0).center);
  CHECK(ford_side(center, g0) == FordSide::interior);
}
