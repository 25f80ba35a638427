#pragma once

#include <optional>
#include <vector>

#include "picard/interval.hpp"
#include "picard/types.hpp"

namespace picard {

struct ZeroVector : std::domain_error {
  ZeroVector() : std::domain_error("zero vector is not a projective point") {}
};
struct PointAtInfinity : std::domain_error {
  PointAtInfinity()
      : std::domain_error("third coordinate vanishes; no horospherical "
                          "coordinates at infinity") {}
};
struct NotInClosure : std::domain_error {
  explicit NotInClosure(const std::string& w) : std::domain_error(w) {}
};
struct FixesInfinity : std::domain_error {
  FixesInfinity()
      : std::domain_error("element fixes the point at infinity (g31 = 0); "
                          "no isometric sphere") {}
};
struct DegeneratePair : std::domain_error {
  DegeneratePair()
      : std::domain_error("orthogonal pair; Hermitian triple product "
                          "criterion does not apply") {}
};

/// <a, b> = b* H a. Sesquilinear: conjugate-linear in b, linear in a.
CycNum herm(const Vec3& a, const Vec3& b);

enum class PointClass { negative, null, positive };

/// Sign of <a, a>; negative vectors project to interior points, null to
/// boundary points, positive to polar vectors of complex lines.
PointClass classify_vector(const Vec3& a);

/// Projective equality: all 2x2 minors of [u v] vanish.
bool proj_equal(const Vec3& u, const Vec3& v);

/// Boundary point [z, t] of the Heisenberg group N = C x R.
struct HeisenbergPoint {
  CycNum z;
  RealCyc t;
};

/// Horospherical coordinates (z, t, u) with height u >= 0; u = 0 is the
/// boundary.
struct HoroPoint {
  CycNum z;
  RealCyc t;
  RealCyc u;
};

/// Standard lift ((-|z|^2 - u + it)/2, z, 1).
Vec3 lift(const HoroPoint& p);
Vec3 lift(const HeisenbergPoint& p);

/// Inverse of lift: normalizes the third coordinate to 1. Throws
/// PointAtInfinity when the third coordinate vanishes and NotInClosure for
/// positive vectors.
HoroPoint horo_coords(const Vec3& a);

/// Heisenberg product [z,t][w,s] = [z+w, t+s-2Im(conj(z) w)].
HeisenbergPoint heis_mul(const HeisenbergPoint& p, const HeisenbergPoint& q);
HeisenbergPoint heis_inverse(const HeisenbergPoint& p);

/// The unipotent upper-triangular matrix acting as left Heisenberg
/// multiplication by p.
Mat3 heis_translation(const HeisenbergPoint& p);

/// cosh^2(d(u,v)/2) = <u,v><v,u> / (<u,u><v,v>), exact and >= 1 for interior
/// points. Throws NotInClosure unless both vectors are negative.
RealCyc bergman_cosh2(const Vec3& u, const Vec3& v);

/// True iff p lies on the geodesic segment [u, v], decided by the exact cosh
/// addition identity.
bool on_geodesic_between(const Vec3& u, const Vec3& p, const Vec3& v);

/// If the points span a 2-dimensional subspace, a generator of its
/// H-orthogonal complement (the polar vector of their complex line);
/// otherwise nullopt.
std::optional<Vec3> common_complex_line(const std::vector<Vec3>& pts);

/// True iff Im <u,v><v,w><w,u> = 0 exactly (vanishing Cartan angular
/// invariant; the three points then lie in a common real plane).
bool triple_product_is_real(const Vec3& u, const Vec3& v, const Vec3& w);

/// Fourth power of the extended Cygan distance, exact in the field.
RealCyc cygan_dist4(const HoroPoint& p, const HoroPoint& q);

struct IsometricSphereData {
  HeisenbergPoint center;
  RealCyc radius4;  // r^4 = 4 / |g31|^2, kept fourth-powered to stay exact
};

/// Center and radius of the isometric sphere I(g). Throws FixesInfinity when
/// g31 = 0.
IsometricSphereData isometric_sphere(const Mat3& g);

enum class FordSide { interior, on, exterior };

/// Position of a point relative to I(g): exact comparison of |<p, q_inf>|^2
/// against |<p, g^-1 q_inf>|^2.
FordSide ford_side(const Vec3& p, const Mat3& g);

}  // namespace picard
