#include "picard/hermitian.hpp"

namespace picard {

CycNum herm(const Vec3& a, const Vec3& b) {
  // b* H a with H = antidiag(1,1,1)
  return conj(b(0)) * a(2) + conj(b(1)) * a(1) + conj(b(2)) * a(0);
}

PointClass classify_vector(const Vec3& a) {
  if (vec_is_zero(a)) throw ZeroVector();
  switch (sign_real(RealCyc(herm(a, a)))) {
    case Sign::negative:
      return PointClass::negative;
    case Sign::zero:
      return PointClass::null;
    case Sign::positive:
      return PointClass::positive;
  }
  throw std::logic_error("unreachable");
}

bool proj_equal(const Vec3& u, const Vec3& v) {
  return (u(0) * v(1) - u(1) * v(0)).is_zero() &&
         (u(0) * v(2) - u(2) * v(0)).is_zero() &&
         (u(1) * v(2) - u(2) * v(1)).is_zero();
}

Vec3 lift(const HoroPoint& p) {
  Vec3 v;
  v(0) = (-(abs_sq(p.z)) - p.u.value() + embed(Constant::i) * p.t.value()) /
         CycNum(2);
  v(1) = p.z;
  v(2) = CycNum(1);
  return v;
}

Vec3 lift(const HeisenbergPoint& p) {
  return lift(HoroPoint{p.z, p.t, RealCyc(0)});
}

HoroPoint horo_coords(const Vec3& a) {
  if (a(2).is_zero()) throw PointAtInfinity();
  Vec3 w = a;
  CycNum inv = a(2).inverse();
  for (int i = 0; i < 3; ++i) w(i) = w(i) * inv;
  HoroPoint p;
  p.z = w(1);
  p.t = RealCyc(CycNum(2) * imag_part(w(0)));
  p.u = RealCyc(CycNum(-2) * real_part(w(0)) - abs_sq(p.z));
  if (sign_real(p.u) == Sign::negative)
    throw NotInClosure("vector is positive; not in the closure of H^2_C");
  return p;
}

HeisenbergPoint heis_mul(const HeisenbergPoint& p, const HeisenbergPoint& q) {
  HeisenbergPoint r;
  r.z = p.z + q.z;
  r.t = RealCyc(p.t.value() + q.t.value() -
                CycNum(2) * imag_part(conj(p.z) * q.z));
  return r;
}

HeisenbergPoint heis_inverse(const HeisenbergPoint& p) {
  return {-p.z, RealCyc::unchecked(-p.t.value())};
}

Mat3 heis_translation(const HeisenbergPoint& p) {
  Mat3 m = Mat3::Identity();
  m(0, 1) = -conj(p.z);
  m(0, 2) = (-abs_sq(p.z) + embed(Constant::i) * p.t.value()) / CycNum(2);
  m(1, 2) = p.z;
  return m;
}

RealCyc bergman_cosh2(const Vec3& u, const Vec3& v) {
  if (classify_vector(u) != PointClass::negative ||
      classify_vector(v) != PointClass::negative)
    throw NotInClosure("bergman_cosh2 requires interior points");
  CycNum num = herm(u, v) * herm(v, u);
  CycNum den = herm(u, u) * herm(v, v);
  return RealCyc(num / den);
}

bool on_geodesic_between(const Vec3& u, const Vec3& p, const Vec3& v) {
  // With C_xy = cosh d(x,y) = 2 cosh^2(d/2) - 1:
  // d(u,p) + d(p,v) = d(u,v)  iff
  // (C_uv - C_up C_pv)^2 = (C_up^2 - 1)(C_pv^2 - 1) and C_uv >= C_up C_pv.
  CycNum two(2), one(1);
  CycNum cuv = two * bergman_cosh2(u, v).value() - one;
  CycNum cup = two * bergman_cosh2(u, p).value() - one;
  CycNum cpv = two * bergman_cosh2(p, v).value() - one;
  CycNum lhs = cuv - cup * cpv;
  CycNum rhs = (cup * cup - one) * (cpv * cpv - one);
  if (lhs * lhs != rhs) return false;
  return sign_real(RealCyc(lhs)) != Sign::negative;
}

std::optional<Vec3> common_complex_line(const std::vector<Vec3>& pts) {
  if (pts.size() < 2) return std::nullopt;
  // Span rank via elimination on the lift matrix; then solve <n, p_i> = 0,
  // i.e. rows (conj p_i)^T H annihilate n.
  std::vector<Vec3> rows;
  for (const Vec3& p : pts) {
    Vec3 cp = conj_vec(p);
    Vec3 row;
    row(0) = cp(2);
    row(1) = cp(1);
    row(2) = cp(0);
    rows.push_back(row);
  }
  // Gaussian elimination over the field.
  std::size_t rank = 0;
  for (int col = 0; col < 3 && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot](col).is_zero()) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    CycNum inv = rows[rank](col).inverse();
    for (int j = 0; j < 3; ++j) rows[rank](j) = rows[rank](j) * inv;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r](col).is_zero()) continue;
      CycNum f = rows[r](col);
      for (int j = 0; j < 3; ++j) rows[r](j) = rows[r](j) - f * rows[rank](j);
    }
    ++rank;
  }
  if (rank != 2) return std::nullopt;
  // Kernel of the two pivot rows.
  int pivot_col[2] = {-1, -1};
  for (std::size_t r = 0; r < 2; ++r)
    for (int c = 0; c < 3; ++c)
      if (!rows[r](c).is_zero()) {
        pivot_col[r] = c;
        break;
      }
  int free_col = 3 - pivot_col[0] - pivot_col[1];
  Vec3 n = Vec3::Zero();
  n(free_col) = CycNum(1);
  for (std::size_t r = 0; r < 2; ++r)
    n(pivot_col[r]) = -rows[r](free_col);
  return n;
}

bool triple_product_is_real(const Vec3& u, const Vec3& v, const Vec3& w) {
  CycNum uv = herm(u, v), vw = herm(v, w), wu = herm(w, u);
  if (uv.is_zero() || vw.is_zero() || wu.is_zero()) throw DegeneratePair();
  return imag_part(uv * vw * wu).is_zero();
}

RealCyc cygan_dist4(const HoroPoint& p, const HoroPoint& q) {
  CycNum du = p.u.value() - q.u.value();
  if (sign_real(RealCyc(du)) == Sign::negative) du = -du;
  CycNum a = abs_sq(p.z - q.z) + du;
  CycNum b = p.t.value() - q.t.value() +
             CycNum(2) * imag_part(p.z * conj(q.z));
  return RealCyc(a * a + b * b);
}

IsometricSphereData isometric_sphere(const Mat3& g) {
  const CycNum& g31 = g(2, 0);
  if (g31.is_zero()) throw FixesInfinity();
  CycNum cg31 = conj(g31);
  CycNum z = conj(g(2, 1)) / cg31;
  CycNum t = CycNum(2) * imag_part(conj(g(2, 2)) / cg31);
  IsometricSphereData s;
  s.center = HeisenbergPoint{z, RealCyc(t)};
  s.radius4 = RealCyc(CycNum(4) / (g31 * cg31));
  return s;
}

FordSide ford_side(const Vec3& p, const Mat3& g) {
  if (g(2, 0).is_zero()) throw FixesInfinity();
  if (vec_is_zero(p)) throw ZeroVector();
  Vec3 qinf = Vec3::Zero();
  qinf(0) = CycNum(1);
  // g^-1 q_inf = H g* H q_inf; the inverse of an H-unitary matrix.
  Mat3 h = form_matrix();
  Vec3 center = h * (hermitian_transpose(g) * (h * qinf));
  CycNum lhs = abs_sq(herm(p, qinf));
  CycNum rhs = abs_sq(herm(p, center));
  switch (sign_real(RealCyc(lhs - rhs))) {
    case Sign::negative:
      return FordSide::exterior;
    case Sign::zero:
      return FordSide::on;
    case Sign::positive:
      return FordSide::interior;
  }
  throw std::logic_error("unreachable");
}

}  // namespace picard
