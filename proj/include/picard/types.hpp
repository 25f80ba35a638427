#pragma once

#include <Eigen/Core>
#include <Eigen/LU>

#include "picard/cyclotomic.hpp"

namespace Eigen {

// CycNum is registered as a real-like scalar; conjugation is handled by the
// explicit hermitian_transpose/herm helpers, never by Eigen's adjoint().
template <>
struct NumTraits<picard::CycNum> : GenericNumTraits<picard::CycNum> {
  typedef picard::CycNum Real;
  typedef picard::CycNum NonInteger;
  typedef picard::CycNum Literal;
  typedef picard::CycNum Nested;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 32,
    AddCost = 64,
    MulCost = 512
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen

namespace picard {

using Vec3 = Eigen::Matrix<CycNum, 3, 1>;
using Mat3 = Eigen::Matrix<CycNum, 3, 3>;

inline Mat3 hermitian_transpose(const Mat3& m) {
  Mat3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r(i, j) = conj(m(j, i));
  return r;
}

inline Vec3 conj_vec(const Vec3& v) {
  Vec3 r;
  for (int i = 0; i < 3; ++i) r(i) = conj(v(i));
  return r;
}

inline bool mat_equal(const Mat3& a, const Mat3& b) {
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (a(i, j) != b(i, j)) return false;
  return true;
}

inline bool vec_is_zero(const Vec3& v) {
  return v(0).is_zero() && v(1).is_zero() && v(2).is_zero();
}

/// The signature-(2,1) Hermitian form matrix H = antidiag(1, 1, 1).
inline const Mat3& form_matrix() {
  static const Mat3 h = [] {
    Mat3 m = Mat3::Zero();
    m(0, 2) = CycNum(1);
    m(1, 1) = CycNum(1);
    m(2, 0) = CycNum(1);
    return m;
  }();
  return h;
}

}  // namespace picard
