#pragma once

#include <optional>
#include <string>
#include <vector>

#include "picard/hermitian.hpp"
#include "picard/words.hpp"

namespace picard {

struct EigenvalueOutsideField : std::runtime_error {
  explicit EigenvalueOutsideField(const std::string& w)
      : std::runtime_error(w) {}
};
struct NoNegativeEigenvector : std::runtime_error {
  explicit NoNegativeEigenvector(const std::string& w)
      : std::runtime_error(w) {}
};
struct NotAReflectionPolar : std::domain_error {
  explicit NotAReflectionPolar(const std::string& w) : std::domain_error(w) {}
};

/// An element of U(2,1) over Q(zeta_36), with the word it was built from.
/// Matrices act on column vectors from the left; words multiply left to
/// right, so eval("A*B") applies B first as a map.
struct GroupElt {
  Mat3 matrix;
  Word word;
};

/// The exact generator matrix for a single generator. P and Q generate the
/// stabilizer of q_inf, R is a complex reflection of order two, and the
/// derived generators are J = RP, R1 = QP^-1, R2 = J R1 J^-1, R3 = P^-1 Q.
const Mat3& generator_matrix(Gen g);

Mat3 eval_matrix(const Word& w);
GroupElt eval(const Word& w);
GroupElt eval(const std::string& word_text);

/// Inverse of an H-unitary matrix: H g* H.
Mat3 inverse(const Mat3& g);

/// Exact H-unitarity test: g* H g = H.
bool is_h_unitary(const Mat3& g);

/// Projective equality in PU(2,1): g h^-1 is a scalar matrix.
bool pu_equal(const Mat3& g, const Mat3& h);
bool pu_is_identity(const Mat3& g);
/// The scalar s with g = s * h, when pu_equal holds.
std::optional<CycNum> scalar_ratio(const Mat3& g, const Mat3& h);

Vec3 apply(const Mat3& g, const Vec3& v);
bool fixes_projectively(const Mat3& g, const Vec3& v);

/// Projective order of g, or nullopt if it exceeds max_order.
std::optional<long> projective_order(const Mat3& g, long max_order = 256);

/// Complex reflection of order k about the line polar to n:
/// z -> z + (e^{2 pi i/k} - 1) (<z,n>/<n,n>) n. Requires n positive and
/// k | 36 so the multiplier stays in the field.
Mat3 complex_reflection(const Vec3& n, long k);

enum class IsometryType {
  identity,
  regular_elliptic,
  special_elliptic,
  parabolic,
  loxodromic
};

const char* isometry_type_name(IsometryType t);

/// Classification by the trace discriminant f(tau) = |tau|^4 - 8 Re(tau^3)
/// + 18 |tau|^2 - 27 of the determinant-normalized lift; the boundary case
/// f = 0 is split by an exact diagonalizability test.
IsometryType classify(const Mat3& g);

/// Rescales g by an exact 36th root of unity so that det = 1. Throws
/// EigenvalueOutsideField if det is not a 36th root of unity.
Mat3 det_normalize(const Mat3& g);

/// The isolated fixed point of an elliptic element in H^2_C: scans
/// eigenvalues over the 36th roots of unity of the det-normalized lift and
/// returns the unique negative one-dimensional eigenline. The result is
/// re-checked with fixes_projectively before returning.
Vec3 fixed_point_elliptic(const Mat3& g);

struct RelatorResult {
  std::string relator;
  bool holds;
  std::string residual_scalar;  // the scalar g = s*I when holds
};

struct PresentationReport {
  std::string id;
  std::vector<RelatorResult> relators;
  bool all_hold() const {
    for (const auto& r : relators)
      if (!r.holds) return false;
    return true;
  }
};

/// Relator words of the named presentation, as parseable strings.
std::vector<std::string> presentation_relators(const std::string& id);

/// Evaluates every relator of the named presentation ("thm-1", "thm-2",
/// "thm-3", "gamma-infty") and checks projective triviality.
PresentationReport verify_presentation(const std::string& id);

}  // namespace picard
