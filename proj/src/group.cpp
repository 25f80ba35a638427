#include "picard/group.hpp"

#include <array>

namespace picard {

namespace {

Mat3 make_p() {
  CycNum w = embed(Constant::omega);
  Mat3 m = Mat3::Zero();
  m(0, 0) = 1;
  m(0, 1) = 1;
  m(0, 2) = w;
  m(1, 1) = w;
  m(1, 2) = -w;
  m(2, 2) = 1;
  return m;
}

Mat3 make_q() {
  CycNum w = embed(Constant::omega);
  Mat3 m = Mat3::Zero();
  m(0, 0) = 1;
  m(0, 1) = 1;
  m(0, 2) = w;
  m(1, 1) = CycNum(-1);
  m(1, 2) = 1;
  m(2, 2) = 1;
  return m;
}

Mat3 make_r() {
  Mat3 m = Mat3::Zero();
  m(0, 2) = 1;
  m(1, 1) = CycNum(-1);
  m(2, 0) = 1;
  return m;
}

struct GeneratorTable {
  std::array<Mat3, 8> m;
  GeneratorTable() {
    Mat3 p = make_p();
    Mat3 q = make_q();
    Mat3 r = make_r();
    Mat3 pinv = inverse(p);
    Mat3 j = r * p;
    Mat3 r1 = q * pinv;
    Mat3 r2 = j * r1 * inverse(j);
    Mat3 r3 = pinv * q;
    m[static_cast<int>(Gen::P)] = p;
    m[static_cast<int>(Gen::Q)] = q;
    m[static_cast<int>(Gen::R)] = r;
    m[static_cast<int>(Gen::R1)] = r1;
    m[static_cast<int>(Gen::R2)] = r2;
    m[static_cast<int>(Gen::R3)] = r3;
    m[static_cast<int>(Gen::J)] = j;
    m[static_cast<int>(Gen::Id)] = Mat3::Identity();
  }
};

const GeneratorTable& generator_table() {
  static const GeneratorTable t;
  return t;
}

Mat3 mat_pow(Mat3 base, long e) {
  if (e < 0) {
    base = inverse(base);
    e = -e;
  }
  Mat3 acc = Mat3::Identity();
  while (e) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

}  // namespace

const Mat3& generator_matrix(Gen g) {
  return generator_table().m[static_cast<int>(g)];
}

Mat3 eval_matrix(const Word& w) {
  Mat3 acc = Mat3::Identity();
  for (const Word::Letter& l : w.letters)
    acc = acc * mat_pow(generator_matrix(l.gen), l.exp);
  return acc;
}

GroupElt eval(const Word& w) { return {eval_matrix(w), w}; }

GroupElt eval(const std::string& word_text) {
  return eval(parse_word(word_text));
}

Mat3 inverse(const Mat3& g) {
  const Mat3& h = form_matrix();
  return h * hermitian_transpose(g) * h;
}

bool is_h_unitary(const Mat3& g) {
  Mat3 lhs = hermitian_transpose(g) * form_matrix() * g;
  return mat_equal(lhs, form_matrix());
}

namespace {

std::optional<CycNum> scalar_of(const Mat3& s) {
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (i != j && !s(i, j).is_zero()) return std::nullopt;
  if (s(0, 0) != s(1, 1) || s(1, 1) != s(2, 2)) return std::nullopt;
  return s(0, 0);
}

}  // namespace

bool pu_equal(const Mat3& g, const Mat3& h) {
  return scalar_of(g * inverse(h)).has_value();
}

bool pu_is_identity(const Mat3& g) { return scalar_of(g).has_value(); }

std::optional<CycNum> scalar_ratio(const Mat3& g, const Mat3& h) {
  return scalar_of(g * inverse(h));
}

Vec3 apply(const Mat3& g, const Vec3& v) {
  if (vec_is_zero(v)) throw ZeroVector();
  return g * v;
}

bool fixes_projectively(const Mat3& g, const Vec3& v) {
  return proj_equal(apply(g, v), v);
}

std::optional<long> projective_order(const Mat3& g, long max_order) {
  Mat3 acc = g;
  for (long n = 1; n <= max_order; ++n) {
    if (pu_is_identity(acc)) return n;
    acc = acc * g;
  }
  return std::nullopt;
}

Mat3 complex_reflection(const Vec3& n, long k) {
  if (k < 2 || 36 % k != 0)
    throw NotAReflectionPolar("reflection order must be >= 2 and divide 36");
  if (classify_vector(n) != PointClass::positive)
    throw NotAReflectionPolar("polar vector must be positive");
  CycNum mult = CycNum::zeta_pow(36 / k) - CycNum(1);
  CycNum nn_inv = herm(n, n).inverse();
  // row covector z -> <z, n> is (conj n)^T H
  Vec3 cn = conj_vec(n);
  Mat3 m = Mat3::Identity();
  const int hperm[3] = {2, 1, 0};  // (conj n)^T H has entries cn[hperm[j]]
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      m(i, j) += mult * n(i) * cn(hperm[j]) * nn_inv;
  return m;
}

const char* isometry_type_name(IsometryType t) {
  switch (t) {
    case IsometryType::identity: return "identity";
    case IsometryType::regular_elliptic: return "regular-elliptic";
    case IsometryType::special_elliptic: return "special-elliptic";
    case IsometryType::parabolic: return "parabolic";
    case IsometryType::loxodromic: return "loxodromic";
  }
  return "?";
}

Mat3 det_normalize(const Mat3& g) {
  CycNum det = g.determinant();
  for (long k = 0; k < 36; ++k) {
    CycNum mu = CycNum::zeta_pow(k);
    if (mu * mu * mu * det == CycNum(1)) return mu * g;
  }
  throw EigenvalueOutsideField(
      "determinant has no cube root among the 36th roots of unity");
}

namespace {

// Characteristic polynomial x^3 - tr x^2 + c2 x - det, coefficients exact.
std::array<CycNum, 4> char_poly(const Mat3& m) {
  CycNum tr = m(0, 0) + m(1, 1) + m(2, 2);
  CycNum c2 = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0) + m(0, 0) * m(2, 2) -
              m(0, 2) * m(2, 0) + m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1);
  CycNum det = m.determinant();
  return {-det, c2, -tr, CycNum(1)};
}

using PolyC = std::vector<CycNum>;

void ptrim(PolyC& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

PolyC pmod(PolyC a, const PolyC& b) {
  while (a.size() >= b.size() && !a.empty()) {
    CycNum f = a.back() / b.back();
    std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
    ptrim(a);
  }
  return a;
}

PolyC pgcd(PolyC a, PolyC b) {
  ptrim(a);
  ptrim(b);
  while (!b.empty()) {
    PolyC r = pmod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    CycNum inv = a.back().inverse();
    for (CycNum& c : a) c *= inv;
  }
  return a;
}

PolyC pdiv_exact(PolyC a, const PolyC& b) {
  PolyC q(a.size(), CycNum(0));
  while (a.size() >= b.size() && !a.empty()) {
    CycNum f = a.back() / b.back();
    std::size_t shift = a.size() - b.size();
    q[shift] = f;
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
    ptrim(a);
  }
  ptrim(q);
  return q;
}

Mat3 eval_poly(const PolyC& p, const Mat3& m) {
  Mat3 acc = Mat3::Zero();
  Mat3 id = Mat3::Identity();
  for (std::size_t i = p.size(); i-- > 0;) {
    acc = acc * m;
    acc += p[i] * id;
  }
  return acc;
}

bool is_zero_matrix(const Mat3& m) {
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (!m(i, j).is_zero()) return false;
  return true;
}

// Diagonalizable over the algebraic closure iff the squarefree part of the
// characteristic polynomial annihilates the matrix.
bool is_diagonalizable(const Mat3& m) {
  auto cp = char_poly(m);
  PolyC chi(cp.begin(), cp.end());
  PolyC dchi;
  for (std::size_t i = 1; i < chi.size(); ++i)
    dchi.push_back(CycNum(static_cast<long>(i)) * chi[i]);
  PolyC g = pgcd(chi, dchi);
  if (g.size() <= 1) return true;  // chi squarefree
  PolyC rad = pdiv_exact(chi, g);
  return is_zero_matrix(eval_poly(rad, m));
}

}  // namespace

IsometryType classify(const Mat3& g) {
  if (pu_is_identity(g)) return IsometryType::identity;
  Mat3 n = det_normalize(g);
  CycNum tau = n(0, 0) + n(1, 1) + n(2, 2);
  // Goldman's discriminant for SU(2,1); invariant under tau -> omega*tau,
  // so any cube root of det^-1 gives the same value.
  CycNum t2 = abs_sq(tau);
  CycNum f = t2 * t2 - CycNum(8) * real_part(tau * tau * tau) +
             CycNum(18) * t2 - CycNum(27);
  switch (sign_real(RealCyc(f))) {
    case Sign::negative:
      return IsometryType::regular_elliptic;
    case Sign::positive:
      return IsometryType::loxodromic;
    case Sign::zero:
      return is_diagonalizable(n) ? IsometryType::special_elliptic
                                  : IsometryType::parabolic;
  }
  throw std::logic_error("unreachable");
}

namespace {

// Kernel of a singular 3x3 matrix: basis vectors via exact elimination.
std::vector<Vec3> kernel_basis(Mat3 m) {
  int pivot_col_of_row[3] = {-1, -1, -1};
  int rank = 0;
  for (int col = 0; col < 3 && rank < 3; ++col) {
    int pivot = -1;
    for (int r = rank; r < 3; ++r)
      if (!m(r, col).is_zero()) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != rank)
      for (int j = 0; j < 3; ++j) std::swap(m(rank, j), m(pivot, j));
    CycNum inv = m(rank, col).inverse();
    for (int j = 0; j < 3; ++j) m(rank, j) *= inv;
    for (int r = 0; r < 3; ++r) {
      if (r == rank || m(r, col).is_zero()) continue;
      CycNum f = m(r, col);
      for (int j = 0; j < 3; ++j) m(r, j) -= f * m(rank, j);
    }
    pivot_col_of_row[rank] = col;
    ++rank;
  }
  bool is_pivot[3] = {false, false, false};
  for (int r = 0; r < rank; ++r) is_pivot[pivot_col_of_row[r]] = true;
  std::vector<Vec3> basis;
  for (int free = 0; free < 3; ++free) {
    if (is_pivot[free]) continue;
    Vec3 v = Vec3::Zero();
    v(free) = CycNum(1);
    for (int r = 0; r < rank; ++r)
      v(pivot_col_of_row[r]) = -m(r, free);
    basis.push_back(v);
  }
  return basis;
}

}  // namespace

Vec3 fixed_point_elliptic(const Mat3& g) {
  IsometryType type = classify(g);
  if (type != IsometryType::regular_elliptic &&
      type != IsometryType::special_elliptic)
    throw NoNegativeEigenvector("element is not elliptic");
  Mat3 n = det_normalize(g);
  bool found_eigenvalue = false;
  std::vector<Vec3> candidates;
  for (long k = 0; k < 36; ++k) {
    Mat3 shifted = n;
    CycNum lambda = CycNum::zeta_pow(k);
    for (int i = 0; i < 3; ++i) shifted(i, i) -= lambda;
    std::vector<Vec3> kern = kernel_basis(shifted);
    if (kern.empty()) continue;
    found_eigenvalue = true;
    // Only one-dimensional eigenspaces give isolated fixed points; a
    // two-dimensional eigenspace is a pointwise-fixed mirror line.
    if (kern.size() == 1 &&
        classify_vector(kern[0]) == PointClass::negative)
      candidates.push_back(kern[0]);
  }
  if (!found_eigenvalue)
    throw EigenvalueOutsideField(
        "no eigenvalue among the 36th roots of unity");
  if (candidates.empty())
    throw NoNegativeEigenvector(
        "no isolated negative eigenvector (fixed set is a mirror line "
        "or lies outside H^2_C)");
  // Two H-orthogonal negative eigenlines are impossible in signature (2,1).
  if (candidates.size() > 1)
    throw std::logic_error("multiple negative eigenlines");
  if (!fixes_projectively(g, candidates[0]))
    throw std::logic_error("fixed point check failed");
  return candidates[0];
}

std::vector<std::string> presentation_relators(const std::string& id) {
  if (id == "thm-1")
    return {"R^2", "(Q*P^-1)^6", "P*Q^-1*R*Q*P^-1*R", "P^3*Q^-2", "(R*P)^3"};
  if (id == "thm-2")
    return {"R1^6",
            "R2^6",
            "R3^6",
            "R2*R1*R2*(R1*R2*R1)^-1",
            "R3*R2*R3*(R2*R3*R2)^-1",
            "R1*R3*R1*(R3*R1*R3)^-1",
            "(R1*R2*R3)^4",
            "(R1*R2*R3)^-2*R1*R2*((R2*R3*R1)^-2*R2*R3)^-1"};
  if (id == "thm-3")
    return {"J^3", "R1^6", "(J*R1^-1*J)^4",
            "R1*(J*R1^-1*J)^2*R1^-1*(J*R1^-1*J)^-2"};
  if (id == "gamma-infty") return {"(Q*P^-1)^6", "P^3*Q^-2"};
  throw std::invalid_argument("unknown presentation id: " + id);
}

PresentationReport verify_presentation(const std::string& id) {
  PresentationReport report;
  report.id = id;
  for (const std::string& rel : presentation_relators(id)) {
    Mat3 m = eval_matrix(parse_word(rel));
    RelatorResult r;
    r.relator = rel;
    std::optional<CycNum> s = scalar_ratio(m, Mat3::Identity());
    r.holds = s.has_value();
    r.residual_scalar = s ? s->to_string() : "not scalar";
    report.relators.push_back(std::move(r));
  }
  return report;
}

}  // namespace picard
