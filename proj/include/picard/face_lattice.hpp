#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "picard/group.hpp"

namespace picard {

struct NamedVertex {
  std::string name;
  Vec3 lift;
  bool finite;  // q_inf is the only ideal vertex
};

/// A face of the subdivided domain, identified by its named vertex set.
/// Decorations are the parenthesized subdivision vertices that lie on the
/// face without being corners of the original simplex face.
struct Face {
  int dim;
  std::set<std::string> principal;
  std::set<std::string> decorations;
  std::string name;  // bracket display form

  std::set<std::string> full_set() const {
    std::set<std::string> s = principal;
    s.insert(decorations.begin(), decorations.end());
    return s;
  }
};

struct SidePairing {
  std::string map_word;
  GroupElt map;
  int source_face;  // index into faces of dim 3
  int target_face;
  // ordered vertex correspondence as displayed
  std::vector<std::pair<std::string, std::string>> vertex_map;
};

struct RidgeCycleArrow {
  std::string map_word;
  std::string from_ridge;  // face names (dim 2)
  std::string to_ridge;
};

struct RidgeCycle {
  int id = 0;
  std::vector<RidgeCycleArrow> arrows;
};

struct CheckLine {
  std::string id;
  bool pass;
  std::string detail;
};

struct GeometryReport {
  std::vector<CheckLine> checks;
  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

struct RidgeCycleReport {
  int id = 0;
  bool closes = false;
  std::vector<CheckLine> arrow_checks;
  std::string transform_word;
  std::optional<long> transform_order;  // projective
  bool stabilizes_setwise = false;
  bool fixes_pointwise = false;
};

/// The combinatorial face poset of the subdivided domain with exact vertex
/// lifts: 13 vertices, six 3-faces (four infinite, two finite), one 4-face.
class FaceLattice {
 public:
  static FaceLattice build();  // build_dstar

  const std::vector<NamedVertex>& vertices() const { return vertices_; }
  const std::vector<Face>& faces(int dim) const {
    return faces_[static_cast<std::size_t>(dim)];
  }
  const Vec3& vertex_lift(const std::string& name) const;
  const Face& face_by_name(const std::string& name) const;
  /// Pairs (subface, face) with dim(subface) = dim(face) - 1, by vertex-set
  /// inclusion.
  std::vector<std::pair<const Face*, const Face*>> incidences() const;

  /// The three side-pairings (P, P*Q^-1, R), each validated elsewhere.
  std::vector<SidePairing> side_pairings() const;

  /// The five ridge cycles as listed arrows.
  std::vector<RidgeCycle> ridge_cycles() const;

  /// Exact geometric checks: betweenness of the subdivision vertices, the
  /// complex-line and real-plane ridges, the isometric-sphere incidences and
  /// the mirror triangle.
  GeometryReport validate_geometry() const;

  /// Per-pairing exact vertex-image validation.
  GeometryReport validate_side_pairings() const;

  RidgeCycleReport verify_ridge_cycle(int id) const;

  /// Equivalence classes of faces per dimension under the side-pairing
  /// groupoid: a map identifies two faces when it sends the named vertex set
  /// of one exactly onto the other's.
  std::vector<std::vector<std::vector<std::string>>> face_orbits() const;

  /// Class representative sets, one vector of face names per class.
  std::vector<int> orbit_counts() const;

  /// Whether two faces (by name) land in the same orbit class.
  bool same_orbit(const std::string& a, const std::string& b) const;

 private:
  std::vector<NamedVertex> vertices_;
  std::vector<std::vector<Face>> faces_;  // by dimension 0..4

  int vertex_index(const std::string& name) const;
  void add_vertex(const std::string& name, const Vec3& lift, bool finite);
  void add_face(int dim, const std::vector<std::string>& principal,
                const std::vector<std::string>& decorations);
  friend struct LatticeBuilder;
};

struct FordMembershipLine {
  std::string word;
  bool skipped = false;  // word fixes q_inf
  FordSide side = FordSide::on;
};

struct FordMembershipReport {
  std::vector<FordMembershipLine> lines;
  /// In the closure of the Ford exterior with respect to the listed words.
  bool in_exterior_closure = true;
};

FordMembershipReport ford_membership(const Vec3& p,
                                     const std::vector<Word>& words);

}  // namespace picard
