#pragma once

#include <optional>
#include <string>
#include <vector>

#include "picard/group.hpp"

namespace picard {

struct CapExceeded : std::runtime_error {
  explicit CapExceeded(const std::string& w) : std::runtime_error(w) {}
};

/// A finite group given by its full multiplication table. Index 0 is the
/// identity; the remaining elements are sorted by a canonical key, so two
/// closures of the same subgroup produce identical tables regardless of
/// generator order. Tables built from matrices carry a canonical PU(2,1)
/// representative per element; tables built abstractly (quotients, coset
/// tables, reference groups) do not.
class FiniteGroupTable {
 public:
  int size() const { return static_cast<int>(mul_.size()); }
  int mul(int a, int b) const {
    return mul_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
  }
  int inv(int a) const { return inv_[static_cast<std::size_t>(a)]; }
  long element_order(int a) const;
  std::vector<long> order_multiset() const;  // sorted

  bool is_abelian() const;
  bool has_matrices() const { return !reps_.empty(); }
  const Mat3& rep(int a) const { return reps_[static_cast<std::size_t>(a)]; }
  const std::vector<int>& generator_indices() const { return gens_; }

  /// Index of the PU-class of m, or -1.
  int find(const Mat3& m) const;

  /// Subgroup generated by the given element indices, as index list into
  /// this table (sorted).
  std::vector<int> subgroup(const std::vector<int>& gens) const;

  /// Smallest normal subgroup containing the given elements.
  std::vector<int> normal_closure(const std::vector<int>& gens) const;

  /// Table of the subgroup supported on the given (closed) index set.
  FiniteGroupTable subgroup_table(const std::vector<int>& elements) const;

  static FiniteGroupTable from_raw(std::vector<std::vector<int>> mul,
                                   std::vector<Mat3> reps,
                                   std::vector<int> gens);

 private:
  std::vector<std::vector<int>> mul_;
  std::vector<int> inv_;
  std::vector<int> gens_;
  std::vector<Mat3> reps_;  // canonical projective representatives; optional
};

/// Breadth-first closure of the given matrices under multiplication, with
/// projective deduplication. Throws CapExceeded if more than cap classes
/// appear (the subgroup is infinite or larger than expected).
FiniteGroupTable closure(const std::vector<Mat3>& gens, int cap);
FiniteGroupTable closure(const std::vector<GroupElt>& gens, int cap);

/// True iff every element fixes v projectively. Requires matrices.
bool common_fixed_point(const FiniteGroupTable& t, const Vec3& v);

/// The subgroup of elements commuting with everything.
FiniteGroupTable center(const FiniteGroupTable& t);

/// Quotient by the normal closure of the given element indices.
FiniteGroupTable quotient(const FiniteGroupTable& t,
                          const std::vector<int>& normal_gens);

/// Brute-force isomorphism test with element-order pruning. Orders capped at
/// 10^4 (ample for everything here).
bool iso_check(const FiniteGroupTable& a, const FiniteGroupTable& b);

/// Invariant factors d1 | d2 | ... of a finite abelian group, ascending,
/// ones omitted. Throws std::invalid_argument on nonabelian input.
std::vector<long> abelian_invariants(const FiniteGroupTable& t);

// Reference constructions for tests and verification.
FiniteGroupTable cyclic_group(int n);
FiniteGroupTable direct_product(const FiniteGroupTable& a,
                                const FiniteGroupTable& b);
FiniteGroupTable dihedral_group(int n);  // order 2n

}  // namespace picard
