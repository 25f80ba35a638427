#pragma once

#include <map>
#include <string>
#include <vector>

#include "picard/finite_group.hpp"

namespace picard {

struct MaxCosetsExceeded : std::runtime_error {
  explicit MaxCosetsExceeded(long max)
      : std::runtime_error("coset enumeration did not complete within " +
                           std::to_string(max) + " cosets") {}
};

/// A finitely presented group: named generators and freely reduced relator
/// words. Letters are generator indices, negative-encoded inverses
/// (letter 2g = generator g, 2g+1 = its inverse).
class Presentation {
 public:
  Presentation() = default;
  Presentation(std::vector<std::string> gens,
               std::vector<std::vector<int>> relators);

  /// Text format: `gens: a b c; rels: a^6, b^6, a*b*a^-1*b^-1`.
  /// Relator words use the same grammar as group words.
  static Presentation parse(const std::string& text);

  /// Parses a single word over this presentation's generators into letters.
  std::vector<int> parse_letters(const std::string& word) const;

  int num_generators() const { return static_cast<int>(gens_.size()); }
  const std::vector<std::string>& generators() const { return gens_; }
  const std::vector<std::vector<int>>& relators() const { return relators_; }
  std::string relator_string(std::size_t i) const;

  Presentation with_extra_relators(
      const std::vector<std::string>& words) const;

 private:
  std::vector<std::string> gens_;
  std::vector<std::vector<int>> relators_;  // freely reduced letter strings
};

/// A complete coset table for a subgroup: cosets x letters -> cosets, row 0
/// the subgroup itself. Produced by Todd-Coxeter enumeration.
struct CosetTable {
  int num_cosets = 0;
  // action[c][letter]; letters as in Presentation
  std::vector<std::vector<int>> action;
  bool complete = false;
};

/// HLT-style coset enumeration with coincidence handling; deterministic
/// row-filling order. Throws MaxCosetsExceeded when the live coset count
/// would pass max_cosets.
CosetTable todd_coxeter(const Presentation& p,
                        const std::vector<std::string>& subgroup_words,
                        long max_cosets);

/// The regular representation of a finite presented group, from the coset
/// table over the trivial subgroup.
FiniteGroupTable regular_representation(const Presentation& p,
                                        const CosetTable& t);

struct AbelianInvariants {
  std::vector<long> torsion;  // invariant factors > 1, ascending, d_i | d_i+1
  int free_rank = 0;
};

/// Abelianization via Smith normal form of the relator exponent matrix.
AbelianInvariants abelianization(const Presentation& p);

/// Smith normal form diagonal of an integer matrix (nonnegative, each
/// dividing the next, zeros last).
std::vector<Integer> smith_normal_form(std::vector<std::vector<Integer>> m);

struct HomCheckResult {
  std::string relator;
  bool holds;
};

struct HomCheckReport {
  std::vector<HomCheckResult> relators;
  bool all_hold() const {
    for (const auto& r : relators)
      if (!r.holds) return false;
    return true;
  }
};

/// Substitutes matrices for generators in every relator and checks projective
/// triviality. Says nothing about injectivity or surjectivity.
HomCheckReport hom_check(const Presentation& p,
                         const std::map<std::string, Mat3>& images);

/// True iff the images generate t, every relator holds, and the abstract
/// group order (by Todd-Coxeter) equals |t| — together, an isomorphism onto
/// t.
bool matrix_group_vs_presentation(const FiniteGroupTable& t,
                                  const Presentation& p,
                                  const std::map<std::string, Mat3>& images,
                                  long max_cosets = 100000);

}  // namespace picard
