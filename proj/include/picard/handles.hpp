#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "picard/fp_presentation.hpp"

namespace picard {

/// D^2 / Z_n with a single cone point; n = 1 is a smooth disk.
struct ConeOrbifold2D {
  int n = 1;
};

enum class HandleKind {
  classical,      // D^k x D^(4-k)
  orbifold0,      // cone on a spherical 3-orbifold link
  orbifold1,      // D^1 x (D^1 x F_n)
  orbifold2,      // D^2 x F_n
  pants_product,  // pants x F_n, three S^1 x F_n gluing regions
};

struct HandleSpec {
  HandleKind kind = HandleKind::classical;
  int index = 0;        // classical k; 1 or 2 for the orbifold kinds
  int cone_order = 1;   // n for orbifold1/orbifold2/pants_product
  std::string name;     // h(...) display form
  std::string link_label;             // orbifold0 only
  std::vector<int> singular_loci;     // cone orders on the link (orbifold0)
};

/// One gluing region of an attachment. A region either lands on a named
/// earlier handle (possibly along one of its singular loci) or on the
/// accumulated boundary of everything attached so far (target empty).
struct GluingRegion {
  std::string target;     // handle name, or "" = accumulated boundary
  std::string descriptor; // what the region is, e.g. "S1 x F2"
  int cone_order = 1;     // order carried by the region
};

struct Attachment {
  HandleSpec handle;
  std::vector<GluingRegion> regions;
  int step = 0;  // construction step this attachment belongs to
  std::optional<std::string> attaching_word;  // 2-handles; input data
};

struct HandleComplex {
  std::vector<Attachment> attachments;
  const Attachment* find(const std::string& name) const;
};

struct ValidationIssue {
  std::string id;
  bool violation;  // false = informational note
  std::string detail;
};

struct HandleValidationReport {
  std::vector<ValidationIssue> issues;
  int violation_count() const {
    int n = 0;
    for (const auto& i : issues)
      if (i.violation) ++n;
    return n;
  }
};

/// The ten attachments of the handle decomposition: four orbifold 0-handles,
/// a classical and an orbifold 1-handle, a pants x F_2 piece, two 2-handles
/// and one 3-handle.
HandleComplex build_theorem1();

/// Ordering legality, cone-order matching at every gluing region, and
/// existence of every singular locus a gluing claims on its target. The
/// report also carries an informational note on the two readings of the
/// orbifold 1-handle's gluing targets.
HandleValidationReport validate(const HandleComplex& c);

/// Euler characteristic of the underlying space, by inclusion-exclusion over
/// the ordered attachments.
long euler_characteristic(const HandleComplex& c);

/// Presentation of pi_1 of the underlying space: generators from the
/// non-tree 1-handle and pants connections, relators from the supplied
/// 2-handle attaching words (empty words allowed). 3-handles contribute
/// nothing.
Presentation pi1_presentation(
    const HandleComplex& c,
    const std::map<std::string, std::string>& attaching_words);

}  // namespace picard
