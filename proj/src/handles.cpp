#include "picard/handles.hpp"

#include <algorithm>
#include <set>

namespace picard {

const Attachment* HandleComplex::find(const std::string& name) const {
  for (const Attachment& a : attachments)
    if (a.handle.name == name) return &a;
  return nullptr;
}

HandleComplex build_theorem1() {
  HandleComplex c;

  auto orb0 = [](const std::string& name, const std::string& link,
                 std::vector<int> loci) {
    Attachment a;
    a.handle.kind = HandleKind::orbifold0;
    a.handle.index = 0;
    a.handle.name = name;
    a.handle.link_label = link;
    a.handle.singular_loci = std::move(loci);
    a.step = 1;
    return a;
  };

  // Step 1: the four orbifold 0-handles, cones on the vertex links.
  // h(w4) carries an order-2 locus: (R1 R2 R3)^2 equals the conjugate
  // reflection (PJ)^-1 R (PJ) projectively, so the mirror of an order-2
  // reflection passes through w4 and descends to a coned circle in the link.
  c.attachments.push_back(orb0("h(w3)", "L(3,-1)", {}));
  c.attachments.push_back(orb0("h(w4)", "L(4,-1)", {2}));
  c.attachments.push_back(orb0("h(w12)", "S3-Hopf(2,6)", {2, 6}));
  c.attachments.push_back(orb0("h(z0)", "L(3,2)-base", {2, 6}));

  // Step 2: a classical 1-handle joining h(w3), h(w4)...
  {
    Attachment a;
    a.handle.kind = HandleKind::classical;
    a.handle.index = 1;
    a.handle.name = "h([w3,w4])";
    a.regions = {{"h(w3)", "D3 in link", 1}, {"h(w4)", "D3 in link", 1}};
    a.step = 2;
    c.attachments.push_back(std::move(a));
  }
  // ...and the order-6 orbifold 1-handle D^1 x (D^1 x F_6) along the
  // endpoints of the edge it thickens.
  {
    Attachment a;
    a.handle.kind = HandleKind::orbifold1;
    a.handle.index = 1;
    a.handle.cone_order = 6;
    a.handle.name = "h([z0,w12])";
    a.regions = {{"h(z0)", "D1 x F6 along order-6 locus", 6},
                 {"h(w12)", "D1 x F6 along order-6 locus", 6}};
    a.step = 2;
    c.attachments.push_back(std::move(a));
  }

  // Step 3: pants x F_2, one S^1 x F_2 region on each of the three order-2
  // singular circles.
  {
    Attachment a;
    a.handle.kind = HandleKind::pants_product;
    a.handle.index = 1;
    a.handle.cone_order = 2;
    a.handle.name = "h([z0,w4,w12])";
    a.regions = {{"h(w4)", "S1 x F2 along order-2 locus", 2},
                 {"h(w12)", "S1 x F2 along order-2 locus", 2},
                 {"h(z0)", "S1 x F2 along order-2 locus", 2}};
    a.step = 3;
    c.attachments.push_back(std::move(a));
  }

  // Step 4: two classical 2-handles along curves in the post-step-3
  // boundary; the attaching words are inputs, not derived data.
  for (const char* name : {"h([z0,w4,w3,J(w4)])", "h([z0,J(w4),z1,w12])"}) {
    Attachment a;
    a.handle.kind = HandleKind::classical;
    a.handle.index = 2;
    a.handle.name = name;
    a.regions = {{"", "S1 x D2 along attaching curve", 1}};
    a.step = 4;
    a.attaching_word = std::string();
    c.attachments.push_back(std::move(a));
  }

  // Step 5: the 3-handle.
  {
    Attachment a;
    a.handle.kind = HandleKind::classical;
    a.handle.index = 3;
    a.handle.name = "h([w12,z0,z1,z2,(w3,w4,J(w4),PJ(w4))])";
    a.regions = {{"", "S2 x D1", 1}};
    a.step = 5;
    c.attachments.push_back(std::move(a));
  }
  return c;
}

namespace {

int handle_index(const HandleSpec& h) {
  switch (h.kind) {
    case HandleKind::classical:
      return h.index;
    case HandleKind::orbifold0:
      return 0;
    case HandleKind::orbifold1:
      return 1;
    case HandleKind::orbifold2:
      return 2;
    case HandleKind::pants_product:
      return 1;  // connects 0-handles like a (multi-ended) 1-handle
  }
  return -1;
}

}  // namespace

HandleValidationReport validate(const HandleComplex& c) {
  HandleValidationReport rep;
  auto issue = [&rep](const std::string& id, bool violation,
                      const std::string& detail) {
    rep.issues.push_back({id, violation, detail});
  };

  // indices must be non-decreasing along the attachment order
  int last_index = 0;
  for (const Attachment& a : c.attachments) {
    int idx = handle_index(a.handle);
    if (idx < last_index)
      issue("order." + a.handle.name, true,
            "index " + std::to_string(idx) + " attached after index " +
                std::to_string(last_index));
    last_index = std::max(last_index, idx);
  }

  // every gluing region resolves to an earlier handle (or the accumulated
  // boundary), with matching cone orders and an existing singular locus
  std::set<std::string> attached;
  for (const Attachment& a : c.attachments) {
    for (const GluingRegion& r : a.regions) {
      std::string id = "glue." + a.handle.name + "->" +
                       (r.target.empty() ? std::string("boundary") : r.target);
      if (r.target.empty()) {
        if (r.cone_order != 1)
          issue(id, true, "coned region cannot glue to the smooth boundary");
        continue;
      }
      const Attachment* target = c.find(r.target);
      if (!target) {
        issue(id, true, "unknown gluing target");
        continue;
      }
      if (!attached.count(r.target)) {
        issue(id, true, "gluing target attached later");
        continue;
      }
      if (r.cone_order != a.handle.cone_order &&
          a.handle.kind != HandleKind::classical)
        issue(id, true, "region order differs from the handle's cone order");
      if (r.cone_order > 1) {
        const std::vector<int>& loci = target->handle.singular_loci;
        if (std::find(loci.begin(), loci.end(), r.cone_order) == loci.end())
          issue(id, true,
                "target link has no singular locus of order " +
                    std::to_string(r.cone_order));
      }
    }
    attached.insert(a.handle.name);
  }

  // Informational: the order-6 1-handle h([z0,w12]) is glued along its
  // endpoints to h(z0) and h(w12); an alternative reading of the
  // construction instead names h(w4) and h(w12) as the targets of its
  // singular sets. The build follows the endpoints; h(w4)'s link carries no
  // order-6 locus, so the alternative cannot validate.
  if (c.find("h([z0,w12])"))
    issue("note.step2-gluing-targets", false,
          "h([z0,w12]) glued to {h(z0), h(w12)} (endpoints reading); "
          "alternative reading {h(w4), h(w12)} is recorded, not applied: "
          "the w4 link has no order-6 locus");

  // Informational: the link of w4 is recorded with underlying label
  // L(4,-1) and an order-2 locus. A smooth-lens-space reading of that link
  // conflicts with the pants gluing: exactly in the matrices,
  // (R1 R2 R3)^2 = (PJ)^-1 R (PJ) up to scalar, an order-2 complex
  // reflection whose mirror passes through w4.
  if (c.find("h(w4)"))
    issue("note.w4-link-locus", false,
          "h(w4) link labelled L(4,-1) with an order-2 singular locus; the "
          "locus is forced by (R1*R2*R3)^2 being a conjugate of R fixing "
          "w4's mirror line");

  return rep;
}

namespace {

struct EulerData {
  long handle;
  long regions;
};

EulerData euler_of(const Attachment& a) {
  // chi of underlying spaces: disks and cones are 1, pants is -1, circles 0,
  // S^2 is 2
  switch (a.handle.kind) {
    case HandleKind::orbifold0:
      return {1, 0};
    case HandleKind::orbifold1:
      return {1, 2};  // two D^1 x F_n regions, chi = 1 each
    case HandleKind::orbifold2:
      return {1, 0};  // one S^1 x F_n region, chi = 0
    case HandleKind::pants_product:
      return {-1, 0};  // pants x F_n; three S^1 x F_n regions, chi = 0
    case HandleKind::classical:
      switch (a.handle.index) {
        case 0:
          return {1, 0};
        case 1:
          return {1, 2};  // two D^3 balls
        case 2:
          return {1, 0};  // S^1 x D^2
        case 3:
          return {1, 2};  // S^2 x D^1
        case 4:
          return {1, 0};  // attached along S^3, chi = 0
        default:
          throw std::invalid_argument("bad handle index");
      }
  }
  throw std::invalid_argument("bad handle kind");
}

}  // namespace

long euler_characteristic(const HandleComplex& c) {
  long chi = 0;
  for (const Attachment& a : c.attachments) {
    EulerData e = euler_of(a);
    chi += e.handle - e.regions;
  }
  return chi;
}

Presentation pi1_presentation(
    const HandleComplex& c,
    const std::map<std::string, std::string>& attaching_words) {
  // vertices = 0-handles; edges from 1-handle-like pieces; pants counts as
  // two edges through its three targets
  std::vector<std::string> verts;
  for (const Attachment& a : c.attachments)
    if (handle_index(a.handle) == 0) verts.push_back(a.handle.name);
  auto vid = [&verts](const std::string& name) {
    for (std::size_t i = 0; i < verts.size(); ++i)
      if (verts[i] == name) return static_cast<int>(i);
    throw std::invalid_argument("gluing target is not a 0-handle: " + name);
  };

  struct Edge {
    std::string name;
    int a;
    int b;
  };
  std::vector<Edge> edges;
  for (const Attachment& a : c.attachments) {
    if (a.handle.kind == HandleKind::pants_product) {
      if (a.regions.size() != 3)
        throw std::invalid_argument("pants product needs 3 regions");
      int t0 = vid(a.regions[0].target);
      int t1 = vid(a.regions[1].target);
      int t2 = vid(a.regions[2].target);
      edges.push_back({a.handle.name + "#1", t0, t1});
      edges.push_back({a.handle.name + "#2", t1, t2});
    } else if (handle_index(a.handle) == 1) {
      if (a.regions.size() != 2)
        throw std::invalid_argument("1-handle needs 2 regions");
      edges.push_back(
          {a.handle.name, vid(a.regions[0].target), vid(a.regions[1].target)});
    }
  }

  // spanning forest; non-tree edges become free generators
  std::vector<int> parent(verts.size());
  for (std::size_t i = 0; i < verts.size(); ++i) parent[i] = static_cast<int>(i);
  std::function<int(int)> find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x)
      x = parent[static_cast<std::size_t>(x)] =
          parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
    return x;
  };
  std::vector<std::string> gens;
  for (const Edge& e : edges) {
    int ra = find(e.a), rb = find(e.b);
    if (ra == rb) {
      gens.push_back("g" + std::to_string(gens.size() + 1));
    } else {
      parent[static_cast<std::size_t>(std::max(ra, rb))] = std::min(ra, rb);
    }
  }

  Presentation base(gens, {});
  std::vector<std::string> relator_words;
  for (const Attachment& a : c.attachments) {
    if (!(a.handle.kind == HandleKind::classical && a.handle.index == 2))
      continue;
    auto it = attaching_words.find(a.handle.name);
    if (it == attaching_words.end() || it->second.empty()) continue;
    relator_words.push_back(it->second);  // parse errors surface here
  }
  return base.with_extra_relators(relator_words);
}

}  // namespace picard
