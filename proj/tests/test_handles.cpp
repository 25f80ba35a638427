#include <doctest.h>

#include "picard/handles.hpp"

using namespace picard;

TEST_CASE("the shipped complex has the ten attachments") {
  HandleComplex c = build_theorem1();
  CHECK(c.attachments.size() == 10);
  int by_step[6] = {0, 0, 0, 0, 0, 0};
  for (const Attachment& a : c.attachments) by_step[a.step]++;
  CHECK(by_step[1] == 4);
  CHECK(by_step[2] == 2);
  CHECK(by_step[3] == 1);
  CHECK(by_step[4] == 2);
  CHECK(by_step[5] == 1);

  const Attachment* h6 = c.find("h([z0,w12])");
  REQUIRE(h6);
  CHECK(h6->handle.kind == HandleKind::orbifold1);
  CHECK(h6->handle.cone_order == 6);

  const Attachment* pants = c.find("h([z0,w4,w12])");
  REQUIRE(pants);
  CHECK(pants->handle.kind == HandleKind::pants_product);
  CHECK(pants->handle.cone_order == 2);
  CHECK(pants->regions.size() == 3);
}

TEST_CASE("the shipped complex validates with informational notes") {
  HandleComplex c = build_theorem1();
  HandleValidationReport rep = validate(c);
  CHECK(rep.violation_count() == 0);
  bool step2_note = false, w4_note = false;
  for (const ValidationIssue& i : rep.issues) {
    if (!i.violation && i.id == "note.step2-gluing-targets") step2_note = true;
    if (!i.violation && i.id == "note.w4-link-locus") w4_note = true;
  }
  CHECK(step2_note);
  CHECK(w4_note);
}

TEST_CASE("validate is idempotent") {
  HandleComplex c = build_theorem1();
  HandleValidationReport a = validate(c);
  HandleValidationReport b = validate(c);
  CHECK(a.issues.size() == b.issues.size());
  CHECK(a.violation_count() == b.violation_count());
}

TEST_CASE("negative control: wrong cone order fails locus matching") {
  HandleComplex c = build_theorem1();
  for (Attachment& a : c.attachments)
    if (a.handle.name == "h([z0,w12])") {
      a.handle.cone_order = 4;
      for (GluingRegion& r : a.regions) r.cone_order = 4;
    }
  HandleValidationReport rep = validate(c);
  CHECK(rep.violation_count() >= 2);  // neither target has an order-4 locus
}

TEST_CASE("negative control: pants glued to a smooth link fails") {
  HandleComplex c = build_theorem1();
  for (Attachment& a : c.attachments)
    if (a.handle.kind == HandleKind::pants_product)
      a.regions[0].target = "h(w3)";  // L(3,-1) has no singular loci
  HandleValidationReport rep = validate(c);
  CHECK(rep.violation_count() == 1);
}

TEST_CASE("negative control: attachment order is enforced") {
  HandleComplex c = build_theorem1();
  std::swap(c.attachments[0], c.attachments.back());  // 3-handle first
  HandleValidationReport rep = validate(c);
  CHECK(rep.violation_count() > 0);
}

TEST_CASE("euler characteristic by formula and by explicit cell counts") {
  HandleComplex c = build_theorem1();
  long chi = euler_characteristic(c);

  // Independent oracle: explicit CW cell counts per piece and per gluing
  // region, combined by inclusion-exclusion. Cell vectors are (c0,...,c4).
  struct Cells {
    long c[5];
    long chi() const { return c[0] - c[1] + c[2] - c[3] + c[4]; }
  };
  auto product = [](const Cells& a, const Cells& b) {
    Cells r{{0, 0, 0, 0, 0}};
    for (int i = 0; i < 5; ++i)
      for (int j = 0; j + i < 5; ++j) r.c[i + j] += a.c[i] * b.c[j];
    return r;
  };
  const Cells point{{1, 0, 0, 0, 0}};
  const Cells interval{{2, 1, 0, 0, 0}};
  const Cells circle{{1, 1, 0, 0, 0}};
  const Cells disk{{1, 1, 1, 0, 0}};
  const Cells sphere2{{1, 0, 1, 0, 0}};
  const Cells ball3{{1, 0, 1, 1, 0}};        // S^2 plus a 3-cell
  const Cells lens{{1, 1, 1, 1, 0}};         // lens space: one cell per dim
  const Cells hopf_s3{{1, 0, 0, 1, 0}};      // S^3 with minimal structure
  auto cone = [](const Cells& x) {
    Cells r{{1, 0, 0, 0, 0}};  // apex
    for (int i = 0; i < 5; ++i) r.c[i] += x.c[i];  // base
    for (int i = 0; i + 1 < 5; ++i) r.c[i + 1] += x.c[i];  // joined cells
    return r;
  };
  const Cells pants{{6, 9, 2, 0, 0}};  // chi = -1

  long oracle = 0;
  // step 1: cones on the four links
  oracle += cone(lens).chi();      // L(3,-1)
  oracle += cone(lens).chi();      // L(4,-1)
  oracle += cone(hopf_s3).chi();   // S^3 with the Hopf singular link
  oracle += cone(lens).chi();      // L(3,2) underlying
  // step 2: 1-handle D1 x D3 minus two D3 regions
  oracle += product(interval, ball3).chi() - 2 * ball3.chi();
  // orbifold 1-handle D1 x (D1 x D2) minus two D1 x D2 regions
  Cells d1f6 = product(interval, disk);
  oracle += product(interval, d1f6).chi() - 2 * d1f6.chi();
  // step 3: pants x D2 minus three S1 x D2 regions
  oracle += product(pants, disk).chi() - 3 * product(circle, disk).chi();
  // step 4: two 2-handles D2 x D2 minus S1 x D2 each
  oracle += 2 * (product(disk, disk).chi() - product(circle, disk).chi());
  // step 5: 3-handle D3 x D1 minus S2 x D1
  oracle += product(ball3, interval).chi() - product(sphere2, interval).chi();

  CHECK(point.chi() == 1);
  CHECK(pants.chi() == -1);
  CHECK(cone(lens).chi() == 1);
  CHECK(chi == oracle);
  CHECK(chi == 2);
}

TEST_CASE("euler characteristic is additive on disjoint 0-handles") {
  HandleComplex c;
  for (int i = 0; i < 4; ++i) {
    Attachment a;
    a.handle.kind = HandleKind::orbifold0;
    a.handle.name = "h" + std::to_string(i);
    a.handle.link_label = "L";
    a.step = 1;
    c.attachments.push_back(std::move(a));
  }
  CHECK(euler_characteristic(c) == 4);
  Attachment join;
  join.handle.kind = HandleKind::classical;
  join.handle.index = 1;
  join.handle.name = "h01";
  join.regions = {{"h0", "D3", 1}, {"h1", "D3", 1}};
  join.step = 2;
  c.attachments.push_back(std::move(join));
  CHECK(euler_characteristic(c) == 3);
}

TEST_CASE("fundamental group presentations from the handle graph") {
  // two 0-handles joined by two 1-handles: one loop
  HandleComplex c;
  for (int i = 0; i < 2; ++i) {
    Attachment a;
    a.handle.kind = HandleKind::orbifold0;
    a.handle.name = "h" + std::to_string(i);
    a.step = 1;
    c.attachments.push_back(std::move(a));
  }
  for (int i = 0; i < 2; ++i) {
    Attachment a;
    a.handle.kind = HandleKind::classical;
    a.handle.index = 1;
    a.handle.name = "e" + std::to_string(i);
    a.regions = {{"h0", "D3", 1}, {"h1", "D3", 1}};
    a.step = 2;
    c.attachments.push_back(std::move(a));
  }
  Presentation p = pi1_presentation(c, {});
  CHECK(p.num_generators() == 1);
  CHECK(p.relators().empty());

  // a 2-handle along that loop kills it
  Attachment kill;
  kill.handle.kind = HandleKind::classical;
  kill.handle.index = 2;
  kill.handle.name = "d";
  kill.regions = {{"", "S1 x D2", 1}};
  kill.step = 4;
  c.attachments.push_back(std::move(kill));
  Presentation killed = pi1_presentation(c, {{"d", "g1"}});
  AbelianInvariants inv = abelianization(killed);
  CHECK(inv.free_rank == 0);
  CHECK(inv.torsion.empty());

  CHECK_THROWS_AS(pi1_presentation(c, {{"d", "nosuch"}}), UnknownGenerator);
}

TEST_CASE("shipped complex pi1 with empty attaching words") {
  HandleComplex c = build_theorem1();
  Presentation p = pi1_presentation(c, {});
  CHECK(p.num_generators() == 1);  // one loop survives the spanning tree
  AbelianInvariants inv = abelianization(p);
  CHECK(inv.free_rank == 1);
  CHECK(inv.torsion.empty());

  // appending g*g^-1 to an attaching word does not change the abelianization
  Presentation tweaked = pi1_presentation(
      c, {{"h([z0,w4,w3,J(w4)])", "g1*g1^-1"}});
  AbelianInvariants inv2 = abelianization(tweaked);
  CHECK(inv2.free_rank == 1);
  CHECK(inv2.torsion.empty());
}
