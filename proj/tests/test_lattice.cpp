#include <doctest.h>

#include <map>

#include "picard/face_lattice.hpp"
#include "picard/points.hpp"

using namespace picard;

TEST_CASE("lattice inventory") {
  FaceLattice l = FaceLattice::build();
  CHECK(l.vertices().size() == 13);
  CHECK(l.faces(0).size() == 13);
  CHECK(l.faces(1).size() == 24);
  CHECK(l.faces(2).size() == 17);
  CHECK(l.faces(3).size() == 6);
  CHECK(l.faces(4).size() == 1);

  // the quadrilateral from the subdivided triangle exists
  const Face& q = l.face_by_name("[z2,w4,w3,PJ(w4)]");
  CHECK(q.dim == 2);
  CHECK(q.full_set().size() == 4);

  // four infinite 3-faces, two finite
  int infinite = 0;
  for (const Face& f : l.faces(3))
    if (f.principal.count("qinf")) ++infinite;
  CHECK(infinite == 4);
}

TEST_CASE("incidence closure: every facet of every face is present") {
  FaceLattice l = FaceLattice::build();
  auto inc = l.incidences();
  // each 3-face has 5 or 6 ridge facets; the 4-face has all six 3-faces
  std::map<std::string, int> facet_count;
  for (const auto& [sub, sup] : inc)
    if (sup->dim == 3 && sub->dim == 2) facet_count[sup->name]++;
  CHECK(facet_count.size() == 6);
  int total = 0;
  for (const auto& [name, n] : facet_count) {
    CHECK(n >= 5);
    CHECK(n <= 6);
    total += n;
  }
  CHECK(total == 34);  // 6+6+5+5+6+6

  int top_facets = 0;
  for (const auto& [sub, sup] : inc)
    if (sup->dim == 4) ++top_facets;
  CHECK(top_facets == 6);

  // every edge lies in at least two ridges
  std::map<std::string, int> edge_up;
  for (const auto& [sub, sup] : inc)
    if (sub->dim == 1) edge_up[sub->name]++;
  for (const Face& e : l.faces(1)) CHECK(edge_up[e.name] >= 2);
}

TEST_CASE("geometric validation of the shipped lattice") {
  FaceLattice l = FaceLattice::build();
  GeometryReport rep = l.validate_geometry();
  for (const CheckLine& c : rep.checks) {
    INFO(c.id);
    CHECK(c.pass);
  }
}

TEST_CASE("side pairings map decorated vertex sets as displayed") {
  FaceLattice l = FaceLattice::build();
  GeometryReport rep = l.validate_side_pairings();
  for (const CheckLine& c : rep.checks) {
    INFO(c.id);
    CHECK(c.pass);
  }
}

TEST_CASE("all five ridge cycles close with finite stabilizers") {
  FaceLattice l = FaceLattice::build();
  for (int id = 1; id <= 5; ++id) {
    RidgeCycleReport rep = l.verify_ridge_cycle(id);
    INFO("cycle " << id);
    CHECK(rep.closes);
    CHECK(rep.stabilizes_setwise);
    CHECK(rep.transform_order.has_value());
  }
  // cycle 4: R fixes the mirror triangle pointwise, order 2
  RidgeCycleReport c4 = l.verify_ridge_cycle(4);
  CHECK(c4.fixes_pointwise);
  CHECK(c4.transform_order == 2);
  // cycle 5: the stabilizer of the w12 ridge has order 6
  RidgeCycleReport c5 = l.verify_ridge_cycle(5);
  CHECK(c5.transform_order == 6);
  CHECK_THROWS_AS(l.verify_ridge_cycle(0), std::invalid_argument);
}

TEST_CASE("face orbit classes match the expected table") {
  FaceLattice l = FaceLattice::build();
  CHECK(l.orbit_counts() == std::vector<int>({5, 5, 5, 3, 1}));

  // vertex classes: {qinf}, {z*}, {w3*}, {w4*}, {w12}
  CHECK(l.same_orbit("[z0]", "[z3]"));
  CHECK(l.same_orbit("[w4]", "[P2J(w4)]"));
  CHECK(l.same_orbit("[w3]", "[P(w3)]"));
  CHECK(!l.same_orbit("[qinf]", "[z0]"));
  CHECK(!l.same_orbit("[w12]", "[w4]"));

  // the two w12 edge classes stay apart
  CHECK(!l.same_orbit("[z0,w12]", "[z1,w12]"));
  CHECK(l.same_orbit("[z0,w12]", "[z3,w12]"));
  CHECK(l.same_orbit("[z1,w12]", "[z2,w12]"));

  // all ten subdivided simplex edges are one class
  for (const char* e : {"[z2,w4]", "[z0,J(w4)]", "[z1,J(w4)]", "[z1,PJ(w4)]",
                        "[z2,PJ(w4)]", "[z2,P2J(w4)]", "[z3,P2J(w4)]",
                        "[z1,P(w4)]", "[z3,P(w4)]"})
    CHECK(l.same_orbit("[z0,w4]", e));
  // the w3 edges too
  for (const char* e : {"[w3,J(w4)]", "[w3,PJ(w4)]", "[P(w3),P(w4)]",
                        "[P(w3),PJ(w4)]", "[P(w3),P2J(w4)]"})
    CHECK(l.same_orbit("[w3,w4]", e));
  CHECK(!l.same_orbit("[w3,w4]", "[z0,w4]"));

  // infinite edges form a single class
  for (const char* e : {"[z1,qinf]", "[z2,qinf]", "[z3,qinf]"})
    CHECK(l.same_orbit("[z0,qinf]", e));
}

TEST_CASE("perturbing a vertex breaks the geometry") {
  // negative control for the betweenness validation
  Vec3 off = named_point("w4");
  off(0) += CycNum(Rational(1, 1000));
  CHECK(!on_geodesic_between(named_point("z0"), off, named_point("z2")));
}

TEST_CASE("ford membership summaries") {
  std::vector<Word> words = {parse_word("(R*P)^-1"), parse_word("P")};
  FordMembershipReport rep = ford_membership(named_point("z0"), words);
  REQUIRE(rep.lines.size() == 2);
  CHECK(!rep.lines[0].skipped);
  CHECK(rep.lines[0].side == FordSide::on);
  CHECK(rep.lines[1].skipped);  // P fixes infinity
  CHECK(rep.in_exterior_closure);

  Vec3 high = lift(HoroPoint{CycNum(0), RealCyc(0), RealCyc(100)});
  FordMembershipReport rep2 = ford_membership(high, {parse_word("(R*P)^-1")});
  CHECK(rep2.lines[0].side == FordSide::exterior);

  Vec3 center = lift(isometric_sphere(eval("(R*P)^-1").matrix).center);
  FordMembershipReport rep3 =
      ford_membership(center, {parse_word("(R*P)^-1")});
  CHECK(rep3.lines[0].side == FordSide::interior);
  CHECK(!rep3.in_exterior_closure);
}
