#include <doctest.h>

#include "picard/fp_presentation.hpp"
#include "picard/points.hpp"

using namespace picard;

namespace {

Presentation stabilizer72() {
  return Presentation::parse(
      "gens: a b c; rels: a^6, b^6, c^12, a*b*a^-1*b^-1, c*a*c^-1*b^-1, "
      "a^5*b^5*c^-2");
}

// central fiber: the [h, c_i] relators are part of the Seifert structure
Presentation seifert_comparison() {
  return Presentation::parse(
      "gens: c1 c2 c3 h; rels: h^6*(c1*c2*c3)^-1, h^6, c1^2*h^-3, c2^2, "
      "c3^6, h*c1*h^-1*c1^-1, h*c2*h^-1*c2^-1, h*c3*h^-1*c3^-1");
}

Presentation trefoil_orbifold() {
  return Presentation::parse("gens: x y; rels: x^6, x*y*x*(y*x*y)^-1");
}

}  // namespace

TEST_CASE("presentation text parsing") {
  Presentation p = stabilizer72();
  CHECK(p.num_generators() == 3);
  CHECK(p.relators().size() == 6);
  CHECK(p.relator_string(0) == "a*a*a*a*a*a");
  CHECK_THROWS_AS(Presentation::parse("gens: a; rels: b^2"),
                  UnknownGenerator);
}

TEST_CASE("coset enumeration on cyclic and small groups") {
  Presentation z6 = Presentation::parse("gens: a; rels: a^6");
  CHECK(todd_coxeter(z6, {}, 100).num_cosets == 6);
  CHECK(todd_coxeter(z6, {"a^2"}, 100).num_cosets == 2);
  CHECK(todd_coxeter(z6, {"a"}, 100).num_cosets == 1);

  // S3 as a Coxeter-style presentation
  Presentation s3 =
      Presentation::parse("gens: s t; rels: s^2, t^2, (s*t)^3");
  CHECK(todd_coxeter(s3, {}, 100).num_cosets == 6);
  CHECK(todd_coxeter(s3, {"s"}, 100).num_cosets == 3);

  // A4: order 12, index-3 subgroup
  Presentation a4 =
      Presentation::parse("gens: x y; rels: x^2, y^3, (x*y)^3");
  CHECK(todd_coxeter(a4, {}, 200).num_cosets == 12);
  CHECK(todd_coxeter(a4, {"y"}, 200).num_cosets == 4);
}

TEST_CASE("coset enumeration against independently built groups") {
  // dihedral groups of order 2n, and their regular representations
  for (int n : {3, 4, 6, 9}) {
    Presentation d = Presentation::parse(
        "gens: s t; rels: s^2, t^" + std::to_string(n) + ", (s*t)^2");
    CosetTable ct = todd_coxeter(d, {}, 1000);
    CHECK(ct.num_cosets == 2 * n);
    CHECK(iso_check(regular_representation(d, ct), dihedral_group(n)));
    CHECK(todd_coxeter(d, {"t"}, 1000).num_cosets == 2);
    CHECK(todd_coxeter(d, {"s"}, 1000).num_cosets == n);
  }
  // direct products of cyclic groups
  for (auto [m, n] : {std::pair{2, 6}, {3, 4}, {4, 4}}) {
    Presentation p = Presentation::parse(
        "gens: a b; rels: a^" + std::to_string(m) + ", b^" +
        std::to_string(n) + ", a*b*a^-1*b^-1");
    CosetTable ct = todd_coxeter(p, {}, 1000);
    CHECK(ct.num_cosets == m * n);
    CHECK(iso_check(regular_representation(p, ct),
                    direct_product(cyclic_group(m), cyclic_group(n))));
  }
  // the quaternion group
  Presentation q8 =
      Presentation::parse("gens: a b; rels: a^4, a^2*b^-2, b^-1*a*b*a");
  CHECK(todd_coxeter(q8, {}, 1000).num_cosets == 8);
  CHECK(!iso_check(regular_representation(q8, todd_coxeter(q8, {}, 1000)),
                   dihedral_group(4)));
  // S4 with an index-8 cyclic subgroup
  Presentation s4 =
      Presentation::parse("gens: a b; rels: a^2, b^3, (a*b)^4");
  CHECK(todd_coxeter(s4, {}, 2000).num_cosets == 24);
  CHECK(todd_coxeter(s4, {"b"}, 2000).num_cosets == 8);
}

TEST_CASE("coset enumeration of the order-72 stabilizer presentation") {
  CosetTable t = todd_coxeter(stabilizer72(), {}, 100000);
  CHECK(t.num_cosets == 72);
  FiniteGroupTable g = regular_representation(stabilizer72(), t);
  CHECK(g.size() == 72);
  CHECK(!g.is_abelian());
}

TEST_CASE("the comparison group collapses to Z3 and matches the stabilizer") {
  Presentation g = seifert_comparison();
  Presentation collapsed = g.with_extra_relators({"c2", "c3"});
  CosetTable small = todd_coxeter(collapsed, {}, 1000);
  CHECK(small.num_cosets == 3);
  CHECK(iso_check(regular_representation(collapsed, small), cyclic_group(3)));

  CosetTable full = todd_coxeter(g, {}, 100000);
  CHECK(full.num_cosets == 72);

  FiniteGroupTable gz0 = closure({eval("R1").matrix, eval("R2*J^2").matrix,
                                  eval("R2*R3*R2^-1").matrix},
                                 500);
  CHECK(iso_check(regular_representation(g, full), gz0));
}

TEST_CASE("enumeration over the torsion subgroup of the cusp group stalls") {
  // The coned-trefoil orbifold group is infinite, so the finite subgroup
  // <x> has infinite index; the enumeration must hit its coset cap.
  CHECK_THROWS_AS(todd_coxeter(trefoil_orbifold(), {"x"}, 3000),
                  MaxCosetsExceeded);
  CHECK_THROWS_AS(todd_coxeter(trefoil_orbifold(), {}, 3000),
                  MaxCosetsExceeded);
}

TEST_CASE("the comparison relators alone present an infinite group") {
  // Without the central-fiber relators the group surjects the (4,2,6)
  // triangle group (tensored with Z3 to carry h), hence is infinite.
  Presentation bare = Presentation::parse(
      "gens: c1 c2 c3 h; rels: h^6*(c1*c2*c3)^-1, h^6, c1^2*h^-3, c2^2, "
      "c3^6");
  CHECK_THROWS_AS(todd_coxeter(bare, {}, 20000), MaxCosetsExceeded);
}

TEST_CASE("smith normal form") {
  using M = std::vector<std::vector<Integer>>;
  CHECK(smith_normal_form(M{{6, 0}, {1, -1}}) ==
        std::vector<Integer>({1, 6}));
  CHECK(smith_normal_form(M{{2, 0}, {0, 6}}) == std::vector<Integer>({2, 6}));
  CHECK(smith_normal_form(M{{4, 6}, {6, 4}}) ==
        std::vector<Integer>({2, 10}));
  CHECK(smith_normal_form(M{{0, 0}, {0, 0}}) == std::vector<Integer>({0, 0}));
  // chain condition d1 | d2
  std::vector<Integer> d = smith_normal_form(M{{2, 0, 0}, {0, 3, 0},
                                               {0, 0, 5}});
  CHECK(d == std::vector<Integer>({1, 1, 30}));
}

TEST_CASE("abelianizations") {
  {
    AbelianInvariants inv = abelianization(
        Presentation::parse("gens: a b; rels: a*b*a^-1*b^-1"));
    CHECK(inv.free_rank == 2);
    CHECK(inv.torsion.empty());
  }
  {
    AbelianInvariants inv = abelianization(
        Presentation::parse("gens: s t; rels: s^2, t^6, s*t*s^-1*t^-1"));
    CHECK(inv.free_rank == 0);
    CHECK(inv.torsion == std::vector<long>({2, 6}));
  }
  {
    AbelianInvariants inv = abelianization(trefoil_orbifold());
    CHECK(inv.free_rank == 0);
    CHECK(inv.torsion == std::vector<long>({6}));
  }
}

TEST_CASE("homomorphism checks into the matrix group") {
  {
    std::map<std::string, Mat3> images = {{"x", eval("P*Q^-1").matrix},
                                          {"y", eval("Q^-1*P").matrix}};
    HomCheckReport rep = hom_check(trefoil_orbifold(), images);
    CHECK(rep.all_hold());
  }
  {
    std::map<std::string, Mat3> images = {
        {"a", eval("R1").matrix},
        {"b", eval("R2*R3*R2^-1").matrix},
        {"c", eval("R2*J^2").matrix}};
    HomCheckReport rep = hom_check(stabilizer72(), images);
    CHECK(rep.all_hold());
  }
  {
    // g -> P fails g^2 = 1
    Presentation inv2 = Presentation::parse("gens: g; rels: g^2");
    std::map<std::string, Mat3> images = {{"g", eval("P").matrix}};
    CHECK(!hom_check(inv2, images).all_hold());
  }
}

TEST_CASE("matrix group against abstract presentation") {
  FiniteGroupTable gz0 = closure({eval("R1").matrix, eval("R2*J^2").matrix,
                                  eval("R2*R3*R2^-1").matrix},
                                 500);
  std::map<std::string, Mat3> images = {{"a", eval("R1").matrix},
                                        {"b", eval("R2*R3*R2^-1").matrix},
                                        {"c", eval("R2*J^2").matrix}};
  CHECK(matrix_group_vs_presentation(gz0, stabilizer72(), images));

  FiniteGroupTable gw12 =
      closure({eval("P*Q^-1").matrix, eval("R").matrix}, 100);
  Presentation z2xz6 =
      Presentation::parse("gens: s t; rels: s^2, t^6, s*t*s^-1*t^-1");
  std::map<std::string, Mat3> images12 = {{"s", eval("R").matrix},
                                          {"t", eval("P*Q^-1").matrix}};
  CHECK(matrix_group_vs_presentation(gw12, z2xz6, images12));

  // order mismatch: Z6 presentation vs the order-3 stabilizer
  FiniteGroupTable gw3 = closure({eval("J").matrix}, 100);
  Presentation z6 = Presentation::parse("gens: a; rels: a^6");
  std::map<std::string, Mat3> images3 = {{"a", eval("J").matrix}};
  CHECK(!matrix_group_vs_presentation(gw3, z6, images3));
}
