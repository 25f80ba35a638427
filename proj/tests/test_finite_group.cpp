#include <doctest.h>

#include "picard/finite_group.hpp"
#include "picard/points.hpp"

using namespace picard;

TEST_CASE("closure of the four stabilizers") {
  FiniteGroupTable gw3 = closure({eval("J").matrix}, 100);
  CHECK(gw3.size() == 3);
  CHECK(common_fixed_point(gw3, named_point("w3")));

  FiniteGroupTable gw4 = closure({eval("R1*R2*R3").matrix}, 100);
  CHECK(gw4.size() == 4);
  CHECK(common_fixed_point(gw4, named_point("w4")));
  for (int i = 0; i < gw4.size(); ++i) CHECK(4 % gw4.element_order(i) == 0);

  FiniteGroupTable gw12 =
      closure({eval("P*Q^-1").matrix, eval("R").matrix}, 100);
  CHECK(gw12.size() == 12);
  CHECK(gw12.is_abelian());
  CHECK(common_fixed_point(gw12, named_point("w12")));
  CHECK(!common_fixed_point(gw12, named_point("z0")));

  FiniteGroupTable gz0 = closure({eval("R1").matrix, eval("R2*J^2").matrix,
                                  eval("R2*R3*R2^-1").matrix},
                                 500);
  CHECK(gz0.size() == 72);
  CHECK(!gz0.is_abelian());
  CHECK(common_fixed_point(gz0, named_point("z0")));
}

TEST_CASE("closure is independent of generator order") {
  FiniteGroupTable a = closure({eval("P*Q^-1").matrix, eval("R").matrix}, 100);
  FiniteGroupTable b = closure({eval("R").matrix, eval("P*Q^-1").matrix}, 100);
  REQUIRE(a.size() == b.size());
  for (int i = 0; i < a.size(); ++i) CHECK(mat_equal(a.rep(i), b.rep(i)));
  for (int i = 0; i < a.size(); ++i)
    for (int j = 0; j < a.size(); ++j) CHECK(a.mul(i, j) == b.mul(i, j));
}

TEST_CASE("closure cap detects infinite subgroups") {
  CHECK_THROWS_AS(closure({eval("P").matrix}, 50), CapExceeded);
}

TEST_CASE("center of abelian and cyclic groups is everything") {
  FiniteGroupTable gw3 = closure({eval("J").matrix}, 100);
  CHECK(center(gw3).size() == gw3.size());
  FiniteGroupTable gw12 =
      closure({eval("P*Q^-1").matrix, eval("R").matrix}, 100);
  CHECK(center(gw12).size() == gw12.size());
}

TEST_CASE("center and quotient of the order-72 stabilizer") {
  FiniteGroupTable gz0 = closure({eval("R1").matrix, eval("R2*J^2").matrix,
                                  eval("R2*R3*R2^-1").matrix},
                                 500);
  FiniteGroupTable z = center(gz0);
  CHECK(z.size() == 6);
  CHECK(iso_check(z, cyclic_group(6)));

  int c2 = gz0.find(eval("(R2*J^2)^2").matrix);
  REQUIRE(c2 >= 0);
  CHECK(gz0.subgroup({c2}).size() == 6);
  CHECK(gz0.element_order(c2) == 6);

  FiniteGroupTable q = quotient(gz0, {c2});
  CHECK(q.size() == 12);
  CHECK(!q.is_abelian());
  CHECK(iso_check(q, dihedral_group(6)));
}

TEST_CASE("quotient by the identity is the group itself") {
  FiniteGroupTable gw12 =
      closure({eval("P*Q^-1").matrix, eval("R").matrix}, 100);
  FiniteGroupTable q = quotient(gw12, {0});
  CHECK(q.size() == gw12.size());
  CHECK(iso_check(q, gw12));

  FiniteGroupTable q6 = quotient(gw12, {gw12.find(eval("R").matrix)});
  CHECK(q6.size() == 6);
  CHECK(iso_check(q6, cyclic_group(6)));
}

TEST_CASE("isomorphism testing with order pruning") {
  FiniteGroupTable gw12 =
      closure({eval("P*Q^-1").matrix, eval("R").matrix}, 100);
  CHECK(iso_check(gw12, direct_product(cyclic_group(2), cyclic_group(6))));
  CHECK(!iso_check(cyclic_group(4),
                   direct_product(cyclic_group(2), cyclic_group(2))));
  CHECK(!iso_check(cyclic_group(4), cyclic_group(5)));
  CHECK(iso_check(dihedral_group(3),
                  dihedral_group(3)));
  CHECK(!iso_check(dihedral_group(3), cyclic_group(6)));
}

TEST_CASE("abelian invariant factors") {
  CHECK(abelian_invariants(cyclic_group(6)) == std::vector<long>{6});
  CHECK(abelian_invariants(direct_product(cyclic_group(2), cyclic_group(6))) ==
        std::vector<long>({2, 6}));
  CHECK(abelian_invariants(direct_product(cyclic_group(2), cyclic_group(3))) ==
        std::vector<long>{6});
  CHECK_THROWS_AS(abelian_invariants(dihedral_group(3)),
                  std::invalid_argument);
}
