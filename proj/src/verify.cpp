#include "picard/verify.hpp"

#include <random>
#include <sstream>

#include "picard/face_lattice.hpp"
#include "picard/handles.hpp"
#include "picard/points.hpp"

namespace picard {

namespace {

Report make_report(const VerifyConfig& cfg) {
  Report r;
  r.version = kVersion;
  r.config = cfg;
  return r;
}

// The isotropy groups and their listed generators.
struct IsotropySpec {
  const char* point;
  std::vector<const char*> generator_words;
  int order;
};

const std::vector<IsotropySpec>& isotropy_specs() {
  static const std::vector<IsotropySpec> specs = {
      {"w3", {"J"}, 3},
      {"w4", {"R1*R2*R3"}, 4},
      {"w12", {"P*Q^-1", "R"}, 12},
      {"z0", {"R1", "R2*J^2", "R2*R3*R2^-1"}, 72},
  };
  return specs;
}

FiniteGroupTable isotropy_closure(const IsotropySpec& spec, int cap) {
  std::vector<Mat3> gens;
  for (const char* w : spec.generator_words) gens.push_back(eval(w).matrix);
  return closure(gens, cap);
}

// The abstract presentation of the order-72 stabilizer.
Presentation gamma_z0_presentation() {
  return Presentation::parse(
      "gens: a b c; rels: a^6, b^6, c^12, a*b*a^-1*b^-1, c*a*c^-1*b^-1, "
      "a^5*b^5*c^-2");
}

// The Seifert-fibred comparison group from the order-72 analysis. The
// central-fiber relators [h, c_i] are part of the Seifert structure; without
// them the presentation is infinite (it surjects the (4,2,6) triangle
// group).
Presentation seifert_group_presentation() {
  return Presentation::parse(
      "gens: c1 c2 c3 h; rels: h^6*(c1*c2*c3)^-1, h^6, c1^2*h^-3, c2^2, "
      "c3^6, h*c1*h^-1*c1^-1, h*c2*h^-1*c2^-1, h*c3*h^-1*c3^-1");
}

Presentation trefoil_orbifold_presentation() {
  return Presentation::parse("gens: x y; rels: x^6, x*y*x*(y*x*y)^-1");
}

}  // namespace

Report verify_relations(const VerifyConfig& cfg) {
  Report rep = make_report(cfg);

  for (const char* id : {"thm-1", "thm-2", "thm-3", "gamma-infty"}) {
    PresentationReport pr = verify_presentation(id);
    for (const RelatorResult& r : pr.relators)
      rep.add(std::string("relations.") + id + "." + r.relator, r.holds,
              r.holds ? "scalar " + r.residual_scalar : r.residual_scalar);
  }

  // generator sanity: exact H-unitarity
  {
    bool ok = true;
    for (Gen g : {Gen::P, Gen::Q, Gen::R, Gen::R1, Gen::R2, Gen::R3, Gen::J})
      ok &= is_h_unitary(generator_matrix(g));
    rep.add("relations.generators-h-unitary", ok);
  }

  // the corrected expression for R2 and the misprinted variant
  {
    Mat3 r2 = generator_matrix(Gen::R2);
    rep.add("relations.erratum.R2-eq-RPQP^-2R",
            pu_equal(r2, eval("R*P*Q*P^-2*R").matrix));
    rep.add("relations.erratum.R2-neq-RPQ^-1P^-2R",
            !pu_equal(r2, eval("R*P*Q^-1*P^-2*R").matrix));
  }

  rep.add("relations.R-eq-(R3*R1*R2)^2",
          pu_equal(generator_matrix(Gen::R), eval("(R3*R1*R2)^2").matrix));
  rep.add("relations.R-eq-(J*R1^-1*J)^2",
          pu_equal(generator_matrix(Gen::R), eval("(J*R1^-1*J)^2").matrix));
  rep.add("relations.R3-eq-J^-1*R1*J",
          pu_equal(generator_matrix(Gen::R3), eval("J^-1*R1*J").matrix));

  // the eight reflection facts
  {
    const Vec3& z0 = named_point("z0");
    const Vec3& z1 = named_point("z1");
    const Vec3& z2 = named_point("z2");
    const Vec3& z3 = named_point("z3");
    const Vec3& qinf = named_point("qinf");
    const Mat3& r1 = generator_matrix(Gen::R1);
    const Mat3& r2 = generator_matrix(Gen::R2);
    const Mat3& r3 = generator_matrix(Gen::R3);
    const Mat3& r = generator_matrix(Gen::R);

    rep.add("reflection.1.R1-fixes-z0-z3-qinf-maps-z1-z2",
            fixes_projectively(r1, z0) && fixes_projectively(r1, z3) &&
                fixes_projectively(r1, qinf) && proj_equal(r1 * z1, z2));
    rep.add("reflection.2.R2-fixes-z1", fixes_projectively(r2, z1));
    rep.add("reflection.3.R3-fixes-z2-qinf",
            fixes_projectively(r3, z2) && fixes_projectively(r3, qinf));
    rep.add("reflection.4.R2R3R2^-1-fixes-z0",
            fixes_projectively(eval("R2*R3*R2^-1").matrix, z0));
    {
      Mat3 m = eval("R3*R1*R3^-1").matrix;
      rep.add("reflection.5.R3R1R3^-1-fixes-z1-qinf",
              fixes_projectively(m, z1) && fixes_projectively(m, qinf));
    }
    rep.add("reflection.6.R1R2R1^-1-fixes-z2",
            fixes_projectively(eval("R1*R2*R1^-1").matrix, z2));
    {
      Mat3 a = r2;
      Mat3 b = eval("R3*R1*R3^-1").matrix;
      rep.add("reflection.7.R2-commutes-R3R1R3^-1", pu_equal(a * b, b * a));
    }
    rep.add("reflection.8.R-swaps-z0-z3-fixes-z1-z2",
            proj_equal(r * z0, z3) && proj_equal(r * z3, z0) &&
                fixes_projectively(r, z1) && fixes_projectively(r, z2));
  }

  return rep;
}

Report verify_fixed_points(const VerifyConfig& cfg) {
  Report rep = make_report(cfg);

  auto lift_witness = [](const Vec3& v) {
    return std::string("[\"") + v(0).to_string() + "\",\"" +
           v(1).to_string() + "\",\"" + v(2).to_string() + "\"]";
  };
  {
    Vec3 fp = fixed_point_elliptic(generator_matrix(Gen::J));
    rep.add("fixed-points.J-fixes-w3", proj_equal(fp, named_point("w3")),
            "fixed_point_elliptic(J) ~ w3", lift_witness(fp));
  }
  {
    Vec3 fp = fixed_point_elliptic(eval("R1*R2*R3").matrix);
    rep.add("fixed-points.R1R2R3-fixes-w4", proj_equal(fp, named_point("w4")),
            "fixed_point_elliptic(R1*R2*R3) ~ w4", lift_witness(fp));
  }
  {
    const Vec3& w12 = named_point("w12");
    rep.add("fixed-points.w12-fixed-by-PQ^-1-and-R",
            fixes_projectively(eval("P*Q^-1").matrix, w12) &&
                fixes_projectively(generator_matrix(Gen::R), w12));
  }
  rep.add("fixed-points.w4-between-z0-z2",
          on_geodesic_between(named_point("z0"), named_point("w4"),
                              named_point("z2")));
  rep.add("fixed-points.w12-between-z0-z3",
          on_geodesic_between(named_point("z0"), named_point("w12"),
                              named_point("z3")));

  // z0 is the mirror intersection of R1 and R2 R3 R2^-1
  rep.add("fixed-points.z0-on-both-mirrors",
          fixes_projectively(generator_matrix(Gen::R1), named_point("z0")) &&
              fixes_projectively(eval("R2*R3*R2^-1").matrix,
                                 named_point("z0")));

  // reflection constructions recover the generators
  rep.add("fixed-points.reflection-n1-order6-is-R1",
          pu_equal(complex_reflection(named_point("n1"), 6),
                   generator_matrix(Gen::R1)));
  rep.add("fixed-points.reflection-n2-order6-is-R2",
          pu_equal(complex_reflection(named_point("n2"), 6),
                   generator_matrix(Gen::R2)));
  {
    Vec3 n = Vec3::Zero();
    n(0) = CycNum(1);
    n(2) = CycNum(1);
    rep.add("fixed-points.reflection-(1,0,1)-order2-is-R",
            pu_equal(complex_reflection(n, 2), generator_matrix(Gen::R)));
  }
  {
    Mat3 cr3 = complex_reflection(named_point("n3"), 6);
    bool fixes = fixes_projectively(cr3, named_point("z2")) &&
                 fixes_projectively(generator_matrix(Gen::R3),
                                    named_point("z2"));
    rep.add("fixed-points.n3-mirror-contains-z2", fixes,
            "order-6 reflection about n3 and R3 both fix z2");
  }

  // classification spot checks
  rep.add("classify.J-regular-elliptic",
          classify(generator_matrix(Gen::J)) == IsometryType::regular_elliptic);
  rep.add("classify.R-special-elliptic",
          classify(generator_matrix(Gen::R)) == IsometryType::special_elliptic);
  rep.add("classify.R1R2R3-regular-elliptic",
          classify(eval("R1*R2*R3").matrix) == IsometryType::regular_elliptic);
  {
    Mat3 t = heis_translation({CycNum(0), RealCyc(1)});
    rep.add("classify.vertical-translation-parabolic",
            classify(t) == IsometryType::parabolic);
  }
  rep.add("classify.P-parabolic",
          classify(generator_matrix(Gen::P)) == IsometryType::parabolic);

  return rep;
}

Report verify_isotropy(const VerifyConfig& cfg) {
  Report rep = make_report(cfg);

  std::vector<FiniteGroupTable> tables;
  for (const IsotropySpec& spec : isotropy_specs()) {
    FiniteGroupTable t = isotropy_closure(spec, cfg.max_closure);
    rep.add(std::string("isotropy.") + spec.point + ".order",
            t.size() == spec.order,
            "order " + std::to_string(t.size()) + ", expected " +
                std::to_string(spec.order));
    rep.add(std::string("isotropy.") + spec.point + ".fixes-point",
            common_fixed_point(t, named_point(spec.point)));
    tables.push_back(std::move(t));
  }
  const FiniteGroupTable& gw4 = tables[1];
  const FiniteGroupTable& gw12 = tables[2];
  const FiniteGroupTable& gz0 = tables[3];

  // the order-4 group is cyclic: every element order divides 4
  {
    bool ok = true;
    for (int i = 0; i < gw4.size(); ++i) ok &= 4 % gw4.element_order(i) == 0;
    rep.add("isotropy.w4.element-orders-divide-4", ok);
  }

  rep.add("isotropy.w12.abelian", gw12.is_abelian());
  rep.add("isotropy.w12.is-Z2xZ6",
          iso_check(gw12, direct_product(cyclic_group(2), cyclic_group(6))));
  {
    Mat3 a = eval("P*Q^-1").matrix;
    Mat3 b = generator_matrix(Gen::R);
    rep.add("isotropy.w12.generators-commute", pu_equal(a * b, b * a));
  }

  // center of the order-72 stabilizer and its quotient
  {
    FiniteGroupTable z = center(gz0);
    rep.add("isotropy.z0.center-order-6", z.size() == 6,
            "center order " + std::to_string(z.size()));
    int c2 = gz0.find(eval("(R2*J^2)^2").matrix);
    bool generated = c2 >= 0 && gz0.subgroup({c2}).size() == 6;
    // the subgroup generated by c^2 must be exactly the center
    if (generated) {
      std::vector<int> sub = gz0.subgroup({c2});
      FiniteGroupTable subt = gz0.subgroup_table(sub);
      generated = iso_check(subt, z) && subt.size() == z.size();
      // element-level: every power of c^2 commutes with everything
      for (int s : sub)
        for (int x = 0; x < gz0.size() && generated; ++x)
          generated = gz0.mul(s, x) == gz0.mul(x, s);
    }
    rep.add("isotropy.z0.center-generated-by-(R2J^2)^2", generated);

    FiniteGroupTable q = quotient(gz0, {c2});
    rep.add("isotropy.z0.quotient-order-12", q.size() == 12,
            "quotient order " + std::to_string(q.size()));
    rep.add("isotropy.z0.quotient-nonabelian", !q.is_abelian());
    rep.add("isotropy.z0.quotient-is-dihedral-12",
            iso_check(q, dihedral_group(6)),
            "the orientation-preserving (2,2,6) triangle group");
  }

  // abstract presentation: relators hold and the abstract order matches
  {
    Presentation p = gamma_z0_presentation();
    std::map<std::string, Mat3> images = {
        {"a", generator_matrix(Gen::R1)},
        {"b", eval("R2*R3*R2^-1").matrix},
        {"c", eval("R2*J^2").matrix}};
    HomCheckReport hc = hom_check(p, images);
    for (const HomCheckResult& r : hc.relators)
      rep.add("isotropy.z0.relator." + r.relator, r.holds);
    CosetTable ct = todd_coxeter(p, {}, cfg.max_cosets);
    rep.add("isotropy.z0.todd-coxeter-72", ct.num_cosets == 72,
            std::to_string(ct.num_cosets) + " cosets");
    rep.add("isotropy.z0.matrix-group-matches-presentation",
            matrix_group_vs_presentation(gz0, p, images, cfg.max_cosets));
  }

  // the Seifert comparison group: collapsing c2, c3 leaves Z_3; the full
  // group is the order-72 stabilizer in disguise
  {
    Presentation g = seifert_group_presentation();
    Presentation collapsed = g.with_extra_relators({"c2", "c3"});
    CosetTable small = todd_coxeter(collapsed, {}, cfg.max_cosets);
    rep.add("isotropy.seifert.collapse-to-Z3", small.num_cosets == 3,
            std::to_string(small.num_cosets) + " cosets");
    if (small.num_cosets == 3)
      rep.add("isotropy.seifert.collapse-cyclic",
              iso_check(regular_representation(collapsed, small),
                        cyclic_group(3)));
    CosetTable full = todd_coxeter(g, {}, cfg.max_cosets);
    rep.add("isotropy.seifert.order-72", full.num_cosets == 72,
            std::to_string(full.num_cosets) + " cosets");
    if (full.num_cosets == 72)
      rep.add("isotropy.seifert.isomorphic-to-z0-stabilizer",
              iso_check(regular_representation(g, full), gz0));
  }

  // abelianizations by Smith normal form
  {
    AbelianInvariants inv = abelianization(
        Presentation::parse("gens: s t; rels: s^2, t^6, s*t*s^-1*t^-1"));
    rep.add("abelianization.Z2xZ6",
            inv.free_rank == 0 && inv.torsion == std::vector<long>({2, 6}));
  }
  {
    AbelianInvariants inv = abelianization(trefoil_orbifold_presentation());
    rep.add("abelianization.trefoil-orbifold",
            inv.free_rank == 0 && inv.torsion == std::vector<long>({6}));
  }

  // the cusp group maps onto the coned-trefoil orbifold group
  {
    Presentation p = trefoil_orbifold_presentation();
    std::map<std::string, Mat3> images = {{"x", eval("P*Q^-1").matrix},
                                          {"y", eval("Q^-1*P").matrix}};
    HomCheckReport hc = hom_check(p, images);
    for (const HomCheckResult& r : hc.relators)
      rep.add("trefoil.relator." + r.relator, r.holds,
              "x -> P*Q^-1, y -> Q^-1*P");
  }

  return rep;
}

Report verify_cycles(const VerifyConfig& cfg) {
  Report rep = make_report(cfg);
  FaceLattice l = FaceLattice::build();
  GeometryReport sp = l.validate_side_pairings();
  for (const CheckLine& c : sp.checks) rep.add(c.id, c.pass, c.detail);
  for (int id = 1; id <= 5; ++id) {
    RidgeCycleReport rc = l.verify_ridge_cycle(id);
    for (const CheckLine& c : rc.arrow_checks) rep.add(c.id, c.pass, c.detail);
    std::string base = "cycle" + std::to_string(id);
    rep.add(base + ".closes", rc.closes);
    rep.add(base + ".stabilizes-setwise", rc.stabilizes_setwise);
    rep.add(base + ".transform-finite-order", rc.transform_order.has_value(),
            rc.transform_word + " has projective order " +
                (rc.transform_order ? std::to_string(*rc.transform_order)
                                    : std::string(">200")));
    if (id == 4)
      rep.add(base + ".fixes-pointwise", rc.fixes_pointwise,
              "the mirror triangle of R");
    if (id == 5)
      rep.add(base + ".transform-order-6",
              rc.transform_order && *rc.transform_order == 6,
              "P*Q^-1 stabilizes the w12 ridge");
  }
  return rep;
}

Report verify_orbits(const VerifyConfig& cfg) {
  Report rep = make_report(cfg);
  FaceLattice l = FaceLattice::build();
  std::vector<int> counts = l.orbit_counts();
  const int expected[5] = {5, 5, 5, 3, 1};
  for (int dim = 0; dim <= 4; ++dim) {
    std::ostringstream detail;
    detail << counts[static_cast<std::size_t>(dim)] << " classes, expected "
           << expected[dim];
    rep.add("orbits.dim" + std::to_string(dim) + ".count",
            counts[static_cast<std::size_t>(dim)] == expected[dim],
            detail.str());
  }
  rep.add("orbits.z0w12-vs-z1w12-distinct",
          !l.same_orbit("[z0,w12]", "[z1,w12]"),
          "the two w12 edges lie in different classes");
  rep.add("orbits.z0w4-class-covers-subdivided-edges",
          l.same_orbit("[z0,w4]", "[z2,w4]") &&
              l.same_orbit("[z0,w4]", "[z1,PJ(w4)]") &&
              l.same_orbit("[z0,w4]", "[z3,P(w4)]"));
  return rep;
}

Report verify_geometry(const VerifyConfig& cfg) {
  Report rep = make_report(cfg);
  FaceLattice l = FaceLattice::build();

  rep.add("lattice.vertex-count", l.vertices().size() == 13,
          std::to_string(l.vertices().size()) + " vertices");
  rep.add("lattice.edge-count", l.faces(1).size() == 24,
          std::to_string(l.faces(1).size()) + " edges");
  rep.add("lattice.ridge-count", l.faces(2).size() == 17,
          std::to_string(l.faces(2).size()) + " ridges");
  rep.add("lattice.3face-count", l.faces(3).size() == 6,
          "four infinite and two finite 3-faces");
  rep.add("lattice.4face-unique", l.faces(4).size() == 1);

  GeometryReport g = l.validate_geometry();
  for (const CheckLine& c : g.checks)
    rep.add("geometry." + c.id, c.pass, c.detail);

  // Ford-side facts. With the sphere of g centered at g^-1(q_inf), the
  // sphere through the four simplex vertices is I((RP)^-1): the partner of
  // I(RP) under the pairing map RP, centered at the Heisenberg origin.
  {
    std::vector<Word> partner = {parse_word("(R*P)^-1")};
    for (const char* n : {"z0", "z1", "z2", "z3"}) {
      FordMembershipReport fm = ford_membership(named_point(n), partner);
      rep.add(std::string("ford.") + n + "-on-I((RP)^-1)",
              !fm.lines[0].skipped && fm.lines[0].side == FordSide::on);
    }
    // z0, z1, z2 also lie on I(RP) itself (the spheres meet along the RP
    // orbit of the bottom triangle); z3 does not.
    Mat3 rpm = eval("R*P").matrix;
    rep.add("ford.z0z1z2-on-I(RP)",
            ford_side(named_point("z0"), rpm) == FordSide::on &&
                ford_side(named_point("z1"), rpm) == FordSide::on &&
                ford_side(named_point("z2"), rpm) == FordSide::on);
    FordMembershipReport fm =
        ford_membership(lift(HoroPoint{CycNum(0), RealCyc(0), RealCyc(100)}),
                        partner);
    rep.add("ford.high-point-exterior",
            fm.lines[0].side == FordSide::exterior,
            "a high horospherical point lies outside the sphere");
    Mat3 g0 = eval("(R*P)^-1").matrix;
    IsometricSphereData sphere = isometric_sphere(g0);
    rep.add("ford.sphere-radius4",
            sphere.radius4 == RealCyc(4) &&
                isometric_sphere(rpm).radius4 == RealCyc(4),
            "both partner spheres have r^4 = 4");
    rep.add("ford.sphere-center-origin",
            sphere.center.z.is_zero() && sphere.center.t.is_zero(),
            "I((RP)^-1) is the unit Cygan sphere about [0,0]");
    FordMembershipReport center_side =
        ford_membership(lift(sphere.center), partner);
    rep.add("ford.center-interior",
            center_side.lines[0].side == FordSide::interior);
    bool p_fixes = true;
    try {
      isometric_sphere(generator_matrix(Gen::P));
      p_fixes = false;
    } catch (const FixesInfinity&) {
    }
    rep.add("ford.P-fixes-infinity", p_fixes,
            "no isometric sphere for upper-triangular elements");
  }
  return rep;
}

Report verify_handles(const VerifyConfig& cfg) {
  Report rep = make_report(cfg);
  HandleComplex c = build_theorem1();
  rep.add("handles.attachment-count", c.attachments.size() == 10,
          "4 + 2 + 1 + 2 + 1 attachments");
  {
    const Attachment* h = c.find("h([z0,w12])");
    rep.add("handles.z0w12-cone-order-6",
            h && h->handle.cone_order == 6 &&
                h->handle.kind == HandleKind::orbifold1);
  }
  {
    const Attachment* h = c.find("h([z0,w4,w12])");
    rep.add("handles.pants-product-F2",
            h && h->handle.kind == HandleKind::pants_product &&
                h->handle.cone_order == 2 && h->regions.size() == 3);
  }
  HandleValidationReport v = validate(c);
  rep.add("handles.validates", v.violation_count() == 0,
          std::to_string(v.violation_count()) + " violations");
  for (const ValidationIssue& i : v.issues) {
    if (i.violation)
      rep.add("handles.violation." + i.id, false, i.detail);
    else
      rep.add_status("handles." + i.id, CheckStatus::info, i.detail);
  }
  // the matrix facts behind the w4-link note
  {
    Mat3 sq = eval("(R1*R2*R3)^2").matrix;
    rep.add("handles.w4-locus.square-is-reflection",
            classify(sq) == IsometryType::special_elliptic &&
                pu_equal(sq, eval("(P*J)^-1*R*(P*J)").matrix),
            "(R1*R2*R3)^2 ~ (PJ)^-1 R (PJ), an order-2 reflection");
    rep.add("handles.w4-locus.mirror-through-w4",
            fixes_projectively(sq, named_point("w4")) &&
                fixes_projectively(generator_matrix(Gen::R),
                                   eval("P*J").matrix * named_point("w4")));
  }
  rep.add("handles.euler-characteristic", euler_characteristic(c) == 2,
          "chi = " + std::to_string(euler_characteristic(c)));
  {
    Presentation p = pi1_presentation(
        c, {{"h([z0,w4,w3,J(w4)])", ""}, {"h([z0,J(w4),z1,w12])", ""}});
    AbelianInvariants inv = abelianization(p);
    rep.add("handles.pi1-empty-words-free-rank-1",
            p.num_generators() == 1 && inv.free_rank == 1 &&
                inv.torsion.empty(),
            "one loop survives the spanning tree");
  }
  return rep;
}

namespace {

Rational random_rational(std::mt19937_64& rng, long num_range, long den_range) {
  std::uniform_int_distribution<long> num(-num_range, num_range);
  std::uniform_int_distribution<long> den(1, den_range);
  Rational q(num(rng), den(rng));
  q.canonicalize();
  return q;
}

CycNum random_cyc(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> pos(0, 11);
  std::uniform_int_distribution<int> nterms(1, 4);
  CycNum::Coeffs c{};
  int n = nterms(rng);
  for (int k = 0; k < n; ++k)
    c[static_cast<std::size_t>(pos(rng))] = random_rational(rng, 9, 9);
  return CycNum(std::move(c));
}

CycNum random_real_cyc(std::mt19937_64& rng) {
  CycNum a = random_cyc(rng);
  return a + conj(a);
}

Vec3 random_negative_vector(std::mt19937_64& rng) {
  // lifts of horospherical points with u > 0 are negative by construction
  HoroPoint p;
  p.z = random_cyc(rng);
  p.t = RealCyc(random_rational(rng, 9, 9));
  std::uniform_int_distribution<long> upos(1, 9);
  p.u = RealCyc(Rational(upos(rng)));
  return lift(p);
}

}  // namespace

Report verify_properties(const VerifyConfig& cfg) {
  Report rep = make_report(cfg);
  std::mt19937_64 rng(cfg.seed);
  SignOptions sign_opts{cfg.precision_bits, 4096};

  // field axioms on random triples
  {
    int failures = 0;
    for (int n = 0; n < 1000; ++n) {
      CycNum a = random_cyc(rng), b = random_cyc(rng), c = random_cyc(rng);
      if ((a + b) + c != a + (b + c)) ++failures;
      if ((a * b) * c != a * (b * c)) ++failures;
      if (a * (b + c) != a * b + a * c) ++failures;
      if (!a.is_zero() && a * a.inverse() != CycNum(1)) ++failures;
      if (conj(a * b) != conj(a) * conj(b)) ++failures;
      if (conj(conj(a)) != a) ++failures;
      CycNum norm = a * conj(a);
      if (!norm.is_real()) ++failures;
      if (sign_real(RealCyc(norm), sign_opts) == Sign::negative) ++failures;
    }
    rep.add("properties.field-axioms-1000", failures == 0,
            std::to_string(failures) + " failures");
  }

  // sign oracle vs 53-bit float on 1000 random nonzero real elements
  {
    int failures = 0;
    int compared = 0;
    int draws = 0;
    while (compared < 1000 && draws < 100000) {
      ++draws;
      CycNum a = random_real_cyc(rng);
      if (a.is_zero()) continue;
      double approx = a.to_double().real();
      if (std::abs(approx) < 1e-9) continue;  // float would be unreliable
      ++compared;
      Sign s = sign_real(RealCyc(a), sign_opts);
      Sign fs = approx > 0 ? Sign::positive : Sign::negative;
      if (s != fs) ++failures;
    }
    rep.add("properties.sign-vs-float-1000",
            failures == 0 && compared == 1000,
            std::to_string(compared) + " compared, " +
                std::to_string(failures) + " disagreements");
  }

  // isometry invariance of the distance form under every generator
  {
    int failures = 0;
    std::vector<Mat3> gens;
    for (Gen g : {Gen::P, Gen::Q, Gen::R, Gen::R1, Gen::R2, Gen::R3, Gen::J})
      gens.push_back(generator_matrix(g));
    for (int n = 0; n < 100; ++n) {
      Vec3 u = random_negative_vector(rng);
      Vec3 v = random_negative_vector(rng);
      RealCyc base = bergman_cosh2(u, v);
      for (const Mat3& g : gens)
        if (!(bergman_cosh2(g * u, g * v) == base)) ++failures;
    }
    rep.add("properties.bergman-invariance-100-pairs", failures == 0,
            std::to_string(failures) + " failures across 7 generators");
  }

  // herm sesquilinearity and conjugate symmetry
  {
    int failures = 0;
    for (int n = 0; n < 200; ++n) {
      Vec3 a = random_negative_vector(rng);
      Vec3 b = random_negative_vector(rng);
      CycNum s = random_cyc(rng);
      if (herm(a, b) != conj(herm(b, a))) ++failures;
      Vec3 sa = a;
      for (int i = 0; i < 3; ++i) sa(i) = sa(i) * s;
      if (herm(sa, b) != s * herm(a, b)) ++failures;
      if (herm(b, sa) != conj(s) * herm(b, a)) ++failures;
    }
    rep.add("properties.herm-sesquilinear-200", failures == 0);
  }

  // heis_translation is a homomorphism
  {
    int failures = 0;
    for (int n = 0; n < 100; ++n) {
      HeisenbergPoint p{random_cyc(rng), RealCyc(random_rational(rng, 9, 9))};
      HeisenbergPoint q{random_cyc(rng), RealCyc(random_rational(rng, 9, 9))};
      Mat3 lhs = heis_translation(p) * heis_translation(q);
      Mat3 rhs = heis_translation(heis_mul(p, q));
      if (!mat_equal(lhs, rhs)) ++failures;
      HeisenbergPoint e = heis_mul(p, heis_inverse(p));
      if (!e.z.is_zero() || !e.t.is_zero()) ++failures;
      // the translation moves the origin's lift to p's lift
      if (!proj_equal(heis_translation(p) *
                          lift(HeisenbergPoint{CycNum(0), RealCyc(0)}),
                      lift(p)))
        ++failures;
    }
    rep.add("properties.heisenberg-homomorphism-100", failures == 0);
  }

  // boundary action of rotations and dilations, exact on lifts
  {
    int failures = 0;
    for (int n = 0; n < 50; ++n) {
      HeisenbergPoint p{random_cyc(rng), RealCyc(random_rational(rng, 9, 9))};
      std::uniform_int_distribution<long> kdist(0, 35);
      long k = kdist(rng);
      Mat3 rot = Mat3::Identity();
      rot(1, 1) = CycNum::zeta_pow(k);
      if (!proj_equal(rot * lift(p),
                      lift(HeisenbergPoint{CycNum::zeta_pow(k) * p.z, p.t})))
        ++failures;
      Rational lam = random_rational(rng, 9, 3);
      if (lam == 0) lam = 1;
      Mat3 dil = Mat3::Zero();
      dil(0, 0) = CycNum(lam);
      dil(1, 1) = CycNum(1);
      dil(2, 2) = CycNum(Rational(1) / lam);
      HeisenbergPoint scaled{CycNum(lam) * p.z,
                             RealCyc(CycNum(lam * lam) * p.t.value())};
      if (!proj_equal(dil * lift(p), lift(scaled))) ++failures;
    }
    rep.add("properties.rotation-dilation-action-50", failures == 0);
  }

  // geodesic betweenness: symmetry and isometry invariance
  {
    int failures = 0;
    const Vec3& z0 = named_point("z0");
    const Vec3& z2 = named_point("z2");
    const Vec3& w4 = named_point("w4");
    for (Gen g : {Gen::P, Gen::Q, Gen::R, Gen::R1, Gen::R2, Gen::R3,
                  Gen::J}) {
      const Mat3& m = generator_matrix(g);
      if (!on_geodesic_between(m * z0, m * w4, m * z2)) ++failures;
      if (!on_geodesic_between(m * z2, m * w4, m * z0)) ++failures;
    }
    for (int n = 0; n < 20; ++n) {
      Vec3 u = random_negative_vector(rng);
      Vec3 v = random_negative_vector(rng);
      if (!on_geodesic_between(u, u, v)) ++failures;
      if (!on_geodesic_between(u, v, v)) ++failures;
    }
    rep.add("properties.betweenness-invariance", failures == 0);
  }

  // embeddings against their defining identities
  {
    CycNum om = embed(Constant::omega);
    bool ok = om * om * om == CycNum(1) && om != CycNum(1);
    CycNum z9 = embed(Constant::zeta9);
    ok &= z9 * z9 * z9 == om;
    CycNum i = embed(Constant::i);
    ok &= i * i == CycNum(-1);
    CycNum s3 = embed(Constant::sqrt3);
    ok &= s3 * s3 == CycNum(3);
    CycNum s = embed(Constant::sin_pi_9);
    // 3 sin t - 4 sin^3 t = sin 3t = sin(pi/3) = sqrt3/2
    ok &= CycNum(3) * s - CycNum(4) * s * s * s == s3 / CycNum(2);
    rep.add("properties.embed-identities", ok);
  }

  // pu_equal is an equivalence compatible with multiplication
  {
    int failures = 0;
    CycNum om = embed(Constant::omega);
    Mat3 p = generator_matrix(Gen::P);
    Mat3 q = generator_matrix(Gen::Q);
    if (!pu_equal(p, om * p)) ++failures;
    if (pu_equal(p, q)) ++failures;
    if (!pu_equal(p * q, (om * p) * q)) ++failures;
    rep.add("properties.pu-equal-scalars", failures == 0);
  }

  // classification is conjugation invariant
  {
    int failures = 0;
    std::vector<const char*> samples = {"J", "R", "R1*R2*R3", "P",
                                        "R1", "Q", "R*P*Q"};
    std::vector<const char*> conjugators = {"P", "Q^-1*R", "R1*P^2",
                                            "J*Q"};
    for (const char* s : samples) {
      Mat3 g = eval(s).matrix;
      IsometryType base = classify(g);
      for (const char* c : conjugators) {
        Mat3 h = eval(c).matrix;
        if (classify(h * g * inverse(h)) != base) ++failures;
      }
    }
    rep.add("properties.classify-conjugation-invariant", failures == 0);
  }

  return rep;
}

Report verify_all(const VerifyConfig& cfg) {
  Report rep = make_report(cfg);
  rep.merge(verify_relations(cfg));
  rep.merge(verify_fixed_points(cfg));
  rep.merge(verify_isotropy(cfg));
  rep.merge(verify_cycles(cfg));
  rep.merge(verify_orbits(cfg));
  rep.merge(verify_geometry(cfg));
  rep.merge(verify_handles(cfg));
  rep.merge(verify_properties(cfg));
  return rep;
}

}  // namespace picard
