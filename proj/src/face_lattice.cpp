#include "picard/face_lattice.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "picard/points.hpp"

namespace picard {

namespace {

std::string face_display_name(const std::vector<std::string>& principal,
                              const std::vector<std::string>& decorations) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < principal.size(); ++i) {
    if (i) os << ",";
    os << principal[i];
  }
  if (!decorations.empty()) {
    os << ",(";
    for (std::size_t i = 0; i < decorations.size(); ++i) {
      if (i) os << ",";
      os << decorations[i];
    }
    os << ")";
  }
  os << "]";
  return os.str();
}

}  // namespace

int FaceLattice::vertex_index(const std::string& name) const {
  for (std::size_t i = 0; i < vertices_.size(); ++i)
    if (vertices_[i].name == name) return static_cast<int>(i);
  throw std::invalid_argument("unknown vertex: " + name);
}

void FaceLattice::add_vertex(const std::string& name, const Vec3& lift,
                             bool finite) {
  vertices_.push_back({name, lift, finite});
}

void FaceLattice::add_face(int dim, const std::vector<std::string>& principal,
                           const std::vector<std::string>& decorations) {
  Face f;
  f.dim = dim;
  for (const std::string& v : principal) {
    vertex_index(v);  // existence check
    f.principal.insert(v);
  }
  for (const std::string& v : decorations) {
    vertex_index(v);
    f.decorations.insert(v);
  }
  f.name = face_display_name(principal, decorations);
  faces_[static_cast<std::size_t>(dim)].push_back(std::move(f));
}

FaceLattice FaceLattice::build() {
  FaceLattice l;
  l.faces_.resize(5);

  const Mat3& p = generator_matrix(Gen::P);
  const Mat3& j = generator_matrix(Gen::J);
  Vec3 w3 = named_point("w3");
  Vec3 w4 = named_point("w4");

  l.add_vertex("qinf", named_point("qinf"), false);
  l.add_vertex("z0", named_point("z0"), true);
  l.add_vertex("z1", named_point("z1"), true);
  l.add_vertex("z2", named_point("z2"), true);
  l.add_vertex("z3", named_point("z3"), true);
  l.add_vertex("w3", w3, true);
  l.add_vertex("P(w3)", p * w3, true);
  l.add_vertex("w4", w4, true);
  l.add_vertex("J(w4)", j * w4, true);
  l.add_vertex("PJ(w4)", p * (j * w4), true);
  l.add_vertex("P2J(w4)", p * (p * (j * w4)), true);
  l.add_vertex("P(w4)", p * w4, true);
  l.add_vertex("w12", named_point("w12"), true);

  for (const NamedVertex& v : l.vertices_) l.add_face(0, {v.name}, {});

  // edges: subdivided simplex edges
  l.add_face(1, {"z0", "w4"}, {});
  l.add_face(1, {"z2", "w4"}, {});
  l.add_face(1, {"z0", "J(w4)"}, {});
  l.add_face(1, {"z1", "J(w4)"}, {});
  l.add_face(1, {"z1", "PJ(w4)"}, {});
  l.add_face(1, {"z2", "PJ(w4)"}, {});
  l.add_face(1, {"z2", "P2J(w4)"}, {});
  l.add_face(1, {"z3", "P2J(w4)"}, {});
  l.add_face(1, {"z1", "P(w4)"}, {});
  l.add_face(1, {"z3", "P(w4)"}, {});
  l.add_face(1, {"z0", "w12"}, {});
  l.add_face(1, {"z3", "w12"}, {});
  // edges introduced inside ridges
  l.add_face(1, {"z2", "w12"}, {});
  l.add_face(1, {"z1", "w12"}, {});
  l.add_face(1, {"w3", "w4"}, {});
  l.add_face(1, {"w3", "J(w4)"}, {});
  l.add_face(1, {"w3", "PJ(w4)"}, {});
  l.add_face(1, {"P(w3)", "P(w4)"}, {});
  l.add_face(1, {"P(w3)", "PJ(w4)"}, {});
  l.add_face(1, {"P(w3)", "P2J(w4)"}, {});
  // infinite edges
  l.add_face(1, {"z0", "qinf"}, {});
  l.add_face(1, {"z1", "qinf"}, {});
  l.add_face(1, {"z2", "qinf"}, {});
  l.add_face(1, {"z3", "qinf"}, {});

  // ridges: quadrilaterals of the subdivided triangles [z0,z1,z2], [z1,z2,z3]
  l.add_face(2, {"z0", "w4", "w3", "J(w4)"}, {});
  l.add_face(2, {"z1", "J(w4)", "w3", "PJ(w4)"}, {});
  l.add_face(2, {"z2", "w4", "w3", "PJ(w4)"}, {});
  l.add_face(2, {"z1", "PJ(w4)", "P(w3)", "P(w4)"}, {});
  l.add_face(2, {"z2", "PJ(w4)", "P(w3)", "P2J(w4)"}, {});
  l.add_face(2, {"z3", "P2J(w4)", "P(w3)", "P(w4)"}, {});
  // halves of [z0,z2,z3] and [z0,z1,z3]
  l.add_face(2, {"z0", "w12", "z2"}, {"w4"});
  l.add_face(2, {"z3", "w12", "z2"}, {"P2J(w4)"});
  l.add_face(2, {"z0", "w12", "z1"}, {"J(w4)"});
  l.add_face(2, {"z3", "w12", "z1"}, {"P(w4)"});
  // mirror triangle of R
  l.add_face(2, {"z1", "w12", "z2"}, {"PJ(w4)"});
  // infinite ridges
  l.add_face(2, {"qinf", "z0", "z1"}, {"J(w4)"});
  l.add_face(2, {"qinf", "z1", "z2"}, {"PJ(w4)"});
  l.add_face(2, {"qinf", "z0", "z2"}, {"w4"});
  l.add_face(2, {"qinf", "z2", "z3"}, {"P2J(w4)"});
  l.add_face(2, {"qinf", "z1", "z3"}, {"P(w4)"});
  l.add_face(2, {"qinf", "z0", "z3"}, {"w12"});

  // 3-faces: four infinite, two finite
  l.add_face(3, {"qinf", "z0", "z1", "z2"},
             {"w3", "w4", "J(w4)", "PJ(w4)"});
  l.add_face(3, {"qinf", "z1", "z2", "z3"},
             {"P(w3)", "P(w4)", "PJ(w4)", "P2J(w4)"});
  l.add_face(3, {"qinf", "z0", "z2", "z3"}, {"w4", "P2J(w4)", "w12"});
  l.add_face(3, {"qinf", "z0", "z1", "z3"}, {"J(w4)", "P(w4)", "w12"});
  l.add_face(3, {"w12", "z0", "z1", "z2"}, {"w3", "w4", "J(w4)", "PJ(w4)"});
  l.add_face(3, {"w12", "z1", "z2", "z3"},
             {"P(w3)", "P(w4)", "PJ(w4)", "P2J(w4)"});

  l.add_face(4, {"z0", "z1", "z2", "z3", "qinf"},
             {"w3", "P(w3)", "w4", "J(w4)", "PJ(w4)", "P2J(w4)", "P(w4)",
              "w12"});
  return l;
}

const Vec3& FaceLattice::vertex_lift(const std::string& name) const {
  return vertices_[static_cast<std::size_t>(vertex_index(name))].lift;
}

const Face& FaceLattice::face_by_name(const std::string& name) const {
  for (const auto& per_dim : faces_)
    for (const Face& f : per_dim)
      if (f.name == name) return f;
  throw std::invalid_argument("unknown face: " + name);
}

std::vector<std::pair<const Face*, const Face*>> FaceLattice::incidences()
    const {
  std::vector<std::pair<const Face*, const Face*>> out;
  for (int dim = 1; dim <= 4; ++dim) {
    for (const Face& f : faces(dim)) {
      std::set<std::string> fs = f.full_set();
      for (const Face& g : faces(dim - 1)) {
        std::set<std::string> gs = g.full_set();
        if (std::includes(fs.begin(), fs.end(), gs.begin(), gs.end()))
          out.push_back({&g, &f});
      }
    }
  }
  return out;
}

std::vector<SidePairing> FaceLattice::side_pairings() const {
  std::vector<SidePairing> out;
  {
    SidePairing sp;
    sp.map_word = "P";
    sp.map = eval("P");
    sp.source_face = 0;  // [qinf,z0,z1,z2,(...)]
    sp.target_face = 1;
    sp.vertex_map = {{"qinf", "qinf"},     {"z0", "z1"},
                     {"z1", "z2"},         {"z2", "z3"},
                     {"w3", "P(w3)"},      {"w4", "P(w4)"},
                     {"J(w4)", "PJ(w4)"},  {"PJ(w4)", "P2J(w4)"}};
    out.push_back(std::move(sp));
  }
  {
    SidePairing sp;
    sp.map_word = "P*Q^-1";
    sp.map = eval("P*Q^-1");
    sp.source_face = 2;
    sp.target_face = 3;
    sp.vertex_map = {{"qinf", "qinf"},        {"z0", "z0"},
                     {"z2", "z1"},            {"z3", "z3"},
                     {"w4", "J(w4)"},         {"P2J(w4)", "P(w4)"},
                     {"w12", "w12"}};
    out.push_back(std::move(sp));
  }
  {
    SidePairing sp;
    sp.map_word = "R";
    sp.map = eval("R");
    sp.source_face = 4;
    sp.target_face = 5;
    sp.vertex_map = {{"w12", "w12"},          {"z0", "z3"},
                     {"z1", "z1"},            {"z2", "z2"},
                     {"w3", "P(w3)"},         {"w4", "P2J(w4)"},
                     {"J(w4)", "P(w4)"},      {"PJ(w4)", "PJ(w4)"}};
    out.push_back(std::move(sp));
  }
  return out;
}

std::vector<RidgeCycle> FaceLattice::ridge_cycles() const {
  auto ridge = [this](const std::string& key) {
    return face_by_name(key).name;
  };
  std::vector<RidgeCycle> cycles;
  {
    RidgeCycle c;
    c.id = 1;
    const char* r[] = {"[qinf,z0,z2,(w4)]", "[qinf,z1,z3,(P(w4))]",
                       "[qinf,z2,z3,(P2J(w4))]", "[qinf,z1,z2,(PJ(w4))]",
                       "[qinf,z0,z1,(J(w4))]"};
    const char* m[] = {"P", "Q*P^-1", "P^-1", "P^-1", "Q*P^-1"};
    for (int i = 0; i < 5; ++i)
      c.arrows.push_back({m[i], ridge(r[i]), ridge(r[(i + 1) % 5])});
    cycles.push_back(std::move(c));
  }
  {
    RidgeCycle c;
    c.id = 2;
    const char* r[] = {"[z2,w4,w3,PJ(w4)]",        "[z3,P2J(w4),P(w3),P(w4)]",
                       "[z0,w4,w3,J(w4)]",         "[z1,PJ(w4),P(w3),P(w4)]",
                       "[z1,J(w4),w3,PJ(w4)]",     "[z2,PJ(w4),P(w3),P2J(w4)]"};
    const char* m[] = {"P", "R^-1", "P", "R^-1", "P", "R^-1"};
    for (int i = 0; i < 6; ++i)
      c.arrows.push_back({m[i], ridge(r[i]), ridge(r[(i + 1) % 6])});
    cycles.push_back(std::move(c));
  }
  {
    RidgeCycle c;
    c.id = 3;
    const char* r[] = {"[z0,w12,z2,(w4)]", "[z0,w12,z1,(J(w4))]",
                       "[z3,w12,z1,(P(w4))]", "[z3,w12,z2,(P2J(w4))]"};
    const char* m[] = {"P*Q^-1", "R", "Q*P^-1", "R^-1"};
    for (int i = 0; i < 4; ++i)
      c.arrows.push_back({m[i], ridge(r[i]), ridge(r[(i + 1) % 4])});
    cycles.push_back(std::move(c));
  }
  {
    RidgeCycle c;
    c.id = 4;
    std::string tm = ridge("[z1,w12,z2,(PJ(w4))]");
    c.arrows.push_back({"R", tm, tm});
    cycles.push_back(std::move(c));
  }
  {
    RidgeCycle c;
    c.id = 5;
    std::string v03 = ridge("[qinf,z0,z3,(w12)]");
    c.arrows.push_back({"P*Q^-1", v03, v03});
    cycles.push_back(std::move(c));
  }
  return cycles;
}

namespace {

// Image of a named vertex set under a map, resolved back to vertex names.
// Empty optional if some image is not a lattice vertex.
std::optional<std::set<std::string>> image_name_set(
    const FaceLattice& l, const Mat3& m, const std::set<std::string>& names) {
  std::set<std::string> out;
  for (const std::string& name : names) {
    Vec3 img = m * l.vertex_lift(name);
    std::string found;
    for (const NamedVertex& v : l.vertices())
      if (proj_equal(img, v.lift)) {
        found = v.name;
        break;
      }
    if (found.empty()) return std::nullopt;
    out.insert(found);
  }
  return out;
}

}  // namespace

GeometryReport FaceLattice::validate_geometry() const {
  GeometryReport rep;
  auto check = [&rep](const std::string& id, bool ok,
                      const std::string& detail = "") {
    rep.checks.push_back({id, ok, detail});
  };

  const Vec3& z0 = vertex_lift("z0");
  const Vec3& z1 = vertex_lift("z1");
  const Vec3& z2 = vertex_lift("z2");
  const Vec3& z3 = vertex_lift("z3");
  const Vec3& qinf = vertex_lift("qinf");

  // vertex classes
  bool classes_ok = classify_vector(qinf) == PointClass::null;
  for (const NamedVertex& v : vertices_)
    if (v.finite) classes_ok &= classify_vector(v.lift) == PointClass::negative;
  check("vertex-classes", classes_ok,
        "finite vertices negative, qinf null");

  // each subdivision vertex lies between the endpoints of its edge
  struct Between {
    const char* id;
    const char* a;
    const char* mid;
    const char* b;
  };
  const Between bt[] = {
      {"between.w4", "z0", "w4", "z2"},
      {"between.w12", "z0", "w12", "z3"},
      {"between.J(w4)", "z0", "J(w4)", "z1"},
      {"between.PJ(w4)", "z1", "PJ(w4)", "z2"},
      {"between.P2J(w4)", "z2", "P2J(w4)", "z3"},
      {"between.P(w4)", "z1", "P(w4)", "z3"},
  };
  for (const Between& b : bt)
    check(b.id,
          on_geodesic_between(vertex_lift(b.a), vertex_lift(b.mid),
                              vertex_lift(b.b)),
          "");

  // [z0, z3, qinf] lies in a complex line with polar n1
  std::optional<Vec3> polar = common_complex_line({z0, z3, qinf});
  check("cline.z0-z3-qinf.rank2", polar.has_value(), "");
  if (polar)
    check("cline.z0-z3-qinf.polar-n1", proj_equal(*polar, named_point("n1")),
          "");

  check("rplane.z0-z3-z1", triple_product_is_real(z0, z3, z1), "");
  check("rplane.z0-z3-z2", triple_product_is_real(z0, z3, z2), "");

  // R1 carries the ridge [z0,z3,z1] onto [z0,z3,z2]
  {
    const Mat3& r1 = generator_matrix(Gen::R1);
    std::set<std::string> src = {"z0", "z3", "z1"};
    auto img = image_name_set(*this, r1, src);
    check("r1.maps-ridge", img && *img == std::set<std::string>{"z0", "z3",
                                                                "z2"},
          "R1([z0,z3,z1]) = [z0,z3,z2]");
  }

  // the four vertices lie on the sphere paired with I(RP), the unit Cygan
  // sphere about the origin (center (RP)(q_inf))
  {
    Mat3 g0 = eval("(R*P)^-1").matrix;
    bool ok = true;
    for (const char* n : {"z0", "z1", "z2", "z3"})
      ok &= ford_side(vertex_lift(n), g0) == FordSide::on;
    check("sphere.z0123-on-I((RP)^-1)", ok,
          "the partner sphere of I(RP) under the pairing map");
  }

  // the mirror triangle of R
  {
    const Mat3& r = generator_matrix(Gen::R);
    bool ok = fixes_projectively(r, z1) && fixes_projectively(r, z2) &&
              fixes_projectively(r, vertex_lift("w12"));
    check("mirror.R-fixes-z1-z2-w12", ok, "");
  }

  // J-orbit facts used by the subdivision
  check("j.fixes-w3",
        fixes_projectively(generator_matrix(Gen::J), vertex_lift("w3")), "");
  {
    const Mat3& j = generator_matrix(Gen::J);
    Vec3 j2w4 = j * (j * vertex_lift("w4"));
    check("j.J2(w4)-is-PJ(w4)", proj_equal(j2w4, vertex_lift("PJ(w4)")), "");
  }
  return rep;
}

GeometryReport FaceLattice::validate_side_pairings() const {
  GeometryReport rep;
  for (const SidePairing& sp : side_pairings()) {
    const Face& src = faces(3)[static_cast<std::size_t>(sp.source_face)];
    const Face& tgt = faces(3)[static_cast<std::size_t>(sp.target_face)];
    bool all = true;
    for (const auto& [from, to] : sp.vertex_map) {
      Vec3 img = sp.map.matrix * vertex_lift(from);
      bool ok = proj_equal(img, vertex_lift(to));
      all &= ok;
      rep.checks.push_back({"pairing." + sp.map_word + "." + from + "->" + to,
                            ok, ""});
    }
    // displayed correspondence covers the decorated vertex sets exactly
    std::set<std::string> from_names, to_names;
    for (const auto& [from, to] : sp.vertex_map) {
      from_names.insert(from);
      to_names.insert(to);
    }
    bool cover = from_names == src.full_set() && to_names == tgt.full_set();
    rep.checks.push_back({"pairing." + sp.map_word + ".covers", cover,
                          src.name + " -> " + tgt.name});
    (void)all;
  }
  return rep;
}

RidgeCycleReport FaceLattice::verify_ridge_cycle(int id) const {
  const std::vector<RidgeCycle> cycles = ridge_cycles();
  const RidgeCycle* cycle = nullptr;
  for (const RidgeCycle& c : cycles)
    if (c.id == id) cycle = &c;
  if (!cycle) throw std::invalid_argument("ridge cycle id must be 1..5");

  RidgeCycleReport rep;
  rep.id = id;
  rep.closes = true;
  Mat3 composite = Mat3::Identity();
  for (const RidgeCycleArrow& a : cycle->arrows) {
    Mat3 m = eval(a.map_word).matrix;
    composite = m * composite;  // arrows apply left on column vectors
    auto img = image_name_set(*this, m, face_by_name(a.from_ridge).full_set());
    bool ok = img && *img == face_by_name(a.to_ridge).full_set();
    rep.closes &= ok;
    rep.arrow_checks.push_back(
        {"cycle" + std::to_string(id) + "." + a.from_ridge + "--" +
             a.map_word + "->" + a.to_ridge,
         ok, ""});
  }
  std::ostringstream word;
  for (std::size_t i = cycle->arrows.size(); i-- > 0;) {
    word << "(" << cycle->arrows[i].map_word << ")";
    if (i) word << "*";
  }
  rep.transform_word = word.str();
  rep.transform_order = projective_order(composite, 200);

  const Face& start = face_by_name(cycle->arrows.front().from_ridge);
  auto img = image_name_set(*this, composite, start.full_set());
  rep.stabilizes_setwise = img && *img == start.full_set();
  rep.fixes_pointwise = true;
  for (const std::string& v : start.full_set())
    rep.fixes_pointwise &= fixes_projectively(composite, vertex_lift(v));
  return rep;
}

std::vector<std::vector<std::vector<std::string>>> FaceLattice::face_orbits()
    const {
  // union-find over all faces, keyed by (dim, index)
  std::vector<const Face*> all;
  std::vector<int> offset(6, 0);
  for (int dim = 0; dim <= 4; ++dim) {
    offset[static_cast<std::size_t>(dim)] = static_cast<int>(all.size());
    for (const Face& f : faces(dim)) all.push_back(&f);
  }
  std::vector<int> parent(all.size());
  for (std::size_t i = 0; i < all.size(); ++i) parent[i] = static_cast<int>(i);
  std::function<int(int)> find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x)
      x = parent[static_cast<std::size_t>(x)] =
          parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
    return x;
  };
  auto unite = [&](int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] =
        std::min(a, b);
  };

  std::vector<Mat3> maps;
  for (const SidePairing& sp : side_pairings()) {
    maps.push_back(sp.map.matrix);
    maps.push_back(inverse(sp.map.matrix));
  }

  for (std::size_t i = 0; i < all.size(); ++i) {
    for (const Mat3& m : maps) {
      auto img = image_name_set(*this, m, all[i]->full_set());
      if (!img) continue;
      for (std::size_t k = 0; k < all.size(); ++k) {
        if (all[k]->dim != all[i]->dim) continue;
        if (all[k]->full_set() == *img) {
          unite(static_cast<int>(i), static_cast<int>(k));
          break;
        }
      }
    }
  }

  std::vector<std::vector<std::vector<std::string>>> classes(5);
  for (int dim = 0; dim <= 4; ++dim) {
    std::map<int, std::vector<std::string>> by_root;
    for (std::size_t i = 0; i < faces(dim).size(); ++i) {
      int gid = offset[static_cast<std::size_t>(dim)] + static_cast<int>(i);
      by_root[find(gid)].push_back(faces(dim)[i].name);
    }
    for (auto& [root, names] : by_root)
      classes[static_cast<std::size_t>(dim)].push_back(std::move(names));
  }
  return classes;
}

std::vector<int> FaceLattice::orbit_counts() const {
  std::vector<int> counts;
  for (const auto& per_dim : face_orbits())
    counts.push_back(static_cast<int>(per_dim.size()));
  return counts;
}

bool FaceLattice::same_orbit(const std::string& a, const std::string& b) const {
  const Face& fa = face_by_name(a);
  const Face& fb = face_by_name(b);
  if (fa.dim != fb.dim) return false;
  const auto orbits = face_orbits();
  for (const auto& cls : orbits[static_cast<std::size_t>(fa.dim)]) {
    bool has_a = std::find(cls.begin(), cls.end(), fa.name) != cls.end();
    bool has_b = std::find(cls.begin(), cls.end(), fb.name) != cls.end();
    if (has_a || has_b) return has_a && has_b;
  }
  return false;
}

FordMembershipReport ford_membership(const Vec3& p,
                                     const std::vector<Word>& words) {
  FordMembershipReport rep;
  for (const Word& w : words) {
    FordMembershipLine line;
    line.word = w.to_string();
    Mat3 g = eval_matrix(w);
    if (g(2, 0).is_zero()) {
      line.skipped = true;
    } else {
      line.side = ford_side(p, g);
      if (line.side == FordSide::interior) rep.in_exterior_closure = false;
    }
    rep.lines.push_back(std::move(line));
  }
  return rep;
}

}  // namespace picard
