#include <CLI11.hpp>
#include <iostream>
#include <map>
#include <nlohmann/json.hpp>

#include "picard/face_lattice.hpp"
#include "picard/handles.hpp"
#include "picard/points.hpp"
#include "picard/verify.hpp"

namespace {

using picard::CheckStatus;
using picard::Report;
using picard::VerifyConfig;

nlohmann::json matrix_json(const picard::Mat3& m) {
  nlohmann::json a = nlohmann::json::array();
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) a.push_back(m(i, j).to_string());
  return a;
}

nlohmann::json vector_json(const picard::Vec3& v) {
  return nlohmann::json::array(
      {v(0).to_string(), v(1).to_string(), v(2).to_string()});
}

void print_matrix(const picard::Mat3& m, std::ostream& os) {
  for (int i = 0; i < 3; ++i) {
    os << "[ ";
    for (int j = 0; j < 3; ++j) {
      if (j) os << " , ";
      os << m(i, j);
    }
    os << " ]\n";
  }
}

int emit_report(const Report& rep, const std::string& format) {
  if (format == "json")
    std::cout << picard::report_to_json(rep).dump(2) << "\n";
  else
    std::cout << picard::report_to_markdown(rep);
  return rep.all_pass() ? 0 : 1;
}

nlohmann::json lattice_json(const picard::FaceLattice& l) {
  nlohmann::json j;
  j["vertices"] = nlohmann::json::array();
  for (const picard::NamedVertex& v : l.vertices())
    j["vertices"].push_back({{"name", v.name},
                             {"lift", vector_json(v.lift)},
                             {"finite", v.finite}});
  j["faces"] = nlohmann::json::array();
  for (int dim = 0; dim <= 4; ++dim)
    for (const picard::Face& f : l.faces(dim)) {
      nlohmann::json jf = {{"dim", dim},
                           {"name", f.name},
                           {"vertices", f.principal},
                           {"decorations", f.decorations}};
      j["faces"].push_back(std::move(jf));
    }
  j["incidences"] = nlohmann::json::array();
  for (const auto& [sub, sup] : l.incidences())
    j["incidences"].push_back({sub->name, sup->name});
  j["side_pairings"] = nlohmann::json::array();
  for (const picard::SidePairing& sp : l.side_pairings()) {
    nlohmann::json jm = nlohmann::json::array();
    for (const auto& [from, to] : sp.vertex_map) jm.push_back({from, to});
    j["side_pairings"].push_back(
        {{"map", sp.map_word},
         {"matrix", matrix_json(sp.map.matrix)},
         {"source", l.faces(3)[static_cast<std::size_t>(sp.source_face)].name},
         {"target", l.faces(3)[static_cast<std::size_t>(sp.target_face)].name},
         {"vertex_map", std::move(jm)}});
  }
  j["ridge_cycles"] = nlohmann::json::array();
  for (const picard::RidgeCycle& c : l.ridge_cycles()) {
    nlohmann::json arrows = nlohmann::json::array();
    for (const picard::RidgeCycleArrow& a : c.arrows)
      arrows.push_back({{"map", a.map_word},
                        {"from", a.from_ridge},
                        {"to", a.to_ridge}});
    picard::RidgeCycleReport rep = l.verify_ridge_cycle(c.id);
    j["ridge_cycles"].push_back(
        {{"id", c.id},
         {"arrows", std::move(arrows)},
         {"transform", rep.transform_word},
         {"transform_order",
          rep.transform_order ? nlohmann::json(*rep.transform_order)
                              : nlohmann::json()}});
  }
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "picard — exact verification toolkit for the Picard modular group "
      "PU(2,1; Z[omega]) of Eisenstein integers: presentations, isotropy "
      "groups, the subdivided fundamental domain and its ridge cycles, and "
      "the orbifold handle decomposition of the quotient."};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand

  std::string format = "md";
  VerifyConfig cfg;
  app.add_option("--format", format, "output format: json|md")
      ->check(CLI::IsMember({"json", "md"}));
  app.add_option("--max-closure", cfg.max_closure,
                 "cap on matrix-group closure size")
      ->capture_default_str();
  app.add_option("--max-cosets", cfg.max_cosets,
                 "cap on live cosets in coset enumeration")
      ->capture_default_str();
  app.add_option("--precision-bits", cfg.precision_bits,
                 "starting interval precision for sign tests")
      ->capture_default_str();
  app.add_option("--seed", cfg.seed, "seed for randomized property checks")
      ->capture_default_str();

  // verify <target>
  CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
  std::string target = "all";
  verify
      ->add_option("target", target,
                   "all|relations|fixed-points|isotropy|cycles|orbits|"
                   "geometry|handles|properties")
      ->check(CLI::IsMember({"all", "relations", "fixed-points", "isotropy",
                             "cycles", "orbits", "geometry", "handles",
                             "properties"}));

  // eval / classify / order <word>
  std::string word_text;
  CLI::App* eval_cmd = app.add_subcommand("eval", "evaluate a word to its "
                                                  "exact matrix");
  eval_cmd->add_option("word", word_text, "word over P,Q,R,R1,R2,R3,J,Id")
      ->required();
  CLI::App* classify_cmd =
      app.add_subcommand("classify", "isometry type of a word");
  classify_cmd->add_option("word", word_text)->required();
  CLI::App* order_cmd =
      app.add_subcommand("order", "projective order of a word");
  order_cmd->add_option("word", word_text)->required();

  // isotropy <point>
  std::string point_name;
  CLI::App* isotropy_cmd = app.add_subcommand(
      "isotropy", "closure of the listed stabilizer generators of a point");
  isotropy_cmd->add_option("point", point_name, "w3|w4|w12|z0")
      ->required()
      ->check(CLI::IsMember({"w3", "w4", "w12", "z0"}));

  // dstar export
  CLI::App* dstar_cmd = app.add_subcommand("dstar", "fundamental domain data");
  CLI::App* dstar_export = dstar_cmd->add_subcommand(
      "export", "dump the face lattice, pairings and cycles");
  dstar_cmd->require_subcommand(1);

  // handles show|validate
  CLI::App* handles_cmd =
      app.add_subcommand("handles", "orbifold handle decomposition");
  CLI::App* handles_show =
      handles_cmd->add_subcommand("show", "print the attachment ledger");
  CLI::App* handles_validate =
      handles_cmd->add_subcommand("validate", "check the shipped complex");
  bool handles_json = false;
  handles_validate->add_flag("--json", handles_json, "emit the report as JSON");
  handles_cmd->require_subcommand(1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    if (*verify) {
      Report rep;
      if (target == "all") rep = picard::verify_all(cfg);
      else if (target == "relations") rep = picard::verify_relations(cfg);
      else if (target == "fixed-points") rep = picard::verify_fixed_points(cfg);
      else if (target == "isotropy") rep = picard::verify_isotropy(cfg);
      else if (target == "cycles") rep = picard::verify_cycles(cfg);
      else if (target == "orbits") rep = picard::verify_orbits(cfg);
      else if (target == "geometry") rep = picard::verify_geometry(cfg);
      else if (target == "handles") rep = picard::verify_handles(cfg);
      else rep = picard::verify_properties(cfg);
      return emit_report(rep, format);
    }

    if (*eval_cmd) {
      picard::GroupElt g = picard::eval(word_text);
      if (format == "json")
        std::cout << nlohmann::json{{"word", g.word.to_string()},
                                    {"matrix", matrix_json(g.matrix)}}
                         .dump(2)
                  << "\n";
      else
        print_matrix(g.matrix, std::cout);
      return 0;
    }

    if (*classify_cmd) {
      picard::IsometryType t = picard::classify(picard::eval(word_text).matrix);
      std::cout << picard::isometry_type_name(t) << "\n";
      return 0;
    }

    if (*order_cmd) {
      picard::Mat3 m = picard::eval(word_text).matrix;
      picard::IsometryType t = picard::classify(m);
      if (t == picard::IsometryType::parabolic ||
          t == picard::IsometryType::loxodromic) {
        std::cout << "infinite (" << picard::isometry_type_name(t) << ")\n";
        return 0;
      }
      std::optional<long> ord = picard::projective_order(m, 1000);
      if (ord)
        std::cout << *ord << "\n";
      else
        std::cout << "exceeds 1000\n";
      return 0;
    }

    if (*isotropy_cmd) {
      std::map<std::string, std::vector<std::string>> gens = {
          {"w3", {"J"}},
          {"w4", {"R1*R2*R3"}},
          {"w12", {"P*Q^-1", "R"}},
          {"z0", {"R1", "R2*J^2", "R2*R3*R2^-1"}}};
      std::vector<picard::Mat3> ms;
      for (const std::string& w : gens.at(point_name))
        ms.push_back(picard::eval(w).matrix);
      picard::FiniteGroupTable t = picard::closure(ms, cfg.max_closure);
      picard::FiniteGroupTable z = picard::center(t);
      nlohmann::json j = {{"point", point_name},
                          {"generators", gens.at(point_name)},
                          {"order", t.size()},
                          {"abelian", t.is_abelian()},
                          {"center_order", z.size()},
                          {"fixes_point", picard::common_fixed_point(
                                              t, picard::named_point(point_name))}};
      if (t.is_abelian()) {
        nlohmann::json inv = nlohmann::json::array();
        for (long d : picard::abelian_invariants(t)) inv.push_back(d);
        j["invariant_factors"] = std::move(inv);
      } else {
        // abelianization of the matrix group: quotient by derived subgroup
        std::vector<int> comms;
        for (int a = 0; a < t.size(); ++a)
          for (int b = 0; b < t.size(); ++b)
            comms.push_back(
                t.mul(t.mul(a, b), t.mul(t.inv(a), t.inv(b))));
        picard::FiniteGroupTable ab = picard::quotient(t, comms);
        nlohmann::json inv = nlohmann::json::array();
        for (long d : picard::abelian_invariants(ab)) inv.push_back(d);
        j["abelianization"] = std::move(inv);
      }
      if (format == "json") {
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << "stabilizer of " << point_name << ": order " << t.size()
                  << (t.is_abelian() ? ", abelian" : ", nonabelian")
                  << ", center of order " << z.size() << "\n";
        std::cout << j.dump(2) << "\n";
      }
      return 0;
    }

    if (*dstar_export) {
      picard::FaceLattice l = picard::FaceLattice::build();
      std::cout << lattice_json(l).dump(2) << "\n";
      return 0;
    }

    if (*handles_show) {
      picard::HandleComplex c = picard::build_theorem1();
      int step = 0;
      for (const picard::Attachment& a : c.attachments) {
        if (a.step != step) {
          step = a.step;
          std::cout << "Step " << step << ":\n";
        }
        std::cout << "  " << a.handle.name;
        switch (a.handle.kind) {
          case picard::HandleKind::orbifold0:
            std::cout << " — orbifold 0-handle, link " << a.handle.link_label;
            if (!a.handle.singular_loci.empty()) {
              std::cout << ", singular loci of orders";
              for (int n : a.handle.singular_loci) std::cout << " " << n;
            }
            break;
          case picard::HandleKind::orbifold1:
            std::cout << " — orbifold 1-handle D1 x (D1 x F"
                      << a.handle.cone_order << ")";
            break;
          case picard::HandleKind::orbifold2:
            std::cout << " — orbifold 2-handle D2 x F" << a.handle.cone_order;
            break;
          case picard::HandleKind::pants_product:
            std::cout << " — pants x F" << a.handle.cone_order;
            break;
          case picard::HandleKind::classical:
            std::cout << " — " << a.handle.index << "-handle";
            break;
        }
        std::cout << "\n";
        for (const picard::GluingRegion& r : a.regions)
          std::cout << "      glue " << r.descriptor << " -> "
                    << (r.target.empty() ? "boundary" : r.target) << "\n";
      }
      return 0;
    }

    if (*handles_validate) {
      picard::HandleComplex c = picard::build_theorem1();
      picard::HandleValidationReport v = picard::validate(c);
      if (handles_json || format == "json") {
        nlohmann::json issues = nlohmann::json::array();
        for (const picard::ValidationIssue& i : v.issues)
          issues.push_back({{"id", i.id},
                            {"violation", i.violation},
                            {"detail", i.detail}});
        std::cout << nlohmann::json{{"violations", v.violation_count()},
                                    {"issues", std::move(issues)}}
                         .dump(2)
                  << "\n";
      } else {
        for (const picard::ValidationIssue& i : v.issues)
          std::cout << (i.violation ? "VIOLATION " : "note      ") << i.id
                    << ": " << i.detail << "\n";
        std::cout << v.violation_count() << " violations\n";
      }
      return v.violation_count() == 0 ? 0 : 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
