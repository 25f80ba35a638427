#include <doctest.h>

#include <nlohmann/json.hpp>
#include <set>

#include "picard/verify.hpp"

using namespace picard;

TEST_CASE("verify suites are deterministic across runs") {
  VerifyConfig cfg;
  Report a = verify_properties(cfg);
  Report b = verify_properties(cfg);
  REQUIRE(a.checks.size() == b.checks.size());
  for (std::size_t i = 0; i < a.checks.size(); ++i) {
    CHECK(a.checks[i].id == b.checks[i].id);
    CHECK(a.checks[i].status == b.checks[i].status);
    CHECK(a.checks[i].detail == b.checks[i].detail);
  }
  Report r1 = verify_relations(cfg);
  Report r2 = verify_relations(cfg);
  REQUIRE(r1.checks.size() == r2.checks.size());
  for (std::size_t i = 0; i < r1.checks.size(); ++i)
    CHECK(r1.checks[i].id == r2.checks[i].id);
}

TEST_CASE("check ids are unique per run") {
  VerifyConfig cfg;
  Report rep = verify_all(cfg);
  std::set<std::string> ids;
  for (const CheckResult& c : rep.checks) CHECK(ids.insert(c.id).second);
  CHECK(rep.all_pass());
}

TEST_CASE("report JSON matches the documented schema") {
  VerifyConfig cfg;
  Report rep = verify_handles(cfg);
  nlohmann::json j = report_to_json(rep);
  CHECK(j.contains("version"));
  CHECK(j.contains("config"));
  CHECK(j["config"].contains("max_closure"));
  CHECK(j["config"].contains("max_cosets"));
  CHECK(j["config"].contains("precision_bits"));
  CHECK(j["config"].contains("seed"));
  REQUIRE(j.contains("checks"));
  REQUIRE(j.contains("summary"));
  // summary counts equal list tallies
  int pass = 0, fail = 0, skipped = 0, info = 0;
  for (const auto& c : j["checks"]) {
    std::string s = c["status"];
    if (s == "pass") ++pass;
    if (s == "fail") ++fail;
    if (s == "skipped") ++skipped;
    if (s == "info") ++info;
    CHECK(c.contains("id"));
    CHECK(c.contains("detail"));
  }
  CHECK(j["summary"]["pass"] == pass);
  CHECK(j["summary"]["fail"] == fail);
  CHECK(j["summary"]["skipped"] == skipped);
  CHECK(j["summary"]["info"] == info);
  // round-trip through text
  nlohmann::json again = nlohmann::json::parse(j.dump());
  CHECK(again == j);
}

TEST_CASE("markdown rendering tallies statuses") {
  Report rep;
  rep.version = kVersion;
  rep.add("a", true, "fine");
  rep.add("b", false, "broken");
  rep.add_status("c", CheckStatus::info, "fyi");
  CHECK(!rep.all_pass());
  CHECK(rep.count(CheckStatus::pass) == 1);
  CHECK(rep.count(CheckStatus::fail) == 1);
  CHECK(rep.count(CheckStatus::info) == 1);
  std::string md = report_to_markdown(rep);
  CHECK(md.find("FAIL") != std::string::npos);
  CHECK(md.find("1 pass, 1 fail, 0 skipped, 1 info") != std::string::npos);
}
