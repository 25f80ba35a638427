#include "picard/report.hpp"

#include <nlohmann/json.hpp>
#include <sstream>

namespace picard {

const char* status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::skipped: return "skipped";
    case CheckStatus::info: return "info";
  }
  return "?";
}

void Report::add(const std::string& id, bool pass, const std::string& detail,
                 const std::string& witness) {
  add_status(id, pass ? CheckStatus::pass : CheckStatus::fail, detail,
             witness);
}

void Report::add_status(const std::string& id, CheckStatus status,
                        const std::string& detail,
                        const std::string& witness) {
  checks.push_back({id, status, detail, witness});
}

void Report::merge(const Report& other) {
  checks.insert(checks.end(), other.checks.begin(), other.checks.end());
}

int Report::count(CheckStatus s) const {
  int n = 0;
  for (const CheckResult& c : checks)
    if (c.status == s) ++n;
  return n;
}

nlohmann::json report_to_json(const Report& r) {
  nlohmann::json checks = nlohmann::json::array();
  for (const CheckResult& c : r.checks) {
    nlohmann::json jc = {{"id", c.id},
                         {"status", status_name(c.status)},
                         {"detail", c.detail}};
    if (!c.witness.empty()) {
      nlohmann::json w = nlohmann::json::parse(c.witness, nullptr, false);
      jc["witness"] = w.is_discarded() ? nlohmann::json(c.witness) : w;
    }
    checks.push_back(std::move(jc));
  }
  return nlohmann::json{
      {"version", r.version},
      {"config",
       {{"max_closure", r.config.max_closure},
        {"max_cosets", r.config.max_cosets},
        {"precision_bits", r.config.precision_bits},
        {"seed", r.config.seed}}},
      {"checks", std::move(checks)},
      {"summary",
       {{"pass", r.count(CheckStatus::pass)},
        {"fail", r.count(CheckStatus::fail)},
        {"skipped", r.count(CheckStatus::skipped)},
        {"info", r.count(CheckStatus::info)}}}};
}

std::string report_to_markdown(const Report& r) {
  std::ostringstream os;
  for (const CheckResult& c : r.checks) {
    const char* mark = "?";
    switch (c.status) {
      case CheckStatus::pass: mark = "ok  "; break;
      case CheckStatus::fail: mark = "FAIL"; break;
      case CheckStatus::skipped: mark = "skip"; break;
      case CheckStatus::info: mark = "info"; break;
    }
    os << "- [" << mark << "] " << c.id;
    if (!c.detail.empty()) os << " — " << c.detail;
    os << "\n";
  }
  os << "\n" << r.count(CheckStatus::pass) << " pass, "
     << r.count(CheckStatus::fail) << " fail, "
     << r.count(CheckStatus::skipped) << " skipped, "
     << r.count(CheckStatus::info) << " info\n";
  return os.str();
}

}  // namespace picard
