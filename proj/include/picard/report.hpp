#pragma once

#include <nlohmann/json_fwd.hpp>
#include <string>
#include <vector>

namespace picard {

enum class CheckStatus { pass, fail, skipped, info };

const char* status_name(CheckStatus s);

struct CheckResult {
  std::string id;
  CheckStatus status = CheckStatus::pass;
  std::string detail;
  std::string witness;  // optional serialized object (JSON text)
};

struct VerifyConfig {
  int max_closure = 1000;
  long max_cosets = 100000;
  long precision_bits = 64;
  unsigned long seed = 0x5eed5eedUL;
};

struct Report {
  std::string version;
  VerifyConfig config;
  std::vector<CheckResult> checks;

  void add(const std::string& id, bool pass, const std::string& detail = "",
           const std::string& witness = "");
  void add_status(const std::string& id, CheckStatus status,
                  const std::string& detail = "",
                  const std::string& witness = "");
  void merge(const Report& other);

  int count(CheckStatus s) const;
  bool all_pass() const { return count(CheckStatus::fail) == 0; }
};

nlohmann::json report_to_json(const Report& r);
std::string report_to_markdown(const Report& r);

}  // namespace picard
