#pragma once

// Named verification checks. Each compares closed forms or structural claims against exhaustive
// scans at one (n, q) and reports {params, expected, observed, status}.

#include <cstdint>
#include <string>
#include <vector>

#include "polar/code.hpp"
#include "polar/field.hpp"
#include "json.hpp"

namespace polar {

struct VerifyConfig {
  Field field;
  int n = 2;
  std::uint64_t samples = 100;  // random forms per sampled check
  std::uint64_t seed = 1;
  std::uint64_t budget = default_budget;
  unsigned workers = 1;
};

enum class CheckStatus { pass, fail, skipped };
const char* check_status_name(CheckStatus s);

struct CheckReport {
  std::string check;
  nlohmann::ordered_json params;
  nlohmann::ordered_json expected;
  nlohmann::ordered_json observed;
  CheckStatus status = CheckStatus::pass;
  std::vector<std::string> notes;
};

// In the order used by "all".
const std::vector<std::string>& check_names();

// Throws InadmissibleParams for an unknown name or n < 2. "all" is not accepted here.
CheckReport run_check(const std::string& name, const VerifyConfig& cfg);
// `name` may be "all". Budget overruns inside "all" become skipped checks.
std::vector<CheckReport> run_checks(const std::string& name, const VerifyConfig& cfg);

nlohmann::ordered_json to_json(const CheckReport& rep);
// {"params", "checks", "status"}; status is "fail" if any check failed.
nlohmann::ordered_json report_json(const std::vector<CheckReport>& reps, const VerifyConfig& cfg);

}  // namespace polar
