#pragma once

#include <string>

#include <json.hpp>

#include "fusionkit/verify.hpp"

namespace fusionkit::cli {

inline constexpr const char* kReportSchema = "fusionkit.report/1";
inline constexpr const char* kTableSchema = "fusionkit.table/1";

inline nlohmann::ordered_json to_json(const CheckResult& c) {
  nlohmann::ordered_json j;
  j["name"] = c.name;
  j["ok"] = c.ok();
  j["report_only"] = c.report_only;
  j["passed"] = c.passed;
  j["failed"] = c.failed;
  j["counterexamples"] = nlohmann::ordered_json::array();
  for (const Counterexample& x : c.counterexamples) {
    j["counterexamples"].push_back(
        {{"instance", x.instance}, {"expected", x.expected}, {"actual", x.actual}});
  }
  return j;
}

/// Wall time is left out unless asked for, so that reports are reproducible
/// byte for byte.
inline nlohmann::ordered_json to_json(const Report& r, const std::string& command,
                                      bool with_time) {
  nlohmann::ordered_json j;
  j["schema"] = kReportSchema;
  j["command"] = command;
  j["parameters"] = {{"suite", r.suite},
                     {"n_max", r.options.n_max},
                     {"k_max", r.options.k_max},
                     {"size_max", r.options.size_max}};
  j["ok"] = r.ok();
  j["checks"] = nlohmann::ordered_json::array();
  for (const CheckResult& c : r.checks.checks()) {
    j["checks"].push_back(to_json(c));
  }
  if (with_time) {
    j["wall_seconds"] = r.seconds;
  }
  return j;
}

}  // namespace fusionkit::cli
