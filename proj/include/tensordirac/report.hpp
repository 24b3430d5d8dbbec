#pragma once

#include <string>
#include <vector>

#include "json.hpp"

namespace tensordirac {

struct Check {
  std::string id;
  /// The relation being checked, as a formula.
  std::string ref;
  bool pass = false;
  double residual = 0.0;
  double tolerance = 0.0;
  std::string detail;
  /// Optional artifact (matrices and the like) copied into the JSON report.
  nlohmann::json data;
};

struct SuiteResult {
  std::string suite;
  std::string backend;
  std::vector<Check> checks;
  double seconds = 0.0;

  /// Adds a check that passes iff residual <= tolerance (NaN fails).
  Check& add(std::string id, std::string ref, double residual, double tolerance,
             std::string detail = {});
  /// Adds a pass/fail check; the residual is 0 on pass and 1 on failure.
  Check& add_flag(std::string id, std::string ref, bool pass, std::string detail = {});
  bool pass() const;
};

struct Report {
  static constexpr int kSchema = 1;

  nlohmann::json config = nlohmann::json::object();
  std::vector<SuiteResult> suites;
  double seconds = 0.0;

  bool pass() const;
  /// Checks inside each suite are ordered by id. Timing sits under the
  /// single top-level key "timing".
  nlohmann::json to_json() const;
  std::string to_markdown() const;
};

}  // namespace tensordirac
