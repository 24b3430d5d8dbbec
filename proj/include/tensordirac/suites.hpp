#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tensordirac/fields.hpp"
#include "tensordirac/linalg.hpp"
#include "tensordirac/report.hpp"

namespace tensordirac {

enum class Backend { exact, floating };
enum class ReportFormat { json, markdown };

std::string to_string(Backend b);
Backend backend_from_string(const std::string& s);

struct RunConfig {
  /// Unset: exact for algebra, generators and gamma; float for the rest.
  std::optional<Backend> backend;
  double tolerance = 1e-12;
  double fd_step = 1e-3;
  std::uint64_t seed = 0;
  int samples = 100;
  ReportFormat format = ReportFormat::json;

  /// Throws std::invalid_argument unless tolerance > 0, fd_step > 0 and
  /// samples >= 1.
  void validate() const;

  /// Analytic derivatives are good to about 1e-9, central differences to
  /// about 1e-7; a looser user tolerance wins.
  double analytic_tolerance() const;
  double fd_tolerance() const;
};

nlohmann::json config_json(const RunConfig& cfg);

/// Row-major arrays; complex entries as [re, im] pairs.
nlohmann::json matrix_json(const Mat4<Cplx>& m);
nlohmann::json matrix_json(const Mat4R& m);

/// algebra, generators, gamma, fields, equivalence, gauge, conservation, spin.
const std::vector<std::string>& suite_names();
bool is_suite(const std::string& name);

/// Throws std::invalid_argument for an unknown suite.
SuiteResult run_suite(const std::string& name, const RunConfig& cfg);

/// One suite, or every suite for "all".
Report run_verify(const std::string& name, const RunConfig& cfg);

}  // namespace tensordirac
