#include "tensordirac/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace tensordirac {

namespace {

std::string sci(double x) {
  if (std::isnan(x)) return "nan";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", x);
  return buf;
}

std::vector<Check> sorted(std::vector<Check> checks) {
  std::stable_sort(checks.begin(), checks.end(),
                   [](const Check& a, const Check& b) { return a.id < b.id; });
  return checks;
}

}  // namespace

Check& SuiteResult::add(std::string id, std::string ref, double residual, double tolerance,
                        std::string detail) {
  checks.push_back({std::move(id), std::move(ref), residual <= tolerance, residual, tolerance,
                    std::move(detail), nullptr});
  return checks.back();
}

Check& SuiteResult::add_flag(std::string id, std::string ref, bool pass, std::string detail) {
  checks.push_back({std::move(id), std::move(ref), pass, pass ? 0.0 : 1.0, 0.0, std::move(detail), nullptr});
  return checks.back();
}

bool SuiteResult::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

bool Report::pass() const {
  return std::all_of(suites.begin(), suites.end(), [](const SuiteResult& s) { return s.pass(); });
}

nlohmann::json Report::to_json() const {
  using nlohmann::json;
  json out;
  out["schema"] = kSchema;
  out["config"] = config;
  out["pass"] = pass();
  json suite_list = json::array();
  json timing;
  timing["total_seconds"] = seconds;
  for (const auto& s : suites) {
    json checks = json::array();
    for (const auto& c : sorted(s.checks)) {
      json j;
      j["id"] = c.id;
      j["ref"] = c.ref;
      j["status"] = c.pass ? "pass" : "fail";
      j["residual"] = std::isfinite(c.residual) ? json(c.residual) : json(nullptr);
      j["tolerance"] = c.tolerance;
      if (!c.detail.empty()) j["detail"] = c.detail;
      if (!c.data.is_null()) j["data"] = c.data;
      checks.push_back(std::move(j));
    }
    suite_list.push_back({{"suite", s.suite}, {"backend", s.backend}, {"pass", s.pass()},
                          {"checks", std::move(checks)}});
    timing["suites"][s.suite] = s.seconds;
  }
  out["suites"] = std::move(suite_list);
  out["timing"] = std::move(timing);
  return out;
}

std::string Report::to_markdown() const {
  std::ostringstream os;
  os << "# Verification report\n\n";
  os << "Result: **" << (pass() ? "PASS" : "FAIL") << "**\n\n";
  os << "Config: `" << config.dump() << "`\n";
  for (const auto& s : suites) {
    os << "\n## " << s.suite << " (" << s.backend << ")\n\n";
    os << "| id | relation | status | residual | tolerance |\n";
    os << "|---|---|---|---|---|\n";
    for (const auto& c : sorted(s.checks)) {
      os << "| " << c.id << " | `" << c.ref << "` | " << (c.pass ? "pass" : "FAIL") << " | "
         << sci(c.residual) << " | " << sci(c.tolerance) << " |\n";
    }
  }
  os << "\nTotal time: " << sci(seconds) << " s\n";
  return os.str();
}

}  // namespace tensordirac
