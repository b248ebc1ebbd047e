#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace sdqm {

/// One verification item. "flagged" marks a documented discrepancy
/// between a printed table and the computed/fitted value: a warning
/// with a citation, never a hard failure.
struct CheckResult {
  std::string name;
  std::string status;  // "pass" | "fail" | "flagged"
  double residual = 0;
  std::string note;
};

struct Discrepancy {
  std::string what;
  std::string where;     // location of the contradicted printed data
  std::string printed;
  std::string computed;
};

struct RunReport {
  std::string command;
  std::string model;
  std::vector<CheckResult> checks;
  std::vector<Discrepancy> discrepancies;

  bool hard_failure() const {
    for (const auto& c : checks)
      if (c.status == "fail") return true;
    return false;
  }

  /// Stable key order, no volatile fields (timings go to stderr so
  /// that identical config + seed gives byte-identical output).
  nlohmann::ordered_json to_json() const;
};

/// RFC-4180-style field quoting.
std::string csv_escape(const std::string& field);
std::string csv_row(const std::vector<std::string>& fields);

/// Deterministic float formatting for reports ("%.17g").
std::string fmt_double(double v);

}  // namespace sdqm
