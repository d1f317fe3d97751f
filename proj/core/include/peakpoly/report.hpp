#pragma once

#include <string>
#include <vector>

#include "peakpoly/identities.hpp"

namespace peakpoly {

inline constexpr const char* kToolVersion = "1.0.0";

struct ReportDocument {
  std::string tool_version = kToolVersion;
  Suite suite = Suite::kAll;
  SuiteConfig configuration;
  std::vector<CheckResult> results;
  bool aggregate = true;
};

ReportDocument make_report(Suite suite, const SuiteConfig& config, std::vector<CheckResult> results);

// Deterministic JSON: fixed key order, results in suite order, integers as
// decimal strings, two-space indentation, trailing newline. The job count is
// deliberately not part of the document.
std::string to_json(const ReportDocument& report);

// Decimal-string JSON array, e.g. ["1","13","16"].
std::string to_json_array(const std::vector<std::string>& values);

}  // namespace peakpoly
