#pragma once

#include "gw/json_io.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace gw {

/// Outcome of one verification-suite entry.  `details` is a one-line human
/// summary; counterexamples and counts land in `report`.
struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::int64_t millis = 0;
  std::string details;
  Json report = Json::object();
};

struct CatalogOptions {
  /// Criterion ids to run; empty means all of 1..10.
  std::vector<int> criteria;
};

/// Runs the acceptance catalogue in id order.  Internal-consistency throws
/// inside a criterion are caught and reported as failures of that criterion.
std::vector<CriterionResult> run_catalog(const CatalogOptions& opts = {});

bool all_passed(const std::vector<CriterionResult>& results);
Json catalog_to_json(const std::vector<CriterionResult>& results);
/// One fixed-format line per criterion: "PASS  3  green-ti-contexts  (12 ms) details".
std::string format_result_line(const CriterionResult& r);

} // namespace gw
