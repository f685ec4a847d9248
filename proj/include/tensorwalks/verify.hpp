#pragma once

// Cross-check suites: every quantity is computed by at least two independent
// routes and the routes must agree exactly.

#include <string>
#include <vector>

namespace tensorwalks {

struct CheckResult {
  std::string suite;
  std::string name;
  bool pass = false;
  std::string detail;  // first mismatch or a short summary
};

// cyclic, abelian, symmetric, paley, wreath, linear, engines, diagram, gauss
std::vector<std::string> suite_names();
// Runs one suite, or every suite for "all"; throws UsageError for an unknown name.
std::vector<CheckResult> run_suite(const std::string& name);

// Group specs of the built-in full-table pairs used by the engine suite.
std::vector<std::string> engine_fixtures();
// Non-decreasing radii lists (each >= 2) with product <= max_order.
std::vector<std::vector<int>> radii_lists(int max_order);

}  // namespace tensorwalks
