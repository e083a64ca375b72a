#pragma once

#include <string>
#include <vector>

namespace hyprad {

// One acceptance check: measured is the worst observed quantity in the units
// of threshold (criterion-specific; see detail for the full breakdown).
struct CheckResult {
  int id = 0;
  std::string name;
  bool pass = false;
  double measured = 0.0;
  double threshold = 0.0;
  double seconds = 0.0;
  std::string detail;
};

// Runs one of the ten numbered acceptance criteria.
CheckResult run_criterion(int id);

// Criterion ids belonging to a named suite: specfun, geometry, transforms,
// reference, or all. Throws std::invalid_argument on unknown names.
std::vector<int> suite_criteria(const std::string& suite);

std::vector<CheckResult> run_suite(const std::string& suite);

}  // namespace hyprad
