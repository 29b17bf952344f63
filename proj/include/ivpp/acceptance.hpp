#pragma once

#include <string>
#include <vector>

namespace ivpp {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

/// Runs the ten acceptance checks in order. Each check catches its own
/// exceptions and reports them as a failure.
std::vector<CriterionResult> run_acceptance();

/// "PASS  3 cycle permutations (0.01 s): detail".
std::string format_result(const CriterionResult& result);

}  // namespace ivpp
