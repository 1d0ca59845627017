#pragma once

// Acceptance suite: ten grid-level criteria covering the exact layer, the
// wall and chamber machinery, the moduli verdicts and the report pipeline.
// Each criterion runs over its full stated grid and reports one line; a
// criterion never weakens its tolerance (every comparison is exact, the
// only numeric tolerance is the stated 1e-6 between printed decimals and
// their exact values).

#include <string>
#include <vector>

namespace ruledwalls {

struct CriterionResult {
  int id = 0;
  std::string name;   // stable kebab-case identifier
  bool pass = false;
  std::string detail;  // counts covered, or the first failure
};

// Runs all ten criteria in order; never throws (failures are reported in
// the results, including unexpected exceptions).
std::vector<CriterionResult> run_acceptance();

}  // namespace ruledwalls
