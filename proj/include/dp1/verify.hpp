#pragma once

#include <string>
#include <vector>

namespace dp1 {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
};

// Runs the acceptance criteria. Groups: "all", "tables" (catalog and count
// data), "matching" (Hasse pairing and cancelation), "pairs" (Bertini pair
// invariants), "tritangents" (classifier and nodal counts).
std::vector<CriterionResult> run_acceptance(const std::string& group = "all");

bool all_passed(const std::vector<CriterionResult>& results);

}  // namespace dp1
