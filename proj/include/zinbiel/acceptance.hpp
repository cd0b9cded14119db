#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace zinbiel {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;  // empty when passing, failure lines otherwise
  double seconds = 0.0;
};

// The defaults pin the published thresholds; dims and seed are overridable
// for exploration and echoed into the output.
struct AcceptanceOptions {
  std::vector<int> dims{8, 9, 10, 11, 12};
  std::uint64_t seed = 0;
};

// Runs the numbered acceptance checks (1..8); empty selection = all.
// Progress lines go to `out` when given, one per criterion.
std::vector<CriterionResult> run_acceptance(const std::vector<int>& ids = {},
                                            std::ostream* out = nullptr,
                                            const AcceptanceOptions& options = {});

std::string acceptance_to_json(const std::vector<CriterionResult>& results);

}  // namespace zinbiel
