#pragma once

#include <string>
#include <vector>

namespace qsl::cli {

struct SelftestCheck {
  std::string name;
  double worst;      // largest discrepancy observed
  double tolerance;
  bool passed;
};

// Oracle equivalences: Kraus sum vs closed forms, Kruskal embedding vs the
// direct state, analytic vs finite-difference derivatives.
std::vector<SelftestCheck> run_selftest();

}  // namespace qsl::cli
