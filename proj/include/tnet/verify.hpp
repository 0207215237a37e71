#pragma once

#include <string>
#include <vector>

#include "tnet/engine.hpp"

namespace tnet {

struct CheckResult {
  std::string name;
  bool passed = false;
  double measured = 0.0;  // worst error found
  double limit = 0.0;
};

// Materials covering every model, with permanent and transient networks.
std::vector<MaterialSpec> reference_materials();

// Quick self-consistency checks of the engine against the slow references:
// recurrence against the explicit history sum, frozen tangent against central
// differences, analytic step-strain relaxation, and non-negative dissipation.
// Deterministic for a given seed.
std::vector<CheckResult> self_check(unsigned long long seed = 2024);

}  // namespace tnet
