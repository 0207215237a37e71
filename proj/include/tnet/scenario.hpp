#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tnet/driver.hpp"

namespace tnet {

// Built-in point-scale programs. Each returns the full record series plus a
// few named summary values.
struct ScenarioOptions {
  std::optional<double> k;            // rate of the transient network, overrides the default
  std::string variant = "plus";       // ogden-foam-cyclic: sign of the transient term
  std::optional<double> temperature;  // arrhenius-relax: hold temperature in K
  int refinement = 1;                 // multiplies every substep count
  DriverOptions driver;
};

std::vector<std::string> scenario_names();

// Throws std::invalid_argument for an unknown name or option.
ProgramResult run_scenario(const std::string& name, const ScenarioOptions& options = {});

// Material and time unit ("s" or "yr") used by a scenario.
MaterialSpec scenario_material(const std::string& name, const ScenarioOptions& options = {});
std::string scenario_unit(const std::string& name);

}  // namespace tnet
