#pragma once

#include <cstddef>
#include <vector>

#include "tnet/engine.hpp"

namespace tnet {

// Cost of the recurrence against a naive evaluation that re-sums the whole
// stored history at every step.
struct BenchRow {
  std::size_t steps = 0;
  double recurrence_seconds_per_step = 0.0;
  double naive_seconds_per_step = 0.0;
  std::size_t recurrence_bytes = 0;  // serialized material state
  std::size_t naive_bytes = 0;       // stored deformation log
  double max_relative_difference = 0.0;
};

// Material used when none is given: one permanent and one transient
// neo-Hookean network.
MaterialSpec default_bench_material();

// Each length is timed `repeats` times and the fastest run is kept.
std::vector<BenchRow> bench(const std::vector<std::size_t>& lengths, const MaterialSpec& spec,
                            int repeats = 3);

}  // namespace tnet
