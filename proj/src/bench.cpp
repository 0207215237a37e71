#include "tnet/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

#include "tnet/oracle.hpp"

namespace tnet {

namespace {

using Clock = std::chrono::steady_clock;

constexpr double kStep = 0.01;
constexpr double kRate = 0.5;

LogEntry path_point(std::size_t i) {
  const double t = kStep * static_cast<double>(i);
  const double l = 1.0 + 0.2 * std::sin(t);
  return {t, Tensor2::diag(l, 1.0 / std::sqrt(l), 1.0 / std::sqrt(l)), 300.0};
}

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// Stress at the end of `states[0..n]` by summing every re-formed network
// explicitly, with the same step rule the recurrence uses.
SymTensor2 naive_stress(const std::vector<DefState>& states, std::size_t n, const MaterialSpec& spec,
                        std::vector<SymTensor2>& scratch) {
  const DefState& now = states[n];
  SymTensor2 total;
  for (const NetworkSpec& net : spec.networks) {
    if (is_permanent(net.kinetics)) {
      total += hyper_stress(net.model, now);
      continue;
    }
    scratch.resize(n + 1);
    for (std::size_t j = 0; j <= n; ++j) scratch[j] = relative_stress(net.model, now, states[j]);
    double survive = 1.0;  // survival from the end of step j to now
    for (std::size_t j = n; j >= 1; --j) {
      const SurvivalUpdate u = survival(net.kinetics, states[j - 1].T, states[j].T, states[j].t - states[j - 1].t);
      total += (0.5 * u.w * survive) * (scratch[j - 1] + scratch[j]);
      survive *= u.e;
    }
    total += survive * hyper_stress(net.model, now);
  }
  if (spec.volumetric) total += volumetric_stress(*spec.volumetric, now.J);
  return total;
}

}  // namespace

MaterialSpec default_bench_material() {
  const CompNeoHookean nh{0.5, 1.5};
  return MaterialSpec{{{nh, Permanent{}}, {nh, ConstantRate{kRate}}}, std::nullopt};
}

std::vector<BenchRow> bench(const std::vector<std::size_t>& lengths, const MaterialSpec& spec,
                            int repeats) {
  validate(spec);
  std::vector<BenchRow> rows;
  for (std::size_t N : lengths) {
    BenchRow row;
    row.steps = N;

    std::vector<DefState> states;
    states.reserve(N + 1);
    for (std::size_t i = 0; i <= N; ++i) {
      const LogEntry e = path_point(i);
      states.push_back(make_state(e.F, e.t, e.T));
      if (needs_spectrum(spec)) ensure_spectrum(states.back());
    }
    row.naive_bytes = states.size() * sizeof(LogEntry);

    SymTensor2 recurrence_final;
    row.recurrence_seconds_per_step = INFINITY;
    for (int r = 0; r < std::max(1, repeats); ++r) {
      MaterialState s = init_state(spec, 300.0);
      const auto start = Clock::now();
      for (std::size_t i = 1; i <= N; ++i) {
        const LogEntry e = path_point(i);
        s = step(s, spec, e.F, e.T, e.t - s.last.t);
        recurrence_final = evaluate(s, spec).sigma;
      }
      row.recurrence_seconds_per_step = std::min(row.recurrence_seconds_per_step, seconds_since(start) / N);
      row.recurrence_bytes = serialize(s, spec).size();
    }

    // Naive cost per step at history length N, measured on the last steps.
    const std::size_t probes = std::min<std::size_t>(N, 20);
    std::vector<SymTensor2> scratch;
    SymTensor2 naive_final;
    row.naive_seconds_per_step = INFINITY;
    for (int r = 0; r < std::max(1, repeats); ++r) {
      const auto start = Clock::now();
      for (std::size_t n = N - probes + 1; n <= N; ++n) naive_final = naive_stress(states, n, spec, scratch);
      row.naive_seconds_per_step = std::min(row.naive_seconds_per_step, seconds_since(start) / probes);
    }
    row.max_relative_difference = norm(naive_final - recurrence_final) / std::max(norm(recurrence_final), 1e-300);
    rows.push_back(row);
  }
  return rows;
}

}  // namespace tnet
