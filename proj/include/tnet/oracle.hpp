#pragma once

#include <functional>
#include <vector>

#include "tnet/engine.hpp"

namespace tnet {

// Reference evaluations of the hereditary integral that do not use the
// recurrence. They are slow and exist to validate the engine.

struct LogEntry {
  double t = 0.0;
  Tensor2 F = Tensor2::identity();
  double T = 0.0;
};

// Entry 0 is the initial state; step j goes from entry j-1 to entry j.
using HistoryLog = std::vector<LogEntry>;

// Step-consistent reconstruction: each history is the explicit sum
//   H = sum_j Abar_j w_j prod_{m>j} e_m,   gamma0 = prod_j e_j
// with Abar_j the endpoint average of the kernel values over step j.
std::vector<NetworkHistory> explicit_histories(const HistoryLog& log, const MaterialSpec& spec);
SymTensor2 explicit_stress(const HistoryLog& log, const MaterialSpec& spec);

// A deformation and temperature path s -> (F(s), T(s)).
struct PathPoint {
  Tensor2 F = Tensor2::identity();
  double T = 0.0;
};
using Path = std::function<PathPoint(double)>;

// Linear interpolation between log entries. At a zero-length step the later
// entry wins.
Path piecewise_linear(const HistoryLog& log);

struct QuadratureRule {
  std::vector<double> breakpoints;  // kinks of the path; panels never straddle one
  int panels_per_interval = 1;
  int points = 8;  // Gauss-Legendre nodes per panel
};

// Hereditary integral of gamma(t,s) sigma*(t,s) over s in [0, t], where the
// network born at s sees the explicit relative gradient F(t) F(s)^-1, plus
// the surviving original network and the volumetric part.
SymTensor2 quadrature_stress(const Path& path, const MaterialSpec& spec, double t,
                             const QuadratureRule& rule);

// Stored energy per unit reference volume, integrated the same way.
double quadrature_energy(const Path& path, const MaterialSpec& spec, double t,
                         const QuadratureRule& rule);

// Per-step dissipation D = J sigma : L - dW/dt at each step midpoint, with
// the log interpreted as a piecewise-linear path.
struct DissipationSample {
  double t = 0.0;
  double power = 0.0;        // J sigma : L
  double dissipation = 0.0;  // power minus rate of stored energy
};

std::vector<DissipationSample> dissipation_check(const HistoryLog& log, const MaterialSpec& spec,
                                                 int points = 8);

// Gauss-Legendre nodes and weights on [-1, 1].
void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights);

}  // namespace tnet
