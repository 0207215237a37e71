#include "tnet/driver.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "overloaded.hpp"

namespace tnet {

using detail::overloaded;

void validate(const LoadStep& step) {
  if (!(step.duration > 0.0) || !std::isfinite(step.duration))
    throw std::invalid_argument("load step duration must be positive");
  if (step.substeps < 1) throw std::invalid_argument("load step needs at least one substep");
  if (const auto* u = std::get_if<UniaxialStretch>(&step.control))
    if (!(u->stretch > 0.0)) throw std::invalid_argument("uniaxial stretch target must be positive");
  if (const auto* f = std::get_if<FullF>(&step.control))
    if (!(det(f->target) > 0.0)) throw std::invalid_argument("target deformation gradient needs det F > 0");
}

namespace {

Tensor2 diag(double a, double b, double c) { return Tensor2::diag(a, b, c); }

bool is_diagonal(const Tensor2& F) {
  return F(0, 1) == 0.0 && F(0, 2) == 0.0 && F(1, 0) == 0.0 && F(1, 2) == 0.0 && F(2, 0) == 0.0 &&
         F(2, 1) == 0.0;
}

double temperature_at(const TemperatureSchedule& s, double fraction) {
  return std::visit(overloaded{
                        [](const ConstantTemperature& c) { return c.T; },
                        [fraction](const TemperatureRamp& r) { return r.start + fraction * (r.end - r.start); },
                    },
                    s);
}

std::string describe(const char* what, double t, const std::vector<double>& residuals) {
  std::ostringstream os;
  os << what << " did not converge at t = " << t << "; relative residuals:";
  for (double r : residuals) os << ' ' << r;
  return os.str();
}

}  // namespace

PointDriver::PointDriver(MaterialSpec spec, DriverOptions options, double T0)
    : spec_(std::move(spec)), options_(options), state_(init_state(spec_, T0)) {
  Record r;
  r.t = state_.last.t;
  r.T = T0;
  r.F = state_.last.F;
  r.sigma = evaluate(state_, spec_).sigma;
  for (const auto& n : state_.networks) r.gamma0.push_back(n.gamma0);
  records_.push_back(std::move(r));
}

PointDriver::Solved PointDriver::solve_uniaxial(double l1, double T, double dt) const {
  double l2 = state_.last.F(1, 1);
  double lo = std::min(0.2, l2), hi = std::max(5.0, l2);
  std::vector<double> history;
  for (int it = 0; it <= options_.max_iterations; ++it) {
    TrialResult trial = trial_step(state_, spec_, diag(l1, l2, l2), T, dt, options_.tangent);
    const double g = trial.response.sigma(1, 1);
    const SymTensor4& c = trial.response.tangent;
    // d sigma22 / d l2 for F = diag(l1, l2, l2); the rotation terms cancel
    const double slope = (c(1, 1, 1, 1) + c(1, 1, 2, 2)) / l2;
    const double scale = std::max(std::abs(trial.response.sigma(0, 0)), std::abs(slope * l2));
    const double rel = scale > 0.0 ? std::abs(g) / scale : std::abs(g);
    history.push_back(rel);
    if (rel <= options_.rtol) return {std::move(trial), it, rel};
    (g < 0.0 ? lo : hi) = l2;
    double next = l2 - g / slope;
    if (!(slope > 0.0) || !(next > lo && next < hi)) next = 0.5 * (lo + hi);
    l2 = next;
  }
  throw ConvergenceError(describe("uniaxial lateral-stress solve", state_.last.t + dt, history), history);
}

PointDriver::Solved PointDriver::solve_stress_free(const MaterialState& from, double T, double dt) const {
  if (!is_diagonal(from.last.F))
    throw std::invalid_argument("stress-free control needs a diagonal deformation gradient");
  double l[3] = {from.last.F(0, 0), from.last.F(1, 1), from.last.F(2, 2)};
  std::vector<double> history;
  for (int it = 0; it <= options_.max_iterations; ++it) {
    TrialResult trial = trial_step(from, spec_, diag(l[0], l[1], l[2]), T, dt, options_.tangent);
    const SymTensor2& s = trial.response.sigma;
    const SymTensor4& c = trial.response.tangent;
    double scale = 0.0, worst = 0.0;
    for (int i = 0; i < 3; ++i) scale = std::max(scale, std::abs(c(i, i, i, i)));
    for (double x : s.v) worst = std::max(worst, std::abs(x));
    const double rel = scale > 0.0 ? worst / scale : worst;
    history.push_back(rel);
    if (rel <= options_.rtol) return {std::move(trial), it, rel};
    // d sigma_ii / d l_j = (c_iijj + (2 delta_ij - 1) sigma_ii) / l_j
    Tensor2 jac;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) jac(i, j) = (c(i, i, j, j) + (i == j ? 1.0 : -1.0) * s(i, i)) / l[j];
    const Tensor2 inv = inverse(jac);
    double step[3], damp = 1.0;
    for (int i = 0; i < 3; ++i) {
      step[i] = -(inv(i, 0) * s(0, 0) + inv(i, 1) * s(1, 1) + inv(i, 2) * s(2, 2));
      if (!std::isfinite(step[i])) throw ConvergenceError(describe("stress-free solve", from.last.t + dt, history), history);
      damp = std::min(damp, 0.25 * l[i] / std::max(std::abs(step[i]), 1e-300));
    }
    for (int i = 0; i < 3; ++i) l[i] += damp * step[i];
  }
  throw ConvergenceError(describe("stress-free solve", from.last.t + dt, history), history);
}

void PointDriver::commit(Solved&& s) {
  state_ = std::move(s.trial.state);
  Record r;
  r.t = state_.last.t;
  r.T = state_.last.T;
  r.F = state_.last.F;
  r.sigma = s.trial.response.sigma;
  for (const auto& n : state_.networks) r.gamma0.push_back(n.gamma0);
  r.newton_iterations = s.iterations;
  r.residual = s.residual;
  records_.push_back(std::move(r));
}

void PointDriver::apply(const LoadStep& step) {
  validate(step);
  const double t0 = state_.last.t;
  const Tensor2 F0 = state_.last.F;
  if (std::holds_alternative<UniaxialStretch>(step.control) && !is_diagonal(F0))
    throw std::invalid_argument("uniaxial control needs a diagonal deformation gradient");
  for (int i = 1; i <= step.substeps; ++i) {
    const double x = static_cast<double>(i) / step.substeps;
    const double t = t0 + step.duration * x;
    const double dt = t - state_.last.t;
    const double T = temperature_at(step.temperature, x);
    Solved s = std::visit(
        overloaded{
            [&](const FullF& c) {
              return Solved{trial_step(state_, spec_, F0 + x * (c.target - F0), T, dt, options_.tangent), 0, 0.0};
            },
            [&](const UniaxialStretch& c) { return solve_uniaxial(F0(0, 0) + x * (c.stretch - F0(0, 0)), T, dt); },
            [&](const StressFree&) { return solve_stress_free(state_, T, dt); },
        },
        step.control);
    // pin the clock to the exact substep time
    s.trial.state.last.t = t;
    commit(std::move(s));
  }
}

StressFreeSolution PointDriver::unloaded() const {
  Solved s = solve_stress_free(state_, state_.last.T, 0.0);
  return {s.trial.state.last.F, s.trial.response.sigma, s.iterations};
}

ProgramResult run_program(const MaterialSpec& spec, const std::vector<LoadStep>& program,
                          const DriverOptions& options, double T0) {
  PointDriver d(spec, options, T0);
  for (const LoadStep& s : program) d.apply(s);
  return {d.records(), d.state(), {}};
}

}  // namespace tnet
