#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "tnet/engine.hpp"

namespace tnet {

// Deformation gradient interpolated linearly, component by component, from
// the current F to `target`.
struct FullF {
  Tensor2 target = Tensor2::identity();
};

// F = diag(l1, l2, l2) with l1 driven linearly to `stretch` and l2 solved so
// that the lateral stress vanishes.
struct UniaxialStretch {
  double stretch = 1.0;
};

// F = diag(l1, l2, l3) solved so that the whole stress vanishes; used for
// free recovery after release. Assumes a diagonal deformation history.
struct StressFree {};

using Control = std::variant<FullF, UniaxialStretch, StressFree>;

struct ConstantTemperature {
  double T = 293.15;
};
struct TemperatureRamp {
  double start = 293.15;
  double end = 293.15;
};
using TemperatureSchedule = std::variant<ConstantTemperature, TemperatureRamp>;

struct LoadStep {
  double duration = 1.0;
  int substeps = 1;
  Control control = FullF{};
  TemperatureSchedule temperature = ConstantTemperature{};
};

void validate(const LoadStep& step);

struct DriverOptions {
  TangentMode tangent = TangentMode::Frozen;
  double rtol = 1e-10;
  int max_iterations = 25;
};

struct Record {
  double t = 0.0;
  double T = 0.0;
  Tensor2 F;
  SymTensor2 sigma;
  std::vector<double> gamma0;
  int newton_iterations = 0;
  double residual = 0.0;
};

struct ProgramResult {
  std::vector<Record> records;
  MaterialState final_state;
  std::vector<std::pair<std::string, double>> readouts;  // scenario summary values
};

// Thrown when a mixed-control solve does not converge.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, std::vector<double> residuals)
      : std::runtime_error(what), residuals_(std::move(residuals)) {}
  const std::vector<double>& residuals() const { return residuals_; }

 private:
  std::vector<double> residuals_;
};

// Stress-free diagonal deformation for a given history, reached by an
// instantaneous jump so no network decays or re-forms on the way.
struct StressFreeSolution {
  Tensor2 F;
  SymTensor2 sigma;
  int iterations = 0;
};

class PointDriver {
 public:
  PointDriver(MaterialSpec spec, DriverOptions options = {}, double T0 = 293.15);

  // Runs every substep of `step`, appending one record per substep.
  void apply(const LoadStep& step);

  // Solves for the stress-free state without changing the driver.
  StressFreeSolution unloaded() const;

  const std::vector<Record>& records() const { return records_; }
  const MaterialState& state() const { return state_; }
  const MaterialSpec& spec() const { return spec_; }

 private:
  struct Solved {
    TrialResult trial;
    int iterations = 0;
    double residual = 0.0;
  };

  Solved solve_uniaxial(double l1, double T, double dt) const;
  Solved solve_stress_free(const MaterialState& from, double T, double dt) const;
  void commit(Solved&& s);

  MaterialSpec spec_;
  DriverOptions options_;
  MaterialState state_;
  std::vector<Record> records_;
};

ProgramResult run_program(const MaterialSpec& spec, const std::vector<LoadStep>& program,
                          const DriverOptions& options = {}, double T0 = 293.15);

}  // namespace tnet
