#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "tnet/kinematics.hpp"
#include "tnet/kinetics.hpp"
#include "tnet/materials.hpp"

namespace tnet {

struct NetworkSpec {
  ModelSpec model;
  KineticsSpec kinetics;
};

// A material is a set of independent networks plus an optional volumetric
// response, which is required exactly when a Yeoh network is present.
struct MaterialSpec {
  std::vector<NetworkSpec> networks;
  std::optional<VolumetricSpec> volumetric;
};

void validate(const MaterialSpec& spec);
bool needs_spectrum(const MaterialSpec& spec);

// gamma0 is the surviving fraction of the original network; H accumulates
// the kernel values of all networks re-formed since, weighted by their
// survival.
struct NetworkHistory {
  double gamma0 = 1.0;
  KernelTerms H;
  bool operator==(const NetworkHistory&) const = default;
};

struct MaterialState {
  std::vector<NetworkHistory> networks;
  DefState last;  // F, t and T of the last committed step
};

struct StressResult {
  SymTensor2 sigma;   // Cauchy stress
  SymTensor4 tangent; // spatial tangent c, J c:d = d(tau) - d tau - tau d for d = sym(dF F^-1)
};

enum class TangentMode { Frozen, Algorithmic };

MaterialState init_state(const MaterialSpec& spec, double T0,
                         const Tensor2& F0 = Tensor2::identity(), double t0 = 0.0);

// Advances every network history over a step of length dt >= 0 ending at
// (F_next, T_next). dt = 0 applies an instantaneous jump.
MaterialState step(const MaterialState& state, const MaterialSpec& spec, const Tensor2& F_next,
                   double T_next, double dt);

// Stress and frozen-history tangent at F_now; the histories are not touched.
StressResult evaluate(const MaterialState& state, const MaterialSpec& spec, const Tensor2& F_now,
                      double T_now);
StressResult evaluate(const MaterialState& state, const MaterialSpec& spec);

// Contribution of one network (original plus re-formed parts) at F_now.
SymTensor2 network_stress(const MaterialState& state, const MaterialSpec& spec, std::size_t index,
                          const Tensor2& F_now);

// step() followed by evaluate() at the step end. In Algorithmic mode the
// tangent also includes the dependence of the newest history increment on
// F_next, which makes it the exact derivative of the trial stress.
struct TrialResult {
  MaterialState state;
  StressResult response;
};

TrialResult trial_step(const MaterialState& state, const MaterialSpec& spec, const Tensor2& F_next,
                       double T_next, double dt, TangentMode mode = TangentMode::Frozen);

// Binary layout (little endian):
//   8 bytes  magic "TNETSTAT"
//   u32      format version (currently 1)
//   u32      network count
//   per network:
//     u32    model tag (0 neo-Hookean, 1 Blatz-Ko, 2 Ogden-Hill, 3 Yeoh)
//     u32 x4 counts of scalar, rank-2, rank-4 and rank-6 entries
//     f64    gamma0
//     f64[]  scalars, then rank-2 (6 each), rank-4 (21 each), rank-6 (56 each)
//   f64[9]   last F, row-major
//   f64      last t
//   f64      last T
inline constexpr std::uint32_t kStateFormatVersion = 1;

std::vector<std::uint8_t> serialize(const MaterialState& state, const MaterialSpec& spec);
MaterialState deserialize(std::span<const std::uint8_t> bytes, const MaterialSpec& spec);

}  // namespace tnet
