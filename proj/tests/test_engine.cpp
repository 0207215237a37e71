#include <gtest/gtest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "support/compare.hpp"
#include "support/fd.hpp"
#include "support/random.hpp"
#include "tnet/engine.hpp"

using namespace tnet;
using tnet::check::Rng;
using tnet::check::rel_diff;

namespace {

MaterialSpec single(const ModelSpec& m, const KineticsSpec& k) {
  MaterialSpec s{{{m, k}}, std::nullopt};
  if (std::holds_alternative<YeohIso>(m)) s.volumetric = VolumetricSpec{1e4};
  return s;
}

std::vector<MaterialSpec> catalogue() {
  return {
      single(CompNeoHookean{0.5, 1.5}, ConstantRate{0.3}),
      single(BlatzKo{0.5, 2.0, 0.05}, ConstantRate{0.3}),
      single(OgdenHill{{{1.0, 10.0, 0.05}, {0.4, -2.0, 0.05}}}, ConstantRate{0.3}),
      MaterialSpec{{{YeohIso{50, -10, 1}, Permanent{}}, {YeohIso{50, -10, 1}, Arrhenius{20.0, 1e4}}},
                   VolumetricSpec{1e4}},
  };
}

// Random path of nearby deformations.
std::vector<Tensor2> random_path(Rng& rng, int n, double amplitude) {
  std::vector<Tensor2> out;
  Tensor2 F = Tensor2::identity();
  for (int i = 0; i < n; ++i) {
    Tensor2 G = Tensor2::identity();
    for (double& x : G.v) x += rng.uniform(-amplitude, amplitude);
    F = G * F;
    out.push_back(F);
  }
  return out;
}

}  // namespace

TEST(Engine, FreshStateMatchesHyperelasticResponse) {
  Rng rng(51);
  for (const MaterialSpec& spec : catalogue()) {
    const MaterialState s = init_state(spec, 300.0);
    EXPECT_LT(max_abs(evaluate(s, spec).sigma), 1e-12);
    const Tensor2 F = rng.deformation(0.6, 1.6);
    const DefState st = make_state(F);
    SymTensor2 ref;
    for (const auto& n : spec.networks) ref += hyper_stress(n.model, st);
    if (spec.volumetric) ref += volumetric_stress(*spec.volumetric, st.J);
    EXPECT_LT(rel_diff(evaluate(s, spec, F, 300.0).sigma, ref), 1e-12);
  }
}

TEST(Engine, YeohHistoryShapes) {
  const MaterialSpec spec = catalogue()[3];
  const MaterialState s = init_state(spec, 300.0);
  ASSERT_EQ(s.networks.size(), 2u);
  for (const auto& h : s.networks) {
    EXPECT_EQ(h.H.rank2.size(), 1u);
    EXPECT_EQ(h.H.rank4.size(), 1u);
    EXPECT_EQ(h.H.rank6.size(), 1u);
    EXPECT_EQ(h.gamma0, 1.0);
  }
}

TEST(Engine, SpecValidation) {
  EXPECT_THROW(init_state(MaterialSpec{}, 300.0), std::invalid_argument);
  EXPECT_THROW(validate(MaterialSpec{{{YeohIso{1, 0, 0}, Permanent{}}}, std::nullopt}), std::invalid_argument);
  EXPECT_THROW(validate(MaterialSpec{{{CompNeoHookean{1, 1}, Permanent{}}}, VolumetricSpec{1.0}}),
               std::invalid_argument);
  EXPECT_THROW(validate(MaterialSpec{{{CompNeoHookean{1, 1}, ConstantRate{-1}}}, std::nullopt}),
               std::invalid_argument);
}

TEST(Engine, HalfLifeStepGivesAverageKernel) {
  const MaterialSpec spec = single(CompNeoHookean{0.5, 1.5}, ConstantRate{std::log(2.0)});
  MaterialState s = init_state(spec, 300.0);
  // start from an already deformed state with empty history
  s.last = make_state(Tensor2::diag(1.2, 1.0, 0.9), 0.0, 300.0);
  const Tensor2 F1 = Tensor2::diag(1.4, 0.95, 0.9);
  const MaterialState n = step(s, spec, F1, 300.0, 1.0);
  KernelTerms a = kernel_A(spec.networks[0].model, s.last);
  a.axpy(1.0, kernel_A(spec.networks[0].model, make_state(F1)));
  a.scale(0.25);  // (w/2)(A_old + A_new) with w = 1/2
  EXPECT_LT(rel_diff(n.networks[0].H.rank2[0], a.rank2[0]), 1e-15);
  EXPECT_NEAR(n.networks[0].H.scalars[0], a.scalars[0], 1e-15);
  EXPECT_NEAR(n.networks[0].gamma0, 0.5, 1e-16);
}

TEST(Engine, PermanentNetworkIsBitwiseUnchanged) {
  const MaterialSpec spec = single(BlatzKo{0.5, 2.0, 0.05}, Permanent{});
  MaterialState s = init_state(spec, 300.0);
  s = step(s, spec, Tensor2::diag(1.3, 0.9, 0.9), 300.0, 1.0);
  const MaterialState n = step(s, spec, Tensor2::diag(1.3, 0.9, 0.9), 300.0, 5.0);
  EXPECT_EQ(n.networks, s.networks);
  EXPECT_EQ(n.networks[0].gamma0, 1.0);
  EXPECT_EQ(n.last.t, 6.0);
}

TEST(Engine, SlowNetworkDoublesPermanentStiffness) {
  const ModelSpec m = CompNeoHookean{0.5, 1.5};
  const MaterialSpec one = single(m, Permanent{});
  const MaterialSpec two{{{m, Permanent{}}, {m, ConstantRate{1e-12}}}, std::nullopt};
  MaterialState a = init_state(one, 300.0), b = init_state(two, 300.0);
  const Tensor2 F = Tensor2::diag(1.5, 0.85, 0.9);
  for (int i = 1; i <= 10; ++i) {
    const Tensor2 Fi = Tensor2::identity() + (i / 10.0) * (F - Tensor2::identity());
    a = step(a, one, Fi, 300.0, 0.1);
    b = step(b, two, Fi, 300.0, 0.1);
  }
  EXPECT_LE(rel_diff(evaluate(b, two).sigma, 2.0 * evaluate(a, one).sigma), 1e-6);
}

TEST(Engine, StepSizeFreedomAtConstantConditions) {
  for (const MaterialSpec& spec : catalogue()) {
    MaterialState s = init_state(spec, 300.0);
    s = step(s, spec, Tensor2::diag(1.2, 0.95, 0.9), 300.0, 0.5);
    const Tensor2 F = Tensor2::diag(1.3, 0.9, 0.9);
    MaterialState held = step(s, spec, F, 300.0, 0.5);
    const MaterialState once = step(held, spec, F, 300.0, 2.0);
    const MaterialState twice = step(step(held, spec, F, 300.0, 1.0), spec, F, 300.0, 1.0);
    for (std::size_t n = 0; n < spec.networks.size(); ++n) {
      EXPECT_NEAR(once.networks[n].gamma0, twice.networks[n].gamma0, 1e-15);
      EXPECT_LT(rel_diff(once.networks[n].H.rank2[0], twice.networks[n].H.rank2[0]), 1e-14);
    }
    EXPECT_LT(rel_diff(evaluate(once, spec).sigma, evaluate(twice, spec).sigma), 1e-12);
  }
}

TEST(Engine, StepStrainRelaxesExponentially) {
  // A network reborn at the held deformation carries no stress, so only the
  // surviving original fraction remains.
  for (const MaterialSpec& spec : catalogue()) {
    if (spec.volumetric) continue;
    const Tensor2 F = Tensor2::diag(1.4, 0.9, 0.85);
    MaterialState s = init_state(spec, 300.0);
    s = step(s, spec, F, 300.0, 0.0);  // instantaneous jump
    const SymTensor2 s0 = evaluate(s, spec).sigma;
    for (int i = 0; i < 7; ++i) s = step(s, spec, F, 300.0, 0.3 + 0.1 * i);
    const double t = s.last.t;
    EXPECT_LE(rel_diff(evaluate(s, spec).sigma, std::exp(-0.3 * t) * s0), 1e-12);
  }
}

TEST(Engine, EvaluateDoesNotMutateAndIsRepeatable) {
  const MaterialSpec spec = catalogue()[2];
  MaterialState s = init_state(spec, 300.0);
  s = step(s, spec, Tensor2::diag(1.2, 0.9, 1.0), 300.0, 0.5);
  const MaterialState before = s;
  const Tensor2 F = Tensor2::diag(1.25, 0.88, 1.01);
  const StressResult r1 = evaluate(s, spec, F, 300.0);
  const StressResult r2 = evaluate(s, spec, F, 300.0);
  EXPECT_EQ(r1.sigma, r2.sigma);
  EXPECT_EQ(r1.tangent, r2.tangent);
  EXPECT_EQ(s.networks, before.networks);
}

TEST(Engine, FrozenTangentMatchesFiniteDifferences) {
  Rng rng(52);
  for (const MaterialSpec& spec : catalogue()) {
    MaterialState s = init_state(spec, 300.0);
    for (const Tensor2& F : random_path(rng, 8, 0.06)) s = step(s, spec, F, 300.0, 0.4);
    const Tensor2 Fnow = Tensor2::diag(1.02, 0.99, 1.0) * s.last.F;
    const auto fd = check::fd_spatial_tangent([&](const Tensor2& G) { return evaluate(s, spec, G, 300.0).sigma; }, Fnow);
    EXPECT_LE(check::rel_diff(evaluate(s, spec, Fnow, 300.0).tangent, fd), 1e-5);
  }
}

TEST(Engine, AlgorithmicTangentMatchesTrialStressDerivative) {
  Rng rng(53);
  for (const MaterialSpec& spec : catalogue()) {
    MaterialState s = init_state(spec, 300.0);
    for (const Tensor2& F : random_path(rng, 8, 0.06)) s = step(s, spec, F, 300.0, 0.4);
    const Tensor2 Fnext = Tensor2::diag(1.05, 0.97, 1.0) * s.last.F;
    const double dt = 2.0;  // large k dt so the correction matters
    auto trial = [&](const Tensor2& G) { return trial_step(s, spec, G, 300.0, dt).response.sigma; };
    const auto fd = check::fd_spatial_tangent(trial, Fnext);
    const StressResult alg = trial_step(s, spec, Fnext, 300.0, dt, TangentMode::Algorithmic).response;
    const StressResult frozen = trial_step(s, spec, Fnext, 300.0, dt, TangentMode::Frozen).response;
    EXPECT_EQ(alg.sigma, frozen.sigma);
    EXPECT_LE(check::rel_diff(alg.tangent, fd), 1e-5);
    EXPECT_GT(check::rel_diff(frozen.tangent, fd), 1e-4);
  }
}

TEST(Engine, PermanentClosedLoopReturnsToZeroStress) {
  Rng rng(54);
  const MaterialSpec spec{{{CompNeoHookean{0.5, 1.5}, Permanent{}}, {OgdenHill{{{1.0, 3.0, 0.05}}}, Permanent{}}},
                          std::nullopt};
  MaterialState s = init_state(spec, 300.0);
  for (const Tensor2& F : random_path(rng, 20, 0.05)) s = step(s, spec, F, 300.0, 0.1);
  s = step(s, spec, Tensor2::identity(), 300.0, 0.1);
  EXPECT_LT(max_abs(evaluate(s, spec).sigma), 1e-12);
}

TEST(Engine, IdentityPathStaysStressFree) {
  for (const MaterialSpec& spec : catalogue()) {
    MaterialState s = init_state(spec, 300.0);
    for (int i = 0; i < 10; ++i) {
      s = step(s, spec, Tensor2::identity(), 300.0, 0.7);
      EXPECT_LT(max_abs(evaluate(s, spec).sigma), 1e-11);
    }
  }
}

TEST(Serialization, RoundTripIsBitExact) {
  Rng rng(55);
  for (const MaterialSpec& spec : catalogue()) {
    MaterialState s = init_state(spec, 300.0);
    for (const Tensor2& F : random_path(rng, 5, 0.05)) s = step(s, spec, F, 310.0, 0.4);
    const std::vector<std::uint8_t> blob = serialize(s, spec);
    const MaterialState r = deserialize(blob, spec);
    EXPECT_EQ(r.networks, s.networks);
    EXPECT_EQ(r.last.F, s.last.F);
    EXPECT_EQ(r.last.t, s.last.t);
    EXPECT_EQ(r.last.T, s.last.T);
    EXPECT_EQ(serialize(r, spec), blob);
    // continuing from the restored state gives identical results
    const Tensor2 F = Tensor2::diag(1.01, 1.0, 0.99) * s.last.F;
    EXPECT_EQ(evaluate(step(r, spec, F, 310.0, 0.3), spec).sigma, evaluate(step(s, spec, F, 310.0, 0.3), spec).sigma);
  }
}

TEST(Serialization, SizeDependsOnlyOnShape) {
  const MaterialSpec spec = catalogue()[3];
  const MaterialState a = init_state(spec, 300.0);
  const MaterialState b = step(a, spec, Tensor2::diag(1.1, 1, 1), 300.0, 1.0);
  EXPECT_EQ(serialize(a, spec).size(), serialize(b, spec).size());
  // 8 + 4 + 4 + 2 * (4 + 16 + 8 + 8 * (6 + 21 + 56)) + 72 + 16
  EXPECT_EQ(serialize(a, spec).size(), 8u + 4 + 4 + 2 * (4 + 16 + 8 + 8 * 83) + 72 + 16);
}

TEST(Serialization, RejectsCorruptBlobs) {
  const MaterialSpec spec = catalogue()[0];
  const std::vector<std::uint8_t> blob = serialize(init_state(spec, 300.0), spec);
  auto bad = blob;
  bad[0] = 'X';
  EXPECT_THROW(deserialize(bad, spec), std::runtime_error);
  bad = blob;
  bad[8] = 2;
  EXPECT_THROW(deserialize(bad, spec), std::runtime_error);
  bad = blob;
  bad.pop_back();
  EXPECT_THROW(deserialize(bad, spec), std::runtime_error);
  bad = blob;
  bad.push_back(0);
  EXPECT_THROW(deserialize(bad, spec), std::runtime_error);
  EXPECT_THROW(deserialize(blob, catalogue()[1]), std::runtime_error);
}
