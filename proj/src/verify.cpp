#include "tnet/verify.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "tnet/oracle.hpp"

namespace tnet {

namespace {

double rel(const SymTensor2& a, const SymTensor2& ref) {
  double num = 0.0, den = 0.0;
  for (int i = 0; i < 6; ++i) {
    num = std::max(num, std::abs(a.v[i] - ref.v[i]));
    den = std::max(den, std::abs(ref.v[i]));
  }
  return den > 0.0 ? num / den : num;
}

HistoryLog random_log(std::mt19937_64& gen, int steps, double amplitude) {
  std::uniform_real_distribution<double> jitter(-amplitude, amplitude), dt(0.05, 0.6), dT(-10.0, 10.0);
  HistoryLog log{{0.0, Tensor2::identity(), 300.0}};
  for (int i = 0; i < steps; ++i) {
    Tensor2 G = Tensor2::identity();
    for (double& x : G.v) x += jitter(gen);
    log.push_back({log.back().t + dt(gen), G * log.back().F, std::clamp(log.back().T + dT(gen), 250.0, 400.0)});
  }
  return log;
}

MaterialState replay(const HistoryLog& log, const MaterialSpec& spec) {
  MaterialState s = init_state(spec, log.front().T, log.front().F, log.front().t);
  for (std::size_t j = 1; j < log.size(); ++j) s = step(s, spec, log[j].F, log[j].T, log[j].t - log[j - 1].t);
  return s;
}

// Worst relative mismatch between the frozen tangent and a fourth-order
// central difference of the Kirchhoff stress under F -> (I + hG) F.
double tangent_error(const MaterialState& s, const MaterialSpec& spec, double h = 1e-4) {
  const Tensor2 F = s.last.F;
  const double T = s.last.T;
  const StressResult base = evaluate(s, spec, F, T);
  const double J = det(F);
  const Tensor2 tau = to_full(J * base.sigma);
  auto kirchhoff = [&](const Tensor2& G, double eps) {
    const Tensor2 Fp = (Tensor2::identity() + eps * G) * F;
    return det(Fp) * evaluate(s, spec, Fp, T).sigma;
  };
  double num = 0.0, den = 0.0;
  for (int q = 0; q < 6; ++q) {
    SymTensor2 g;
    g.v[q] = 1.0;
    const Tensor2 G = to_full(g);
    const SymTensor2 dtau = (1.0 / (12.0 * h)) * (kirchhoff(G, -2 * h) - 8.0 * kirchhoff(G, -h) +
                                                  8.0 * kirchhoff(G, h) - kirchhoff(G, 2 * h));
    const SymTensor2 column = (1.0 / J) * (dtau - sym(G * tau + tau * G));
    for (int p = 0; p < 6; ++p) {
      const double fd = column.v[p] / kVoigtMultiplicity[q];
      num = std::max(num, std::abs(base.tangent.pair(p, q) - fd));
      den = std::max(den, std::abs(fd));
    }
  }
  return den > 0.0 ? num / den : num;
}

CheckResult make(std::string name, double measured, double limit) {
  return {std::move(name), measured <= limit, measured, limit};
}

}  // namespace

std::vector<MaterialSpec> reference_materials() {
  const OgdenHill foam{{{1.0, 10.0, 0.05}, {0.4, -2.0, 0.05}}};
  return {
      MaterialSpec{{{CompNeoHookean{0.5, 1.5}, ConstantRate{0.7}}}, std::nullopt},
      MaterialSpec{{{BlatzKo{0.5, 2.0, 0.05}, Permanent{}}, {BlatzKo{0.3, 1.0, 0.1}, ConstantRate{0.4}}},
                   std::nullopt},
      MaterialSpec{{{foam, ConstantRate{0.5}}, {OgdenHill{{{0.8, 1.5, 0.05}}}, Permanent{}}}, std::nullopt},
      MaterialSpec{{{YeohIso{50, -10, 1}, Permanent{}}, {YeohIso{50, -10, 1}, Arrhenius{20.0, 1e4}}},
                   VolumetricSpec{1e4}},
  };
}

std::vector<CheckResult> self_check(unsigned long long seed) {
  std::mt19937_64 gen(seed);
  double sum_err = 0.0, tangent_err = 0.0, relax_err = 0.0, dissipation = 0.0;

  for (const MaterialSpec& spec : reference_materials()) {
    for (int trial = 0; trial < 3; ++trial) {
      const HistoryLog log = random_log(gen, 20, 0.05);
      const MaterialState s = replay(log, spec);
      sum_err = std::max(sum_err, rel(evaluate(s, spec).sigma, explicit_stress(log, spec)));
      tangent_err = std::max(tangent_err, tangent_error(s, spec));
    }

    // Dissipation relative to the peak stress power along the path.
    const auto samples = dissipation_check(random_log(gen, 6, 0.05), spec);
    double peak = 0.0, worst = 0.0;
    for (const auto& d : samples) {
      peak = std::max(peak, std::abs(d.power));
      worst = std::min(worst, d.dissipation);
    }
    if (peak > 0.0) dissipation = std::min(dissipation, worst / peak);
  }

  // One transient network held at a fixed deformation relaxes as exp(-k t).
  const double k = 0.3;
  const MaterialSpec single{{{CompNeoHookean{0.5, 1.5}, ConstantRate{k}}}, std::nullopt};
  const Tensor2 F = Tensor2::diag(1.4, 0.9, 0.85);
  MaterialState s = init_state(single, 300.0);
  s = step(s, single, F, 300.0, 0.0);
  const SymTensor2 elastic = evaluate(s, single).sigma;
  std::uniform_real_distribution<double> dt(0.01, 0.8);
  for (int i = 0; i < 30; ++i) {
    s = step(s, single, F, 300.0, dt(gen));
    relax_err = std::max(relax_err, rel(evaluate(s, single).sigma, std::exp(-k * s.last.t) * elastic));
  }

  return {
      make("recurrence matches explicit history sum", sum_err, 1e-12),
      make("frozen tangent matches central differences", tangent_err, 1e-5),
      make("held deformation relaxes as exp(-k t)", relax_err, 1e-10),
      make("dissipation is non-negative", 0.0 - dissipation, 1e-8),
  };
}

}  // namespace tnet
