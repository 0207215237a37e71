#include "tnet/scenario.hpp"

#include <cmath>
#include <stdexcept>

namespace tnet {

namespace {

constexpr double kSecondsPerYear = 31557600.0;  // Julian year
constexpr double kRoomTemperature = 293.15;

// Shared stress-strain exponent for the foam examples; the examples give
// none, and this value matches the Blatz-Ko foam.
constexpr double kFoamBeta = 0.05;

LoadStep uniaxial(double duration, int substeps, double stretch, double T) {
  return LoadStep{duration, substeps, UniaxialStretch{stretch}, ConstantTemperature{T}};
}

// Closed-loop work per unit volume in the axial stress-stretch plane.
double loop_area(const std::vector<Record>& r) {
  double a = 0.0;
  for (std::size_t i = 1; i < r.size(); ++i)
    a += 0.5 * (r[i].sigma(0, 0) + r[i - 1].sigma(0, 0)) * (r[i].F(0, 0) - r[i - 1].F(0, 0));
  return a;
}

int max_iterations(const std::vector<Record>& r) {
  int m = 0;
  for (const Record& x : r) m = std::max(m, x.newton_iterations);
  return m;
}

double peak_norm(const std::vector<Record>& r) {
  double m = 0.0;
  for (const Record& x : r) m = std::max(m, norm(x.sigma));
  return m;
}

ProgramResult cyclic(const std::string& name, const ScenarioOptions& o, double stretch) {
  const int n = 100 * o.refinement;
  const std::vector<LoadStep> program{uniaxial(10.0, n, stretch, kRoomTemperature),
                                      uniaxial(10.0, n, 1.0, kRoomTemperature)};
  ProgramResult r = run_program(scenario_material(name, o), program, o.driver, kRoomTemperature);
  const Record& peak = r.records[n];
  r.readouts = {{"peak_stretch", peak.F(0, 0)},
                {"peak_stress", peak.sigma(0, 0)},
                {"stress_at_return", r.records.back().sigma(0, 0)},
                {"loop_area", loop_area(r.records)},
                {"max_newton_iterations", max_iterations(r.records)}};
  return r;
}

ProgramResult permanent_set(const ScenarioOptions& o) {
  const double held = 0.8;
  const int m = o.refinement;
  PointDriver d(scenario_material("blatzko-permanent-set", o), o.driver, kRoomTemperature);
  d.apply(uniaxial(0.01, 20 * m, held, kRoomTemperature));
  d.apply(uniaxial(1.99, 200 * m, held, kRoomTemperature));
  const StressFreeSolution at2 = d.unloaded();
  const double gamma2 = d.state().networks[0].gamma0;
  d.apply(uniaxial(8.0, 400 * m, held, kRoomTemperature));
  const StressFreeSolution at10 = d.unloaded();

  ProgramResult r{d.records(), d.state(), {}};
  r.readouts = {{"held_stretch", held},
                {"gamma0_2yr", gamma2},
                {"residual_stretch_2yr", at2.F(0, 0)},
                {"residual_lateral_stretch_2yr", at2.F(1, 1)},
                {"unloaded_stress_norm_2yr", norm(at2.sigma)},
                {"gamma0_10yr", d.state().networks[0].gamma0},
                {"residual_stretch_10yr", at10.F(0, 0)},
                {"residual_lateral_stretch_10yr", at10.F(1, 1)},
                {"unloaded_stress_norm_10yr", norm(at10.sigma)},
                {"peak_stress_norm", peak_norm(r.records)},
                {"max_newton_iterations", max_iterations(r.records)}};
  return r;
}

ProgramResult arrhenius_relax(const ScenarioOptions& o) {
  const double T = o.temperature.value_or(273.0);
  if (!(T > 0.0)) throw std::invalid_argument("temperature must be positive");
  const int m = o.refinement;
  PointDriver d(scenario_material("arrhenius-relax", o), o.driver, T);
  d.apply(uniaxial(0.001, 10 * m, 0.7, T));
  const double g_start = d.state().networks[0].gamma0;
  d.apply(uniaxial(5.0, 200 * m, 0.7, T));
  const double g_end = d.state().networks[0].gamma0;
  d.apply(LoadStep{0.001, 1, StressFree{}, ConstantTemperature{T}});
  const double released = d.state().last.F(0, 0);
  d.apply(LoadStep{20.0, 200 * m, StressFree{}, ConstantTemperature{T}});

  ProgramResult r{d.records(), d.state(), {}};
  const MaterialSpec spec = scenario_material("arrhenius-relax", o);
  r.readouts = {{"temperature", T},
                {"rate_fast", rate(spec.networks[0].kinetics, T)},
                {"rate_slow", rate(spec.networks[1].kinetics, T)},
                {"measured_rate_fast", std::log(g_start / g_end) / 5.0},
                {"stretch_after_release", released},
                {"stretch_final", d.state().last.F(0, 0)},
                {"max_newton_iterations", max_iterations(r.records)}};
  return r;
}

}  // namespace

std::vector<std::string> scenario_names() {
  return {"yeoh-cyclic", "ogden-foam-cyclic", "blatzko-permanent-set", "arrhenius-relax"};
}

std::string scenario_unit(const std::string& name) {
  if (name == "blatzko-permanent-set") return "yr";
  scenario_material(name);  // rejects unknown names
  return "s";
}

MaterialSpec scenario_material(const std::string& name, const ScenarioOptions& o) {
  if (o.k && !(*o.k >= 0.0)) throw std::invalid_argument("rate k must be >= 0");
  if (o.refinement < 1) throw std::invalid_argument("refinement must be >= 1");
  if (name == "yeoh-cyclic") {
    const YeohIso y{50.0, -10.0, 1.0};
    return MaterialSpec{{{y, Permanent{}}, {y, ConstantRate{o.k.value_or(0.05)}}}, VolumetricSpec{1.0e4}};
  }
  if (name == "ogden-foam-cyclic") {
    double sign = 0.0;
    if (o.variant == "plus") sign = 1.0;
    else if (o.variant == "minus") sign = -1.0;
    else throw std::invalid_argument("ogden-foam-cyclic variant must be plus or minus");
    const OgdenHill permanent{{{-0.001, -5.0, kFoamBeta}, {1.0, 10.0, kFoamBeta}}};
    const OgdenHill transient{{{sign * 1.0, sign * 1.0, kFoamBeta}}};
    return MaterialSpec{{{permanent, Permanent{}}, {transient, ConstantRate{o.k.value_or(0.05)}}}, std::nullopt};
  }
  if (name == "blatzko-permanent-set")
    return MaterialSpec{{{BlatzKo{0.5, 2.0, 0.05}, ConstantRate{o.k.value_or(0.1)}}}, std::nullopt};
  if (name == "arrhenius-relax") {
    const CompNeoHookean nh{0.03, 1.5};
    return MaterialSpec{{{nh, Arrhenius{20.0, 1.0e4}}, {nh, Arrhenius{20.0 / kSecondsPerYear, 1.0e4}}},
                        std::nullopt};
  }
  throw std::invalid_argument("unknown scenario '" + name + "'");
}

ProgramResult run_scenario(const std::string& name, const ScenarioOptions& options) {
  if (name == "yeoh-cyclic") return cyclic(name, options, 2.0);
  if (name == "ogden-foam-cyclic") return cyclic(name, options, 0.5);
  if (name == "blatzko-permanent-set") return permanent_set(options);
  if (name == "arrhenius-relax") return arrhenius_relax(options);
  throw std::invalid_argument("unknown scenario '" + name + "'");
}

}  // namespace tnet
