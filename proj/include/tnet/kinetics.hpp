#pragma once

#include <variant>

namespace tnet {

inline constexpr double kGasConstant = 8.314;  // J / (mol K)

// Exponential underflow threshold for the survival factor.
inline constexpr double kUnderflowExponent = 700.0;

struct Permanent {};
struct ConstantRate {
  double k = 0.0;  // 1 / time unit
};
struct Arrhenius {
  double A = 0.0;   // 1 / time unit
  double EA = 0.0;  // J / mol
};

using KineticsSpec = std::variant<Permanent, ConstantRate, Arrhenius>;

void validate(const KineticsSpec& spec);
bool is_permanent(const KineticsSpec& spec);

// Scission rate at absolute temperature T. Throws std::domain_error for an
// Arrhenius law at T <= 0.
double rate(const KineticsSpec& spec, double T);

// Survival over one step: e = exp(-k dt), w = 1 - e, with k the mean of the
// endpoint rates. dt = 0 is an instantaneous jump (e = 1, w = 0).
struct SurvivalUpdate {
  double e = 1.0;
  double w = 0.0;
  double k_mean = 0.0;
};

SurvivalUpdate survival(const KineticsSpec& spec, double T_begin, double T_end, double dt);

double update_original_fraction(double gamma0, const SurvivalUpdate& u);

}  // namespace tnet
