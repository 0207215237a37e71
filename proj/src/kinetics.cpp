#include "tnet/kinetics.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "overloaded.hpp"
#include "tnet/log.hpp"

namespace tnet {

using detail::overloaded;

void validate(const KineticsSpec& spec) {
  std::visit(overloaded{
                 [](const Permanent&) {},
                 [](const ConstantRate& c) {
                   if (!(c.k >= 0.0) || !std::isfinite(c.k))
                     throw std::invalid_argument("kinetics: rate k must be finite and >= 0");
                 },
                 [](const Arrhenius& a) {
                   if (!(a.A >= 0.0) || !std::isfinite(a.A))
                     throw std::invalid_argument("kinetics: prefactor A must be finite and >= 0");
                   if (!(a.EA >= 0.0) || !std::isfinite(a.EA))
                     throw std::invalid_argument("kinetics: activation energy must be finite and >= 0");
                 },
             },
             spec);
}

bool is_permanent(const KineticsSpec& spec) {
  // a zero rate is treated exactly like a permanent network
  return std::visit(overloaded{
                        [](const Permanent&) { return true; },
                        [](const ConstantRate& c) { return c.k == 0.0; },
                        [](const Arrhenius& a) { return a.A == 0.0; },
                    },
                    spec);
}

double rate(const KineticsSpec& spec, double T) {
  return std::visit(overloaded{
                        [](const Permanent&) { return 0.0; },
                        [](const ConstantRate& c) { return c.k; },
                        [T](const Arrhenius& a) {
                          if (!(T > 0.0))
                            throw std::domain_error("kinetics: Arrhenius rate needs T > 0, got " +
                                                    std::to_string(T));
                          return a.A * std::exp(-a.EA / (kGasConstant * T));
                        },
                    },
                    spec);
}

SurvivalUpdate survival(const KineticsSpec& spec, double T_begin, double T_end, double dt) {
  if (!(dt >= 0.0)) throw std::invalid_argument("survival: time step must be >= 0");
  SurvivalUpdate u;
  if (is_permanent(spec)) return u;
  u.k_mean = 0.5 * (rate(spec, T_begin) + rate(spec, T_end));
  if (dt == 0.0) return u;
  const double x = u.k_mean * dt;
  if (x > kUnderflowExponent) {
    warn("survival: k*dt = " + std::to_string(x) + " underflows; treating the survival factor as 0");
    u.e = 0.0;
    u.w = 1.0;
    return u;
  }
  u.e = std::exp(-x);
  u.w = -std::expm1(-x);
  return u;
}

double update_original_fraction(double gamma0, const SurvivalUpdate& u) { return gamma0 * u.e; }

}  // namespace tnet
