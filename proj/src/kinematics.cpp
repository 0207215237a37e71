#include "tnet/kinematics.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "tnet/log.hpp"

namespace tnet {

namespace {
constexpr double kLargeStretch = 10.0;
}

DefState make_state(const Tensor2& F, double t, double T) {
  for (double x : F.v)
    if (!std::isfinite(x)) throw std::domain_error("make_state: non-finite deformation gradient");
  const double J = det(F);
  if (!(J > 0.0))
    throw std::domain_error("make_state: deformation gradient has det F = " + std::to_string(J) +
                            " (must be positive)");
  DefState s;
  s.F = F;
  s.Finv = inverse(F);
  s.J = J;
  s.C = sym(transpose(F) * F);
  s.Cinv = sym(s.Finv * transpose(s.Finv));
  s.b = sym(F * transpose(F));
  s.t = t;
  s.T = T;
  // tr C bounds the largest squared stretch from above, so the eigen solve is
  // only paid for when a large stretch is possible.
  if (trace(s.C) > kLargeStretch * kLargeStretch) {
    const Spectral& sp = ensure_spectrum(s);
    const double top = std::sqrt(sp.eigenvalues[0]);
    if (top > kLargeStretch)
      warn("principal stretch " + std::to_string(top) + " exceeds " + std::to_string(kLargeStretch));
  }
  return s;
}

const Spectral& ensure_spectrum(DefState& s) {
  if (!s.spectrum) s.spectrum = spectral_decompose(s.C);
  return *s.spectrum;
}

Spectral spectrum_of(const DefState& s) {
  return s.spectrum ? *s.spectrum : spectral_decompose(s.C);
}

IsochoricView isochoric(const DefState& s) {
  IsochoricView v;
  const double j13 = std::cbrt(s.J);
  const double j23 = j13 * j13;
  v.Fbar = (1.0 / j13) * s.F;
  v.Cbar = (1.0 / j23) * s.C;
  v.Cbar_inv = j23 * s.Cinv;
  v.bbar = (1.0 / j23) * s.b;
  v.I1bar = trace(v.Cbar);
  return v;
}

RelativeInvariants relative_invariants(const DefState& at_t, const DefState& at_s) {
  // C(t,s) is similar to C(t) C^-1(s), and its inverse to C^-1(t) C(s), so
  // I2 = I3 tr C(t,s)^-1 avoids the cancellation in (I1^2 - tr C^2) / 2.
  RelativeInvariants r;
  r.I1 = ddot(at_t.C, at_s.Cinv);
  const double jr = at_t.J / at_s.J;
  r.I3 = jr * jr;
  r.I2 = r.I3 * ddot(at_t.Cinv, at_s.C);
  return r;
}

SymTensor2 relative_b(const DefState& at_t, const DefState& at_s) {
  return congruence(at_t.F, at_s.Cinv);
}

SymTensor2 relative_b_inv(const DefState& at_t, const DefState& at_s) {
  return congruence(transpose(at_t.Finv), at_s.C);
}

Tensor2 relative_gradient(const DefState& at_t, const DefState& at_s) {
  return at_t.F * at_s.Finv;
}

double relative_generalized_stretch_contraction(const DefState& at_t, const DefState& at_s,
                                                double alpha) {
  const SymTensor2 ut = generalized_stretch(spectrum_of(at_t), alpha);
  const SymTensor2 us = generalized_stretch(spectrum_of(at_s), -alpha);
  return ddot(ut, us);
}

}  // namespace tnet
