#pragma once

#include <optional>

#include "tnet/spectral.hpp"
#include "tnet/tensor.hpp"

namespace tnet {

// Deformation state at one instant with the derived quantities every kernel
// reads. Built once per time point by make_state.
struct DefState {
  Tensor2 F = Tensor2::identity();
  Tensor2 Finv = Tensor2::identity();
  double J = 1.0;
  SymTensor2 C = SymTensor2::identity();
  SymTensor2 Cinv = SymTensor2::identity();
  SymTensor2 b = SymTensor2::identity();
  std::optional<Spectral> spectrum;  // of C, filled on demand
  double t = 0.0;
  double T = 0.0;
};

// Throws std::domain_error when det F <= 0 or F is not finite. Principal
// stretches above 10 are reported through the warning sink.
DefState make_state(const Tensor2& F, double t = 0.0, double T = 0.0);

// Fills `spectrum` if absent and returns it.
const Spectral& ensure_spectrum(DefState& s);
Spectral spectrum_of(const DefState& s);

struct IsochoricView {
  Tensor2 Fbar;
  SymTensor2 Cbar;
  SymTensor2 Cbar_inv;
  SymTensor2 bbar;
  double I1bar = 3.0;
};

IsochoricView isochoric(const DefState& s);

// Invariants of the relative right Cauchy-Green tensor C(t,s), computed from
// the two absolute states without forming F(t,s).
struct RelativeInvariants {
  double I1 = 3.0;
  double I2 = 3.0;
  double I3 = 1.0;
};

RelativeInvariants relative_invariants(const DefState& at_t, const DefState& at_s);

// F(t) C^-1(s) F(t)^T
SymTensor2 relative_b(const DefState& at_t, const DefState& at_s);
// F^-T(t) C(s) F^-1(t)
SymTensor2 relative_b_inv(const DefState& at_t, const DefState& at_s);
// F(t) F^-1(s)
Tensor2 relative_gradient(const DefState& at_t, const DefState& at_s);
// U^(2 alpha)(t) : U^(-2 alpha)(s)
double relative_generalized_stretch_contraction(const DefState& at_t, const DefState& at_s,
                                                double alpha);

}  // namespace tnet
