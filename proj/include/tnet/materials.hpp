#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "tnet/kinematics.hpp"
#include "tnet/tensor.hpp"

namespace tnet {

// Compressible neo-Hookean:
//   W = mu/2 (I1 - 3 - 2 ln J) + lambda/2 (ln J)^2
struct CompNeoHookean {
  double lambda = 0.0;
  double mu = 0.0;
};

// Blatz-Ko foam with volumetric exponent beta:
//   W = f mu/2 [I1 - 3 + 2/beta (J^-beta - 1)]
//     + (1-f) mu/2 [tr C^-1 - 3 + 2/beta (J^beta - 1)]
struct BlatzKo {
  double f = 0.0;
  double mu = 0.0;
  double beta = 0.0;
};

// One term of the Ogden-Hill foam energy:
//   W_p = mu/(2 alpha) [tr U^(2 alpha) - 3 + 1/beta (J^(-2 alpha beta) - 1)]
struct OgdenTerm {
  double mu = 0.0;
  double alpha = 0.0;
  double beta = 0.0;
};

struct OgdenHill {
  std::vector<OgdenTerm> terms;
};

// Isochoric Yeoh energy in polynomial form W = c1 I + c2 I^2 + c3 I^3 + c4
// with I the isochoric first invariant and c4 = -(3 c1 + 9 c2 + 27 c3).
struct YeohIso {
  double c1 = 0.0;
  double c2 = 0.0;
  double c3 = 0.0;
};

using ModelSpec = std::variant<CompNeoHookean, BlatzKo, OgdenHill, YeohIso>;

// p = K (J - 1), W = K/2 (J - 1)^2
struct VolumetricSpec {
  double K = 0.0;
};

// Converts W = b1 (I-3) + b2 (I-3)^2 + b3 (I-3)^3 to the polynomial form.
YeohIso yeoh_from_b(double b1, double b2, double b3);
double yeoh_c4(const YeohIso& y);

// Blatz-Ko written as an equivalent two-term Ogden-Hill energy.
OgdenHill ogden_blatzko_map(const BlatzKo& bk);

void validate(const ModelSpec& model);
void validate(const VolumetricSpec& vol);
std::string model_name(const ModelSpec& model);

// ---- Kernel decomposition ------------------------------------------------
//
// The stress of a network born at s and evaluated at t is a sum of products
// A^i(s) : B^i(t). KernelTerms holds values with the shape of the A^i; the
// same shape serves for the accumulated history H.
//
// Layouts:
//   neo-Hookean  rank2 {J C^-1}                scalars {J, J ln J}
//   Blatz-Ko     rank2 {J C^-1, J C}           scalars {J^(1+beta), J^(1-beta)}
//   Ogden-Hill   rank2 {J U^(-2 alpha_p)}_p    scalars {J^(2 alpha_p beta_p + 1)}_p
//   Yeoh         rank2 {J Cbar^-1}, rank4 {J Cbar^-1 (x) Cbar^-1} when c2 != 0,
//                rank6 {J Cbar^-1 (x) Cbar^-1 (x) Cbar^-1} when c3 != 0
struct KernelTerms {
  std::vector<double> scalars;
  std::vector<SymTensor2> rank2;
  std::vector<SymTensor4> rank4;
  std::vector<SymTensor6> rank6;

  // this <- s * this
  void scale(double s);
  // this <- this + a * x
  void axpy(double a, const KernelTerms& x);
  bool same_shape(const KernelTerms& other) const;
  std::size_t value_count() const;
  bool operator==(const KernelTerms&) const = default;
};

KernelTerms zero_terms(const ModelSpec& model);
KernelTerms kernel_A(const ModelSpec& model, const DefState& at_s);

// Current-state factors B^i(t) in contracted form: stress(a) = sum a^i : B^i(t)
// and tangent(a) = sum a^i : BB^i(t). Only the entries that the tangent table
// needs are read from `a` in tangent().
class KernelB {
 public:
  SymTensor2 stress(const KernelTerms& a) const;
  SymTensor4 tangent(const KernelTerms& a) const;

 private:
  friend KernelB kernel_B(const ModelSpec& model, const DefState& at_t, bool with_tangent);

  ModelSpec model_;
  Tensor2 F_;
  Tensor2 Finv_;
  double J_ = 1.0;
  IsochoricView iso_;
  Spectral spectrum_;
  std::vector<SethHillCoefficients> strain_;  // one per Ogden term
  bool with_tangent_ = true;
};

KernelB kernel_B(const ModelSpec& model, const DefState& at_t, bool with_tangent = true);

// ---- Closed forms ----------------------------------------------------------
// Yeoh returns its isochoric part only; the volumetric part is separate.
SymTensor2 hyper_stress(const ModelSpec& model, const DefState& s);
SymTensor4 hyper_tangent(const ModelSpec& model, const DefState& s);
double hyper_energy(const ModelSpec& model, const DefState& s);

// Stress of a network born at s, evaluated at t, computed from the relative
// deformation rather than the kernel sum.
SymTensor2 relative_stress(const ModelSpec& model, const DefState& at_t, const DefState& at_s);
// Energy of that network per unit original reference volume, J(s) W(t,s).
double relative_energy(const ModelSpec& model, const DefState& at_t, const DefState& at_s);

SymTensor2 volumetric_stress(const VolumetricSpec& vol, double J);
SymTensor4 volumetric_tangent(const VolumetricSpec& vol, double J);
double volumetric_energy(const VolumetricSpec& vol, double J);

}  // namespace tnet
