#pragma once

#include <array>

#include "tnet/tensor.hpp"

namespace tnet {

enum class Degeneracy { Distinct, TwoEqual, AllEqual };

inline constexpr double kDefaultDegeneracyTol = 1e-8;

// Spectral form of a symmetric positive definite tensor C:
//   C = sum_a eigenvalues[a] * bases[a],  bases[a] = N_a (x) N_a.
// Eigenvalues are the squared principal stretches, sorted descending.
// Eigenvalues whose relative gap is below `tol` are grouped into one cluster;
// `cluster[a]` gives the cluster id and `snapped[a]` the cluster mean that
// all derived spectral functions use.
struct Spectral {
  std::array<double, 3> eigenvalues{};
  std::array<double, 3> snapped{};
  std::array<SymTensor2, 3> bases{};
  Tensor2 vectors;  // column a holds N_a
  Degeneracy degeneracy = Degeneracy::Distinct;
  std::array<int, 3> cluster{0, 1, 2};
  double tol = kDefaultDegeneracyTol;
};

// Cyclic Jacobi eigen-decomposition. Throws std::domain_error when the input
// is not finite or not positive definite.
Spectral spectral_decompose(const SymTensor2& c, double tol = kDefaultDegeneracyTol);

// Seth-Hill strain E = sum (lambda^(2 alpha) - 1) / (2 alpha) M_a; alpha = 0
// gives the logarithmic strain.
SymTensor2 seth_hill_strain(const Spectral& s, double alpha);

// U^(2 alpha) = sum lambda^(2 alpha) M_a.
SymTensor2 generalized_stretch(const Spectral& s, double alpha);

// Coefficients of the first and second strain projections in the eigenbasis.
//   d[a]      = 2 e'(c_a)
//   v[a][b]   = first divided difference of e over (c_a, c_b); v[a][a] = d[a]/2
//   f[a]      = 4 e''(c_a)
//   xi[a][b]  = second divided difference over (c_a, c_b, c_b); xi[a][a] = f[a]/8
//   eta       = second divided difference over all three eigenvalues
// where e(c) = (c^alpha - 1)/(2 alpha) and c = lambda^2.
struct SethHillCoefficients {
  std::array<double, 3> d{};
  std::array<std::array<double, 3>, 3> v{};
  std::array<double, 3> f{};
  std::array<std::array<double, 3>, 3> xi{};
  double eta = 0.0;
};

SethHillCoefficients seth_hill_coefficients(const Spectral& s, double alpha);

// P = 2 dE/dC.
SymTensor4 projection_P(const Spectral& s, double alpha);

// L = 4 d^2E/dCdC.
SymTensor6 projection_L(const Spectral& s, double alpha);

// P : a and L : a evaluated in the eigenframe without assembling P or L.
SymTensor2 contract_P(const Spectral& s, const SethHillCoefficients& k, const SymTensor2& a);
SymTensor4 contract_L(const Spectral& s, const SethHillCoefficients& k, const SymTensor2& a);

}  // namespace tnet
