#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>

#include "tnet/tensor.hpp"

namespace tnet::check {

// Unsymmetrized tangent in Voigt-pair form: m[p][q] = c_(p)(q).
using Matrix6 = std::array<std::array<double, 6>, 6>;

// Spatial tangent by central differences of a Cauchy stress function under
// F -> (I + h G) F with symmetric unit directions G, using
//   J c : G = d(tau)[G] - G tau - tau G,   tau = J sigma.
// Fourth-order stencil.
inline Matrix6 fd_spatial_tangent(const std::function<SymTensor2(const Tensor2&)>& cauchy,
                                  const Tensor2& F, double h = 1e-4) {
  const double J = det(F);
  const SymTensor2 tau = J * cauchy(F);
  auto kirchhoff = [&](const Tensor2& G, double eps) {
    const Tensor2 Fp = (Tensor2::identity() + eps * G) * F;
    return det(Fp) * cauchy(Fp);
  };
  Matrix6 c{};
  for (int q = 0; q < 6; ++q) {
    SymTensor2 gs;
    gs.v[q] = 1.0;
    const Tensor2 G = to_full(gs);
    const SymTensor2 dtau =
        (1.0 / (12.0 * h)) * (kirchhoff(G, -2 * h) - 8.0 * kirchhoff(G, -h) + 8.0 * kirchhoff(G, h) -
                              kirchhoff(G, 2 * h));
    const SymTensor2 rot = sym(G * to_full(tau) + to_full(tau) * G);
    const SymTensor2 cd = (1.0 / J) * (dtau - rot);
    for (int p = 0; p < 6; ++p) c[p][q] = cd.v[p] / kVoigtMultiplicity[q];
  }
  return c;
}

// max |a - fd| / max |fd| over both halves of the Voigt matrix.
inline double rel_diff(const SymTensor4& a, const Matrix6& fd, double floor = 0.0) {
  double num = 0.0, den = floor;
  for (int p = 0; p < 6; ++p)
    for (int q = 0; q < 6; ++q) {
      num = std::max(num, std::abs(a.pair(p, q) - fd[p][q]));
      den = std::max(den, std::abs(fd[p][q]));
    }
  return den > 0.0 ? num / den : num;
}

}  // namespace tnet::check
