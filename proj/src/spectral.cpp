#include "tnet/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace tnet {

namespace {

// ---- Jacobi eigen-solver ---------------------------------------------------

void rotate(double a[3][3], double v[3][3], int p, int q) {
  const double apq = a[p][q];
  if (apq == 0.0) return;
  const double theta = (a[q][q] - a[p][p]) / (2.0 * apq);
  double t;
  if (std::abs(theta) > 1e150) {
    t = 0.5 / theta;
  } else {
    t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
  }
  const double c = 1.0 / std::sqrt(t * t + 1.0);
  const double s = t * c;
  const double tau = s / (1.0 + c);
  a[p][p] -= t * apq;
  a[q][q] += t * apq;
  a[p][q] = a[q][p] = 0.0;
  for (int r = 0; r < 3; ++r) {
    if (r != p && r != q) {
      const double arp = a[r][p], arq = a[r][q];
      a[r][p] = a[p][r] = arp - s * (arq + tau * arp);
      a[r][q] = a[q][r] = arq + s * (arp - tau * arq);
    }
    const double vrp = v[r][p], vrq = v[r][q];
    v[r][p] = vrp - s * (vrq + tau * vrp);
    v[r][q] = vrq + s * (vrp - tau * vrq);
  }
}

// ---- Divided differences of the scale function e(c) ------------------------

class ScaleFunction {
 public:
  explicit ScaleFunction(double alpha) : alpha_(alpha) {}

  double value(double c) const {
    if (alpha_ == 0.0) return 0.5 * std::log(c);
    return std::expm1(alpha_ * std::log(c)) / (2.0 * alpha_);
  }

  // Taylor coefficient of order n about c0, for n >= 1.
  // Filled incrementally: call with n = 1, 2, ... in order.
  double next_coefficient(double c0, int n, double& running) const {
    if (alpha_ == 0.0) {
      running = (n == 1) ? 1.0 / c0 : running * (-(n - 1.0) / (n * c0));
      return 0.5 * running;
    }
    if (n == 1) running = std::pow(c0, alpha_);
    running *= (alpha_ - n + 1.0) / (n * c0);
    return running / (2.0 * alpha_);
  }

  // Divided difference over `k+1` nodes with small relative spread, from a
  // Taylor expansion about their midpoint:
  //   e[x_0..x_k] = sum_{n>=k} phi_n h_{n-k}(y_0..y_k),  y_i = x_i - c0,
  // with h_m the complete homogeneous symmetric polynomials.
  double taylor_dd(const double* x, int k) const {
    const double lo = *std::min_element(x, x + k + 1);
    const double hi = *std::max_element(x, x + k + 1);
    const double c0 = 0.5 * (lo + hi);
    constexpr int kMaxTerms = 120;
    double y[3];
    for (int i = 0; i <= k; ++i) y[i] = x[i] - c0;
    // h[m] for the full node set, built one node at a time.
    double h[kMaxTerms + 1];
    for (int m = 0; m <= kMaxTerms; ++m) h[m] = std::pow(y[0], m);
    for (int j = 1; j <= k; ++j)
      for (int m = 1; m <= kMaxTerms; ++m) h[m] += y[j] * h[m - 1];

    double running = 0.0;
    double sum = 0.0;
    int quiet = 0;
    for (int n = 1; n <= kMaxTerms + k && n - k <= kMaxTerms; ++n) {
      const double phi = next_coefficient(c0, n, running);
      if (n < k) continue;
      const double term = phi * h[n - k];
      sum += term;
      if (std::abs(term) <= 1e-18 * std::abs(sum)) {
        if (++quiet >= 3) break;
      } else {
        quiet = 0;
      }
    }
    return sum;
  }

  double dd1(double x, double y) const {
    const double lo = std::min(x, y), hi = std::max(x, y);
    if ((hi - lo) <= kTaylorSpread * lo) {
      const double nodes[2] = {x, y};
      return taylor_dd(nodes, 1);
    }
    // The constant offset of e cancels in the difference, so form
    // x^a - y^a = y^a expm1(a log(x/y)) directly; subtracting the shifted
    // values loses every digit that c^a has below 1.
    const double log_ratio = std::log1p((x - y) / y);
    if (alpha_ == 0.0) return 0.5 * log_ratio / (x - y);
    return std::pow(y, alpha_) * std::expm1(alpha_ * log_ratio) / (2.0 * alpha_ * (x - y));
  }

  double dd2(double x, double y, double z) const {
    double n[3] = {x, y, z};
    std::sort(n, n + 3);
    if ((n[2] - n[0]) <= kTaylorSpread * n[0]) return taylor_dd(n, 2);
    return (dd1(n[1], n[2]) - dd1(n[0], n[1])) / (n[2] - n[0]);
  }

 private:
  static constexpr double kTaylorSpread = 0.2;
  double alpha_;
};

// Components of the symmetric unit basis E_p in the eigenbasis:
//   hat[p][a][b] = N_a . E_p . N_b
using EigenBasisUnits = std::array<std::array<std::array<double, 3>, 3>, 6>;

EigenBasisUnits unit_bases_in_eigenframe(const Tensor2& q) {
  EigenBasisUnits hat{};
  for (int p = 0; p < 6; ++p) {
    const int i = kVoigtPairs[p][0], j = kVoigtPairs[p][1];
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b)
        hat[p][a][b] = (i == j) ? q(i, a) * q(i, b)
                                : 0.5 * (q(i, a) * q(j, b) + q(j, a) * q(i, b));
  }
  return hat;
}

}  // namespace

Spectral spectral_decompose(const SymTensor2& c, double tol) {
  for (double x : c.v)
    if (!std::isfinite(x)) throw std::domain_error("spectral_decompose: non-finite input");
  if (!(tol >= 0.0)) throw std::invalid_argument("spectral_decompose: negative tolerance");

  double a[3][3], v[3][3];
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      a[i][j] = c(i, j);
      v[i][j] = (i == j) ? 1.0 : 0.0;
    }
  const double scale = norm(c);

  // Sweeps continue well past the nominal 1e-14 relative off-diagonal level so
  // that reconstruction stays at rounding level.
  for (int sweep = 0; sweep < 60; ++sweep) {
    const double off = std::sqrt(2.0 * (a[0][1] * a[0][1] + a[0][2] * a[0][2] + a[1][2] * a[1][2]));
    if (off <= std::numeric_limits<double>::min() || off <= 1e-17 * scale) break;
    for (int p = 0; p < 2; ++p)
      for (int q = p + 1; q < 3; ++q) {
        const double small = std::numeric_limits<double>::epsilon() * 1e-3 *
                             (std::abs(a[p][p]) + std::abs(a[q][q]));
        if (sweep > 3 && std::abs(a[p][q]) <= small) {
          a[p][q] = a[q][p] = 0.0;
          continue;
        }
        rotate(a, v, p, q);
      }
  }

  std::array<int, 3> order{0, 1, 2};
  std::sort(order.begin(), order.end(), [&](int x, int y) { return a[x][x] > a[y][y]; });

  Spectral s;
  s.tol = tol;
  for (int k = 0; k < 3; ++k) {
    const int src = order[k];
    s.eigenvalues[k] = a[src][src];
    for (int r = 0; r < 3; ++r) s.vectors(r, k) = v[r][src];
    s.bases[k] = dyad({v[0][src], v[1][src], v[2][src]});
  }
  if (!(s.eigenvalues[2] > 0.0))
    throw std::domain_error("spectral_decompose: tensor is not positive definite (smallest eigenvalue " +
                            std::to_string(s.eigenvalues[2]) + ")");

  const auto& e = s.eigenvalues;
  const bool close01 = (e[0] - e[1]) < tol * e[0];
  const bool close12 = (e[1] - e[2]) < tol * e[1];
  if ((close01 && close12) || (e[0] - e[2]) < tol * e[0]) {
    s.degeneracy = Degeneracy::AllEqual;
    s.cluster = {0, 0, 0};
  } else if (close01) {
    s.degeneracy = Degeneracy::TwoEqual;
    s.cluster = {0, 0, 1};
  } else if (close12) {
    s.degeneracy = Degeneracy::TwoEqual;
    s.cluster = {0, 1, 1};
  } else {
    s.degeneracy = Degeneracy::Distinct;
    s.cluster = {0, 1, 2};
  }
  for (int k = 0; k < 3; ++k) {
    double sum = 0.0;
    int count = 0;
    for (int m = 0; m < 3; ++m)
      if (s.cluster[m] == s.cluster[k]) {
        sum += e[m];
        ++count;
      }
    s.snapped[k] = sum / count;
  }
  return s;
}

SymTensor2 seth_hill_strain(const Spectral& s, double alpha) {
  const ScaleFunction fn(alpha);
  SymTensor2 r;
  for (int a = 0; a < 3; ++a) r += fn.value(s.eigenvalues[a]) * s.bases[a];
  return r;
}

SymTensor2 generalized_stretch(const Spectral& s, double alpha) {
  SymTensor2 r;
  for (int a = 0; a < 3; ++a) r += std::pow(s.eigenvalues[a], alpha) * s.bases[a];
  return r;
}

SethHillCoefficients seth_hill_coefficients(const Spectral& s, double alpha) {
  const ScaleFunction fn(alpha);
  const auto& c = s.snapped;
  SethHillCoefficients k;
  for (int a = 0; a < 3; ++a) {
    k.d[a] = std::pow(c[a], alpha - 1.0);
    k.f[a] = 2.0 * (alpha - 1.0) * std::pow(c[a], alpha - 2.0);
  }
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) {
      if (s.cluster[a] == s.cluster[b]) {
        k.v[a][b] = 0.5 * k.d[a];
        k.xi[a][b] = 0.125 * k.f[a];
      } else {
        k.v[a][b] = fn.dd1(c[a], c[b]);
        k.xi[a][b] = fn.dd2(c[a], c[b], c[b]);
      }
    }
  switch (s.degeneracy) {
    case Degeneracy::AllEqual:
      k.eta = 0.125 * k.f[0];
      break;
    case Degeneracy::TwoEqual: {
      // the isolated eigenvalue against the pair
      const int lone = (s.cluster[0] == s.cluster[1]) ? 2 : 0;
      const int pair = (lone == 0) ? 1 : 0;
      k.eta = k.xi[lone][pair];
      break;
    }
    case Degeneracy::Distinct:
      k.eta = fn.dd2(c[0], c[1], c[2]);
      break;
  }
  return k;
}

SymTensor4 projection_P(const Spectral& s, double alpha) {
  const SethHillCoefficients k = seth_hill_coefficients(s, alpha);
  const EigenBasisUnits hat = unit_bases_in_eigenframe(s.vectors);
  SymTensor4 r;
  for (int p = 0; p < 6; ++p)
    for (int q = p; q < 6; ++q) {
      double acc = 0.0;
      for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) acc += k.v[a][b] * hat[p][a][b] * hat[q][a][b];
      r.pair_ref(p, q) = 2.0 * acc;
    }
  return r;
}

namespace {

using SecondDifferences = std::array<std::array<std::array<double, 3>, 3>, 3>;

// theta[a][b][c]: second divided difference over (c_a, c_b, c_c).
SecondDifferences second_differences(const SethHillCoefficients& k) {
  SecondDifferences theta{};
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      for (int c = 0; c < 3; ++c) {
        if (a == b && b == c) {
          theta[a][b][c] = 0.125 * k.f[a];
        } else if (a == b) {
          theta[a][b][c] = k.xi[c][a];
        } else if (b == c) {
          theta[a][b][c] = k.xi[a][b];
        } else if (a == c) {
          theta[a][b][c] = k.xi[b][a];
        } else {
          theta[a][b][c] = k.eta;
        }
      }
  return theta;
}

// Components Q^T a Q of a symmetric tensor in the eigenframe.
std::array<std::array<double, 3>, 3> to_eigenframe(const Tensor2& q, const SymTensor2& a) {
  const Tensor2 r = transpose(q) * to_full(a) * q;
  std::array<std::array<double, 3>, 3> out{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) out[i][j] = 0.5 * (r(i, j) + r(j, i));
  return out;
}

}  // namespace

SymTensor2 contract_P(const Spectral& s, const SethHillCoefficients& k, const SymTensor2& a) {
  const auto ah = to_eigenframe(s.vectors, a);
  Tensor2 x;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) x(i, j) = 2.0 * k.v[i][j] * ah[i][j];
  return sym(s.vectors * x * transpose(s.vectors));
}

SymTensor4 contract_L(const Spectral& s, const SethHillCoefficients& k, const SymTensor2& a) {
  const SecondDifferences theta = second_differences(k);
  const EigenBasisUnits hat = unit_bases_in_eigenframe(s.vectors);
  const auto ah = to_eigenframe(s.vectors, a);
  SymTensor4 r;
  for (int p = 0; p < 6; ++p)
    for (int q = p; q < 6; ++q) {
      double acc = 0.0;
      for (int a1 = 0; a1 < 3; ++a1)
        for (int b = 0; b < 3; ++b) {
          const double zp = hat[p][b][a1];
          if (zp == 0.0) continue;
          for (int c = 0; c < 3; ++c)
            acc += theta[a1][b][c] * zp * (hat[q][a1][c] * ah[c][b] + ah[a1][c] * hat[q][c][b]);
        }
      r.pair_ref(p, q) = 4.0 * acc;
    }
  return r;
}

SymTensor6 projection_L(const Spectral& s, double alpha) {
  const SethHillCoefficients k = seth_hill_coefficients(s, alpha);
  const EigenBasisUnits hat = unit_bases_in_eigenframe(s.vectors);
  const SecondDifferences theta = second_differences(k);

  SymTensor6 r;
  for (int p = 0; p < 6; ++p)
    for (int q = p; q < 6; ++q)
      for (int t = q; t < 6; ++t) {
        double acc = 0.0;
        for (int a = 0; a < 3; ++a)
          for (int b = 0; b < 3; ++b) {
            const double zp = hat[p][b][a];
            if (zp == 0.0) continue;
            for (int c = 0; c < 3; ++c)
              acc += theta[a][b][c] * zp *
                     (hat[q][a][c] * hat[t][c][b] + hat[t][a][c] * hat[q][c][b]);
          }
        r.triple_ref(p, q, t) = 4.0 * acc;
      }
  return r;
}

}  // namespace tnet
