#pragma once

// Extended-precision reference for network stresses and tangents. Energies
// are written directly in terms of C(t) and C(s) and differentiated
// numerically in long double, so nothing here shares code with the kernel
// implementation.

#include <algorithm>
#include <array>
#include <cmath>
#include <variant>
#include <vector>

#include "tnet/materials.hpp"
#include "tnet/tensor.hpp"

namespace tnet::check {

using LD = long double;

struct Sym3 {
  LD m[3][3]{};
};

inline Sym3 to_ld(const SymTensor2& s) {
  Sym3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r.m[i][j] = s(i, j);
  return r;
}

inline Sym3 ld_cauchy_green(const Tensor2& F) {
  Sym3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      LD acc = 0;
      for (int k = 0; k < 3; ++k) acc += LD(F(k, i)) * LD(F(k, j));
      r.m[i][j] = acc;
    }
  return r;
}

inline LD ld_det(const Sym3& a) {
  const auto& m = a.m;
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
         m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

inline LD ld_ddot(const Sym3& a, const Sym3& b) {
  LD s = 0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) s += a.m[i][j] * b.m[i][j];
  return s;
}

// Cyclic Jacobi in long double, run to full convergence.
inline void ld_eigen(const Sym3& in, LD vals[3], LD vecs[3][3]) {
  LD a[3][3];
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      a[i][j] = in.m[i][j];
      vecs[i][j] = (i == j) ? 1 : 0;
    }
  for (int sweep = 0; sweep < 80; ++sweep) {
    const LD off = std::fabs(a[0][1]) + std::fabs(a[0][2]) + std::fabs(a[1][2]);
    if (off == 0) break;
    for (int p = 0; p < 2; ++p)
      for (int q = p + 1; q < 3; ++q) {
        if (a[p][q] == 0) continue;
        const LD theta = (a[q][q] - a[p][p]) / (2 * a[p][q]);
        const LD t = (theta >= 0 ? 1 : -1) / (std::fabs(theta) + std::sqrt(theta * theta + 1));
        const LD c = 1 / std::sqrt(t * t + 1), s = t * c;
        for (int k = 0; k < 3; ++k) {
          const LD akp = a[k][p], akq = a[k][q];
          a[k][p] = c * akp - s * akq;
          a[k][q] = s * akp + c * akq;
        }
        for (int k = 0; k < 3; ++k) {
          const LD apk = a[p][k], aqk = a[q][k];
          a[p][k] = c * apk - s * aqk;
          a[q][k] = s * apk + c * aqk;
        }
        for (int k = 0; k < 3; ++k) {
          const LD vkp = vecs[k][p], vkq = vecs[k][q];
          vecs[k][p] = c * vkp - s * vkq;
          vecs[k][q] = s * vkp + c * vkq;
        }
      }
  }
  for (int i = 0; i < 3; ++i) vals[i] = a[i][i];
}

inline Sym3 ld_power(const Sym3& c, LD alpha) {
  LD vals[3], vecs[3][3];
  ld_eigen(c, vals, vecs);
  Sym3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      LD acc = 0;
      for (int a = 0; a < 3; ++a) acc += std::pow(vals[a], alpha) * vecs[i][a] * vecs[j][a];
      r.m[i][j] = acc;
    }
  return r;
}

inline Sym3 ld_inverse(const Sym3& a) {
  const auto& m = a.m;
  const LD d = ld_det(a);
  Sym3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      const int r0 = (j + 1) % 3, r1 = (j + 2) % 3, c0 = (i + 1) % 3, c1 = (i + 2) % 3;
      r.m[i][j] = (m[r0][c0] * m[r1][c1] - m[r0][c1] * m[r1][c0]) / d;
    }
  return r;
}

// Powers of one tensor for several exponents from a single eigen solve.
inline std::vector<Sym3> ld_powers(const Sym3& c, const std::vector<LD>& exponents) {
  LD vals[3], vecs[3][3];
  ld_eigen(c, vals, vecs);
  std::vector<Sym3> out(exponents.size());
  for (std::size_t k = 0; k < exponents.size(); ++k)
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        LD acc = 0;
        for (int a = 0; a < 3; ++a) acc += std::pow(vals[a], exponents[k]) * vecs[i][a] * vecs[j][a];
        out[k].m[i][j] = acc;
      }
  return out;
}

// (x^-b - 1)/b, b -> 0 limit -ln x
inline LD ld_power_log(LD lnx, LD b) { return b == 0 ? -lnx : std::expm1(-b * lnx) / b; }

// Quantities of the birth configuration reused by every energy evaluation.
struct BirthState {
  Sym3 C, Cinv;
  LD J = 1;
  std::vector<Sym3> inverse_powers;  // C^-alpha per Ogden term
};

inline BirthState ld_birth(const ModelSpec& model, const Sym3& Cs) {
  BirthState b;
  b.C = Cs;
  b.Cinv = ld_inverse(Cs);
  b.J = std::sqrt(ld_det(Cs));
  if (const auto* m = std::get_if<OgdenHill>(&model))
    for (const auto& t : m->terms) b.inverse_powers.push_back(ld_power(Cs, -LD(t.alpha)));
  return b;
}

// Energy per unit original reference volume of a network born when the
// right Cauchy-Green tensor was Cs, evaluated at Ct.
inline LD ld_network_energy(const ModelSpec& model, const Sym3& Ct, const BirthState& born) {
  const LD Jt = std::sqrt(ld_det(Ct)), Js = born.J;
  const LD lnJr = std::log(Jt / Js);
  LD w = 0;
  if (const auto* m = std::get_if<CompNeoHookean>(&model)) {
    const LD I1 = ld_ddot(Ct, born.Cinv);
    w = LD(m->mu) / 2 * (I1 - 3 - 2 * lnJr) + LD(m->lambda) / 2 * lnJr * lnJr;
  } else if (const auto* m = std::get_if<BlatzKo>(&model)) {
    const LD I1 = ld_ddot(Ct, born.Cinv);
    const LD I1i = ld_ddot(ld_inverse(Ct), born.C);
    const LD f = m->f, mu = m->mu, b = m->beta;
    w = f * mu / 2 * (I1 - 3 + 2 * ld_power_log(lnJr, b)) +
        (1 - f) * mu / 2 * (I1i - 3 - 2 * ld_power_log(lnJr, -b));
  } else if (const auto* m = std::get_if<OgdenHill>(&model)) {
    std::vector<LD> exps;
    for (const auto& t : m->terms) exps.push_back(t.alpha);
    const std::vector<Sym3> powers = ld_powers(Ct, exps);
    for (std::size_t k = 0; k < m->terms.size(); ++k) {
      const auto& t = m->terms[k];
      const LD a = t.alpha, b = t.beta, mu = t.mu;
      const LD tr = ld_ddot(powers[k], born.inverse_powers[k]);
      w += mu / (2 * a) * (tr - 3 + 2 * a * ld_power_log(lnJr, 2 * a * b));
    }
  } else if (const auto* m = std::get_if<YeohIso>(&model)) {
    const LD I = std::exp(-LD(2) / 3 * lnJr) * ld_ddot(Ct, born.Cinv);
    const LD c1 = m->c1, c2 = m->c2, c3 = m->c3;
    w = ((c3 * I + c2) * I + c1) * I - (3 * c1 + 9 * c2 + 27 * c3);
  }
  return Js * w;
}

inline LD ld_network_energy(const ModelSpec& model, const Sym3& Ct, const Sym3& Cs) {
  return ld_network_energy(model, Ct, ld_birth(model, Cs));
}

namespace detail {

inline Sym3 perturbed(const Sym3& c, int q, LD h) {
  Sym3 r = c;
  const int i = kVoigtPairs[q][0], j = kVoigtPairs[q][1];
  r.m[i][j] += h;
  if (i != j) r.m[j][i] += h;
  return r;
}

inline LD smallest_eigenvalue(const Sym3& c) {
  LD vals[3], vecs[3][3];
  ld_eigen(c, vals, vecs);
  return std::min({vals[0], vals[1], vals[2]});
}

// S = 2 dW/dC(t) at fixed C(s), fourth-order differences.
inline std::array<LD, 6> pk2(const ModelSpec& model, const Sym3& Ct, const BirthState& Cs, LD h) {
  std::array<LD, 6> s{};
  for (int q = 0; q < 6; ++q) {
    auto w = [&](LD e) { return ld_network_energy(model, perturbed(Ct, q, e), Cs); };
    const LD dw = (w(-2 * h) - 8 * w(-h) + 8 * w(h) - w(2 * h)) / (12 * h);
    s[q] = 2 * dw / LD(kVoigtMultiplicity[q]);
  }
  return s;
}

}  // namespace detail

// Second Piola-Kirchhoff stress of the network, per unit original volume.
inline SymTensor2 oracle_pk2(const ModelSpec& model, const Sym3& Ct, const Sym3& Cs) {
  const LD h = 1e-4L * detail::smallest_eigenvalue(Ct);
  const auto s = detail::pk2(model, Ct, ld_birth(model, Cs), h);
  SymTensor2 r;
  for (int q = 0; q < 6; ++q) r.v[q] = static_cast<double>(s[q]);
  return r;
}

// Cauchy stress of a network born at F(s), evaluated at F(t).
inline SymTensor2 oracle_cauchy(const ModelSpec& model, const Tensor2& Ft, const Tensor2& Fs) {
  const SymTensor2 S = oracle_pk2(model, ld_cauchy_green(Ft), ld_cauchy_green(Fs));
  return (1.0 / det(Ft)) * congruence(Ft, S);
}

namespace detail {

using Mat3 = std::array<std::array<LD, 3>, 3>;

inline Mat3 ld_matrix(const Tensor2& F) {
  Mat3 m{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m[i][j] = F(i, j);
  return m;
}

inline Mat3 ld_mul(const Mat3& a, const Mat3& b) {
  Mat3 r{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) r[i][j] += a[i][k] * b[k][j];
  return r;
}

inline Sym3 ld_cauchy_green(const Mat3& F) {
  Sym3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) r.m[i][j] += F[k][i] * F[k][j];
  return r;
}

// Kirchhoff stress F S F^T in Voigt order.
inline std::array<LD, 6> kirchhoff(const ModelSpec& model, const Mat3& F, const BirthState& Cs) {
  const Sym3 Ct = ld_cauchy_green(F);
  const auto s = pk2(model, Ct, Cs, 2e-3L * smallest_eigenvalue(Ct));
  Mat3 S{};
  for (int q = 0; q < 6; ++q) {
    const int i = kVoigtPairs[q][0], j = kVoigtPairs[q][1];
    S[i][j] = S[j][i] = s[q];
  }
  Mat3 Ft{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) Ft[i][j] = F[j][i];
  const Mat3 tau = ld_mul(ld_mul(F, S), Ft);
  std::array<LD, 6> r{};
  for (int q = 0; q < 6; ++q) r[q] = tau[kVoigtPairs[q][0]][kVoigtPairs[q][1]];
  return r;
}

}  // namespace detail

// Spatial tangent from J c : G = d(tau)[G] - G tau - tau G under
// F -> (I + h G) F, so step sizes do not depend on the conditioning of C.
inline SymTensor4 oracle_tangent(const ModelSpec& model, const Tensor2& Ft, const Tensor2& Fs) {
  const BirthState Cs = ld_birth(model, ld_cauchy_green(Fs));
  const detail::Mat3 F = detail::ld_matrix(Ft);
  const LD J = ld_det(ld_cauchy_green(Ft));
  const LD Jt = std::sqrt(J);
  const auto tau = detail::kirchhoff(model, F, Cs);
  auto tau_at = [&](int i, int j) { return tau[kVoigtIndex[i][j]]; };
  const LD h = 1e-3L;
  std::array<std::array<LD, 6>, 6> c{};
  for (int q = 0; q < 6; ++q) {
    const int a = kVoigtPairs[q][0], b = kVoigtPairs[q][1];
    auto at = [&](LD e) {
      detail::Mat3 G{};
      G[a][b] += e;
      if (a != b) G[b][a] += e;
      for (int i = 0; i < 3; ++i) G[i][i] += 1;
      return detail::kirchhoff(model, detail::ld_mul(G, F), Cs);
    };
    const auto m2 = at(-2 * h), m1 = at(-h), p1 = at(h), p2 = at(2 * h);
    for (int p = 0; p < 6; ++p) {
      const int i = kVoigtPairs[p][0], j = kVoigtPairs[p][1];
      const LD dtau = (m2[p] - 8 * m1[p] + 8 * p1[p] - p2[p]) / (12 * h);
      // (G tau + tau G)_ij for the unit symmetric direction G
      LD rot = 0;
      for (int k = 0; k < 3; ++k) {
        const LD gik = (i == a && k == b) || (i == b && k == a) ? 1 : 0;
        const LD gkj = (k == a && j == b) || (k == b && j == a) ? 1 : 0;
        rot += gik * tau_at(k, j) + tau_at(i, k) * gkj;
      }
      c[p][q] = (dtau - rot) / Jt / LD(kVoigtMultiplicity[q]);
    }
  }
  SymTensor4 packed;
  for (int p = 0; p < 6; ++p)
    for (int q = p; q < 6; ++q) packed.pair_ref(p, q) = static_cast<double>(0.5L * (c[p][q] + c[q][p]));
  return packed;
}

}  // namespace tnet::check
