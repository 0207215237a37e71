#include "tnet/materials.hpp"

#include <cmath>
#include <stdexcept>

#include "overloaded.hpp"
#include "tnet/spectral.hpp"

namespace tnet {

using detail::overloaded;

namespace {

const SymTensor2 kDelta = SymTensor2::identity();

// (x^-b - 1)/b with the b -> 0 limit -ln x, accurate near b = 0.
double power_log(double log_x, double b) {
  if (b == 0.0) return -log_x;
  return std::expm1(-b * log_x) / b;
}

void require_finite(double x, const char* what) {
  if (!std::isfinite(x)) throw std::invalid_argument(std::string(what) + " must be finite");
}

}  // namespace

YeohIso yeoh_from_b(double b1, double b2, double b3) {
  return YeohIso{b1 - 6.0 * b2 + 27.0 * b3, b2 - 9.0 * b3, b3};
}

double yeoh_c4(const YeohIso& y) { return -(3.0 * y.c1 + 9.0 * y.c2 + 27.0 * y.c3); }

OgdenHill ogden_blatzko_map(const BlatzKo& bk) {
  OgdenHill o;
  if (bk.f != 0.0) o.terms.push_back({bk.f * bk.mu, 1.0, 0.5 * bk.beta});
  if (bk.f != 1.0) o.terms.push_back({-(1.0 - bk.f) * bk.mu, -1.0, 0.5 * bk.beta});
  return o;
}

void validate(const ModelSpec& model) {
  std::visit(overloaded{
                 [](const CompNeoHookean& m) {
                   require_finite(m.mu, "neo-Hookean mu");
                   require_finite(m.lambda, "neo-Hookean lambda");
                 },
                 [](const BlatzKo& m) {
                   require_finite(m.mu, "Blatz-Ko mu");
                   require_finite(m.beta, "Blatz-Ko beta");
                   if (!(m.f >= 0.0 && m.f <= 1.0))
                     throw std::invalid_argument("Blatz-Ko f must lie in [0, 1]");
                 },
                 [](const OgdenHill& m) {
                   if (m.terms.empty()) throw std::invalid_argument("Ogden-Hill needs at least one term");
                   for (const auto& t : m.terms) {
                     require_finite(t.mu, "Ogden-Hill mu");
                     require_finite(t.beta, "Ogden-Hill beta");
                     require_finite(t.alpha, "Ogden-Hill alpha");
                     if (t.alpha == 0.0) throw std::invalid_argument("Ogden-Hill alpha must be nonzero");
                   }
                 },
                 [](const YeohIso& m) {
                   require_finite(m.c1, "Yeoh c1");
                   require_finite(m.c2, "Yeoh c2");
                   require_finite(m.c3, "Yeoh c3");
                 },
             },
             model);
}

void validate(const VolumetricSpec& vol) {
  if (!(vol.K > 0.0) || !std::isfinite(vol.K))
    throw std::invalid_argument("volumetric bulk modulus K must be finite and > 0");
}

std::string model_name(const ModelSpec& model) {
  return std::visit(overloaded{
                        [](const CompNeoHookean&) { return std::string("neo-hookean"); },
                        [](const BlatzKo&) { return std::string("blatz-ko"); },
                        [](const OgdenHill&) { return std::string("ogden-hill"); },
                        [](const YeohIso&) { return std::string("yeoh"); },
                    },
                    model);
}

// ---- KernelTerms -----------------------------------------------------------

void KernelTerms::scale(double s) {
  for (auto& x : scalars) x *= s;
  for (auto& x : rank2) x = s * x;
  for (auto& x : rank4) x = s * x;
  for (auto& x : rank6) x = s * x;
}

void KernelTerms::axpy(double a, const KernelTerms& x) {
  if (!same_shape(x)) throw std::invalid_argument("KernelTerms::axpy: shape mismatch");
  for (std::size_t i = 0; i < scalars.size(); ++i) scalars[i] += a * x.scalars[i];
  for (std::size_t i = 0; i < rank2.size(); ++i)
    for (int k = 0; k < 6; ++k) rank2[i].v[k] += a * x.rank2[i].v[k];
  for (std::size_t i = 0; i < rank4.size(); ++i)
    for (int k = 0; k < 21; ++k) rank4[i].v[k] += a * x.rank4[i].v[k];
  for (std::size_t i = 0; i < rank6.size(); ++i)
    for (int k = 0; k < 56; ++k) rank6[i].v[k] += a * x.rank6[i].v[k];
}

bool KernelTerms::same_shape(const KernelTerms& o) const {
  return scalars.size() == o.scalars.size() && rank2.size() == o.rank2.size() &&
         rank4.size() == o.rank4.size() && rank6.size() == o.rank6.size();
}

std::size_t KernelTerms::value_count() const {
  return scalars.size() + 6 * rank2.size() + 21 * rank4.size() + 56 * rank6.size();
}

KernelTerms zero_terms(const ModelSpec& model) {
  KernelTerms k;
  std::visit(overloaded{
                 [&](const CompNeoHookean&) {
                   k.rank2.resize(1);
                   k.scalars.resize(2);
                 },
                 [&](const BlatzKo&) {
                   k.rank2.resize(2);
                   k.scalars.resize(2);
                 },
                 [&](const OgdenHill& m) {
                   k.rank2.resize(m.terms.size());
                   k.scalars.resize(m.terms.size());
                 },
                 [&](const YeohIso& m) {
                   k.rank2.resize(1);
                   if (m.c2 != 0.0) k.rank4.resize(1);
                   if (m.c3 != 0.0) k.rank6.resize(1);
                 },
             },
             model);
  return k;
}

KernelTerms kernel_A(const ModelSpec& model, const DefState& s) {
  KernelTerms k;
  const double J = s.J;
  std::visit(overloaded{
                 [&](const CompNeoHookean&) {
                   k.rank2 = {J * s.Cinv};
                   k.scalars = {J, J * std::log(J)};
                 },
                 [&](const BlatzKo& m) {
                   k.rank2 = {J * s.Cinv, J * s.C};
                   k.scalars = {std::pow(J, 1.0 + m.beta), std::pow(J, 1.0 - m.beta)};
                 },
                 [&](const OgdenHill& m) {
                   const Spectral sp = spectrum_of(s);
                   for (const auto& t : m.terms) {
                     k.rank2.push_back(J * generalized_stretch(sp, -t.alpha));
                     k.scalars.push_back(std::pow(J, 2.0 * t.alpha * t.beta + 1.0));
                   }
                 },
                 [&](const YeohIso& m) {
                   const SymTensor2 ci = isochoric(s).Cbar_inv;
                   k.rank2 = {J * ci};
                   if (m.c2 != 0.0) k.rank4 = {J * outer(ci)};
                   if (m.c3 != 0.0) k.rank6 = {J * outer3(ci)};
                 },
             },
             model);
  return k;
}

KernelB kernel_B(const ModelSpec& model, const DefState& t, bool with_tangent) {
  KernelB b;
  b.model_ = model;
  b.F_ = t.F;
  b.Finv_ = t.Finv;
  b.J_ = t.J;
  b.with_tangent_ = with_tangent;
  if (const auto* y = std::get_if<YeohIso>(&model)) {
    (void)y;
    b.iso_ = isochoric(t);
  }
  if (const auto* o = std::get_if<OgdenHill>(&model)) {
    b.spectrum_ = spectrum_of(t);
    for (const auto& term : o->terms) b.strain_.push_back(seth_hill_coefficients(b.spectrum_, term.alpha));
  }
  return b;
}

namespace {

// Deviatoric projection of a push-forward: s - tr/3 delta.
SymTensor2 deviatoric_part(const SymTensor2& pushed, double contracted_trace) {
  return pushed - (contracted_trace / 3.0) * kDelta;
}

}  // namespace

SymTensor2 KernelB::stress(const KernelTerms& a) const {
  const double J = J_;
  return std::visit(
      overloaded{
          [&](const CompNeoHookean& m) {
            const double lnJ = std::log(J);
            return (m.mu / J) * congruence(F_, a.rank2[0]) +
                   ((-m.mu + m.lambda * lnJ) / J * a.scalars[0] - m.lambda / J * a.scalars[1]) * kDelta;
          },
          [&](const BlatzKo& m) {
            const double fmu = m.f * m.mu, gmu = (1.0 - m.f) * m.mu;
            return (fmu / J) * congruence(F_, a.rank2[0]) -
                   (gmu / J) * congruence(transpose(Finv_), a.rank2[1]) +
                   (-fmu * std::pow(J, -m.beta - 1.0) * a.scalars[0] +
                    gmu * std::pow(J, m.beta - 1.0) * a.scalars[1]) *
                       kDelta;
          },
          [&](const OgdenHill& m) {
            SymTensor2 sig;
            double iso = 0.0;
            for (std::size_t p = 0; p < m.terms.size(); ++p) {
              const auto& term = m.terms[p];
              sig += (term.mu / J) * congruence(F_, contract_P(spectrum_, strain_[p], a.rank2[p]));
              iso -= term.mu * std::pow(J, -2.0 * term.alpha * term.beta - 1.0) * a.scalars[p];
            }
            return sig + iso * kDelta;
          },
          [&](const YeohIso& m) {
            const Tensor2& Fb = iso_.Fbar;
            const SymTensor2& Cb = iso_.Cbar;
            SymTensor2 sig = (2.0 * m.c1 / J) *
                             deviatoric_part(congruence(Fb, a.rank2[0]), ddot(Cb, a.rank2[0]));
            if (m.c2 != 0.0) {
              const SymTensor2 x2 = contract(a.rank4[0], Cb);
              sig += (4.0 * m.c2 / J) * deviatoric_part(congruence(Fb, x2), ddot(Cb, x2));
            }
            if (m.c3 != 0.0) {
              const SymTensor2 x3 = contract(contract(a.rank6[0], Cb), Cb);
              sig += (6.0 * m.c3 / J) * deviatoric_part(congruence(Fb, x3), ddot(Cb, x3));
            }
            return sig;
          },
      },
      model_);
}

SymTensor4 KernelB::tangent(const KernelTerms& a) const {
  if (!with_tangent_) throw std::logic_error("KernelB::tangent: built without tangent factors");
  const double J = J_;
  const SymTensor4 I2 = sym_identity2();
  const SymTensor4 dd = delta_delta();
  return std::visit(
      overloaded{
          [&](const CompNeoHookean& m) {
            const double lnJ = std::log(J);
            return a.scalars[0] * ((m.lambda / J) * dd + ((m.mu - m.lambda * lnJ) / J) * I2) +
                   a.scalars[1] * ((m.lambda / J) * I2);
          },
          [&](const BlatzKo& m) {
            const double fmu = m.f * m.mu, gmu = (1.0 - m.f) * m.mu;
            const double jm = std::pow(J, -m.beta - 1.0), jp = std::pow(J, m.beta - 1.0);
            const SymTensor2 y = congruence(transpose(Finv_), a.rank2[1]);
            return (4.0 * gmu / J) * box_sym(y, kDelta) +
                   a.scalars[0] * (m.beta * fmu * jm * dd + fmu * jm * I2) +
                   a.scalars[1] * (m.beta * gmu * jp * dd - gmu * jp * I2);
          },
          [&](const OgdenHill& m) {
            SymTensor4 c;
            for (std::size_t p = 0; p < m.terms.size(); ++p) {
              const auto& term = m.terms[p];
              const double jd = std::pow(J, -2.0 * term.alpha * term.beta - 1.0);
              c += (term.mu / J) * push_forward(F_, contract_L(spectrum_, strain_[p], a.rank2[p]));
              c += a.scalars[p] * (2.0 * term.alpha * term.beta * term.mu * jd * dd + term.mu * jd * I2);
            }
            return c;
          },
          [&](const YeohIso& m) {
            const Tensor2& Fb = iso_.Fbar;
            const SymTensor2& Cb = iso_.Cbar;
            const SymTensor2 s1 = congruence(Fb, a.rank2[0]);
            const double tr1 = ddot(Cb, a.rank2[0]);
            SymTensor4 c = (4.0 * m.c1 / J) * ((-1.0 / 3.0) * outer_sum(s1, kDelta) +
                                               (tr1 / 9.0) * dd + (tr1 / 6.0) * I2);
            if (m.c2 != 0.0) {
              const SymTensor2 x2 = contract(a.rank4[0], Cb);
              const SymTensor2 s2 = congruence(Fb, x2);
              const double tr2 = ddot(Cb, x2);
              c += (4.0 * m.c2 / J) * (2.0 * push_forward(Fb, a.rank4[0]) -
                                       (4.0 / 3.0) * outer_sum(s2, kDelta) +
                                       (4.0 / 9.0 * tr2) * dd + (tr2 / 3.0) * I2);
            }
            if (m.c3 != 0.0) {
              const SymTensor4 g3 = contract(a.rank6[0], Cb);
              const SymTensor2 x3 = contract(g3, Cb);
              const SymTensor2 s3 = congruence(Fb, x3);
              const double tr3 = ddot(Cb, x3);
              c += (4.0 * m.c3 / J) * (6.0 * push_forward(Fb, g3) - 3.0 * outer_sum(s3, kDelta) +
                                       tr3 * dd + (0.5 * tr3) * I2);
            }
            return c;
          },
      },
      model_);
}

// ---- Closed forms ----------------------------------------------------------

SymTensor2 hyper_stress(const ModelSpec& model, const DefState& s) {
  const double J = s.J;
  return std::visit(
      overloaded{
          [&](const CompNeoHookean& m) {
            return (1.0 / J) * (m.mu * (s.b - kDelta) + (m.lambda * std::log(J)) * kDelta);
          },
          [&](const BlatzKo& m) {
            const SymTensor2 binv = congruence(transpose(s.Finv), kDelta);
            return (1.0 / J) * (m.f * m.mu * s.b - (1.0 - m.f) * m.mu * binv -
                                (m.mu * (m.f * std::pow(J, -m.beta) -
                                         (1.0 - m.f) * std::pow(J, m.beta))) *
                                    kDelta);
          },
          [&](const OgdenHill& m) {
            // F U^(2a-2) F^T = b^a
            const Spectral sb = spectral_decompose(s.b);
            SymTensor2 sig;
            for (const auto& t : m.terms)
              sig += (t.mu / J) * (generalized_stretch(sb, t.alpha) -
                                   std::pow(J, -2.0 * t.alpha * t.beta) * kDelta);
            return sig;
          },
          [&](const YeohIso& m) {
            const IsochoricView v = isochoric(s);
            const double I = v.I1bar;
            const double g = m.c1 + 2.0 * m.c2 * I + 3.0 * m.c3 * I * I;
            return (2.0 * g / J) * (v.bbar - (I / 3.0) * kDelta);
          },
      },
      model);
}

SymTensor4 hyper_tangent(const ModelSpec& model, const DefState& s) {
  const double J = s.J;
  const SymTensor4 I2 = sym_identity2();
  const SymTensor4 dd = delta_delta();
  return std::visit(
      overloaded{
          [&](const CompNeoHookean& m) {
            return ((m.mu - m.lambda * std::log(J)) / J) * I2 + (m.lambda / J) * dd;
          },
          [&](const BlatzKo& m) {
            const SymTensor2 binv = congruence(transpose(s.Finv), kDelta);
            const double jm = std::pow(J, -m.beta - 1.0), jp = std::pow(J, m.beta - 1.0);
            const double fmu = m.f * m.mu, gmu = (1.0 - m.f) * m.mu;
            return (4.0 * gmu / J) * box_sym(binv, kDelta) +
                   (m.beta * (fmu * jm + gmu * jp)) * dd + (fmu * jm - gmu * jp) * I2;
          },
          [&](const OgdenHill& m) {
            // Piola push-forward of sum mu (delta : L) plus the volumetric part.
            const Spectral sp = spectrum_of(s);
            SymTensor4 c;
            for (const auto& t : m.terms) {
              const double jd = std::pow(J, -2.0 * t.alpha * t.beta - 1.0);
              c += (t.mu / J) * push_forward(s.F, contract_L(sp, seth_hill_coefficients(sp, t.alpha), kDelta));
              c += (2.0 * t.alpha * t.beta * t.mu * jd) * dd + (t.mu * jd) * I2;
            }
            return c;
          },
          [&](const YeohIso& m) {
            const IsochoricView v = isochoric(s);
            const double I = v.I1bar;
            const SymTensor2& bb = v.bbar;
            const SymTensor4 bd = outer_sum(bb, kDelta);
            const SymTensor4 b2 = outer(bb);
            SymTensor4 c = (4.0 * m.c1 / J) * ((-1.0 / 3.0) * bd + (I / 9.0) * dd + (I / 6.0) * I2);
            c += (4.0 * m.c2 / J) *
                 (2.0 * b2 - (4.0 / 3.0 * I) * bd + (4.0 / 9.0 * I * I) * dd + (I * I / 3.0) * I2);
            c += (4.0 * m.c3 / J) *
                 ((6.0 * I) * b2 - (3.0 * I * I) * bd + (I * I * I) * dd + (0.5 * I * I * I) * I2);
            return c;
          },
      },
      model);
}

double hyper_energy(const ModelSpec& model, const DefState& s) {
  const double lnJ = std::log(s.J);
  return std::visit(
      overloaded{
          [&](const CompNeoHookean& m) {
            return 0.5 * m.mu * (trace(s.C) - 3.0 - 2.0 * lnJ) + 0.5 * m.lambda * lnJ * lnJ;
          },
          [&](const BlatzKo& m) {
            return 0.5 * m.f * m.mu * (trace(s.C) - 3.0 + 2.0 * power_log(lnJ, m.beta)) +
                   0.5 * (1.0 - m.f) * m.mu * (trace(s.Cinv) - 3.0 - 2.0 * power_log(lnJ, -m.beta));
          },
          [&](const OgdenHill& m) {
            const Spectral sp = spectrum_of(s);
            double w = 0.0;
            for (const auto& t : m.terms) {
              double tr = 0.0;
              for (double c : sp.eigenvalues) tr += std::pow(c, t.alpha);
              w += t.mu / (2.0 * t.alpha) * (tr - 3.0 + power_log(lnJ, 2.0 * t.alpha * t.beta) * 2.0 * t.alpha);
            }
            return w;
          },
          [&](const YeohIso& m) {
            const double I = isochoric(s).I1bar;
            return ((m.c3 * I + m.c2) * I + m.c1) * I + yeoh_c4(m);
          },
      },
      model);
}

SymTensor2 relative_stress(const ModelSpec& model, const DefState& at_t, const DefState& at_s) {
  const double Jr = at_t.J / at_s.J;
  return std::visit(
      overloaded{
          [&](const CompNeoHookean& m) {
            const SymTensor2 br = relative_b(at_t, at_s);
            return (1.0 / Jr) * (m.mu * (br - kDelta) + (m.lambda * std::log(Jr)) * kDelta);
          },
          [&](const BlatzKo& m) {
            const SymTensor2 br = relative_b(at_t, at_s);
            const SymTensor2 bri = relative_b_inv(at_t, at_s);
            return (1.0 / Jr) * (m.f * m.mu * br - (1.0 - m.f) * m.mu * bri -
                                 (m.mu * (m.f * std::pow(Jr, -m.beta) -
                                          (1.0 - m.f) * std::pow(Jr, m.beta))) *
                                     kDelta);
          },
          [&](const OgdenHill& m) {
            // Spectral first-derivative formula in the eigenframe of C(t):
            // (Y : P)^ = 2 v_ab Y^_ab with Y = J(s) U^(-2 alpha)(s).
            const Spectral st = spectrum_of(at_t);
            const Spectral ss = spectrum_of(at_s);
            const Tensor2& q = st.vectors;
            SymTensor2 sig;
            double iso = 0.0;
            for (const auto& term : m.terms) {
              const SethHillCoefficients k = seth_hill_coefficients(st, term.alpha);
              const Tensor2 yhat = transpose(q) * to_full(at_s.J * generalized_stretch(ss, -term.alpha)) * q;
              Tensor2 z;
              for (int a = 0; a < 3; ++a)
                for (int b = 0; b < 3; ++b) z(a, b) = 2.0 * k.v[a][b] * yhat(a, b);
              const SymTensor2 yp = sym(q * z * transpose(q));
              sig += (term.mu / at_t.J) * congruence(at_t.F, yp);
              iso -= term.mu * at_s.J * std::pow(Jr, -2.0 * term.alpha * term.beta) / at_t.J;
            }
            return sig + iso * kDelta;
          },
          [&](const YeohIso& m) {
            const SymTensor2 bbar = std::pow(Jr, -2.0 / 3.0) * relative_b(at_t, at_s);
            const double I = trace(bbar);
            const double g = m.c1 + 2.0 * m.c2 * I + 3.0 * m.c3 * I * I;
            return (2.0 * g / Jr) * (bbar - (I / 3.0) * kDelta);
          },
      },
      model);
}

double relative_energy(const ModelSpec& model, const DefState& at_t, const DefState& at_s) {
  const double Jr = at_t.J / at_s.J;
  const double lnJr = std::log(Jr);
  const double w = std::visit(
      overloaded{
          [&](const CompNeoHookean& m) {
            const double I1 = ddot(at_t.C, at_s.Cinv);
            return 0.5 * m.mu * (I1 - 3.0 - 2.0 * lnJr) + 0.5 * m.lambda * lnJr * lnJr;
          },
          [&](const BlatzKo& m) {
            const double I1 = ddot(at_t.C, at_s.Cinv);
            const double I1inv = ddot(at_t.Cinv, at_s.C);
            return 0.5 * m.f * m.mu * (I1 - 3.0 + 2.0 * power_log(lnJr, m.beta)) +
                   0.5 * (1.0 - m.f) * m.mu * (I1inv - 3.0 - 2.0 * power_log(lnJr, -m.beta));
          },
          [&](const OgdenHill& m) {
            double acc = 0.0;
            for (const auto& t : m.terms) {
              const double tr = relative_generalized_stretch_contraction(at_t, at_s, t.alpha);
              acc += t.mu / (2.0 * t.alpha) *
                     (tr - 3.0 + power_log(lnJr, 2.0 * t.alpha * t.beta) * 2.0 * t.alpha);
            }
            return acc;
          },
          [&](const YeohIso& m) {
            const double I = std::pow(Jr, -2.0 / 3.0) * ddot(at_t.C, at_s.Cinv);
            return ((m.c3 * I + m.c2) * I + m.c1) * I + yeoh_c4(m);
          },
      },
      model);
  return at_s.J * w;
}

SymTensor2 volumetric_stress(const VolumetricSpec& vol, double J) {
  return (vol.K * (J - 1.0)) * kDelta;
}

SymTensor4 volumetric_tangent(const VolumetricSpec& vol, double J) {
  const double p = vol.K * (J - 1.0);
  return (p + J * vol.K) * delta_delta() - p * sym_identity2();
}

double volumetric_energy(const VolumetricSpec& vol, double J) {
  return 0.5 * vol.K * (J - 1.0) * (J - 1.0);
}

}  // namespace tnet
