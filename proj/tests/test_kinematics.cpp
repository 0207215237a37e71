#include <gtest/gtest.h>

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "support/compare.hpp"
#include "support/random.hpp"
#include "tnet/kinematics.hpp"
#include "tnet/log.hpp"

using namespace tnet;
using tnet::check::Rng;
using tnet::check::rel_diff;

TEST(Kinematics, SimpleShearCauchyGreen) {
  Tensor2 F = Tensor2::identity();
  F(0, 1) = 0.3;
  const DefState s = make_state(F);
  EXPECT_DOUBLE_EQ(s.J, 1.0);
  EXPECT_NEAR(s.C(0, 1), 0.3, 1e-15);
  EXPECT_NEAR(s.C(1, 1), 1.09, 1e-15);
  EXPECT_NEAR(s.C(0, 0), 1.0, 1e-15);
  EXPECT_NEAR(s.b(0, 0), 1.09, 1e-15);
  EXPECT_LT(check::abs_diff(to_full(s.C) * to_full(s.Cinv), Tensor2::identity()), 1e-15);
}

TEST(Kinematics, RejectsInvertedOrNonFiniteGradient) {
  EXPECT_THROW(make_state(Tensor2::diag(1, 1, -1)), std::domain_error);
  EXPECT_THROW(make_state(Tensor2::diag(1, 0, 1)), std::domain_error);
  EXPECT_THROW(make_state(Tensor2::diag(1, std::nan(""), 1)), std::domain_error);
}

TEST(Kinematics, WarnsOnLargeStretch) {
  std::vector<std::string> seen;
  set_warning_sink([&](const std::string& m) { seen.push_back(m); });
  make_state(Tensor2::diag(2, 1, 1));
  EXPECT_TRUE(seen.empty());
  make_state(Tensor2::diag(12, 1, 1));
  set_warning_sink(nullptr);
  ASSERT_EQ(seen.size(), 1u);
  EXPECT_NE(seen[0].find("stretch"), std::string::npos);
}

TEST(Kinematics, IsochoricPartHasUnitDeterminant) {
  Rng rng(41);
  for (int n = 0; n < 200; ++n) {
    const DefState s = make_state(rng.deformation(0.25, 4.0));
    const IsochoricView v = isochoric(s);
    EXPECT_NEAR(det(v.Fbar), 1.0, 1e-13);
    EXPECT_NEAR(det(to_full(v.Cbar)), 1.0, 1e-12);
    EXPECT_NEAR(v.I1bar, trace(v.Cbar), 1e-12 * v.I1bar);
    EXPECT_LT(rel_diff(v.bbar, congruence(v.Fbar, SymTensor2::identity())), 1e-14);
  }
}

TEST(RelativeKinematics, FirstInvariantExample) {
  const RelativeInvariants r =
      relative_invariants(make_state(Tensor2::diag(2, 1, 1)), make_state(Tensor2::diag(1, 2, 1)));
  EXPECT_NEAR(r.I1, 5.25, 1e-15);
  EXPECT_NEAR(r.I3, 1.0, 1e-15);
}

TEST(RelativeKinematics, GeneralizedStretchContractionExample) {
  // U^-2(t) : U^2(s) with C(t) = diag(4,1,1) and C(s) = I
  const double v = relative_generalized_stretch_contraction(make_state(Tensor2::diag(2, 1, 1)),
                                                            make_state(Tensor2::identity()), -1.0);
  EXPECT_NEAR(v, 2.25, 1e-15);
}

TEST(RelativeKinematics, AgreeWithExplicitRelativeGradient) {
  Rng rng(42);
  double worst = 0.0;
  for (int n = 0; n < 1000; ++n) {
    const DefState t = make_state(rng.deformation(0.25, 4.0));
    const DefState s = make_state(rng.deformation(0.25, 4.0));
    const Tensor2 Fr = t.F * inverse(s.F);
    // brute-force invariants of F(t,s)^T F(t,s) in extended precision
    long double A[3][3], Cr[3][3] = {};
    {
      const Tensor2 Fsi = inverse(s.F);
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
          A[i][j] = 0;
          for (int k = 0; k < 3; ++k) A[i][j] += (long double)t.F(i, k) * Fsi(k, j);
        }
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
          for (int k = 0; k < 3; ++k) Cr[i][j] += A[k][i] * A[k][j];
    }
    long double trC2 = 0;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) trC2 += Cr[i][j] * Cr[j][i];
    const long double I1 = Cr[0][0] + Cr[1][1] + Cr[2][2];
    const long double I2 = 0.5L * (I1 * I1 - trC2);
    const long double I3 = Cr[0][0] * (Cr[1][1] * Cr[2][2] - Cr[1][2] * Cr[2][1]) -
                           Cr[0][1] * (Cr[1][0] * Cr[2][2] - Cr[1][2] * Cr[2][0]) +
                           Cr[0][2] * (Cr[1][0] * Cr[2][1] - Cr[1][1] * Cr[2][0]);
    const RelativeInvariants r = relative_invariants(t, s);
    worst = std::max({worst, double(std::fabs(r.I1 - I1) / I1), double(std::fabs(r.I2 - I2) / I2),
                      double(std::fabs(r.I3 - I3) / I3)});
    // b(t,s) = A A^T and its inverse from the cofactors of A, both in extended precision
    long double Ai[3][3];
    {
      const long double d = A[0][0] * (A[1][1] * A[2][2] - A[1][2] * A[2][1]) -
                            A[0][1] * (A[1][0] * A[2][2] - A[1][2] * A[2][0]) +
                            A[0][2] * (A[1][0] * A[2][1] - A[1][1] * A[2][0]);
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
          const int r0 = (j + 1) % 3, r1 = (j + 2) % 3, c0 = (i + 1) % 3, c1 = (i + 2) % 3;
          Ai[i][j] = (A[r0][c0] * A[r1][c1] - A[r0][c1] * A[r1][c0]) / d;
        }
    }
    SymTensor2 br, bri;
    for (int q = 0; q < 6; ++q) {
      const int i = kVoigtPairs[q][0], j = kVoigtPairs[q][1];
      long double x = 0, y = 0;
      for (int k = 0; k < 3; ++k) {
        x += A[i][k] * A[j][k];
        y += Ai[k][i] * Ai[k][j];
      }
      br.v[q] = double(x);
      bri.v[q] = double(y);
    }
    EXPECT_LE(rel_diff(relative_b(t, s), br), 1e-12);
    EXPECT_LE(rel_diff(relative_b_inv(t, s), bri), 1e-12);
    EXPECT_LE(rel_diff(to_full(relative_b(t, s)) * to_full(relative_b_inv(t, s)), Tensor2::identity()), 1e-12);
    EXPECT_LE(rel_diff(relative_gradient(t, s), Fr), 1e-14);
  }
  EXPECT_LE(worst, 1e-12);
}

TEST(RelativeKinematics, CompositionAndSelfReference) {
  Rng rng(43);
  for (int n = 0; n < 100; ++n) {
    const DefState a = make_state(rng.deformation(0.5, 2.0));
    const DefState b = make_state(rng.deformation(0.5, 2.0));
    const DefState c = make_state(rng.deformation(0.5, 2.0));
    const Tensor2 composed = relative_gradient(c, b) * relative_gradient(b, a);
    EXPECT_LE(rel_diff(composed, relative_gradient(c, a)), 1e-13);
    const RelativeInvariants self = relative_invariants(a, a);
    EXPECT_NEAR(self.I1, 3.0, 1e-13);
    EXPECT_NEAR(self.I2, 3.0, 1e-12);
    EXPECT_NEAR(self.I3, 1.0, 1e-14);
  }
}

TEST(RelativeKinematics, StretchContractionMatchesRelativeTensor) {
  // For alpha = 1 the contraction is tr C(t,s).
  Rng rng(44);
  for (int n = 0; n < 100; ++n) {
    const DefState t = make_state(rng.deformation(0.5, 2.0));
    const DefState s = make_state(rng.deformation(0.5, 2.0));
    EXPECT_NEAR(relative_generalized_stretch_contraction(t, s, 1.0), relative_invariants(t, s).I1,
                1e-12 * relative_invariants(t, s).I1);
  }
}
