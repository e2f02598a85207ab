// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include "gen.hpp"
#include "skc/monopole.hpp"
#include "skc/scalars.hpp"

using namespace skc;

namespace {
Rat w(int i, int eps) { return Rat::var(eps > 0 ? var::wp(i) : var::wm(i)); }
}  // namespace

TEST(Monopole, EvenEHasFourFactorNumerator) {
  SurfaceParams p(4);
  // E_{2,1}[x^1] = sum_eps w_{2,eps} P_{2,eps} D_{2,eps}
  const OpElement E = monopole_E(2, 1, p);
  ASSERT_EQ(E.terms().size(), 2u);
  const Rat q = q_pow(1), z2 = Rat::var(var::z(2)), z3 = Rat::var(var::z(3));
  Rat num = 1;
  for (int s : {1, -1}) num *= (Rat(1) - q * z2 * w(2, 1) / w(1, s)) * (Rat(1) - q * z3 * w(2, 1) / w(3, s));
  const Rat expect = w(2, 1) * num / (Rat(1) - w(2, -1) / w(2, 1));
  ShiftKey k(dalg().num_shifts(), 0);
  k[2] = 1;
  EXPECT_EQ(E.coeff(k), expect);
}

TEST(Monopole, OddBoundaryUsesZ0) {
  const OpElement F = monopole_F(1, 0, SurfaceParams(3));
  uint64_t sup = 0;
  for (const auto& [k, c] : F.terms()) sup |= c.support();
  EXPECT_TRUE(sup >> var::z0p & 1);
  EXPECT_TRUE(sup >> var::z0m & 1);
  // n=2: both neighbours of node 1 are boundary.
  const OpElement F2 = monopole_F(1, 0, SurfaceParams(2));
  uint64_t sup2 = 0;
  for (const auto& [k, c] : F2.terms()) sup2 |= c.support();
  EXPECT_TRUE(sup2 >> var::zLp & 1);
  EXPECT_FALSE(sup2 >> var::wp(2) & 1);
  EXPECT_THROW(monopole_E(3, 0, SurfaceParams(3)), std::out_of_range);
}

TEST(Monopole, FPrefactor) {
  SurfaceParams p(3);
  for (int m = -2; m <= 3; ++m) {
    const OpElement F0 = monopole_F(2, 0, p), Fm = monopole_F(2, m, p);
    for (const auto& [k, c] : F0.terms()) {
      const Rat wk = k[2] ? w(2, 1) : w(2, -1);
      EXPECT_EQ(Fm.coeff(k), q_pow(-2 * m) * wk.pow(m) * c) << m;
    }
  }
}

TEST(Monopole, PsiExamples) {
  SurfaceParams p(3);
  EXPECT_EQ(psi(OpElement(dalg(), -w(1, 1) - w(1, -1)), p).to_string(), "-X1 - X1^-1");
  const OpElement bal = OpElement::shift(dalg(), 0) * OpElement::shift(dalg(), 1, -1);
  EXPECT_EQ(psi(bal, p), OpElement::shift(xtorus(), 0, 2, q_pow(-4) * X_pow(1, -4)));
  EXPECT_THROW(psi(OpElement::shift(dalg(), 0), p), std::invalid_argument);
  EXPECT_FALSE(torus_invariant(monopole_E(1, 0, p)));
  EXPECT_TRUE(torus_invariant(monopole_E(1, 0, p) * monopole_F(1, 0, p)));
}

TEST(Monopole, PhiGammaIsPsiOfW) {
  for (int n = 2; n <= 5; ++n)
    for (int i = 1; i < n; ++i)
      EXPECT_EQ(phi({GenKind::Gamma, i}, SurfaceParams(n)), psi(OpElement(dalg(), -w(i, 1) - w(i, -1)), SurfaceParams(n)));
}

TEST(MonopoleProperty, PsiMultiplicative) {
  std::mt19937_64 rng(44);
  SurfaceParams p(2);
  for (int trial = 0; trial < 200; ++trial) {
    const OpElement a = testgen::balanced_d(rng), b = testgen::balanced_d(rng);
    ASSERT_EQ(psi(a * b, p), psi(a, p) * psi(b, p)) << trial;
  }
}

TEST(Monopole, PhiPsiSmallest) { EXPECT_TRUE(verify_phi_psi(1, 0, SurfaceParams(2))); }

TEST(Monopole, PhiPsiGrid) {
  for (int n = 2; n <= 5; ++n)
    for (int i = 1; i < n; ++i)
      for (int m = -2; m <= 4; ++m) EXPECT_TRUE(verify_phi_psi(i, m, SurfaceParams(n))) << n << " " << i << " " << m;
}

TEST(Monopole, EvenRemainderVanishes) {
  for (int n = 3; n <= 5; ++n)
    for (int i = 2; i < n; i += 2)
      for (int m = -2; m <= 4; ++m) EXPECT_TRUE(phi_psi_remainder(i, m, SurfaceParams(n)).is_zero()) << n << i << m;
}

TEST(Monopole, EFCommutator) {
  for (int n = 2; n <= 5; ++n)
    for (int i = 1; i < n; ++i) {
      auto [ok, h] = verify_EF_commutator(i, SurfaceParams(n));
      EXPECT_TRUE(ok) << n << " " << i;
      EXPECT_FALSE(h.is_zero());
    }
}

TEST(Monopole, WSwapDetectsAsymmetry) {
  EXPECT_TRUE(w_swap_symmetric(w(1, 1) + w(1, -1)));
  EXPECT_FALSE(w_swap_symmetric(w(1, 1) - w(1, -1)));
}
