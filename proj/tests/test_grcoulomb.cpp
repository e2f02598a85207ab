// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include "gen.hpp"
#include "skc/grcoulomb.hpp"

using namespace skc;

namespace {

GradedElement r(int n, const Coweight& l, const Rat& f = 1) { return GradedElement::basis(n, l, f); }

// Four displayed products at (i, j) in rank n-1.
void check_displays(int n, int i, int j) {
  SurfaceParams p(n);
  const int rk = n - 1;
  const Coweight a = Coweight::alpha(i, j - 1, rk), b = Coweight::alpha(j, j, rk), ab = Coweight::alpha(i, j, rk);
  const Rat q = q_pow(1), qi = q_pow(-1), ti = t_pow(j, -1);
  const Rat Y = X_pow(j - 1, 1) * X_pow(j, -1);
  EXPECT_EQ(gr_mul(r(n, a), r(n, b), p), r(n, ab, (Rat(1) - qi * ti * Y.inv()) * (Rat(1) - q * ti * Y)));
  EXPECT_EQ(gr_mul(r(n, a, X_pow(j - 1, 1)), r(n, b, X_pow(j, -1)), p), r(n, ab, (Y - qi * ti) * (Rat(1) - q * ti * Y)));
  EXPECT_EQ(gr_mul(r(n, b), r(n, a), p), r(n, ab, (Rat(1) - qi * ti * Y) * (Rat(1) - q * ti * Y.inv())));
  EXPECT_EQ(gr_mul(r(n, b, X_pow(j, -1)), r(n, a, X_pow(j - 1, 1)), p), r(n, ab, (Rat(1) - qi * ti * Y) * (Y - q * ti)));
}

}  // namespace

TEST(Coweight, Validation) {
  EXPECT_THROW(Coweight({1, -1}), std::invalid_argument);
  EXPECT_EQ(Coweight::alpha(2, 3, 4).to_string(), "[0,1,1,0]");
  EXPECT_EQ(Coweight::alpha(2, 3, 4).support(), (std::vector<int>{2, 3}));
  EXPECT_THROW(Coweight::alpha(3, 2, 4), std::out_of_range);
}

TEST(Graded, WeightList) {
  EXPECT_EQ(weights(SurfaceParams(2)).size(), 8u);
  const auto ws = weights(SurfaceParams(4));
  ASSERT_EQ(ws.size(), 16u);
  // Interior summand j=1 carries eta_2 and mixes omega_1, omega_2.
  const WeightDatum w{{1, -1, 0}, {0, 0, 1, 0, 0, 0}};
  EXPECT_NE(std::find(ws.begin(), ws.end(), w), ws.end());
  const WeightDatum b{{0, 0, -1}, {0, 0, 0, 0, 1, -1}};
  EXPECT_NE(std::find(ws.begin(), ws.end(), b), ws.end());
}

TEST(Graded, AFactorExamples) {
  SurfaceParams p(4);
  const Rat q = q_pow(1), t = t_pow(2, -1), Y = X_pow(1, 1) * X_pow(2, -1);
  EXPECT_EQ(a_factor(Coweight::alpha(1, 1, 3), Coweight::alpha(2, 2, 3), p),
            (Rat(1) - q_pow(-1) * t * Y.inv()) * (Rat(1) - q * t * Y));
  const Coweight l({2, 1, 0});
  EXPECT_EQ(a_factor(l, Coweight::zero(3), p), Rat(1));
  EXPECT_EQ(a_factor(l.scaled(2), l.scaled(3), p), Rat(1));
}

TEST(Graded, SectionFiveDisplays) {
  for (int n = 3; n <= 6; ++n)
    for (int j = 2; j <= n - 2; ++j)
      for (int i = 1; i < j; ++i) check_displays(n, i, j);
}

TEST(Graded, CommutesWithGammaSum) {
  std::mt19937_64 rng(71);
  SurfaceParams p(4);
  int checked = 0;
  for (int trial = 0; trial < 50; ++trial) {
    const Coweight l = testgen::coweight(rng, 3, 3);
    for (int j : l.support()) {
      const GradedElement lhs = gr_mul(r(4, l), r(4, Coweight::zero(3), X_pow(j, 1) + X_pow(j, -1)), p);
      const Rat c = q_pow(2 * l.at(j)) * X_pow(j, 1) + q_pow(-2 * l.at(j)) * X_pow(j, -1);
      ASSERT_EQ(lhs, r(4, l, c)) << l.to_string() << " j=" << j;
      ++checked;
    }
  }
  EXPECT_GT(checked, 0);
}

TEST(Graded, MultiplesOfOneCoweight) {
  std::mt19937_64 rng(72);
  SurfaceParams p(4);
  for (int trial = 0; trial < 10; ++trial) {
    const Coweight l = testgen::coweight(rng, 3, 2);
    for (int k = 0; k <= 3; ++k)
      for (int m = 0; m <= 3; ++m) ASSERT_EQ(gr_mul(r(4, l.scaled(k)), r(4, l.scaled(m)), p), r(4, l.scaled(k + m)));
  }
}

TEST(GradedProperty, Associative) {
  std::mt19937_64 rng(73);
  SurfaceParams p(4);
  for (int trial = 0; trial < 100; ++trial) {
    const GradedElement a = testgen::graded_term(rng, 4, testgen::coweight(rng, 3, 2));
    const GradedElement b = testgen::graded_term(rng, 4, testgen::coweight(rng, 3, 2));
    const GradedElement c = testgen::graded_term(rng, 4, testgen::coweight(rng, 3, 2));
    ASSERT_EQ(gr_mul(gr_mul(a, b, p), c, p), gr_mul(a, gr_mul(b, c, p), p)) << trial;
  }
}

TEST(GradedProperty, ProductStaysInvariant) {
  std::mt19937_64 rng(74);
  SurfaceParams p(4);
  for (int trial = 0; trial < 100; ++trial) {
    const GradedElement a = testgen::graded_term(rng, 4, testgen::coweight(rng, 3, 2));
    const GradedElement b = testgen::graded_term(rng, 4, testgen::coweight(rng, 3, 2));
    ASSERT_TRUE(a.valid() && b.valid());
    ASSERT_TRUE(gr_mul(a, b, p).valid()) << a.to_string() << " * " << b.to_string();
  }
}

TEST(Graded, ValidRejectsAsymmetric) {
  EXPECT_FALSE(r(3, Coweight({1, 0}), X_pow(2, 1)).valid());
  EXPECT_TRUE(r(3, Coweight({1, 0}), X_pow(1, 1) * (X_pow(2, 1) + X_pow(2, -1))).valid());
}

TEST(Graded, Twist) {
  SurfaceParams p(5);
  const GradedElement s = sigma_closed_form(1, 2, p);
  EXPECT_EQ(twist(s, 2, 1), q_pow(1) * X_pow(2, 1) * s);
  EXPECT_EQ(twist(twist(s, 1, 1), 1, -1), s);
  EXPECT_THROW(twist(s, 3, 1), std::invalid_argument);
  // mu = q X_{j-1} sigma' at j=3.
  EXPECT_EQ(twist(s, 2, 1).coeff(Coweight::alpha(1, 2, 4)),
            q_pow(1) * X_pow(2, 1) * s.coeff(Coweight::alpha(1, 2, 4)));
}

TEST(Graded, SigmaClosedForm) {
  SurfaceParams p(4);
  EXPECT_EQ(sigma_closed_form(1, 1, p), r(4, Coweight::alpha(1, 1, 3), -q_pow(-1) * t_pow(1, -1) * t_pow(2, -1) * X_pow(1, -2)));
  EXPECT_EQ(sigma_closed_form(1, 2, p),
            r(4, Coweight::alpha(1, 2, 3),
              -q_pow(-2) * t_pow(1, -1) * t_pow(2, -3) * t_pow(3, -1) * X_pow(1, -2) * X_pow(2, -2)));
  EXPECT_THROW(sigma_closed_form(1, 3, p), std::out_of_range);
  EXPECT_THROW(solve_sigma(2, 1, p), std::out_of_range);
}

TEST(Graded, SolveSigmaMatchesClosedForm) {
  for (int n = 3; n <= 6; ++n) {
    SurfaceParams p(n);
    for (int i = 1; i <= n - 2; ++i)
      for (int j = i; j <= n - 2; ++j) EXPECT_EQ(solve_sigma(i, j, p), sigma_closed_form(i, j, p)) << n << i << j;
  }
}

TEST(Graded, CoulombMatrixNonsingular) {
  for (int j = 1; j <= 4; ++j) {
    const Mat4 P = coulomb_matrix(j);
    EXPECT_FALSE(det4(P).is_zero());
    const Mat4 I = inverse4(P);
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b) {
        Rat s;
        for (int k = 0; k < 4; ++k) s += P[a][k] * I[k][b];
        EXPECT_EQ(s, Rat(a == b ? 1 : 0));
      }
  }
}

TEST(Graded, DressedSymbols) {
  SurfaceParams p(3);
  const Coweight a = Coweight::alpha(1, 1, 2);
  EXPECT_EQ(gr_symbol_dressed(1, 0, DressKind::EF, p), r(3, a));
  EXPECT_EQ(gr_symbol_dressed(1, 1, DressKind::FE, p), r(3, a, q_pow(-2) * X_pow(1, -1)));
  for (int k = -2; k <= 2; ++k) {
    const GradedElement g = r(3, Coweight::zero(2), q_pow(2 * k) * X_pow(1, 1) + q_pow(-2 * k) * X_pow(1, -1));
    const GradedElement lhs = gr_mul(gr_symbol_dressed(1, 0, DressKind::EF, p), g, p);
    const GradedElement rhs = q_pow(2 * (k + 1)) * gr_symbol_dressed(1, 1, DressKind::EF, p) +
                              q_pow(-2 * (k + 1)) * gr_symbol_dressed(1, -1, DressKind::EF, p);
    EXPECT_EQ(lhs, rhs) << k;
  }
}

TEST(Graded, Printing) {
  SurfaceParams p(3);
  EXPECT_EQ(gr_mul(r(3, Coweight({1, 0})), r(3, Coweight({2, 0})), p).to_string(), "r[3,0]");
  EXPECT_EQ(GradedElement(3).to_string(), "0");
  EXPECT_EQ(r(3, Coweight({0, 1}), -X_pow(2, 1) - X_pow(2, -1)).to_string(), "(-X2 - X2^-1) * r[0,1]");
}
