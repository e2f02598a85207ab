// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include <random>

#include "gen.hpp"
#include "skc/scalars.hpp"

using namespace skc;

TEST(Scalars, QuantumIntegers) {
  EXPECT_TRUE(qint(0).is_zero());
  EXPECT_EQ(qint(1), Rat(1));
  EXPECT_EQ(qint(2), A_pow(2) + A_pow(-2));
  EXPECT_EQ(qint(-1), Rat(-1));
  // against the defining ratio
  for (int k = -6; k <= 6; ++k) EXPECT_EQ(qint(k), (A_pow(2 * k) - A_pow(-2 * k)) / (A_pow(2) - A_pow(-2))) << k;
}

TEST(Scalars, QuantumIntegerRecurrence) {
  for (int k = -5; k <= 5; ++k) EXPECT_EQ(qint(k + 1), (A_pow(2) + A_pow(-2)) * qint(k) - qint(k - 1)) << k;
}

TEST(Scalars, Factorials) {
  EXPECT_EQ(qfact(0), Rat(1));
  EXPECT_EQ(qfact(1), Rat(1));
  EXPECT_EQ(qfact(3), qint(1) * qint(2) * qint(3));
  EXPECT_THROW(qfact(-1), std::invalid_argument);
}

TEST(Scalars, Kappa) {
  EXPECT_EQ(kappa({0}, {0, 0, 0, 0}), Rat(1));
  EXPECT_EQ(kappa({0, 0, 0}, {0, 0, 0, 0, 0, 0}), Rat(1));
  // n=2, c_1=1, d=(1,0,0,1): vertices (1,1,0) and (1,1,0) give [1]!/([1]![1]!)
  EXPECT_EQ(kappa({1}, {1, 0, 0, 1}), Rat(1));
  // half-sums 0 and 0 leave [2]! on top
  EXPECT_EQ(kappa({2}, {0, 2, 2, 0}), qfact(2) / (qfact(0) * qfact(0)));
  EXPECT_EQ(kappa({3, 1}, {1, 2, 2, 1, 0}), qfact(3) * qfact(1) / (qfact(1) * qfact(1) * qfact(0)));
  try {
    kappa({1}, {0, 0, 0, 0});
    FAIL() << "expected rejection";
  } catch (const std::invalid_argument& e) {
    EXPECT_NE(std::string(e.what()).find("vertex 0"), std::string::npos);
  }
}

TEST(Scalars, InversionInvariance) {
  Rat X1 = X_pow(1, 1), X2 = X_pow(2, 1);
  EXPECT_TRUE(invariant_under_inversion(X1 + X1.inv(), {1}));
  EXPECT_FALSE(invariant_under_inversion(X1, {1}));
  EXPECT_TRUE(invariant_under_inversion((X1 + X1.inv()) * X2, {1}));
  EXPECT_FALSE(invariant_under_inversion((X1 + X1.inv()) * X2, {1, 2}));
}

TEST(Scalars, Shift) {
  Rat X1 = X_pow(1, 1);
  EXPECT_EQ(shift(X1, {1, 0}), q_pow(2) * X1);
  EXPECT_EQ(shift(X1 + X1.inv(), {1, 0}), q_pow(2) * X1 + q_pow(-2) * X1.inv());
  EXPECT_EQ(shift(Rat(5) * q_pow(3), {2, 1}), Rat(5) * q_pow(3));
}

TEST(ScalarsProperty, ShiftComposes) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 200; ++trial) {
    Rat p = testgen::coord_rat(rng);
    std::vector<int> l{testgen::pick(rng, -3, 3), testgen::pick(rng, -3, 3)};
    std::vector<int> m{testgen::pick(rng, -3, 3), testgen::pick(rng, -3, 3)};
    ASSERT_EQ(shift(shift(p, l), m), shift(p, {l[0] + m[0], l[1] + m[1]})) << trial;
  }
}
