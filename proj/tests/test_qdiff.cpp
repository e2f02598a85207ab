// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include "gen.hpp"
#include "skc/qdiff.hpp"
#include "skc/scalars.hpp"
#include "skc/skeinrep.hpp"

using namespace skc;

TEST(Qdiff, PairingRelations) {
  // varpi_1 X_1^{1/2} = q^{1/2} X_1^{1/2} varpi_1, and nothing for X_2.
  const OpElement w1 = OpElement::shift(xtorus(), 0);
  EXPECT_EQ(w1 * OpElement(xtorus(), Rat::var(var::x(1))), OpElement::shift(xtorus(), 0, 1, Rat::var(var::s) * Rat::var(var::x(1))));
  EXPECT_EQ(w1 * OpElement(xtorus(), Rat::var(var::x(2))), OpElement::shift(xtorus(), 0, 1, Rat::var(var::x(2))));
  // Q_1 E_1 = A E_1 Q_1.
  const OpElement E1 = OpElement::shift(ztrace(), 0);
  const OpElement Q1(ztrace(), Rat::var(var::Q(1)));
  EXPECT_EQ(Q1 * E1, OpElement(ztrace(), A_pow(1)) * E1 * Q1);
  EXPECT_EQ(E1 * OpElement(ztrace(), Rat::var(var::C(1))), OpElement(ztrace(), Rat::var(var::C(1))) * E1);
  // D_{1,+} w_{1,+} = q^2 w_{1,+} D_{1,+}; D_{1,+} w_{1,-} = w_{1,-} D_{1,+}.
  const OpElement Dp = OpElement::shift(dalg(), 0), Dm = OpElement::shift(dalg(), 1);
  const OpElement wp(dalg(), Rat::var(var::wp(1))), wm(dalg(), Rat::var(var::wm(1)));
  EXPECT_EQ(Dp * wp, OpElement(dalg(), q_pow(2)) * wp * Dp);
  EXPECT_EQ(Dp * wm, wm * Dp);
  EXPECT_EQ(Dm * wm, OpElement(dalg(), q_pow(2)) * wm * Dm);
}

TEST(Qdiff, MulExamples) {
  const OpElement w1 = OpElement::shift(xtorus(), 0);
  EXPECT_EQ(w1 * OpElement(xtorus(), X_pow(1, 1)), OpElement::shift(xtorus(), 0, 1, q_pow(1) * X_pow(1, 1)));
  const OpElement one(xtorus(), Rat(1));
  std::mt19937_64 rng(3);
  const OpElement a = testgen::op_element(rng, xtorus());
  EXPECT_EQ(a * one, a);
  EXPECT_EQ(one * a, a);
}

TEST(Qdiff, MixedAlgebrasRejected) {
  EXPECT_THROW(OpElement(xtorus(), 1) * OpElement(ztrace(), 1), std::invalid_argument);
  EXPECT_THROW(OpElement(xtorus(), 1) + OpElement(dalg(), 1), std::invalid_argument);
}

TEST(Qdiff, InverseOnlyForMonomials) {
  const OpElement w = OpElement::shift(xtorus(), 0, 2, X_pow(1, 1));
  EXPECT_EQ(w * w.inverse(), OpElement(xtorus(), 1));
  EXPECT_THROW((w + OpElement(xtorus(), 1)).inverse(), std::domain_error);
}

TEST(Qdiff, Printing) {
  EXPECT_EQ(OpElement::shift(xtorus(), 0, 2).to_string(), "W1^2");
  EXPECT_EQ(OpElement::shift(xtorus(), 1, -1, -1).to_string(), "-W2^-1");
  EXPECT_EQ(OpElement::shift(dalg(), 1, 1, Rat::var(var::wm(1))).to_string(), "w1m * D1m");
  EXPECT_EQ(OpElement(xtorus()).to_string(), "0");
}

TEST(Qdiff, SubstituteExamples) {
  std::vector<std::optional<Rat>> id(kNumVars);
  std::mt19937_64 rng(5);
  const OpElement a = testgen::op_element(rng, dalg());
  EXPECT_EQ(a.substitute(id), a);
  std::vector<std::optional<Rat>> img(kNumVars);
  img[var::wp(1)] = Rat::var(var::z0p);
  const OpElement b = OpElement::shift(dalg(), 0, 1, Rat::var(var::wp(1), -2));
  EXPECT_EQ(b.substitute(img), OpElement::shift(dalg(), 0, 1, Rat::var(var::z0p, -2)));
}

TEST(Qdiff, AntimapMissingImage) {
  AntiMap m{&xtorus()};
  EXPECT_THROW(apply_antimap(OpElement::shift(ztrace(), 0), m), std::invalid_argument);
  EXPECT_THROW(apply_antimap(OpElement(ztrace(), Rat::var(var::Q(1))), m), std::invalid_argument);
}

class QdiffLaws : public ::testing::TestWithParam<int> {};

TEST_P(QdiffLaws, AssociativeAndDistributive) {
  const AlgebraSpec& spec = GetParam() == 0 ? xtorus() : GetParam() == 1 ? ztrace() : dalg();
  std::mt19937_64 rng(100 + GetParam());
  for (int trial = 0; trial < 200; ++trial) {
    const OpElement a = testgen::op_element(rng, spec, 2), b = testgen::op_element(rng, spec, 2),
                    c = testgen::op_element(rng, spec, 2);
    ASSERT_EQ((a * b) * c, a * (b * c)) << spec.name << " trial " << trial;
    ASSERT_EQ(a * (b + c), a * b + a * c) << spec.name << " trial " << trial;
    ASSERT_EQ((a + b) * c, a * c + b * c) << spec.name << " trial " << trial;
  }
}

INSTANTIATE_TEST_SUITE_P(AllAlgebras, QdiffLaws, ::testing::Values(0, 1, 2));

TEST(QdiffProperty, NormalOrderingSoundness) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 200; ++trial) {
    const Rat c = testgen::coord_rat(rng);
    const int k1 = testgen::pick(rng, -3, 3), k2 = testgen::pick(rng, -3, 3);
    const OpElement w = OpElement::shift(xtorus(), 0, k1) * OpElement::shift(xtorus(), 1, k2);
    std::vector<std::optional<Rat>> img(kNumVars);
    img[var::x(1)] = Rat::var(var::s, k1) * Rat::var(var::x(1));
    img[var::x(2)] = Rat::var(var::s, k2) * Rat::var(var::x(2));
    ASSERT_EQ(w * OpElement(xtorus(), c), OpElement(xtorus(), c.substitute(img)) * w) << trial;
  }
}

TEST(QdiffProperty, StarIsAntiHomomorphism) {
  std::mt19937_64 rng(33);
  for (int trial = 0; trial < 200; ++trial) {
    const OpElement a = testgen::op_element(rng, ztrace(), 2), b = testgen::op_element(rng, ztrace(), 2);
    ASSERT_EQ(star(a * b), star(b) * star(a)) << trial;
  }
}

TEST(QdiffProperty, StarTwoFactorMonomial) {
  const OpElement Q1(ztrace(), Rat::var(var::Q(1)));
  const OpElement E1 = OpElement::shift(ztrace(), 0);
  EXPECT_EQ(star(Q1 * E1), star(E1) * star(Q1));
}
