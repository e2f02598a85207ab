// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include "skc/fusion.hpp"
#include "skc/scalars.hpp"

using namespace skc;

namespace {

TLElement e(int c, int i) { return TLElement(TLDiagram::cupcap(c, i)); }
TLElement id(int c) { return TLElement(TLDiagram::identity(c)); }

Rat at_color(const Rat& r, int c) {
  std::vector<std::optional<Rat>> img(kNumVars);
  img[var::B] = A_pow(c);
  return r.substitute(img);
}

}  // namespace

TEST(TL, DiagramValidation) {
  EXPECT_EQ(TLDiagram(2, {2, 3, 0, 1}), TLDiagram::identity(2));
  EXPECT_THROW(TLDiagram(2, {3, 2, 1, 0}), std::invalid_argument);  // b1-t2 crosses b2-t1
  EXPECT_THROW(TLDiagram(2, {1, 0, 2, 3}), std::invalid_argument);  // fixed points
  EXPECT_THROW(TLDiagram::cupcap(2, 2), std::out_of_range);
  EXPECT_EQ(TLDiagram::cupcap(3, 2).to_string(), "b1-t1 b2-b3 t2-t3");
}

TEST(TL, Relations) {
  EXPECT_EQ(tl_mul(id(3), id(3)), id(3));
  EXPECT_EQ(tl_mul(e(2, 1), e(2, 1)), (-A_pow(2) - A_pow(-2)) * e(2, 1));
  EXPECT_EQ(tl_mul(tl_mul(e(3, 1), e(3, 2)), e(3, 1)), e(3, 1));
  EXPECT_EQ(tl_mul(tl_mul(e(3, 2), e(3, 1)), e(3, 2)), e(3, 2));
  EXPECT_EQ(tl_mul(e(4, 1), e(4, 3)), tl_mul(e(4, 3), e(4, 1)));
  EXPECT_THROW(tl_mul(id(2), id(3)), std::invalid_argument);
}

TEST(TL, SmallJonesWenzl) {
  EXPECT_EQ(jones_wenzl(1), id(1));
  EXPECT_EQ(jones_wenzl(2), id(2) + (qint(1) / qint(2)) * e(2, 1));
  const TLElement j3 = jones_wenzl(3);
  EXPECT_EQ(j3.terms().size(), 5u);
  EXPECT_EQ(j3.coeff(TLDiagram::identity(3)), Rat(1));
  EXPECT_EQ(j3.coeff(TLDiagram::cupcap(3, 1)), qint(2) / qint(3));
  EXPECT_EQ(j3.coeff(TLDiagram::cupcap(3, 2)), qint(2) / qint(3));
  auto [e12, l1] = compose(TLDiagram::cupcap(3, 1), TLDiagram::cupcap(3, 2));
  auto [e21, l2] = compose(TLDiagram::cupcap(3, 2), TLDiagram::cupcap(3, 1));
  EXPECT_EQ(l1 + l2, 0);
  EXPECT_EQ(j3.coeff(e12), qint(1) / qint(3));
  EXPECT_EQ(j3.coeff(e21), qint(1) / qint(3));
}

TEST(TL, JonesWenzlAxioms) {
  for (int c = 0; c <= 6; ++c) {
    const TLElement j = jones_wenzl(c);
    EXPECT_EQ(tl_mul(j, j), j) << c;
    EXPECT_EQ(j.coeff(TLDiagram::identity(c)), Rat(1)) << c;
    for (int i = 1; i < c; ++i) {
      EXPECT_TRUE(tl_mul(e(c, i), j).is_zero()) << c << " e" << i;
      EXPECT_TRUE(tl_mul(j, e(c, i)).is_zero()) << c << " e" << i;
    }
  }
}

TEST(Fusion, Coefficients) {
  EXPECT_EQ(fusion_coefficient(FusionRule::HalfTwistUp, {3}), A_pow(3));
  EXPECT_EQ(fusion_coefficient(FusionRule::HalfTwistDown, {3}), -A_pow(-5));
  EXPECT_EQ(fusion_coefficient(FusionRule::BiangleUp, {2}), -qint(4) / qint(3));
  EXPECT_EQ(fusion_coefficient(FusionRule::BiangleDown, {2}), Rat(1));
  EXPECT_EQ(fusion_coefficient(FusionRule::Parallel, {2}), -qint(2) / qint(3));
  EXPECT_EQ(fusion_coefficient(FusionRule::TriangleA, {2, 1, 1}), Rat(1));
  EXPECT_EQ(fusion_coefficient(FusionRule::TriangleB, {2, 2, 2}), qint(1) / qint(2));
  EXPECT_EQ(fusion_coefficient(FusionRule::TriangleC, {2, 2, 2}), -qint(4) * qint(1) / (qint(2) * qint(2)));
  EXPECT_THROW(fusion_coefficient(FusionRule::TriangleB, {1, 1, 1}), std::invalid_argument);
  EXPECT_THROW(fusion_coefficient(FusionRule::TriangleB, {1, 1, 0}), std::invalid_argument);
  EXPECT_THROW(fusion_coefficient(FusionRule::Parallel, {1, 2}), std::invalid_argument);
  EXPECT_EQ(parse_fusion_rule("half_twist_down"), FusionRule::HalfTwistDown);
  EXPECT_THROW(parse_fusion_rule("square"), std::invalid_argument);
}

TEST(Fusion, GammaLoop) {
  EXPECT_EQ(gamma_loop_eval(), gamma_loop_closed_form());
  EXPECT_EQ(at_color(gamma_loop_eval(), 1), -A_pow(4) - A_pow(-4));
  EXPECT_EQ(at_color(gamma_loop_eval(), 0), -A_pow(2) - A_pow(-2));
  for (int c = 0; c <= 8; ++c) EXPECT_EQ(at_color(gamma_loop_eval(), c), -A_pow(2 * c + 2) - A_pow(-2 * c - 2)) << c;
}

TEST(Fusion, LadderAdmissibility) {
  SurfaceParams p(2);
  EXPECT_TRUE(admissible({{0}, {0, 0, 0, 0}}, p));
  EXPECT_FALSE(admissible({{1}, {1, 1, 0, 0}}, p));  // (1,1,1) at vertex 0
  EXPECT_TRUE(admissible({{1}, {2, 1, 1, 0}}, p));   // (2,1,1) then (1,0,1)
  EXPECT_FALSE(admissible({{0}, {0, 0, 0}}, p));
}
