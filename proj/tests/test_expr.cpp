// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include "gen.hpp"
#include "skc/expr.hpp"
#include "skc/monopole.hpp"
#include "skc/scalars.hpp"

using namespace skc;

namespace {
EvalContext ctx(EvalAlgebra a, int n) { return {a, SurfaceParams(n)}; }
}  // namespace

TEST(Expr, PhiGamma) { EXPECT_EQ(eval_expression("phi(gamma:1)", ctx(EvalAlgebra::XTorus, 3)), "-X1 - X1^-1"); }

TEST(Expr, GeneratorsResolvePerAlgebra) {
  const auto x = ctx(EvalAlgebra::XTorus, 3);
  EXPECT_EQ(eval_expression("gamma:2", x), "-X2 - X2^-1");
  EXPECT_EQ(eval_expression("delta:0", x), "-t0 - t0^-1");
  const auto z = ctx(EvalAlgebra::ZTrace, 3);
  EXPECT_EQ(std::get<OpElement>(evaluate("star(sigma:1)", z)), phi({GenKind::Sigma, 1}, SurfaceParams(3)));
  EXPECT_EQ(std::get<OpElement>(evaluate("phi(gamma:1)", x)), std::get<OpElement>(evaluate("star(gamma:1)", z)));
}

TEST(Expr, GradedMultiples) { EXPECT_EQ(eval_expression("r[1,0] * r[2,0]", ctx(EvalAlgebra::Graded, 3)), "r[3,0]"); }

TEST(Expr, PsiOfMonopoleProduct) {
  const SurfaceParams p(3);
  const auto v = evaluate("psi(E:1:1 * F:1:1)", ctx(EvalAlgebra::DZ, 3));
  EXPECT_EQ(std::get<OpElement>(v), psi(monopole_E(1, 1, p) * monopole_F(1, 1, p), p));
}

TEST(Expr, HalfPowersAndA) {
  const auto x = ctx(EvalAlgebra::XTorus, 2);
  EXPECT_EQ(eval_expression("A^2 * X1^1/2 + q^-3/2", x), "q^-1*X1^1/2 + q^-3/2");
  EXPECT_EQ(eval_expression("(q - 1)/(q^2 - 1)", x), "(1)/(q + 1)");
  EXPECT_EQ(eval_expression("W1 * X1", x), "q*X1 * W1");
}

TEST(Expr, ParseErrorsCarryPosition) {
  const auto x = ctx(EvalAlgebra::XTorus, 3);
  try {
    evaluate("phi(gamma:1", x);
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.pos(), 11u);
  }
  EXPECT_THROW(evaluate("X1 + + ", x), ParseError);
  EXPECT_THROW(evaluate("X1 $ 2", x), ParseError);
  EXPECT_THROW(evaluate("r[1,", ctx(EvalAlgebra::Graded, 3)), ParseError);
}

TEST(Expr, OutOfRangeIndices) {
  EXPECT_THROW(evaluate("gamma:3", ctx(EvalAlgebra::XTorus, 3)), std::out_of_range);
  EXPECT_THROW(evaluate("E:4:0", ctx(EvalAlgebra::DZ, 3)), std::out_of_range);
}

TEST(Expr, MixedAlgebrasRejected) {
  EXPECT_THROW(evaluate("W1 * E1", ctx(EvalAlgebra::XTorus, 3)), std::invalid_argument);
  EXPECT_THROW(evaluate("W1 / W1", ctx(EvalAlgebra::XTorus, 3)), std::invalid_argument);
}

class ExprRoundTrip : public ::testing::TestWithParam<EvalAlgebra> {};

TEST_P(ExprRoundTrip, RenderReparses) {
  const EvalAlgebra alg = GetParam();
  const auto c = ctx(alg, 3);
  testgen::Rng rng(0xE7 + static_cast<int>(alg));
  for (int t = 0; t < 100; ++t) {
    EvalValue v;
    switch (alg) {
      case EvalAlgebra::XTorus:
        v = testgen::op_element(rng, xtorus());
        break;
      case EvalAlgebra::ZTrace:
        v = testgen::op_element(rng, ztrace());
        break;
      case EvalAlgebra::DZ:
        v = testgen::op_element(rng, dalg());
        break;
      case EvalAlgebra::Graded:
        v = testgen::graded_term(rng, 3, testgen::coweight(rng, 2, 2)) +
            testgen::graded_term(rng, 3, testgen::coweight(rng, 2, 2));
        break;
    }
    const std::string text = render(v, c);
    ASSERT_TRUE(same_value(evaluate(text, c), v, c)) << text;
  }
}

INSTANTIATE_TEST_SUITE_P(All, ExprRoundTrip,
                         ::testing::Values(EvalAlgebra::XTorus, EvalAlgebra::ZTrace, EvalAlgebra::DZ, EvalAlgebra::Graded));
