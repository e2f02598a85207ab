// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include <random>

#include "skc/poly.hpp"

using namespace skc;

namespace {

Poly random_poly(std::mt19937_64& rng, const std::vector<int>& vars, int terms, int maxdeg) {
  std::vector<Term> t;
  for (int k = 0; k < terms; ++k) {
    Mono m;
    for (int v : vars) m.set(v, static_cast<int>(rng() % (maxdeg + 1)));
    t.push_back({m, mpz_class(static_cast<long>(rng() % 19) - 9)});
  }
  return Poly::from_terms(std::move(t));
}

}  // namespace

TEST(Poly, ArithmeticBasics) {
  Poly x = Poly::var(var::x(1)), y = Poly::var(var::s);
  Poly a = (x + 1) * (x - 1);
  EXPECT_EQ(a, x * x - 1);
  EXPECT_EQ((x + y).pow(2), x * x + Poly(2) * x * y + y * y);
  auto q = a.divide_exact(x - 1);
  ASSERT_TRUE(q);
  EXPECT_EQ(*q, x + 1);
  EXPECT_FALSE((x * x + 1).divide_exact(x + 1));
  Poly c = (Poly(1) + x + x * x) * (Poly(1) - x);
  EXPECT_TRUE(c.divide_exact(Poly(1) + x + x * x));
}

TEST(Poly, GcdSmall) {
  Poly x = Poly::var(var::x(1)), s = Poly::var(var::s), y = Poly::var(var::u(2));
  Poly g = gcd((Poly(1) - x) * (Poly(1) + y), (Poly(1) - x) * (Poly(2) + s));
  EXPECT_EQ(g, x - 1);
  EXPECT_EQ(gcd(Poly(6) * x * x, Poly(4) * x * s), Poly(2) * x);
  EXPECT_EQ(gcd(x + 1, x - 1), Poly(1));
}

TEST(Poly, GcdPlantedFactors) {
  std::mt19937_64 rng(7);
  const std::vector<int> vars{var::s, var::u(1), var::x(1), var::x(2)};
  for (int trial = 0; trial < 60; ++trial) {
    Poly g = random_poly(rng, vars, 3, 2) + 1;
    Poly a = random_poly(rng, vars, 4, 2) + 2, b = random_poly(rng, vars, 4, 2) + 3;
    Poly ga = g * a, gb = g * b;
    Poly h = gcd(ga, gb);
    ASSERT_TRUE(h.divide_exact(g) || g.is_constant()) << trial;
    ASSERT_TRUE(ga.divide_exact(h));
    ASSERT_TRUE(gb.divide_exact(h));
    // cofactors must be coprime
    Poly ca = *ga.divide_exact(h), cb = *gb.divide_exact(h);
    ASSERT_TRUE(gcd(ca, cb).is_one()) << trial;
  }
}
