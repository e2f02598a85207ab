// SPDX-License-Identifier: Apache-2.0
// Seeded generators for the property checks.
#pragma once

#include <random>
#include <vector>

#include "skc/grcoulomb.hpp"
#include "skc/qdiff.hpp"
#include "skc/rat.hpp"

namespace skc::gen {

using Rng = std::mt19937_64;

int pick(Rng& rng, int lo, int hi);

/// Random Laurent polynomial over vars with exponents in [-maxdeg, maxdeg].
Rat laurent(Rng& rng, const std::vector<int>& vars, int terms, int maxdeg);

/// Random ratio of small Laurent polynomials in s, u_1, u_2.
Rat scalar(Rng& rng);

/// Random ratio of small Laurent polynomials in s, X_1, X_2.
Rat coord_rat(Rng& rng);

/// Random nonzero rational point for every variable.
std::vector<mpq_class> point(Rng& rng);

/// Random element with up to `terms` terms, coefficient degree <= 2 and shift
/// exponents in [-2, 2] on the first two shift generators.
OpElement op_element(Rng& rng, const AlgebraSpec& spec, int terms = 3);

/// Random torus-invariant element of the D algebra (balanced D_{1,+-} exponents).
OpElement balanced_d(Rng& rng, int terms = 2);

/// Random coweight of rank r with entries in [0, maxe].
Coweight coweight(Rng& rng, int r, int maxe);

/// f r_lambda with f of degree <= 2, Laurent in X_j for j in supp(lambda) and
/// a polynomial in X_j + X_j^{-1} otherwise.
GradedElement graded_term(Rng& rng, int n, const Coweight& lambda);

}  // namespace skc::gen
