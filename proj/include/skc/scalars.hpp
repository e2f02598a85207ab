// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <vector>

#include "skc/rat.hpp"

namespace skc {

/// A^k, with A = s^{-1} = q^{-1/2}.
Rat A_pow(int k);
/// q^k = s^{2k}.
Rat q_pow(int k);
/// t_j^k.
Rat t_pow(int j, int k);
/// X_i^k.
Rat X_pow(int i, int k);

/// Quantum integer [k] = (A^{2k} - A^{-2k}) / (A^2 - A^{-2}).
Rat qint(int k);
/// [k]! = [1][2]...[k]; throws std::invalid_argument for k < 0.
Rat qfact(int k);

/// Edge colors (a, b, opp) at the n trivalent vertices of the ladder graph with
/// internal colors c = (c_1..c_{n-1}) and boundary colors d = (d_0..d_{n+1}).
std::vector<std::array<int, 3>> ladder_vertices(const std::vector<int>& c, const std::vector<int>& d);

/// Nonnegative, even sum, and each color at most the sum of the other two.
bool admissible_triple(int a, int b, int c);

/// Normalizing factor of a ladder-graph coloring with internal colors
/// c = (c_1..c_{n-1}) and boundary colors d = (d_0..d_{n+1}).  Throws
/// std::invalid_argument naming the first inadmissible vertex.
Rat kappa(const std::vector<int>& c, const std::vector<int>& d);

/// True iff p is fixed by X_j -> X_j^{-1} for all j in J simultaneously.
bool invariant_under_inversion(const Rat& p, const std::vector<int>& J);

/// X_j -> q^{2 lambda_j} X_j, where lambda[0] belongs to X_1.
Rat shift(const Rat& p, const std::vector<int>& lambda);

using Mat4 = std::array<std::array<Rat, 4>, 4>;

/// Determinant over the scalar field.
Rat det4(const Mat4& m);

/// Inverse over the scalar field; throws std::domain_error if singular.
Mat4 inverse4(const Mat4& m);

}  // namespace skc
