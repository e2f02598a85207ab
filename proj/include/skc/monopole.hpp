// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <utility>

#include "skc/qdiff.hpp"
#include "skc/skeinrep.hpp"

namespace skc {

/// Dressed minuscule monopole operator E_{i,1}[x^m] in D_{q,z}.
OpElement monopole_E(int i, int m, const SurfaceParams& p);
/// Dressed minuscule monopole operator F_{i,1}[x^m] in D_{q,z}.
OpElement monopole_F(int i, int m, const SurfaceParams& p);

/// True iff every term has equal and opposite exponents of D_{i,+} and D_{i,-}.
bool torus_invariant(const OpElement& a);

/// Embedding of torus-invariant elements of D_{q,z} into X_{q,t}.  Throws
/// std::invalid_argument naming the first unbalanced monomial.
OpElement psi(const OpElement& a, const SurfaceParams& p);

/// B_i = -q^{-1} z_i^{-1} z_{i+1}^{-1}.
Rat monopole_B(int i);

/// Psi of the dressed product paired with theta_{i,m}: q^m B_i E[x^{m-2}] F[1]
/// for even i, q^{4-m} B_i F[x^{2-m}] E[1] for odd i.
OpElement dressed_theta(int i, int m, const SurfaceParams& p);

/// dressed_theta(i,m) - theta_principal(i,m): the remainder C_{i,m} transported to X.
OpElement phi_psi_remainder(int i, int m, const SurfaceParams& p);

/// Remainder is shift-free and invariant under X_j -> X_j^{-1} for every j.
bool verify_phi_psi(int i, int m, const SurfaceParams& p);

/// [E_{i,1}[1], F_{i,1}[1]] = (q - q^{-1}) h with h D-free, Laurent and w-swap symmetric.
/// Returns the verdict and h (zero when the commutator has a D-part).
std::pair<bool, Rat> verify_EF_commutator(int i, const SurfaceParams& p);

/// Invariance of a coefficient under w_{j,+} <-> w_{j,-} for every j.
bool w_swap_symmetric(const Rat& c);

}  // namespace skc
