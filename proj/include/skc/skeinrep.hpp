// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <string>

#include "skc/qdiff.hpp"
#include "skc/scalars.hpp"

namespace skc {

/// Surface S_{0,n+2}; 2 <= n <= kMaxN.
struct SurfaceParams {
  int n;
  explicit SurfaceParams(int n);
};

enum class GenKind { Gamma, Delta, Sigma, Theta };

/// Curve generator: gamma_i, delta_j, sigma_{i,i+1}, or theta_{i,m}.
struct GeneratorId {
  GenKind kind;
  int i;
  int m = 0;

  /// Throws std::out_of_range if the index does not fit the surface.
  void check(const SurfaceParams& p) const;
  std::string to_string() const;
  /// Parse "gamma:i", "delta:j", "sigma:i" or "theta:i:m".
  static GeneratorId parse(const std::string& text);
};

/// Quantum trace image in Z_{A,C}.
OpElement upsilon(const GeneratorId& g, const SurfaceParams& p);

/// Polynomial representation image in X_{q,t}.
OpElement phi(const GeneratorId& g, const SurfaceParams& p);

/// T_i(X_i^{arg}) with the boundary substitutions X_0 -> t_0, X_n -> t_{n+1}.
Rat t_coeff(int i, int arg, const SurfaceParams& p);

/// tau_i = q^{-2} X_i^{-2} varpi_i^2.
OpElement tau(int i);

/// q^m X_i^m T_i(X_i)(tau_i - 1) + q^m X_i^{-m} T_i(X_i^{-1})(tau_i^{-1} - 1).
OpElement theta_principal(int i, int m, const SurfaceParams& p);

/// Image of theta_{i,1} obtained from the skein relation with gamma_i and theta_{i,0}.
OpElement theta_one(int i, const SurfaceParams& p);

/// theta_one(i) - theta_principal(i,1) is shift-free, a Laurent polynomial in the
/// X_j over the scalars, and invariant under every X_j -> X_j^{-1}.
bool verify_theta_one(int i, const SurfaceParams& p);

/// The anti-map *: Z_{A,C} -> X_{q,t}.
OpElement star(const OpElement& a);

/// star(upsilon(g)) == phi(g).
bool verify_factorization(const GeneratorId& g, const SurfaceParams& p);

/// The 4x4 skein matrix with entries A^{+-2}, delta and 0.
Mat4 skein_matrix(const Rat& delta);

/// det of the skein matrix.
Rat skein_matrix_det(const Rat& delta_sym);

}  // namespace skc
