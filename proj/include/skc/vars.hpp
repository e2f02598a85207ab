// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>

namespace skc {

/// Largest surface parameter n supported by the fixed variable layout.
inline constexpr int kMaxN = 6;
inline constexpr int kNumVars = 48;

/// Fixed variable layout shared by every ring in the library.
///
/// Half-integer powers are handled by choosing square roots as the base
/// variables: s = q^{1/2}, u_j = t_j^{1/2}, x_i = X_i^{1/2}.  The Kauffman
/// variable A is s^{-1}.  Lower index means more significant in lex order.
namespace var {
inline constexpr int s = 0;
constexpr int u(int j) { return 1 + j; }  // j = 0..kMaxN+1
inline constexpr int B = 9;
constexpr int x(int i) { return 9 + i; }   // i = 1..kMaxN-1
constexpr int Q(int i) { return 14 + i; }  // i = 1..kMaxN-1
constexpr int C(int l) { return 20 + l; }  // l = 0..kMaxN+1
constexpr int wp(int i) { return 27 + i; }  // w_{i,+}
constexpr int wm(int i) { return 32 + i; }  // w_{i,-}
constexpr int z(int j) { return 37 + j; }   // j = 1..kMaxN
inline constexpr int z0p = 44;
inline constexpr int z0m = 45;
inline constexpr int zLp = 46;  // z_{n+1,+}
inline constexpr int zLm = 47;  // z_{n+1,-}

/// True for s, u_j and B: the atoms a Scalar may contain.
constexpr bool is_scalar_atom(int v) { return v <= B; }

/// Whether the canonical spelling of v carries halved exponents.
constexpr bool is_half(int v) { return v <= u(kMaxN + 1) || (v >= x(1) && v <= x(kMaxN - 1)); }
}  // namespace var

/// Canonical token for variable v (without exponent).  n is needed to spell
/// z_{n+1,+/-}; pass 0 when unknown.
std::string var_name(int v, int n = 0);

/// Inverse of var_name; returns -1 when the token is not a variable name.
int var_from_name(const std::string& tok, int n = 0);

}  // namespace skc
