// SPDX-License-Identifier: Apache-2.0
#include "skc/vars.hpp"

namespace skc {

std::string var_name(int v, int n) {
  using namespace var;
  if (v == s) return "q";
  if (v <= u(kMaxN + 1)) return "t" + std::to_string(v - u(0));
  if (v == B) return "B";
  if (v <= x(kMaxN - 1)) return "X" + std::to_string(v - x(0));
  if (v <= Q(kMaxN - 1)) return "Q" + std::to_string(v - Q(0));
  if (v <= C(kMaxN + 1)) return "C" + std::to_string(v - C(0));
  if (v <= wp(kMaxN - 1)) return "w" + std::to_string(v - wp(0)) + "p";
  if (v <= wm(kMaxN - 1)) return "w" + std::to_string(v - wm(0)) + "m";
  if (v <= z(kMaxN)) return "z" + std::to_string(v - z(0));
  if (v == z0p) return "z0p";
  if (v == z0m) return "z0m";
  const std::string idx = n > 0 ? std::to_string(n + 1) : "L";
  if (v == zLp) return "z" + idx + "p";
  if (v == zLm) return "z" + idx + "m";
  return "?";
}

int var_from_name(const std::string& tok, int n) {
  for (int v = 0; v < kNumVars; ++v)
    if (var_name(v, n) == tok) return v;
  if (n > 0) {
    if (tok == "zLp") return var::zLp;
    if (tok == "zLm") return var::zLm;
  }
  return -1;
}

}  // namespace skc
