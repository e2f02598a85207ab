// SPDX-License-Identifier: Apache-2.0
#include "skc/monopole.hpp"

#include <stdexcept>

#include "skc/scalars.hpp"

namespace skc {

namespace {

int d_index(int i, int eps) { return 2 * (i - 1) + (eps > 0 ? 0 : 1); }

// w_{k,eps} with w_{0,+-} -> z_{0,+-} and w_{n,+-} -> z_{n+1,+-}.
Rat wb(int k, int eps, int n) {
  if (k == 0) return Rat::var(eps > 0 ? var::z0p : var::z0m);
  if (k == n) return Rat::var(eps > 0 ? var::zLp : var::zLm);
  return Rat::var(eps > 0 ? var::wp(k) : var::wm(k));
}

Rat zv(int j) { return Rat::var(var::z(j)); }

void check_index(int i, const SurfaceParams& p) {
  if (i < 1 || i > p.n - 1)
    throw std::out_of_range("monopole index " + std::to_string(i) + " out of range for n=" + std::to_string(p.n));
}

// Numerator shared by P (even i) and Q (odd i).
Rat four_factors(int i, int eps, const SurfaceParams& p, bool even) {
  const int n = p.n;
  const Rat q = q_pow(1), w = wb(i, eps, n);
  Rat r = 1;
  for (int side : {-1, 1}) {
    const Rat z = zv(side < 0 ? i : i + 1);
    for (int s : {1, -1}) {
      const Rat nb = wb(i + side, s, n);
      r *= Rat(1) - (even ? q * z * w / nb : q * z * nb / w);
    }
  }
  return r;
}

Rat P_coeff(int i, int eps, const SurfaceParams& p) {
  const bool even = i % 2 == 0;
  const Rat den = Rat(1) - wb(i, -eps, p.n) / wb(i, eps, p.n);
  return (even ? four_factors(i, eps, p, true) : Rat(1)) / den;
}

Rat Q_coeff(int i, int eps, const SurfaceParams& p) {
  const bool even = i % 2 == 0;
  const Rat den = Rat(1) - wb(i, eps, p.n) / wb(i, -eps, p.n);
  return (even ? Rat(1) : four_factors(i, eps, p, false)) / den;
}

}  // namespace

OpElement monopole_E(int i, int m, const SurfaceParams& p) {
  check_index(i, p);
  OpElement r(dalg());
  for (int eps : {1, -1})
    r += OpElement::shift(dalg(), d_index(i, eps), 1, wb(i, eps, p.n).pow(m) * P_coeff(i, eps, p));
  return r;
}

OpElement monopole_F(int i, int m, const SurfaceParams& p) {
  check_index(i, p);
  OpElement r(dalg());
  for (int eps : {1, -1})
    r += OpElement::shift(dalg(), d_index(i, eps), -1, q_pow(-2 * m) * wb(i, eps, p.n).pow(m) * Q_coeff(i, eps, p));
  return r;
}

bool torus_invariant(const OpElement& a) {
  for (const auto& [k, c] : a.terms())
    for (size_t j = 0; j + 1 < k.size(); j += 2)
      if (k[j] + k[j + 1] != 0) return false;
  return true;
}

OpElement psi(const OpElement& a, const SurfaceParams& p) {
  if (&a.spec() != &dalg()) throw std::invalid_argument("psi expects an element of the D algebra");
  const int n = p.n;
  std::vector<std::optional<Rat>> img(kNumVars);
  for (int i = 1; i < n; ++i) {
    img[var::wp(i)] = X_pow(i, 1);
    img[var::wm(i)] = X_pow(i, -1);
  }
  for (int j = 1; j <= n; ++j) img[var::z(j)] = t_pow(j, 1);
  img[var::z0p] = t_pow(0, 1);
  img[var::z0m] = t_pow(0, -1);
  img[var::zLp] = t_pow(n + 1, 1);
  img[var::zLm] = t_pow(n + 1, -1);
  const AlgebraSpec& X = xtorus();
  OpElement out(X);
  for (const auto& [k, c] : a.terms()) {
    OpElement term(X, c.substitute(img));
    for (size_t j = 0; j + 1 < k.size(); j += 2) {
      if (k[j] + k[j + 1] != 0) {
        OpElement bad = OpElement::term(dalg(), k, c);
        throw std::invalid_argument("psi: monomial is not torus-invariant: " + bad.to_string(n));
      }
      if (!k[j]) continue;
      const int i = static_cast<int>(j / 2) + 1;
      // D_{i,+} D_{i,-}^{-1} -> q^{-4} X_i^{-4} varpi_i^2
      term *= OpElement::shift(X, i - 1, 2, q_pow(-4) * X_pow(i, -4)).pow(k[j]);
    }
    out += term;
  }
  return out;
}

Rat monopole_B(int i) { return -q_pow(-1) * zv(i).inv() * zv(i + 1).inv(); }

OpElement dressed_theta(int i, int m, const SurfaceParams& p) {
  check_index(i, p);
  const AlgebraSpec& D = dalg();
  OpElement prod = i % 2 == 0
                       ? OpElement(D, q_pow(m) * monopole_B(i)) * monopole_E(i, m - 2, p) * monopole_F(i, 0, p)
                       : OpElement(D, q_pow(4 - m) * monopole_B(i)) * monopole_F(i, 2 - m, p) * monopole_E(i, 0, p);
  return psi(prod, p);
}

OpElement phi_psi_remainder(int i, int m, const SurfaceParams& p) {
  return dressed_theta(i, m, p) - theta_principal(i, m, p);
}

bool verify_phi_psi(int i, int m, const SurfaceParams& p) {
  OpElement r = phi_psi_remainder(i, m, p);
  if (!r.shift_free()) return false;
  std::vector<int> all;
  for (int j = 1; j < p.n; ++j) all.push_back(j);
  const Rat c = r.constant_part();
  for (int j : all)
    if (!invariant_under_inversion(c, {j})) return false;
  return true;
}

bool w_swap_symmetric(const Rat& c) {
  for (int j = 1; j < kMaxN; ++j) {
    if (!(c.support() >> var::wp(j) & 1) && !(c.support() >> var::wm(j) & 1)) continue;
    std::vector<std::optional<Rat>> img(kNumVars);
    img[var::wp(j)] = Rat::var(var::wm(j));
    img[var::wm(j)] = Rat::var(var::wp(j));
    if (c.substitute(img) != c) return false;
  }
  return true;
}

std::pair<bool, Rat> verify_EF_commutator(int i, const SurfaceParams& p) {
  const OpElement E = monopole_E(i, 0, p), F = monopole_F(i, 0, p);
  const OpElement comm = E * F - F * E;
  if (!comm.shift_free()) return {false, Rat()};
  Rat h = comm.constant_part() / (q_pow(1) - q_pow(-1));
  return {h.is_coord_laurent() && w_swap_symmetric(h), h};
}

}  // namespace skc
