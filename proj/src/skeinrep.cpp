// SPDX-License-Identifier: Apache-2.0
#include "skc/skeinrep.hpp"

#include <sstream>
#include <stdexcept>

#include "skc/scalars.hpp"

namespace skc {

SurfaceParams::SurfaceParams(int n_) : n(n_) {
  if (n < 2 || n > kMaxN)
    throw std::out_of_range("surface parameter n must lie in 2.." + std::to_string(kMaxN) + ", got " +
                            std::to_string(n));
}

void GeneratorId::check(const SurfaceParams& p) const {
  const bool ok = kind == GenKind::Delta ? (i >= 0 && i <= p.n + 1) : (i >= 1 && i <= p.n - 1);
  if (!ok) throw std::out_of_range("generator " + to_string() + " out of range for n=" + std::to_string(p.n));
}

std::string GeneratorId::to_string() const {
  switch (kind) {
    case GenKind::Gamma:
      return "gamma:" + std::to_string(i);
    case GenKind::Delta:
      return "delta:" + std::to_string(i);
    case GenKind::Sigma:
      return "sigma:" + std::to_string(i);
    case GenKind::Theta:
      return "theta:" + std::to_string(i) + ":" + std::to_string(m);
  }
  return "?";
}

GeneratorId GeneratorId::parse(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ':');) parts.push_back(item);
  auto num = [&](size_t k) {
    size_t used = 0;
    int v = std::stoi(parts.at(k), &used);
    if (used != parts[k].size()) throw std::invalid_argument("bad index in generator '" + text + "'");
    return v;
  };
  try {
    if (parts.size() == 2 && parts[0] == "gamma") return {GenKind::Gamma, num(1)};
    if (parts.size() == 2 && parts[0] == "delta") return {GenKind::Delta, num(1)};
    if (parts.size() == 2 && parts[0] == "sigma") return {GenKind::Sigma, num(1)};
    if (parts.size() == 3 && parts[0] == "theta") return {GenKind::Theta, num(1), num(2)};
  } catch (const std::logic_error&) {
  }
  throw std::invalid_argument("unrecognized generator '" + text + "'");
}

namespace {

Rat C_(int l) { return Rat::var(var::C(l)); }

// Q_k with the boundary replacements Q_0 -> C_0 and Q_n -> C_{n+1}.
Rat Qb(int k, int n) {
  if (k == 0) return C_(0);
  if (k == n) return C_(n + 1);
  return Rat::var(var::Q(k));
}

// X_k with X_0 -> t_0 and X_n -> t_{n+1}.
Rat Xb(int k, int n) {
  if (k == 0) return t_pow(0, 1);
  if (k == n) return t_pow(n + 1, 1);
  return X_pow(k, 1);
}

Rat u(const Rat& x) { return x - x.inv(); }

OpElement gamma_x(int i) { return OpElement(xtorus(), -X_pow(i, 1) - X_pow(i, -1)); }
OpElement delta_x(int j) { return OpElement(xtorus(), -t_pow(j, 1) - t_pow(j, -1)); }

// gamma_k as a curve on the surface, with gamma_0 -> delta_0 and gamma_n -> delta_{n+1}.
OpElement gamma_or_boundary(int k, int n) {
  if (k == 0) return delta_x(0);
  if (k == n) return delta_x(n + 1);
  return gamma_x(k);
}

}  // namespace

OpElement upsilon(const GeneratorId& g, const SurfaceParams& p) {
  g.check(p);
  const AlgebraSpec& Z = ztrace();
  const Rat A2 = A_pow(2), Am2 = A_pow(-2);
  switch (g.kind) {
    case GenKind::Gamma: {
      Rat Q = Rat::var(var::Q(g.i));
      return OpElement(Z, -A2 * Q.pow(2) - Am2 * Q.pow(-2));
    }
    case GenKind::Delta: {
      Rat C = C_(g.i);
      return OpElement(Z, -A2 * C.pow(2) - Am2 * C.pow(-2));
    }
    case GenKind::Sigma: {
      const int i = g.i, n = p.n;
      const Rat Ci = C_(i), Ci1 = C_(i + 1);
      const Rat Qm = Qb(i - 1, n), Q = Qb(i, n), Qp = Qb(i + 1, n);
      const Rat A4 = A_pow(4), Q2 = Q.pow(2);
      Rat H2 = -(u(A2 * Ci.inv() * Qm * Q) * u(A2 * Ci1.inv() * Qp * Q) * u(Ci * Qm / Q) * u(Ci1 * Qp / Q)) /
               (u(A2 * Q2) * u(A4 * Q2));
      Rat Hm2 = -(u(A2 * Ci * Qm * Q) * u(Ci * Q / Qm) * u(A2 * Ci1 * Qp * Q) * u(Ci1 * Q / Qp)) /
                (u(Q2) * u(A2 * Q2));
      Rat H0 = -H2 - Hm2 - A2 * Ci.pow(2) * Ci1.pow(2) - Am2 * Ci.pow(-2) * Ci1.pow(-2);
      const int e = i - 1;
      return OpElement::shift(Z, e, 2) * OpElement(Z, H2) + OpElement(Z, H0) +
             OpElement::shift(Z, e, -2) * OpElement(Z, Hm2);
    }
    case GenKind::Theta:
      break;
  }
  throw std::invalid_argument("upsilon: no formula for " + g.to_string());
}

Rat t_coeff(int i, int arg, const SurfaceParams& p) {
  if (i < 1 || i > p.n - 1) throw std::out_of_range("t_coeff: index " + std::to_string(i) + " out of range");
  if (arg != 1 && arg != -1) throw std::invalid_argument("t_coeff: argument must be X_i or X_i^{-1}");
  const int n = p.n;
  const Rat q = q_pow(1), x = X_pow(i, arg);
  const Rat ti = t_pow(i, 1), ti1 = t_pow(i + 1, 1);
  const Rat Xm = Xb(i - 1, n), Xp = Xb(i + 1, n);
  Rat num = (Rat(1) - q * ti * Xm * x) * (Rat(1) - q * ti * Xm.inv() * x) * (Rat(1) - q * ti1 * Xp * x) *
            (Rat(1) - q * ti1 * Xp.inv() * x);
  Rat den = (Rat(1) - x.pow(2)) * (Rat(1) - q.pow(2) * x.pow(2));
  return -q_pow(-1) * t_pow(i, -1) * t_pow(i + 1, -1) * num / den;
}

OpElement tau(int i) { return OpElement::shift(xtorus(), i - 1, 2, q_pow(-2) * X_pow(i, -2)); }

OpElement theta_principal(int i, int m, const SurfaceParams& p) {
  if (i < 1 || i > p.n - 1) throw std::out_of_range("theta_principal: index out of range");
  const AlgebraSpec& X = xtorus();
  const OpElement one(X, Rat(1));
  const OpElement t = tau(i);
  const Rat cp = q_pow(m) * X_pow(i, m) * t_coeff(i, 1, p);
  const Rat cm = q_pow(m) * X_pow(i, -m) * t_coeff(i, -1, p);
  return OpElement(X, cp) * (t - one) + OpElement(X, cm) * (t.inverse() - one);
}

OpElement phi(const GeneratorId& g, const SurfaceParams& p) {
  g.check(p);
  switch (g.kind) {
    case GenKind::Gamma:
      return gamma_x(g.i);
    case GenKind::Delta:
      return delta_x(g.i);
    case GenKind::Sigma: {
      const int i = g.i;
      Rat c = -q_pow(1) * t_pow(i, 1) * t_pow(i + 1, 1) - q_pow(-1) * t_pow(i, -1) * t_pow(i + 1, -1);
      return theta_principal(i, 0, p) + OpElement(xtorus(), c);
    }
    case GenKind::Theta:
      break;
  }
  throw std::invalid_argument("phi: no direct formula for " + g.to_string());
}

OpElement theta_one(int i, const SurfaceParams& p) {
  if (i < 1 || i > p.n - 1) throw std::out_of_range("theta_one: index out of range");
  const AlgebraSpec& X = xtorus();
  const OpElement g = gamma_x(i);
  const OpElement th0 = phi({GenKind::Sigma, i}, p);
  const OpElement L = gamma_or_boundary(i - 1, p.n) * delta_x(i + 1) + gamma_or_boundary(i + 1, p.n) * delta_x(i);
  const Rat q = q_pow(1), qi = q_pow(-1);
  OpElement rhs = OpElement(X, qi) * g * th0 - OpElement(X, q) * th0 * g + OpElement(X, qi - q) * L;
  return (q_pow(-2) - q_pow(2)).inv() * rhs;
}

bool verify_theta_one(int i, const SurfaceParams& p) {
  const OpElement d = theta_one(i, p) - theta_principal(i, 1, p);
  if (!d.shift_free()) return false;
  const Rat c = d.constant_part();
  if (!c.is_coord_laurent()) return false;
  for (int j = 1; j < p.n; ++j)
    if (!invariant_under_inversion(c, {j})) return false;
  return true;
}

OpElement star(const OpElement& a) {
  if (&a.spec() != &ztrace()) throw std::invalid_argument("star expects an element of the Z algebra");
  static const AntiMap table = [] {
    AntiMap m;
    m.target = &xtorus();
    m.coord_images[var::s] = Rat::var(var::s, -1);  // A -> q^{1/2}
    for (int l = 0; l <= kMaxN + 1; ++l) {
      Exps e{};
      e[var::s] = -1;
      e[var::u(l)] = -1;
      m.coord_images[var::C(l)] = Rat::monomial(e);
    }
    for (int i = 1; i < kMaxN; ++i) {
      Exps e{};
      e[var::s] = -1;
      e[var::x(i)] = 1;
      m.coord_images[var::Q(i)] = Rat::monomial(e);
      Exps f{};
      f[var::s] = -1;
      f[var::x(i)] = -2;
      m.shift_images.push_back(OpElement::shift(xtorus(), i - 1, 1, Rat::monomial(f)));
    }
    return m;
  }();
  return apply_antimap(a, table);
}

bool verify_factorization(const GeneratorId& g, const SurfaceParams& p) { return star(upsilon(g, p)) == phi(g, p); }

Mat4 skein_matrix(const Rat& d) {
  const Rat a = A_pow(2), b = A_pow(-2);
  return {{{b, a, d, 0}, {a, b, d, 0}, {d, 0, a, b}, {d, 0, b, a}}};
}

Rat skein_matrix_det(const Rat& delta_sym) { return det4(skein_matrix(delta_sym)); }

}  // namespace skc
