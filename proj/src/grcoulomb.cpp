// SPDX-License-Identifier: Apache-2.0
#include "skc/grcoulomb.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace skc {

Coweight::Coweight(std::vector<int> v) : v_(std::move(v)) {
  for (int e : v_)
    if (e < 0) throw std::invalid_argument("coweight entries must be nonnegative: " + to_string());
}

Coweight Coweight::alpha(int i, int j, int r) {
  if (i < 1 || j < i || j > r)
    throw std::out_of_range("alpha_{" + std::to_string(i) + "," + std::to_string(j) + "} out of range for rank " +
                            std::to_string(r));
  std::vector<int> v(r, 0);
  for (int k = i; k <= j; ++k) v[k - 1] = 1;
  return Coweight(std::move(v));
}

std::vector<int> Coweight::support() const {
  std::vector<int> s;
  for (int k = 1; k <= rank(); ++k)
    if (at(k)) s.push_back(k);
  return s;
}

bool Coweight::is_zero() const {
  return std::all_of(v_.begin(), v_.end(), [](int e) { return e == 0; });
}

Coweight Coweight::operator+(const Coweight& o) const {
  if (o.rank() != rank()) throw std::invalid_argument("coweight rank mismatch");
  std::vector<int> v(v_);
  for (int k = 0; k < rank(); ++k) v[k] += o.v_[k];
  return Coweight(std::move(v));
}

Coweight Coweight::scaled(int k) const {
  std::vector<int> v(v_);
  for (int& e : v) e *= k;
  return Coweight(std::move(v));
}

std::string Coweight::to_string() const {
  std::string s = "[";
  for (size_t k = 0; k < v_.size(); ++k) s += (k ? "," : "") + std::to_string(v_[k]);
  return s + "]";
}

int WeightDatum::pair(const Coweight& l) const {
  int r = 0;
  for (int k = 1; k <= l.rank(); ++k) r += eps.at(k - 1) * l.at(k);
  return r;
}

std::vector<WeightDatum> weights(const SurfaceParams& p) {
  const int n = p.n, r = n - 1;
  std::vector<WeightDatum> out;
  auto datum = [&](std::vector<std::pair<int, int>> e, std::vector<std::pair<int, int>> z) {
    WeightDatum w{std::vector<int>(r, 0), std::vector<int>(n + 2, 0)};
    for (auto [k, c] : e) w.eps[k - 1] += c;
    for (auto [k, c] : z) w.zeta[k] += c;
    out.push_back(std::move(w));
  };
  for (int j = 0; j <= n - 1; ++j) {
    for (int a : {1, -1})
      for (int b : {1, -1}) {
        // Boundary summands have a single T-factor; their second sign sits on the outer flavor.
        if (j == 0)
          datum({{1, a}}, {{0, b}, {1, 1}});
        else if (j == n - 1)
          datum({{n - 1, a}}, {{n + 1, b}, {n, 1}});
        else
          datum({{j, a}, {j + 1, b}}, {{j + 1, 1}});
      }
  }
  return out;
}

namespace {

// e^{-eps-zeta} q^{k/2}, written in the base variables.
Rat weight_monomial(const WeightDatum& w, int s_exp) {
  Exps e{};
  e[var::s] = s_exp;
  for (size_t k = 0; k < w.eps.size(); ++k) e[var::x(static_cast<int>(k) + 1)] = -2 * w.eps[k];
  for (size_t k = 0; k < w.zeta.size(); ++k) e[var::u(static_cast<int>(k))] = -2 * w.zeta[k];
  return Rat::monomial(e);
}

void check_rank(const Coweight& l, const SurfaceParams& p) {
  if (l.rank() != p.n - 1)
    throw std::invalid_argument("coweight " + l.to_string() + " has wrong rank for n=" + std::to_string(p.n));
}

}  // namespace

Rat a_factor(const Coweight& lambda, const Coweight& mu, const SurfaceParams& p) {
  check_rank(lambda, p);
  check_rank(mu, p);
  Rat r = 1;
  for (const WeightDatum& w : weights(p)) {
    const int a = w.pair(lambda), b = w.pair(mu);
    if (a > 0 && b < 0) {
      // q^{-2(a-j+1/2)} = s^{-4(a-j)-2}
      for (int j = 1; j <= std::min(a, -b); ++j) r *= Rat(1) - weight_monomial(w, -4 * (a - j) - 2);
    } else if (a < 0 && b > 0) {
      // q^{-2(a+j-1/2)} = s^{-4(a+j)+2}
      for (int j = 1; j <= std::min(-a, b); ++j) r *= Rat(1) - weight_monomial(w, -4 * (a + j) + 2);
    }
  }
  return r;
}

GradedElement GradedElement::basis(int n, const Coweight& lambda, const Rat& f) {
  if (lambda.rank() != n - 1) throw std::invalid_argument("coweight rank does not match n=" + std::to_string(n));
  GradedElement g(n);
  g.add_term(lambda, f);
  return g;
}

void GradedElement::add_term(const Coweight& l, const Rat& c) {
  if (c.is_zero()) return;
  auto it = t_.find(l);
  if (it == t_.end()) {
    t_.emplace(l, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) t_.erase(it);
}

Rat GradedElement::coeff(const Coweight& lambda) const {
  auto it = t_.find(lambda);
  return it == t_.end() ? Rat() : it->second;
}

GradedElement GradedElement::operator-() const {
  GradedElement r(n_);
  for (const auto& [l, c] : t_) r.t_.emplace(l, -c);
  return r;
}

GradedElement operator+(const GradedElement& a, const GradedElement& b) {
  if (a.n_ != b.n_) throw std::invalid_argument("graded elements for different n");
  GradedElement r = a;
  for (const auto& [l, c] : b.t_) r.add_term(l, c);
  return r;
}

GradedElement operator-(const GradedElement& a, const GradedElement& b) { return a + (-b); }

GradedElement operator*(const Rat& c, const GradedElement& a) {
  GradedElement r(a.n_);
  for (const auto& [l, f] : a.t_) r.add_term(l, c * f);
  return r;
}

bool GradedElement::valid() const {
  for (const auto& [l, f] : t_) {
    if (!f.is_coord_laurent()) return false;
    for (int j = 1; j <= l.rank(); ++j)
      if (!l.at(j) && !invariant_under_inversion(f, {j})) return false;
  }
  return true;
}

std::string GradedElement::to_string() const {
  if (t_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
    std::string coef = it->second.to_string(Style::Q, n_);
    std::string piece;
    if (coef == "1") {
      piece = "r" + it->first.to_string();
    } else if (coef == "-1") {
      piece = "-r" + it->first.to_string();
    } else {
      if (coef.find(' ') != std::string::npos && coef.front() != '(') coef = "(" + coef + ")";
      piece = coef + " * r" + it->first.to_string();
    }
    if (first)
      out = piece;
    else if (piece.front() == '-')
      out += " - " + piece.substr(1);
    else
      out += " + " + piece;
    first = false;
  }
  return out;
}

GradedElement gr_mul(const GradedElement& a, const GradedElement& b, const SurfaceParams& p) {
  if (a.n() != p.n || b.n() != p.n) throw std::invalid_argument("gr_mul: operand n does not match");
  GradedElement r(p.n);
  for (const auto& [la, f] : a.terms())
    for (const auto& [lb, g] : b.terms())
      r += GradedElement::basis(p.n, la + lb, a_factor(la, lb, p) * f * shift(g, la.entries()));
  return r;
}

GradedElement twist(const GradedElement& a, int k, int sign) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("twist: sign must be +1 or -1");
  GradedElement r(a.n());
  for (const auto& [l, f] : a.terms()) {
    if (k < 1 || k > l.rank() || l.at(k) == 0)
      throw std::invalid_argument("twist at k=" + std::to_string(k) + " needs lambda_k != 0, got " + l.to_string());
    r += GradedElement::basis(a.n(), l, q_pow(sign * l.at(k)) * X_pow(k, sign) * f);
  }
  return r;
}

namespace {

void check_ij(int i, int j, const SurfaceParams& p, const char* who) {
  if (i < 1 || j < i || j > p.n - 2)
    throw std::out_of_range(std::string(who) + ": need 1 <= i <= j <= n-2, got (" + std::to_string(i) + "," +
                            std::to_string(j) + ") for n=" + std::to_string(p.n));
}

}  // namespace

GradedElement sigma_closed_form(int i, int j, const SurfaceParams& p) {
  check_ij(i, j, p, "sigma_closed_form");
  Rat c = -q_pow(i - j - 1) * t_pow(i, -1) * t_pow(j + 1, -1);
  for (int k = i + 1; k <= j; ++k) c *= t_pow(k, -3);
  for (int k = i; k <= j; ++k) c *= X_pow(k, -2);
  return GradedElement::basis(p.n, Coweight::alpha(i, j, p.n - 1), c);
}

Mat4 coulomb_matrix(int j) {
  const Rat q = q_pow(1), qi = q_pow(-1), d = -t_pow(j, 1) - t_pow(j, -1);
  return {{{q, qi, d, 0}, {qi, q, d, 0}, {d, 0, qi, q}, {d, 0, q, qi}}};
}

GradedElement solve_sigma(int i, int j, const SurfaceParams& p) {
  check_ij(i, j, p, "solve_sigma");
  if (i == j) return sigma_closed_form(i, i, p);
  const GradedElement sp = solve_sigma(i, j - 1, p);
  const GradedElement rho = solve_sigma(j, j, p);
  const GradedElement mu = twist(sp, j - 1, 1);
  const GradedElement nu = twist(rho, j, -1);
  const GradedElement lhs[4] = {gr_mul(sp, rho, p), gr_mul(rho, sp, p), gr_mul(mu, nu, p), gr_mul(nu, mu, p)};
  const Mat4 inv = inverse4(coulomb_matrix(j));
  GradedElement out(p.n);
  for (int k = 0; k < 4; ++k) out += inv[2][k] * lhs[k];
  return out;
}

GradedElement gr_symbol_dressed(int i, int k, DressKind kind, const SurfaceParams& p) {
  if (i < 1 || i > p.n - 1) throw std::out_of_range("gr_symbol_dressed: index out of range");
  const Coweight a = Coweight::alpha(i, i, p.n - 1);
  if (kind == DressKind::EF) return GradedElement::basis(p.n, a, X_pow(i, k));
  return GradedElement::basis(p.n, a, q_pow(-2 * k) * X_pow(i, -k));
}

}  // namespace skc
