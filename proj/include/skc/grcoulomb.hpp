// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "skc/rat.hpp"
#include "skc/scalars.hpp"
#include "skc/skeinrep.hpp"

namespace skc {

/// Dominant coweight (lambda_1..lambda_{n-1}) of the torus; entry k-1 belongs to alpha_k.
class Coweight {
 public:
  Coweight() = default;
  /// Throws std::invalid_argument on a negative entry.
  explicit Coweight(std::vector<int> v);
  /// Zero coweight of rank r.
  static Coweight zero(int r) { return Coweight(std::vector<int>(r, 0)); }
  /// alpha_{i,j} = alpha_i + ... + alpha_j in rank r.
  static Coweight alpha(int i, int j, int r);

  int rank() const { return static_cast<int>(v_.size()); }
  /// lambda_k for 1 <= k <= rank.
  int at(int k) const { return v_.at(k - 1); }
  const std::vector<int>& entries() const { return v_; }
  std::vector<int> support() const;
  bool is_zero() const;

  Coweight operator+(const Coweight& o) const;
  Coweight scaled(int k) const;
  auto operator<=>(const Coweight&) const = default;
  bool operator==(const Coweight&) const = default;

  /// "[l1,l2,...]".
  std::string to_string() const;

 private:
  std::vector<int> v_;
};

/// One T x T_F weight of the matter representation: eps over omega_1..omega_{n-1},
/// zeta over eta_0..eta_{n+1}.
struct WeightDatum {
  std::vector<int> eps;
  std::vector<int> zeta;
  int pair(const Coweight& l) const;
  bool operator==(const WeightDatum&) const = default;
};

/// The 4n weights of N = sum_j N_j (x) N_{j+1}.
std::vector<WeightDatum> weights(const SurfaceParams& p);

/// Product over all weights of the A-factors of f r_lambda * g r_mu.
Rat a_factor(const Coweight& lambda, const Coweight& mu, const SurfaceParams& p);

/// Finite sum of f_lambda r_lambda with f_lambda Laurent in X over the scalars.
class GradedElement {
 public:
  explicit GradedElement(int n) : n_(n) {}
  /// f * r_lambda.
  static GradedElement basis(int n, const Coweight& lambda, const Rat& f = 1);

  int n() const { return n_; }
  const std::map<Coweight, Rat>& terms() const { return t_; }
  Rat coeff(const Coweight& lambda) const;
  bool is_zero() const { return t_.empty(); }

  GradedElement operator-() const;
  friend GradedElement operator+(const GradedElement& a, const GradedElement& b);
  friend GradedElement operator-(const GradedElement& a, const GradedElement& b);
  friend GradedElement operator*(const Rat& c, const GradedElement& a);
  GradedElement& operator+=(const GradedElement& o) { return *this = *this + o; }
  friend bool operator==(const GradedElement& a, const GradedElement& b) { return a.n_ == b.n_ && a.t_ == b.t_; }

  /// Every f_lambda is Laurent in X and fixed by X_j -> X_j^{-1} for j outside supp(lambda).
  bool valid() const;

  /// "coef * r[..] + ...", largest coweights first.
  std::string to_string() const;

 private:
  void add_term(const Coweight& l, const Rat& c);
  int n_;
  std::map<Coweight, Rat> t_;
};

/// f r_lambda * g r_mu = a_factor(lambda, mu) f shift(g, lambda) r_{lambda+mu}, extended bilinearly.
GradedElement gr_mul(const GradedElement& a, const GradedElement& b, const SurfaceParams& p);

/// Multiply each f_lambda by q^{sign lambda_k} X_k^{sign}; throws std::invalid_argument
/// if some lambda in the support has lambda_k = 0.
GradedElement twist(const GradedElement& a, int k, int sign);

/// -q^{i-j-1} t_i^{-1} t_{i+1}^{-3} ... t_j^{-3} t_{j+1}^{-1} X_i^{-2} ... X_j^{-2} r_{alpha_{i,j}}.
GradedElement sigma_closed_form(int i, int j, const SurfaceParams& p);

/// The 4x4 Coulomb matrix relating (sigma' rho, rho sigma', mu nu, nu mu) to
/// (zeta, eta, sigma, tau); delta = -t_j - t_j^{-1}.
Mat4 coulomb_matrix(int j);

/// The sigma-curve image obtained by running the matrix recursion from sigma_closed_form(i,i).
GradedElement solve_sigma(int i, int j, const SurfaceParams& p);

enum class DressKind { EF, FE };

/// Graded symbol of E_{i,1}[x^k] F_{i,1}[1] (EF) or F_{i,1}[x^k] E_{i,1}[1] (FE).
GradedElement gr_symbol_dressed(int i, int k, DressKind kind, const SurfaceParams& p);

}  // namespace skc
