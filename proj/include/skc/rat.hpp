// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "skc/poly.hpp"

namespace skc {

/// Signed exponent vector over the full variable layout.
using Exps = std::array<int, kNumVars>;

/// How powers of s are spelled: q^{k/2}, or A^{-k} for Kauffman-bracket scalars.
enum class Style { Q, A };

/// Element of Q(vars) kept as num/den over Z with gcd(num, den) = 1 and a
/// positive leading coefficient in den.  Two equal values therefore have
/// identical representations.
class Rat {
 public:
  Rat() : den_(1) {}
  Rat(long c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
  Rat(const mpz_class& c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
  Rat(const mpq_class& c);  // NOLINT(google-explicit-constructor)
  Rat(Poly p) : num_(std::move(p)), den_(1) {}  // NOLINT(google-explicit-constructor)
  Rat(const Poly& num, const Poly& den);

  /// v^e for any integer e.
  static Rat var(int v, int e = 1);
  static Rat monomial(const Exps& e, const mpq_class& c = 1);
  /// Sum of Laurent terms.
  static Rat laurent(const std::vector<std::pair<Exps, mpq_class>>& terms);

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  mpq_class constant_value() const;
  /// True when the denominator is a single term.
  bool is_laurent() const { return den_.is_monomial(); }
  /// True when the denominator is a Scalar times a coordinate monomial, i.e. the
  /// value is a Laurent polynomial in the coordinates over the scalar field.
  bool is_coord_laurent() const;
  /// Terms of a Laurent polynomial; requires is_laurent().
  std::vector<std::pair<Exps, mpq_class>> laurent_terms() const;
  uint64_t support() const { return num_.support() | den_.support(); }

  Rat operator-() const;
  friend Rat operator+(const Rat& a, const Rat& b);
  friend Rat operator-(const Rat& a, const Rat& b);
  friend Rat operator*(const Rat& a, const Rat& b);
  friend Rat operator/(const Rat& a, const Rat& b);
  Rat& operator+=(const Rat& o) { return *this = *this + o; }
  Rat& operator-=(const Rat& o) { return *this = *this - o; }
  Rat& operator*=(const Rat& o) { return *this = *this * o; }
  Rat& operator/=(const Rat& o) { return *this = *this / o; }
  Rat inv() const;
  Rat pow(int e) const;

  friend bool operator==(const Rat& a, const Rat& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

  /// Automorphism v -> s^{w[v]} v on every variable (s itself must have w = 0).
  Rat twist(const Exps& w) const;
  /// Replace variable v by images[v] wherever images[v] is set.
  Rat substitute(const std::vector<std::optional<Rat>>& images) const;
  /// Value at a rational point; throws std::domain_error on a pole.
  mpq_class eval(const std::vector<mpq_class>& point) const;

  /// Canonical text; n spells the z_{n+1} variables.
  std::string to_string(Style style = Style::Q, int n = 0) const;

 private:
  struct Canonical {};
  Rat(Poly num, Poly den, Canonical) : num_(std::move(num)), den_(std::move(den)) {}
  Poly num_;
  Poly den_;
};

/// Render a polynomial with the same token conventions as Rat::to_string.
std::string poly_to_string(const Poly& p, Style style, int n);

/// Text of a single Laurent monomial ("" for the unit monomial).
std::string monomial_to_string(const Exps& e, Style style, int n);

}  // namespace skc
