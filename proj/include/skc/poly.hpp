// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <gmpxx.h>

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "skc/vars.hpp"

namespace skc {

/// Exponent vector with 16-bit fields packed four per word.  Variable 0 sits
/// in the most significant field, so comparing the words in order is
/// lexicographic comparison of exponent vectors.
class Mono {
 public:
  static constexpr int kWords = kNumVars / 4;
  static constexpr int kMaxExp = 0x7FFF;

  Mono() = default;

  int operator[](int v) const {
    return static_cast<int>((w_[v >> 2] >> shift(v)) & 0xFFFFu);
  }
  void set(int v, int e);

  bool is_one() const;
  int total_degree() const;
  /// Bitmask with bit v set when variable v occurs.
  uint64_t support() const;
  bool divides(const Mono& o) const;

  Mono operator*(const Mono& o) const;
  /// Requires divides(o).
  Mono operator/(const Mono& o) const;
  static Mono min(const Mono& a, const Mono& b);
  static Mono var(int v, int e = 1) {
    Mono m;
    m.set(v, e);
    return m;
  }

  friend bool operator==(const Mono&, const Mono&) = default;
  friend std::strong_ordering operator<=>(const Mono& a, const Mono& b) {
    return a.w_ <=> b.w_;
  }
  size_t hash() const;

 private:
  static constexpr int shift(int v) { return 48 - 16 * (v & 3); }
  std::array<uint64_t, kWords> w_{};
};

struct Term {
  Mono m;
  mpz_class c;
};

/// Sparse multivariate polynomial over the integers.  Terms are kept sorted
/// by strictly decreasing monomial with nonzero coefficients.
class Poly {
 public:
  Poly() = default;
  Poly(long c);  // NOLINT(google-explicit-constructor)
  Poly(const mpz_class& c);  // NOLINT(google-explicit-constructor)

  static Poly monomial(const Mono& m, const mpz_class& c = 1);
  static Poly var(int v, int e = 1) { return monomial(Mono::var(v, e)); }
  /// Sorts and merges arbitrary terms.
  static Poly from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return t_; }
  size_t size() const { return t_.size(); }
  bool is_zero() const { return t_.empty(); }
  bool is_constant() const { return t_.empty() || (t_.size() == 1 && t_[0].m.is_one()); }
  bool is_one() const { return t_.size() == 1 && t_[0].m.is_one() && t_[0].c == 1; }
  bool is_monomial() const { return t_.size() == 1; }
  const Term& lead() const { return t_.front(); }
  mpz_class constant_value() const { return t_.empty() ? mpz_class(0) : t_[0].c; }

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly mul_term(const Mono& m, const mpz_class& c) const;
  Poly pow(unsigned e) const;

  friend bool operator==(const Poly& a, const Poly& b);

  int degree(int v) const;
  uint64_t support() const;
  /// Positive gcd of the coefficients (0 for the zero polynomial).
  mpz_class content() const;
  /// Componentwise minimum of the exponent vectors.
  Mono mono_content() const;
  Poly div_mono(const Mono& m) const;
  Poly div_int(const mpz_class& c) const;
  /// Quotient when *this is divisible by b, nothing otherwise.
  std::optional<Poly> divide_exact(const Poly& b) const;
  /// Coefficients with respect to variable v, as (exponent, coefficient).
  std::vector<std::pair<int, Poly>> coefficients(int v) const;

  mpq_class eval(const std::vector<mpq_class>& point) const;

 private:
  std::vector<Term> t_;
};

/// Greatest common divisor over Z with positive leading coefficient.
Poly gcd(const Poly& a, const Poly& b);

}  // namespace skc
