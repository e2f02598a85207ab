// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "skc/rat.hpp"

namespace skc {

enum class AlgebraKind { X, Z, D };

/// Presentation of a q-difference operator algebra: shift generators act on
/// coordinates by shift_k * x = s^{pairing_k[x]} x * shift_k, where s = q^{1/2}
/// and pairing_k is indexed by the base variable (so it is the doubled half-integer pairing).
struct AlgebraSpec {
  AlgebraKind kind;
  std::string name;
  std::vector<std::string> shift_names;
  std::vector<Exps> pairing;
  /// Variables that count as generators of this algebra (coordinates and scalars).
  uint64_t coord_mask = 0;
  Style style = Style::Q;

  int num_shifts() const { return static_cast<int>(shift_names.size()); }
};

/// X_{q,t}: coordinates X_i^{1/2}, shifts varpi_i (index i-1).
const AlgebraSpec& xtorus();
/// Z_{A,C}: coordinates Q_i, central C_l, shifts E_i (index i-1).
const AlgebraSpec& ztrace();
/// D_{q,z}: coordinates w_{i,+-}, central z_*, shifts D_{i,+} (index 2(i-1)) and D_{i,-} (index 2(i-1)+1).
const AlgebraSpec& dalg();

using ShiftKey = std::vector<int>;

/// Normal-ordered element sum_k c_k * shift^k with all shifts on the right.
class OpElement {
 public:
  explicit OpElement(const AlgebraSpec& spec) : spec_(&spec) {}
  OpElement(const AlgebraSpec& spec, const Rat& c);

  /// c * shift_index^e.
  static OpElement shift(const AlgebraSpec& spec, int index, int e = 1, const Rat& c = 1);
  static OpElement term(const AlgebraSpec& spec, const ShiftKey& k, const Rat& c);

  const AlgebraSpec& spec() const { return *spec_; }
  const std::map<ShiftKey, Rat>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  /// True when only the zero shift exponent occurs.
  bool shift_free() const;
  /// Coefficient of shift^k (zero if absent).
  Rat coeff(const ShiftKey& k) const;
  /// Coefficient of the trivial shift.
  Rat constant_part() const { return coeff(ShiftKey(spec_->num_shifts(), 0)); }

  OpElement operator-() const;
  friend OpElement operator+(const OpElement& a, const OpElement& b);
  friend OpElement operator-(const OpElement& a, const OpElement& b);
  friend OpElement operator*(const OpElement& a, const OpElement& b);
  friend OpElement operator*(const Rat& c, const OpElement& a);
  OpElement& operator+=(const OpElement& o) { return *this = *this + o; }
  OpElement& operator-=(const OpElement& o) { return *this = *this - o; }
  OpElement& operator*=(const OpElement& o) { return *this = *this * o; }
  OpElement pow(int e) const;
  /// Inverse of a single term c * shift^k; throws otherwise.
  OpElement inverse() const;

  friend bool operator==(const OpElement& a, const OpElement& b) { return a.spec_ == b.spec_ && a.t_ == b.t_; }

  /// Coefficient-wise substitution; shift part untouched.
  OpElement substitute(const std::vector<std::optional<Rat>>& images) const;

  /// Canonical text "coef * W1^2 * W2^-1 + ...".
  std::string to_string(int n = 0) const;

 private:
  void add_term(const ShiftKey& k, const Rat& c);
  const AlgebraSpec* spec_;
  std::map<ShiftKey, Rat> t_;
};

/// Image table for an anti-homomorphism between two operator algebras.
struct AntiMap {
  const AlgebraSpec* target;
  /// Image of each coordinate variable (scalar map included, e.g. s -> s^{-1}).
  std::vector<std::optional<Rat>> coord_images = std::vector<std::optional<Rat>>(kNumVars);
  /// Image of each shift generator of the source.
  std::vector<std::optional<OpElement>> shift_images;
};

/// Apply an anti-homomorphism: c * g_1...g_r -> image(g_r)...image(g_1) * image(c).
/// Throws std::invalid_argument when a generator in use has no image.
OpElement apply_antimap(const OpElement& a, const AntiMap& map);

/// Name of shift generator `index`, e.g. "W1", "E2", "D1p".
std::string shift_name(const AlgebraSpec& spec, int index);

}  // namespace skc
