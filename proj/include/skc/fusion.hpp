// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "skc/rat.hpp"
#include "skc/skeinrep.hpp"

namespace skc {

/// Non-crossing perfect matching on c bottom points (0..c-1, left to right) and
/// c top points (c..2c-1, left to right) of a rectangle.
class TLDiagram {
 public:
  /// Throws std::invalid_argument unless partner is an involution without fixed
  /// points whose chords do not cross.
  TLDiagram(int c, std::vector<int> partner);
  static TLDiagram identity(int c);
  /// Cup-cap e_i joining strands i and i+1 at both ends, 1 <= i <= c-1.
  static TLDiagram cupcap(int c, int i);

  int strands() const { return c_; }
  int partner(int point) const { return p_.at(point); }
  auto operator<=>(const TLDiagram&) const = default;
  bool operator==(const TLDiagram&) const = default;

  /// "b1-t1 b2-t2", listing each chord once from its lower-labelled end.
  std::string to_string() const;

 private:
  int c_;
  std::vector<int> p_;
};

/// Stack x on top of y; returns the diagram and the number of closed loops removed.
std::pair<TLDiagram, int> compose(const TLDiagram& x, const TLDiagram& y);

/// Linear combination of TL diagrams on c strands over Q(A).
class TLElement {
 public:
  explicit TLElement(int c) : c_(c) {}
  TLElement(const TLDiagram& d, const Rat& coef = 1);

  int strands() const { return c_; }
  const std::map<TLDiagram, Rat>& terms() const { return t_; }
  Rat coeff(const TLDiagram& d) const;
  bool is_zero() const { return t_.empty(); }

  friend TLElement operator+(const TLElement& a, const TLElement& b);
  friend TLElement operator-(const TLElement& a, const TLElement& b);
  friend TLElement operator*(const Rat& s, const TLElement& a);
  friend bool operator==(const TLElement& a, const TLElement& b) { return a.c_ == b.c_ && a.t_ == b.t_; }
  friend TLElement tl_mul(const TLElement& x, const TLElement& y);

  /// Add a free strand on the right.
  TLElement with_extra_strand() const;

  /// "coef * <b1-t1 b2-t2> + ...", Kauffman-style scalars.
  std::string to_string() const;

 private:
  void add_term(const TLDiagram& d, const Rat& c);
  int c_;
  std::map<TLDiagram, Rat> t_;
};

/// Product xy (x stacked on top of y); each closed loop contributes -A^2 - A^{-2}.
TLElement tl_mul(const TLElement& x, const TLElement& y);

/// Jones-Wenzl idempotent on c strands.
TLElement jones_wenzl(int c);

enum class FusionRule {
  Parallel,
  HalfTwistUp,
  HalfTwistDown,
  BiangleUp,
  BiangleDown,
  TriangleA,
  TriangleB,
  TriangleC,
};

/// Parse "parallel", "half_twist_up", ..., "triangle_c".
FusionRule parse_fusion_rule(const std::string& name);

/// Coefficient of a fusion rule.  Parallel, twists and biangles take the color c;
/// triangles take (a, b, c).  Throws std::invalid_argument on inadmissible params.
Rat fusion_coefficient(FusionRule rule, const std::vector<int>& params);

/// Scalar by which a loop around a strand of color c acts, with B = A^c kept symbolic.
Rat gamma_loop_eval();

/// -(A^2 B^2 + A^{-2} B^{-2}).
Rat gamma_loop_closed_form();

/// Colors on the ladder graph: c_1..c_{n-1} on the rungs e_k, d_0..d_{n+1} on the legs f_j.
struct LadderColoring {
  std::vector<int> c;
  std::vector<int> d;
};

/// Parity and triangle inequalities at every vertex; false on a size mismatch.
bool admissible(const LadderColoring& col, const SurfaceParams& p);

}  // namespace skc
