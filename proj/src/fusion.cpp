// SPDX-License-Identifier: Apache-2.0
#include "skc/fusion.hpp"

#include <stdexcept>

#include "skc/scalars.hpp"

namespace skc {

namespace {

// Position on the boundary circle: bottom left to right, then top right to left.
int cyclic(int point, int c) { return point < c ? point : 3 * c - 1 - point; }

Rat loop_value() { return -A_pow(2) - A_pow(-2); }

}  // namespace

TLDiagram::TLDiagram(int c, std::vector<int> partner) : c_(c), p_(std::move(partner)) {
  if (c < 0 || static_cast<int>(p_.size()) != 2 * c)
    throw std::invalid_argument("TL diagram on " + std::to_string(c) + " strands needs " + std::to_string(2 * c) +
                                " endpoints");
  for (int k = 0; k < 2 * c; ++k) {
    const int j = p_[k];
    if (j < 0 || j >= 2 * c || j == k || p_[j] != k)
      throw std::invalid_argument("TL diagram partner table is not a perfect matching");
  }
  for (int a = 0; a < 2 * c; ++a)
    for (int b = 0; b < 2 * c; ++b) {
      if (a >= p_[a] || b >= p_[b] || a == b) continue;
      int x1 = cyclic(a, c), y1 = cyclic(p_[a], c), x2 = cyclic(b, c), y2 = cyclic(p_[b], c);
      if (x1 > y1) std::swap(x1, y1);
      const bool in1 = x1 < x2 && x2 < y1, in2 = x1 < y2 && y2 < y1;
      if (in1 != in2) throw std::invalid_argument("TL diagram has crossing chords: " + to_string());
    }
}

TLDiagram TLDiagram::identity(int c) {
  std::vector<int> p(2 * c);
  for (int k = 0; k < c; ++k) {
    p[k] = c + k;
    p[c + k] = k;
  }
  return TLDiagram(c, std::move(p));
}

TLDiagram TLDiagram::cupcap(int c, int i) {
  if (i < 1 || i >= c) throw std::out_of_range("cup-cap e_" + std::to_string(i) + " needs 1 <= i < c");
  TLDiagram d = identity(c);
  const int a = i - 1, b = i;
  d.p_[a] = b;
  d.p_[b] = a;
  d.p_[c + a] = c + b;
  d.p_[c + b] = c + a;
  return d;
}

std::string TLDiagram::to_string() const {
  auto label = [&](int k) { return (k < c_ ? "b" + std::to_string(k + 1) : "t" + std::to_string(k - c_ + 1)); };
  std::string s;
  for (int k = 0; k < 2 * c_; ++k) {
    if (p_[k] < k) continue;
    if (!s.empty()) s += ' ';
    s += label(k) + "-" + label(p_[k]);
  }
  return s;
}

std::pair<TLDiagram, int> compose(const TLDiagram& x, const TLDiagram& y) {
  const int c = x.strands();
  if (y.strands() != c) throw std::invalid_argument("TL composition with different strand counts");
  // Nodes: y bottom 0..c-1, shared middle c..2c-1 (y top = x bottom), x top 2c..3c-1.
  auto ylink = [&](int node) { return y.partner(node); };  // y points map to nodes 0..2c-1 directly
  auto xlink = [&](int node) { return x.partner(node - c) + c; };
  auto is_middle = [&](int node) { return node >= c && node < 2 * c; };
  std::vector<int> out(2 * c, -1);
  std::vector<bool> seen(3 * c, false);
  auto walk = [&](int start, bool via_y) {
    int node = start;
    seen[node] = true;
    for (;;) {
      node = via_y ? ylink(node) : xlink(node);
      seen[node] = true;
      if (!is_middle(node)) return node;
      via_y = !via_y;
    }
  };
  auto external = [&](int node) { return node < c ? node : node - c; };
  for (int s = 0; s < c; ++s) {
    if (seen[s]) continue;
    const int end = walk(s, true);
    out[external(s)] = external(end);
    out[external(end)] = external(s);
  }
  for (int s = 2 * c; s < 3 * c; ++s) {
    if (seen[s]) continue;
    const int end = walk(s, false);
    out[external(s)] = external(end);
    out[external(end)] = external(s);
  }
  int loops = 0;
  for (int m = c; m < 2 * c; ++m) {
    if (seen[m]) continue;
    ++loops;
    int node = m;
    bool via_y = true;
    do {
      seen[node] = true;
      node = via_y ? ylink(node) : xlink(node);
      via_y = !via_y;
    } while (node != m);
  }
  return {TLDiagram(c, std::move(out)), loops};
}

TLElement::TLElement(const TLDiagram& d, const Rat& coef) : c_(d.strands()) { add_term(d, coef); }

void TLElement::add_term(const TLDiagram& d, const Rat& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = t_.emplace(d, c);
  if (fresh) return;
  it->second += c;
  if (it->second.is_zero()) t_.erase(it);
}

Rat TLElement::coeff(const TLDiagram& d) const {
  auto it = t_.find(d);
  return it == t_.end() ? Rat() : it->second;
}

TLElement operator+(const TLElement& a, const TLElement& b) {
  if (a.c_ != b.c_) throw std::invalid_argument("TL sum with different strand counts");
  TLElement r = a;
  for (const auto& [d, c] : b.t_) r.add_term(d, c);
  return r;
}

TLElement operator-(const TLElement& a, const TLElement& b) { return a + Rat(-1) * b; }

TLElement operator*(const Rat& s, const TLElement& a) {
  TLElement r(a.c_);
  for (const auto& [d, c] : a.t_) r.add_term(d, s * c);
  return r;
}

TLElement TLElement::with_extra_strand() const {
  const int c = c_;
  TLElement r(c + 1);
  for (const auto& [d, coef] : t_) {
    // Relabel top points c..2c-1 to c+1..2c, then join b_{c+1} with t_{c+1}.
    auto relabel = [&](int k) { return k < c ? k : k + 1; };
    std::vector<int> p(2 * c + 2);
    for (int k = 0; k < 2 * c; ++k) p[relabel(k)] = relabel(d.partner(k));
    p[c] = 2 * c + 1;
    p[2 * c + 1] = c;
    r.add_term(TLDiagram(c + 1, std::move(p)), coef);
  }
  return r;
}

std::string TLElement::to_string() const {
  if (t_.empty()) return "0";
  std::string out;
  for (const auto& [d, c] : t_) {
    std::string coef = c.to_string(Style::A);
    if (coef.find(' ') != std::string::npos && coef.front() != '(') coef = "(" + coef + ")";
    std::string piece = coef + " * <" + d.to_string() + ">";
    if (out.empty())
      out = piece;
    else if (piece.front() == '-')
      out += " - " + piece.substr(1);
    else
      out += " + " + piece;
  }
  return out;
}

TLElement tl_mul(const TLElement& x, const TLElement& y) {
  if (x.strands() != y.strands()) throw std::invalid_argument("tl_mul: strand counts differ");
  const Rat d = loop_value();
  TLElement r(x.strands());
  for (const auto& [dx, cx] : x.terms())
    for (const auto& [dy, cy] : y.terms()) {
      auto [dz, loops] = compose(dx, dy);
      r.add_term(dz, cx * cy * d.pow(loops));
    }
  return r;
}

TLElement jones_wenzl(int c) {
  if (c < 0) throw std::invalid_argument("jones_wenzl: negative strand count");
  if (c <= 1) return TLElement(TLDiagram::identity(c));
  // With loop value -[2] the Wenzl recursion carries a plus sign.
  const TLElement J = jones_wenzl(c - 1).with_extra_strand();
  const TLElement e(TLDiagram::cupcap(c, c - 1));
  return J + (qint(c - 1) / qint(c)) * tl_mul(tl_mul(J, e), J);
}

FusionRule parse_fusion_rule(const std::string& name) {
  static const std::map<std::string, FusionRule> table{
      {"parallel", FusionRule::Parallel},        {"half_twist_up", FusionRule::HalfTwistUp},
      {"half_twist_down", FusionRule::HalfTwistDown}, {"biangle_up", FusionRule::BiangleUp},
      {"biangle_down", FusionRule::BiangleDown}, {"triangle_a", FusionRule::TriangleA},
      {"triangle_b", FusionRule::TriangleB},     {"triangle_c", FusionRule::TriangleC},
  };
  auto it = table.find(name);
  if (it == table.end()) throw std::invalid_argument("unknown fusion rule '" + name + "'");
  return it->second;
}

namespace {

// [c+k] for a color given through Ac = A^c.
Rat qint_shifted(const Rat& Ac, int k) {
  return (Ac.pow(2) * A_pow(2 * k) - Ac.pow(-2) * A_pow(-2 * k)) / (A_pow(2) - A_pow(-2));
}

Rat parallel_coeff(const Rat& Ac) { return -qint_shifted(Ac, 0) / qint_shifted(Ac, 1); }
Rat twist_up(const Rat& Ac) { return Ac; }
Rat twist_down(const Rat& Ac) { return -A_pow(-2) * Ac.inv(); }
Rat biangle_up(const Rat& Ac) { return -qint_shifted(Ac, 2) / qint_shifted(Ac, 1); }

}  // namespace

Rat fusion_coefficient(FusionRule rule, const std::vector<int>& params) {
  const bool single = rule == FusionRule::Parallel || rule == FusionRule::HalfTwistUp ||
                      rule == FusionRule::HalfTwistDown || rule == FusionRule::BiangleUp ||
                      rule == FusionRule::BiangleDown;
  if (params.size() != (single ? 1u : 3u))
    throw std::invalid_argument(std::string("fusion rule expects ") + (single ? "one color" : "three colors (a,b,c)"));
  for (int v : params)
    if (v < 0) throw std::invalid_argument("fusion colors must be nonnegative");
  if (single) {
    const Rat Ac = A_pow(params[0]);
    switch (rule) {
      case FusionRule::Parallel:
        return parallel_coeff(Ac);
      case FusionRule::HalfTwistUp:
        return twist_up(Ac);
      case FusionRule::HalfTwistDown:
        return twist_down(Ac);
      case FusionRule::BiangleUp:
        return biangle_up(Ac);
      default:
        return 1;
    }
  }
  const int a = params[0], b = params[1], c = params[2];
  if (!admissible_triple(a, b, c))
    throw std::invalid_argument("inadmissible triangle colors (" + std::to_string(a) + "," + std::to_string(b) + "," +
                                std::to_string(c) + ")");
  switch (rule) {
    case FusionRule::TriangleA:
      return 1;
    case FusionRule::TriangleB:
      if (c < 1) throw std::invalid_argument("triangle_b needs c >= 1");
      return qint((a - b + c) / 2) / qint(c);
    default:
      if (b < 1 || c < 1) throw std::invalid_argument("triangle_c needs b, c >= 1");
      return -qint((a + b + c) / 2 + 1) * qint((b + c - a) / 2) / (qint(b) * qint(c));
  }
}

Rat gamma_loop_eval() {
  const Rat B = Rat::var(var::B);
  // Fuse the loop with the strand: channel c+1 with weight 1, channel c-1 with the
  // parallel coefficient; each channel picks up two half twists and one biangle.
  const Rat up = twist_up(B).pow(2) * biangle_up(B);
  const Rat down = parallel_coeff(B) * twist_down(B).pow(2);
  return up + down;
}

Rat gamma_loop_closed_form() {
  const Rat B = Rat::var(var::B);
  return -(A_pow(2) * B.pow(2) + A_pow(-2) * B.pow(-2));
}

bool admissible(const LadderColoring& col, const SurfaceParams& p) {
  if (static_cast<int>(col.c.size()) != p.n - 1 || static_cast<int>(col.d.size()) != p.n + 2) return false;
  for (const auto& [a, b, opp] : ladder_vertices(col.c, col.d))
    if (!admissible_triple(a, b, opp)) return false;
  return true;
}

}  // namespace skc
