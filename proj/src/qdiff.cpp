// SPDX-License-Identifier: Apache-2.0
#include "skc/qdiff.hpp"

#include <stdexcept>

namespace skc {

namespace {

uint64_t bit(int v) { return 1ULL << v; }

AlgebraSpec make_x() {
  AlgebraSpec a{AlgebraKind::X, "xtorus", {}, {}, 0, Style::Q};
  a.coord_mask = bit(var::s);
  for (int j = 0; j <= kMaxN + 1; ++j) a.coord_mask |= bit(var::u(j));
  for (int i = 1; i < kMaxN; ++i) {
    a.coord_mask |= bit(var::x(i));
    a.shift_names.push_back("W" + std::to_string(i));
    Exps w{};
    w[var::x(i)] = 1;  // varpi_i X_i^{1/2} = q^{1/2} X_i^{1/2} varpi_i
    a.pairing.push_back(w);
  }
  return a;
}

AlgebraSpec make_z() {
  AlgebraSpec a{AlgebraKind::Z, "ztrace", {}, {}, 0, Style::A};
  a.coord_mask = bit(var::s);
  for (int l = 0; l <= kMaxN + 1; ++l) a.coord_mask |= bit(var::C(l));
  for (int i = 1; i < kMaxN; ++i) {
    a.coord_mask |= bit(var::Q(i));
    a.shift_names.push_back("E" + std::to_string(i));
    Exps w{};
    w[var::Q(i)] = 1;  // Q_i E_i = A E_i Q_i, so E_i Q_i = s Q_i E_i
    a.pairing.push_back(w);
  }
  return a;
}

AlgebraSpec make_d() {
  AlgebraSpec a{AlgebraKind::D, "dz", {}, {}, 0, Style::Q};
  a.coord_mask = bit(var::s) | bit(var::z0p) | bit(var::z0m) | bit(var::zLp) | bit(var::zLm);
  for (int j = 1; j <= kMaxN; ++j) a.coord_mask |= bit(var::z(j));
  for (int i = 1; i < kMaxN; ++i) {
    a.coord_mask |= bit(var::wp(i)) | bit(var::wm(i));
    for (int r = 0; r < 2; ++r) {
      a.shift_names.push_back("D" + std::to_string(i) + (r == 0 ? "p" : "m"));
      Exps w{};
      w[r == 0 ? var::wp(i) : var::wm(i)] = 4;  // D_{i,r} w_{i,r} = q^2 w_{i,r} D_{i,r}
      a.pairing.push_back(w);
    }
  }
  return a;
}

bool is_zero_key(const ShiftKey& k) {
  for (int e : k)
    if (e) return false;
  return true;
}

Exps twist_for(const AlgebraSpec& spec, const ShiftKey& k) {
  Exps w{};
  for (int j = 0; j < spec.num_shifts(); ++j) {
    if (!k[j]) continue;
    for (int v = 0; v < kNumVars; ++v) w[v] += k[j] * spec.pairing[j][v];
  }
  return w;
}

}  // namespace

const AlgebraSpec& xtorus() {
  static const AlgebraSpec a = make_x();
  return a;
}

const AlgebraSpec& ztrace() {
  static const AlgebraSpec a = make_z();
  return a;
}

const AlgebraSpec& dalg() {
  static const AlgebraSpec a = make_d();
  return a;
}

std::string shift_name(const AlgebraSpec& spec, int index) { return spec.shift_names.at(index); }

OpElement::OpElement(const AlgebraSpec& spec, const Rat& c) : spec_(&spec) {
  if (!c.is_zero()) t_.emplace(ShiftKey(spec.num_shifts(), 0), c);
}

OpElement OpElement::shift(const AlgebraSpec& spec, int index, int e, const Rat& c) {
  ShiftKey k(spec.num_shifts(), 0);
  k.at(index) = e;
  return term(spec, k, c);
}

OpElement OpElement::term(const AlgebraSpec& spec, const ShiftKey& k, const Rat& c) {
  if (static_cast<int>(k.size()) != spec.num_shifts()) throw std::invalid_argument("shift key has wrong length");
  OpElement r(spec);
  if (!c.is_zero()) r.t_.emplace(k, c);
  return r;
}

bool OpElement::shift_free() const {
  for (const auto& [k, c] : t_)
    if (!is_zero_key(k)) return false;
  return true;
}

Rat OpElement::coeff(const ShiftKey& k) const {
  auto it = t_.find(k);
  return it == t_.end() ? Rat() : it->second;
}

void OpElement::add_term(const ShiftKey& k, const Rat& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = t_.emplace(k, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) t_.erase(it);
}

OpElement OpElement::operator-() const {
  OpElement r = *this;
  for (auto& [k, c] : r.t_) c = -c;
  return r;
}

namespace {
void check_same(const OpElement& a, const OpElement& b) {
  if (&a.spec() != &b.spec())
    throw std::invalid_argument("operands belong to different algebras (" + a.spec().name + ", " + b.spec().name + ")");
}
}  // namespace

OpElement operator+(const OpElement& a, const OpElement& b) {
  check_same(a, b);
  OpElement r = a;
  for (const auto& [k, c] : b.t_) r.add_term(k, c);
  return r;
}

OpElement operator-(const OpElement& a, const OpElement& b) { return a + (-b); }

OpElement operator*(const OpElement& a, const OpElement& b) {
  check_same(a, b);
  const AlgebraSpec& spec = a.spec();
  std::map<ShiftKey, std::vector<Rat>> acc;
  for (const auto& [k, ck] : a.t_) {
    const Exps w = twist_for(spec, k);
    for (const auto& [l, cl] : b.t_) {
      ShiftKey kl(k.size());
      for (size_t j = 0; j < k.size(); ++j) kl[j] = k[j] + l[j];
      acc[kl].push_back(ck * cl.twist(w));
    }
  }
  OpElement r(spec);
  for (auto& [k, parts] : acc) {
    Rat sum;
    for (const auto& p : parts) sum += p;
    if (!sum.is_zero()) r.t_.emplace(k, std::move(sum));
  }
  return r;
}

OpElement operator*(const Rat& c, const OpElement& a) {
  OpElement r(a.spec());
  if (c.is_zero()) return r;
  for (const auto& [k, v] : a.t_) r.t_.emplace(k, c * v);
  return r;
}

OpElement OpElement::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  OpElement result(*spec_, Rat(1)), base = *this;
  while (e) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

OpElement OpElement::inverse() const {
  if (t_.size() != 1) throw std::domain_error("only single-term operators are invertible");
  const auto& [k, c] = *t_.begin();
  ShiftKey nk(k.size());
  for (size_t j = 0; j < k.size(); ++j) nk[j] = -k[j];
  // (c W^k)^{-1} = W^{-k} c^{-1} = c^{-1}(twisted by -k) W^{-k}
  return term(*spec_, nk, c.inv().twist(twist_for(*spec_, nk)));
}

OpElement OpElement::substitute(const std::vector<std::optional<Rat>>& images) const {
  OpElement r(*spec_);
  for (const auto& [k, c] : t_) r.add_term(k, c.substitute(images));
  return r;
}

std::string OpElement::to_string(int n) const {
  if (t_.empty()) return "0";
  std::string out;
  bool first = true;
  // Highest shift exponents first, matching the descending coefficient order.
  for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
    const auto& [k, c] = *it;
    std::string coef = c.to_string(spec_->style, n);
    std::string shifts;
    for (int j = 0; j < spec_->num_shifts(); ++j) {
      if (!k[j]) continue;
      shifts += " * " + spec_->shift_names[j];
      if (k[j] != 1) shifts += "^" + std::to_string(k[j]);
    }
    const bool compound = coef.find(' ') != std::string::npos && coef.front() != '(';
    if (!shifts.empty() && compound) coef = "(" + coef + ")";
    std::string piece = coef + shifts;
    if (!shifts.empty() && (coef == "1" || coef == "-1")) piece = (coef == "1" ? "" : "-") + shifts.substr(3);
    if (first) {
      out = piece;
    } else if (piece.front() == '-') {
      out += " - " + piece.substr(1);
    } else {
      out += " + " + piece;
    }
    first = false;
  }
  return out;
}

OpElement apply_antimap(const OpElement& a, const AntiMap& map) {
  const AlgebraSpec& src = a.spec();
  const AlgebraSpec& dst = *map.target;
  OpElement result(dst);
  for (const auto& [k, c] : a.terms()) {
    const uint64_t used = c.support() & src.coord_mask;
    for (int v = 0; v < kNumVars; ++v)
      if ((used >> v & 1) && !map.coord_images[v])
        throw std::invalid_argument("anti-map has no image for coordinate " + var_name(v));
    OpElement image(dst, Rat(1));
    for (int j = 0; j < src.num_shifts(); ++j) {
      if (!k[j]) continue;
      if (j >= static_cast<int>(map.shift_images.size()) || !map.shift_images[j])
        throw std::invalid_argument("anti-map has no image for generator " + src.shift_names[j]);
      image *= map.shift_images[j]->pow(k[j]);
    }
    // Shifts of the source commute, so only the coefficient moves to the right.
    result += image * OpElement(dst, c.substitute(map.coord_images));
  }
  return result;
}

}  // namespace skc
