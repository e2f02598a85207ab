// SPDX-License-Identifier: Apache-2.0
#include "skc/rat.hpp"

#include <map>
#include <stdexcept>

namespace skc {

namespace {

Exps to_exps(const Mono& m) {
  Exps e{};
  for (int v = 0; v < kNumVars; ++v) e[v] = m[v];
  return e;
}

Poly exact_quotient(const Poly& a, const Poly& b) {
  if (b.is_one()) return a;
  auto q = a.divide_exact(b);
  if (!q) throw std::logic_error("inexact division during normalization");
  return *q;
}

// Split a signed exponent vector into its positive and negative parts.
std::pair<Mono, Mono> split_signed(const Exps& e) {
  Mono pos, neg;
  for (int v = 0; v < kNumVars; ++v) {
    if (e[v] > 0) pos.set(v, e[v]);
    if (e[v] < 0) neg.set(v, -e[v]);
  }
  return {pos, neg};
}

void fix_sign(Poly& num, Poly& den) {
  if (den.lead().c < 0) {
    num = -num;
    den = -den;
  }
}

std::string exponent_text(int v, int e, Style style) {
  if (v == var::s) {
    if (style == Style::A) return e == -1 ? "" : "^" + std::to_string(-e);
  }
  if (var::is_half(v)) {
    if (e % 2 == 0) return e == 2 ? "" : "^" + std::to_string(e / 2);
    return "^" + std::to_string(e) + "/2";
  }
  return e == 1 ? "" : "^" + std::to_string(e);
}

std::string term_text(const mpq_class& c, const std::string& mono) {
  if (mono.empty()) return c.get_str();
  if (c == 1) return mono;
  if (c == -1) return "-" + mono;
  return c.get_str() + "*" + mono;
}

std::string join_terms(const std::vector<std::string>& parts) {
  if (parts.empty()) return "0";
  std::string out = parts[0];
  for (size_t k = 1; k < parts.size(); ++k) {
    if (parts[k][0] == '-') {
      out += " - " + parts[k].substr(1);
    } else {
      out += " + " + parts[k];
    }
  }
  return out;
}

}  // namespace

std::string monomial_to_string(const Exps& e, Style style, int n) {
  std::string out;
  for (int v = 0; v < kNumVars; ++v) {
    if (!e[v]) continue;
    if (!out.empty()) out += "*";
    out += (v == var::s && style == Style::A) ? "A" : var_name(v, n);
    out += exponent_text(v, e[v], style);
  }
  return out;
}

std::string poly_to_string(const Poly& p, Style style, int n) {
  std::vector<std::string> parts;
  for (const auto& t : p.terms()) parts.push_back(term_text(mpq_class(t.c), monomial_to_string(to_exps(t.m), style, n)));
  return join_terms(parts);
}

Rat::Rat(const mpq_class& c) : num_(c.get_num()), den_(c.get_den()) {}

Rat::Rat(const Poly& num, const Poly& den) {
  if (den.is_zero()) throw std::domain_error("zero denominator");
  if (num.is_zero()) {
    den_ = Poly(1);
    return;
  }
  Poly g = gcd(num, den);
  num_ = exact_quotient(num, g);
  den_ = exact_quotient(den, g);
  fix_sign(num_, den_);
}

Rat Rat::var(int v, int e) {
  if (e >= 0) return Rat(Poly::var(v, e));
  return Rat(Poly(1), Poly::var(v, -e), Canonical{});
}

Rat Rat::monomial(const Exps& e, const mpq_class& c) {
  if (c == 0) return Rat();
  auto [pos, neg] = split_signed(e);
  Poly num = Poly::monomial(pos, c.get_num());
  Poly den = Poly::monomial(neg, c.get_den());
  fix_sign(num, den);
  return Rat(std::move(num), std::move(den), Canonical{});
}

Rat Rat::laurent(const std::vector<std::pair<Exps, mpq_class>>& terms) {
  std::map<Exps, mpq_class> acc;
  for (const auto& [e, c] : terms) acc[e] += c;
  std::erase_if(acc, [](const auto& kv) { return kv.second == 0; });
  if (acc.empty()) return Rat();
  Exps low = acc.begin()->first;
  mpz_class l = 1;
  for (const auto& [e, c] : acc) {
    for (int v = 0; v < kNumVars; ++v) low[v] = std::min(low[v], e[v]);
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  }
  std::vector<Term> num;
  num.reserve(acc.size());
  for (const auto& [e, c] : acc) {
    Mono m;
    for (int v = 0; v < kNumVars; ++v) m.set(v, e[v] - low[v]);
    mpq_class scaled = c * l;
    num.push_back({m, scaled.get_num()});
  }
  auto [pos, neg] = split_signed(low);
  Poly n = Poly::from_terms(std::move(num)).mul_term(pos, 1);
  // n has no common monomial or content factor with the denominator except
  // what gcd removes cheaply, since the denominator is a single term.
  return Rat(n, Poly::monomial(neg, l));
}

mpq_class Rat::constant_value() const {
  if (!is_constant()) throw std::logic_error("not a constant");
  mpq_class r(num_.constant_value(), den_.constant_value());
  r.canonicalize();
  return r;
}

std::vector<std::pair<Exps, mpq_class>> Rat::laurent_terms() const {
  if (!is_laurent()) throw std::logic_error("not a Laurent polynomial");
  const Term& d = den_.lead();
  std::vector<std::pair<Exps, mpq_class>> out;
  out.reserve(num_.size());
  for (const auto& t : num_.terms()) {
    Exps e{};
    for (int v = 0; v < kNumVars; ++v) e[v] = t.m[v] - d.m[v];
    mpq_class c(t.c, d.c);
    c.canonicalize();
    out.emplace_back(e, c);
  }
  return out;
}

bool Rat::is_coord_laurent() const {
  const auto& t = den_.terms();
  for (size_t k = 1; k < t.size(); ++k)
    for (int v = var::B + 1; v < kNumVars; ++v)
      if (t[k].m[v] != t[0].m[v]) return false;
  return true;
}

Rat Rat::operator-() const { return Rat(-num_, den_, Canonical{}); }

Rat operator+(const Rat& a, const Rat& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_.is_one() && b.den_.is_one()) return Rat(a.num_ + b.num_, Poly(1), Rat::Canonical{});
  if (a.den_ == b.den_) return Rat(a.num_ + b.num_, a.den_);
  Poly g = gcd(a.den_, b.den_);
  if (g.is_one()) {
    Poly num = a.num_ * b.den_ + b.num_ * a.den_;
    if (num.is_zero()) return Rat();
    return Rat(std::move(num), a.den_ * b.den_, Rat::Canonical{});
  }
  Poly bq = exact_quotient(a.den_, g), dq = exact_quotient(b.den_, g);
  Poly t = a.num_ * dq + b.num_ * bq;
  if (t.is_zero()) return Rat();
  Poly g2 = gcd(t, g);
  Poly num = exact_quotient(t, g2);
  Poly den = bq * exact_quotient(b.den_, g2);
  fix_sign(num, den);
  return Rat(std::move(num), std::move(den), Rat::Canonical{});
}

Rat operator-(const Rat& a, const Rat& b) { return a + (-b); }

Rat operator*(const Rat& a, const Rat& b) {
  if (a.is_zero() || b.is_zero()) return Rat();
  if (a.den_.is_one() && b.den_.is_one()) return Rat(a.num_ * b.num_, Poly(1), Rat::Canonical{});
  Poly g1 = b.den_.is_one() ? Poly(1) : gcd(a.num_, b.den_);
  Poly g2 = a.den_.is_one() ? Poly(1) : gcd(b.num_, a.den_);
  Poly num = exact_quotient(a.num_, g1) * exact_quotient(b.num_, g2);
  Poly den = exact_quotient(a.den_, g2) * exact_quotient(b.den_, g1);
  fix_sign(num, den);
  return Rat(std::move(num), std::move(den), Rat::Canonical{});
}

Rat operator/(const Rat& a, const Rat& b) { return a * b.inv(); }

Rat Rat::inv() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  Poly n = den_, d = num_;
  fix_sign(n, d);
  return Rat(std::move(n), std::move(d), Canonical{});
}

Rat Rat::pow(int e) const {
  if (e < 0) return inv().pow(-e);
  // gcd(num^e, den^e) = 1 already
  return Rat(num_.pow(static_cast<unsigned>(e)), den_.pow(static_cast<unsigned>(e)), Canonical{});
}

Rat Rat::twist(const Exps& w) const {
  if (is_zero()) return *this;
  auto apply = [&w](const Poly& p, int& low) {
    std::vector<int> sexp;
    low = 0;
    bool first = true;
    for (const auto& t : p.terms()) {
      int e = t.m[var::s];
      for (int v = 1; v < kNumVars; ++v)
        if (w[v] && t.m[v]) e += w[v] * t.m[v];
      if (first || e < low) low = e;
      first = false;
      sexp.push_back(e);
    }
    std::vector<Term> out;
    out.reserve(p.size());
    size_t k = 0;
    for (const auto& t : p.terms()) {
      Mono m = t.m;
      m.set(var::s, sexp[k++] - low);
      out.push_back({m, t.c});
    }
    return Poly::from_terms(std::move(out));
  };
  int a = 0, b = 0;
  Poly num = apply(num_, a), den = apply(den_, b);
  if (a > b) num = num.mul_term(Mono::var(var::s, a - b), 1);
  if (b > a) den = den.mul_term(Mono::var(var::s, b - a), 1);
  fix_sign(num, den);
  return Rat(std::move(num), std::move(den), Canonical{});
}

Rat Rat::substitute(const std::vector<std::optional<Rat>>& images) const {
  bool any = false, monomial_images = true;
  for (int v = 0; v < kNumVars && v < static_cast<int>(images.size()); ++v) {
    if (!images[v] || !(support() >> v & 1)) continue;
    any = true;
    if (!images[v]->num().is_monomial() || !images[v]->den().is_monomial()) monomial_images = false;
  }
  if (!any) return *this;

  if (monomial_images) {
    std::vector<std::pair<Exps, mpq_class>> img(kNumVars);
    std::vector<bool> mapped(kNumVars, false);
    for (int v = 0; v < kNumVars && v < static_cast<int>(images.size()); ++v) {
      if (!images[v]) continue;
      mapped[v] = true;
      const Term& n = images[v]->num().lead();
      const Term& d = images[v]->den().lead();
      Exps e{};
      for (int x = 0; x < kNumVars; ++x) e[x] = n.m[x] - d.m[x];
      mpq_class c(n.c, d.c);
      c.canonicalize();
      img[v] = {e, c};
    }
    auto image_of = [&](const Poly& p) {
      std::vector<std::pair<Exps, mpq_class>> out;
      out.reserve(p.size());
      for (const auto& t : p.terms()) {
        Exps e{};
        mpq_class c(t.c);
        for (int v = 0; v < kNumVars; ++v) {
          const int k = t.m[v];
          if (!k) continue;
          if (!mapped[v]) {
            e[v] += k;
            continue;
          }
          for (int x = 0; x < kNumVars; ++x) e[x] += k * img[v].first[x];
          if (img[v].second != 1) {
            mpq_class pw;
            mpz_pow_ui(pw.get_num_mpz_t(), img[v].second.get_num_mpz_t(), k);
            mpz_pow_ui(pw.get_den_mpz_t(), img[v].second.get_den_mpz_t(), k);
            pw.canonicalize();
            c *= pw;
          }
        }
        out.emplace_back(e, c);
      }
      return laurent(out);
    };
    return image_of(num_) / image_of(den_);
  }

  std::map<std::pair<int, int>, Rat> cache;
  auto power = [&](int v, int k) -> const Rat& {
    auto it = cache.find({v, k});
    if (it != cache.end()) return it->second;
    return cache.emplace(std::make_pair(v, k), images[v]->pow(k)).first->second;
  };
  auto image_of = [&](const Poly& p) {
    Rat sum;
    for (const auto& t : p.terms()) {
      Exps keep{};
      Rat term(t.c);
      for (int v = 0; v < kNumVars; ++v) {
        const int k = t.m[v];
        if (!k) continue;
        if (v < static_cast<int>(images.size()) && images[v]) {
          term *= power(v, k);
        } else {
          keep[v] = k;
        }
      }
      sum += term * monomial(keep);
    }
    return sum;
  };
  return image_of(num_) / image_of(den_);
}

mpq_class Rat::eval(const std::vector<mpq_class>& point) const {
  mpq_class d = den_.eval(point);
  if (d == 0) throw std::domain_error("evaluation at a pole");
  return num_.eval(point) / d;
}

std::string Rat::to_string(Style style, int n) const {
  if (is_laurent()) {
    std::vector<std::string> parts;
    for (const auto& [e, c] : laurent_terms()) parts.push_back(term_text(c, monomial_to_string(e, style, n)));
    return join_terms(parts);
  }
  return "(" + poly_to_string(num_, style, n) + ")/(" + poly_to_string(den_, style, n) + ")";
}

}  // namespace skc
