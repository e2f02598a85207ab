// SPDX-License-Identifier: Apache-2.0
#include "skc/poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace skc {

namespace {
constexpr uint64_t kHigh = 0x8000800080008000ULL;
}

void Mono::set(int v, int e) {
  if (e < 0 || e > kMaxExp) throw std::overflow_error("monomial exponent out of range");
  uint64_t& word = w_[v >> 2];
  word &= ~(0xFFFFULL << shift(v));
  word |= static_cast<uint64_t>(e) << shift(v);
}

bool Mono::is_one() const {
  for (uint64_t w : w_)
    if (w) return false;
  return true;
}

int Mono::total_degree() const {
  int d = 0;
  for (uint64_t w : w_)
    for (int k = 0; k < 4; ++k) d += static_cast<int>((w >> (16 * k)) & 0xFFFFu);
  return d;
}

uint64_t Mono::support() const {
  uint64_t mask = 0;
  for (int v = 0; v < kNumVars; ++v)
    if ((*this)[v]) mask |= 1ULL << v;
  return mask;
}

bool Mono::divides(const Mono& o) const {
  for (int k = 0; k < kWords; ++k)
    if ((((o.w_[k] | kHigh) - w_[k]) & kHigh) != kHigh) return false;
  return true;
}

Mono Mono::operator*(const Mono& o) const {
  Mono r;
  uint64_t bad = 0;
  for (int k = 0; k < kWords; ++k) {
    r.w_[k] = w_[k] + o.w_[k];
    bad |= r.w_[k];
  }
  if (bad & kHigh) throw std::overflow_error("monomial exponent overflow");
  return r;
}

Mono Mono::operator/(const Mono& o) const {
  Mono r;
  for (int k = 0; k < kWords; ++k) r.w_[k] = w_[k] - o.w_[k];
  return r;
}

Mono Mono::min(const Mono& a, const Mono& b) {
  Mono r;
  for (int k = 0; k < kWords; ++k) {
    uint64_t out = 0;
    for (int f = 0; f < 4; ++f) {
      uint64_t x = (a.w_[k] >> (16 * f)) & 0xFFFFu;
      uint64_t y = (b.w_[k] >> (16 * f)) & 0xFFFFu;
      out |= std::min(x, y) << (16 * f);
    }
    r.w_[k] = out;
  }
  return r;
}

size_t Mono::hash() const {
  uint64_t h = 0x9E3779B97F4A7C15ULL;
  for (uint64_t w : w_) {
    h ^= w + 0x9E3779B97F4A7C15ULL + (h << 6) + (h >> 2);
  }
  return static_cast<size_t>(h);
}

Poly::Poly(long c) {
  if (c != 0) t_.push_back({Mono{}, mpz_class(c)});
}

Poly::Poly(const mpz_class& c) {
  if (c != 0) t_.push_back({Mono{}, c});
}

Poly Poly::monomial(const Mono& m, const mpz_class& c) {
  Poly p;
  if (c != 0) p.t_.push_back({m, c});
  return p;
}

Poly Poly::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.m > b.m; });
  Poly p;
  p.t_.reserve(terms.size());
  for (auto& t : terms) {
    if (!p.t_.empty() && p.t_.back().m == t.m) {
      p.t_.back().c += t.c;
    } else {
      p.t_.push_back(std::move(t));
    }
  }
  std::erase_if(p.t_, [](const Term& t) { return t.c == 0; });
  return p;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& t : r.t_) t.c = -t.c;
  return r;
}

namespace {

std::vector<Term> merge_terms(const std::vector<Term>& a, const std::vector<Term>& b, bool negate_b) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    auto cmp = a[i].m <=> b[j].m;
    if (cmp > 0) {
      out.push_back(a[i++]);
    } else if (cmp < 0) {
      out.push_back(b[j++]);
      if (negate_b) out.back().c = -out.back().c;
    } else {
      mpz_class c = negate_b ? mpz_class(a[i].c - b[j].c) : mpz_class(a[i].c + b[j].c);
      if (c != 0) out.push_back({a[i].m, std::move(c)});
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j) {
    out.push_back(b[j]);
    if (negate_b) out.back().c = -out.back().c;
  }
  return out;
}

}  // namespace

Poly& Poly::operator+=(const Poly& o) {
  if (o.t_.empty()) return *this;
  if (t_.empty()) return *this = o;
  t_ = merge_terms(t_, o.t_, false);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.t_.empty()) return *this;
  t_ = merge_terms(t_, o.t_, true);
  return *this;
}

Poly Poly::mul_term(const Mono& m, const mpz_class& c) const {
  Poly r;
  if (c == 0) return r;
  r.t_.reserve(t_.size());
  for (const auto& t : t_) r.t_.push_back({t.m * m, t.c * c});
  return r;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  const Poly& small = a.size() <= b.size() ? a : b;
  const Poly& big = a.size() <= b.size() ? b : a;
  if (small.size() == 1) return big.mul_term(small.t_[0].m, small.t_[0].c);
  // Each row small_i * big is already sorted; merge rows pairwise.
  std::vector<std::vector<Term>> rows;
  rows.reserve(small.size());
  for (const auto& t : small.t_) rows.push_back(big.mul_term(t.m, t.c).t_);
  while (rows.size() > 1) {
    std::vector<std::vector<Term>> next;
    next.reserve((rows.size() + 1) / 2);
    for (size_t k = 0; k + 1 < rows.size(); k += 2) next.push_back(merge_terms(rows[k], rows[k + 1], false));
    if (rows.size() % 2) next.push_back(std::move(rows.back()));
    rows = std::move(next);
  }
  Poly r;
  r.t_ = std::move(rows[0]);
  return r;
}

Poly Poly::pow(unsigned e) const {
  Poly result(1), base = *this;
  while (e) {
    if (e & 1u) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

bool operator==(const Poly& a, const Poly& b) {
  if (a.t_.size() != b.t_.size()) return false;
  for (size_t k = 0; k < a.t_.size(); ++k)
    if (a.t_[k].m != b.t_[k].m || a.t_[k].c != b.t_[k].c) return false;
  return true;
}

int Poly::degree(int v) const {
  int d = 0;
  for (const auto& t : t_) d = std::max(d, t.m[v]);
  return d;
}

uint64_t Poly::support() const {
  uint64_t s = 0;
  for (const auto& t : t_) s |= t.m.support();
  return s;
}

mpz_class Poly::content() const {
  mpz_class g = 0;
  for (const auto& t : t_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

Mono Poly::mono_content() const {
  if (t_.empty()) return Mono{};
  Mono m = t_[0].m;
  for (size_t k = 1; k < t_.size() && !m.is_one(); ++k) m = Mono::min(m, t_[k].m);
  return m;
}

Poly Poly::div_mono(const Mono& m) const {
  Poly r = *this;
  for (auto& t : r.t_) t.m = t.m / m;
  return r;
}

Poly Poly::div_int(const mpz_class& c) const {
  Poly r = *this;
  for (auto& t : r.t_) mpz_divexact(t.c.get_mpz_t(), t.c.get_mpz_t(), c.get_mpz_t());
  return r;
}

std::optional<Poly> Poly::divide_exact(const Poly& b) const {
  if (b.is_zero()) throw std::domain_error("division by zero polynomial");
  if (is_zero()) return Poly();
  if (b.is_monomial()) {
    Poly q;
    q.t_.reserve(t_.size());
    for (const auto& t : t_) {
      if (!b.t_[0].m.divides(t.m) || !mpz_divisible_p(t.c.get_mpz_t(), b.t_[0].c.get_mpz_t()))
        return std::nullopt;
      mpz_class c;
      mpz_divexact(c.get_mpz_t(), t.c.get_mpz_t(), b.t_[0].c.get_mpz_t());
      q.t_.push_back({t.m / b.t_[0].m, std::move(c)});
    }
    return q;
  }
  // Cheap necessary conditions before the division loop.
  if (!b.t_.back().m.divides(t_.back().m)) return std::nullopt;
  if (!b.t_[0].m.divides(t_[0].m)) return std::nullopt;
  std::vector<Term> q;
  Poly r = *this;
  const Term& bl = b.t_[0];
  while (!r.is_zero()) {
    const Term& lt = r.t_[0];
    if (!bl.m.divides(lt.m) || !mpz_divisible_p(lt.c.get_mpz_t(), bl.c.get_mpz_t())) return std::nullopt;
    Mono qm = lt.m / bl.m;
    mpz_class qc;
    mpz_divexact(qc.get_mpz_t(), lt.c.get_mpz_t(), bl.c.get_mpz_t());
    r -= b.mul_term(qm, qc);
    q.push_back({qm, std::move(qc)});
  }
  Poly out;
  out.t_ = std::move(q);
  return out;
}

std::vector<std::pair<int, Poly>> Poly::coefficients(int v) const {
  std::vector<std::pair<int, std::vector<Term>>> groups;
  for (const auto& t : t_) {
    int e = t.m[v];
    auto it = std::find_if(groups.begin(), groups.end(), [e](const auto& g) { return g.first == e; });
    Term nt{t.m, t.c};
    nt.m.set(v, 0);
    if (it == groups.end()) {
      groups.push_back({e, {std::move(nt)}});
    } else {
      it->second.push_back(std::move(nt));
    }
  }
  std::sort(groups.begin(), groups.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
  std::vector<std::pair<int, Poly>> out;
  out.reserve(groups.size());
  for (auto& g : groups) {
    Poly p;
    p.t_ = std::move(g.second);  // relative order survives clearing a common exponent
    out.emplace_back(g.first, std::move(p));
  }
  return out;
}

mpq_class Poly::eval(const std::vector<mpq_class>& point) const {
  mpq_class sum = 0;
  for (const auto& t : t_) {
    mpq_class term = t.c;
    for (int v = 0; v < kNumVars; ++v) {
      int e = t.m[v];
      if (!e) continue;
      mpq_class pw;
      mpz_pow_ui(pw.get_num_mpz_t(), point[v].get_num_mpz_t(), e);
      mpz_pow_ui(pw.get_den_mpz_t(), point[v].get_den_mpz_t(), e);
      pw.canonicalize();
      term *= pw;
    }
    sum += term;
  }
  return sum;
}

}  // namespace skc
