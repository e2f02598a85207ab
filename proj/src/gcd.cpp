// SPDX-License-Identifier: Apache-2.0
//
// Multivariate gcd over Z.  Structural reductions (content, monomial
// content, variables missing from one side or provably absent from the gcd)
// come first; what remains goes to Brown's dense modular algorithm with early
// termination, and every modular candidate is confirmed by exact division.
#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <stdexcept>

#include "skc/poly.hpp"

namespace skc {
namespace {

using u32 = uint32_t;
using u64 = uint64_t;

u32 mulm(u32 a, u32 b, u32 p) { return static_cast<u32>(static_cast<u64>(a) * b % p); }
u32 addm(u32 a, u32 b, u32 p) {
  u32 s = a + b;
  return s >= p ? s - p : s;
}
u32 subm(u32 a, u32 b, u32 p) { return a >= b ? a - b : a + p - b; }
u32 powm(u32 a, u64 e, u32 p) {
  u32 r = 1;
  while (e) {
    if (e & 1) r = mulm(r, a, p);
    a = mulm(a, a, p);
    e >>= 1;
  }
  return r;
}
u32 invm(u32 a, u32 p) { return powm(a, p - 2, p); }

bool is_prime(u32 n) {
  if (n < 2) return false;
  for (u32 d = 2; static_cast<u64>(d) * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

const std::vector<u32>& primes() {
  static const std::vector<u32> list = [] {
    std::vector<u32> out;
    for (u32 n = 2147483647u; out.size() < 96; n -= 2)
      if (is_prime(n)) out.push_back(n);
    return out;
  }();
  return list;
}

// Dense univariate polynomials mod p, constant term first, no trailing zeros.
using UPoly = std::vector<u32>;

void trim(UPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}
int udeg(const UPoly& a) { return static_cast<int>(a.size()) - 1; }

u32 ueval(const UPoly& a, u32 x, u32 p) {
  u32 r = 0;
  for (size_t k = a.size(); k-- > 0;) r = addm(mulm(r, x, p), a[k], p);
  return r;
}

UPoly umul(const UPoly& a, const UPoly& b, u32 p) {
  if (a.empty() || b.empty()) return {};
  UPoly r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (size_t j = 0; j < b.size(); ++j) r[i + j] = addm(r[i + j], mulm(a[i], b[j], p), p);
  }
  trim(r);
  return r;
}

UPoly uscale(UPoly a, u32 c, u32 p) {
  for (auto& x : a) x = mulm(x, c, p);
  trim(a);
  return a;
}

UPoly umonic(const UPoly& a, u32 p) {
  if (a.empty()) return a;
  return uscale(a, invm(a.back(), p), p);
}

// Quotient and remainder; b nonzero.
void udivrem(UPoly a, const UPoly& b, UPoly& q, u32 p) {
  int db = udeg(b);
  u32 inv = invm(b.back(), p);
  q.assign(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, 0);
  for (int k = udeg(a); k >= db; --k) {
    u32 c = mulm(a[k], inv, p);
    q[k - db] = c;
    if (!c) continue;
    for (int j = 0; j <= db; ++j) a[k - db + j] = subm(a[k - db + j], mulm(c, b[j], p), p);
  }
  a.resize(std::max(db, 0));
  trim(a);
  trim(q);
  // the remainder is discarded by callers that only need exact quotients
}

UPoly urem(UPoly a, const UPoly& b, u32 p) {
  int db = udeg(b);
  u32 inv = invm(b.back(), p);
  for (int k = udeg(a); k >= db; --k) {
    u32 c = mulm(a[k], inv, p);
    if (!c) continue;
    for (int j = 0; j <= db; ++j) a[k - db + j] = subm(a[k - db + j], mulm(c, b[j], p), p);
  }
  if (static_cast<int>(a.size()) > db) a.resize(std::max(db, 0));
  trim(a);
  return a;
}

UPoly ugcd(UPoly a, UPoly b, u32 p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    UPoly r = urem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return umonic(a, p);
}

UPoly uquo(const UPoly& a, const UPoly& b, u32 p) {
  UPoly q;
  udivrem(a, b, q, p);
  return q;
}

struct MTerm {
  Mono m;
  u32 c;
};
// Sparse polynomial mod p, sorted by strictly decreasing monomial.
using ModPoly = std::vector<MTerm>;

ModPoly normalize(std::vector<MTerm> t, u32 p) {
  std::sort(t.begin(), t.end(), [](const MTerm& a, const MTerm& b) { return a.m > b.m; });
  ModPoly out;
  out.reserve(t.size());
  for (auto& x : t) {
    if (!out.empty() && out.back().m == x.m) {
      out.back().c = addm(out.back().c, x.c, p);
    } else {
      out.push_back(x);
    }
  }
  std::erase_if(out, [](const MTerm& x) { return x.c == 0; });
  return out;
}

ModPoly reduce(const Poly& a, u32 p) {
  ModPoly out;
  out.reserve(a.size());
  for (const auto& t : a.terms()) {
    u32 c = static_cast<u32>(mpz_fdiv_ui(t.c.get_mpz_t(), p));
    if (c) out.push_back({t.m, c});
  }
  return out;
}

bool is_const(const ModPoly& a) { return a.size() == 1 && a[0].m.is_one(); }

ModPoly mmul(const ModPoly& a, const ModPoly& b, u32 p) {
  std::vector<MTerm> t;
  t.reserve(a.size() * b.size());
  for (const auto& x : a)
    for (const auto& y : b) t.push_back({x.m * y.m, mulm(x.c, y.c, p)});
  return normalize(std::move(t), p);
}

ModPoly mscale(ModPoly a, u32 c, u32 p) {
  for (auto& x : a) x.c = mulm(x.c, c, p);
  std::erase_if(a, [](const MTerm& x) { return x.c == 0; });
  return a;
}

ModPoly mmonic(const ModPoly& a, u32 p) { return a.empty() ? a : mscale(a, invm(a[0].c, p), p); }

// r - c*m*b, all sorted.
ModPoly msub_term(const ModPoly& r, const ModPoly& b, const Mono& m, u32 c, u32 p) {
  ModPoly out;
  out.reserve(r.size() + b.size());
  size_t i = 0, j = 0;
  while (i < r.size() || j < b.size()) {
    if (j == b.size()) {
      out.push_back(r[i++]);
      continue;
    }
    Mono bm = b[j].m * m;
    if (i < r.size() && r[i].m > bm) {
      out.push_back(r[i++]);
    } else if (i < r.size() && r[i].m == bm) {
      u32 v = subm(r[i].c, mulm(c, b[j].c, p), p);
      if (v) out.push_back({bm, v});
      ++i;
      ++j;
    } else {
      out.push_back({bm, subm(0, mulm(c, b[j].c, p), p)});
      ++j;
    }
  }
  return out;
}

// True when b divides a in Z_p[vars].
bool mdivides(const ModPoly& b, ModPoly r, u32 p) {
  u32 inv = invm(b[0].c, p);
  while (!r.empty()) {
    if (!b[0].m.divides(r[0].m)) return false;
    Mono qm = r[0].m / b[0].m;
    u32 qc = mulm(r[0].c, inv, p);
    r = msub_term(r, b, qm, qc, p);
  }
  return true;
}

using Split = std::map<Mono, UPoly, std::greater<Mono>>;

// View a as a polynomial in the variables other than y with coefficients in Z_p[y].
Split split(const ModPoly& a, int y) {
  Split out;
  for (const auto& t : a) {
    Mono main = t.m;
    int e = main[y];
    main.set(y, 0);
    UPoly& u = out[main];
    if (static_cast<int>(u.size()) <= e) u.resize(e + 1, 0);
    u[e] = t.c;
  }
  return out;
}

ModPoly join(const Split& s, int y, u32 p) {
  std::vector<MTerm> t;
  for (const auto& [main, u] : s)
    for (size_t k = 0; k < u.size(); ++k)
      if (u[k]) {
        Mono m = main;
        m.set(y, static_cast<int>(k));
        t.push_back({m, u[k]});
      }
  return normalize(std::move(t), p);
}

UPoly split_content(const Split& s, u32 p) {
  UPoly g;
  for (const auto& kv : s) {
    g = ugcd(g, kv.second, p);
    if (g.size() == 1) break;
  }
  return g;
}

ModPoly pgcd(const ModPoly& a, const ModPoly& b, const std::vector<int>& vars, u32 p);

ModPoly pgcd_univariate(const ModPoly& a, const ModPoly& b, int v, u32 p) {
  auto dense = [v](const ModPoly& f) {
    UPoly u;
    for (const auto& t : f) {
      int e = t.m[v];
      if (static_cast<int>(u.size()) <= e) u.resize(e + 1, 0);
      u[e] = t.c;
    }
    return u;
  };
  UPoly g = ugcd(dense(a), dense(b), p);
  ModPoly out;
  for (size_t k = g.size(); k-- > 0;)
    if (g[k]) out.push_back({Mono::var(v, static_cast<int>(k)), g[k]});
  return out;
}

// Monic gcd of nonzero a, b in Z_p[vars]; Brown's algorithm with the last
// variable as evaluation variable.
ModPoly pgcd(const ModPoly& a, const ModPoly& b, const std::vector<int>& vars, u32 p) {
  if (is_const(a) || is_const(b)) return {{Mono{}, 1}};
  if (vars.size() == 1) return pgcd_univariate(a, b, vars[0], p);
  const int y = vars.back();
  const std::vector<int> rest(vars.begin(), vars.end() - 1);

  Split sa = split(a, y), sb = split(b, y);
  UPoly ca = split_content(sa, p), cb = split_content(sb, p);
  UPoly cont = ugcd(ca, cb, p);
  for (auto& kv : sa) kv.second = uquo(kv.second, ca, p);
  for (auto& kv : sb) kv.second = uquo(kv.second, cb, p);
  const ModPoly ap = join(sa, y, p), bp = join(sb, y, p);

  auto content_result = [&]() {
    ModPoly out;
    for (size_t k = cont.size(); k-- > 0;)
      if (cont[k]) out.push_back({Mono::var(y, static_cast<int>(k)), cont[k]});
    return out;
  };

  UPoly g = ugcd(sa.begin()->second, sb.begin()->second, p);
  int dya = 0, dyb = 0;
  for (const auto& kv : sa) dya = std::max(dya, udeg(kv.second));
  for (const auto& kv : sb) dyb = std::max(dyb, udeg(kv.second));
  const size_t bound = static_cast<size_t>(std::min(dya, dyb) + udeg(g));

  Split h;
  UPoly newton{1};  // prod (y - beta_k)
  size_t npts = 0;
  Mono curdeg;
  bool have = false;

  for (u32 beta = 1; beta < p; ++beta) {
    u32 gb = ueval(g, beta, p);
    if (!gb) continue;
    auto image = [&](const Split& s) {
      ModPoly out;
      for (const auto& [main, u] : s) {
        u32 v = ueval(u, beta, p);
        if (v) out.push_back({main, v});
      }
      return out;
    };
    ModPoly ab = image(sa), bb = image(sb);
    if (ab.empty() || bb.empty()) continue;
    ModPoly c = pgcd(ab, bb, rest, p);
    if (is_const(c)) return content_result();
    c = mscale(c, gb, p);
    const Mono lm = c[0].m;
    bool changed = true;
    if (!have || lm < curdeg) {
      h.clear();
      for (const auto& t : c) h[t.m] = UPoly{t.c};
      newton = UPoly{subm(0, beta, p), 1};
      npts = 1;
      curdeg = lm;
      have = true;
    } else if (lm > curdeg) {
      continue;
    } else {
      changed = false;
      u32 inv = invm(ueval(newton, beta, p), p);
      std::map<Mono, u32, std::greater<Mono>> cv;
      for (const auto& t : c) cv[t.m] = t.c;
      for (const auto& kv : h) cv.try_emplace(kv.first, 0);
      for (const auto& [m, val] : cv) {
        UPoly& u = h[m];
        u32 diff = subm(val, ueval(u, beta, p), p);
        if (!diff) continue;
        changed = true;
        UPoly corr = uscale(newton, mulm(diff, inv, p), p);
        if (u.size() < corr.size()) u.resize(corr.size(), 0);
        for (size_t k = 0; k < corr.size(); ++k) u[k] = addm(u[k], corr[k], p);
        trim(u);
      }
      std::erase_if(h, [](const auto& kv) { return kv.second.empty(); });
      newton = umul(newton, UPoly{subm(0, beta, p), 1}, p);
      ++npts;
    }
    if (!changed || npts > bound) {
      Split hp = h;
      UPoly hc = split_content(hp, p);
      for (auto& kv : hp) kv.second = uquo(kv.second, hc, p);
      ModPoly cand = mmonic(join(hp, y, p), p);
      if (mdivides(cand, ap, p) && mdivides(cand, bp, p)) return mmonic(mmul(content_result(), cand, p), p);
      if (npts > bound) have = false;
    }
  }
  throw std::runtime_error("modular gcd: evaluation points exhausted");
}

Poly positive(Poly a) { return (!a.is_zero() && a.lead().c < 0) ? -a : a; }

Poly primitive_part(const Poly& a) {
  if (a.is_zero()) return a;
  return positive(a.div_int(a.content()));
}

std::vector<int> var_list(uint64_t mask) {
  std::vector<int> out;
  for (int v = 0; v < kNumVars; ++v)
    if (mask >> v & 1) out.push_back(v);
  return out;
}

Poly gcd_primitive(const Poly& a, const Poly& b);

Poly gcd_list(std::vector<Poly> list) {
  std::sort(list.begin(), list.end(), [](const Poly& x, const Poly& y) { return x.size() < y.size(); });
  Poly g = list[0];
  for (size_t k = 1; k < list.size(); ++k) {
    g = gcd(g, list[k]);
    if (g.is_one()) break;
  }
  return positive(g);
}

std::vector<Poly> coefficient_list(const Poly& a, int v) {
  std::vector<Poly> out;
  for (auto& [e, c] : a.coefficients(v)) out.push_back(std::move(c));
  return out;
}

// Upper bounds for deg_x gcd(a, b) for every x in vars, from univariate images
// taken at random points where the leading coefficient in x survives.
std::vector<int> degree_bounds(const Poly& a, const Poly& b, const std::vector<int>& vars) {
  const u32 p = primes()[0];
  std::mt19937_64 rng(0x5EED0000ULL + a.size() * 131 + b.size());
  std::vector<int> out;
  for (int x : vars) {
    const int dxa = a.degree(x), dxb = b.degree(x);
    int bound = std::min(dxa, dxb);
    for (int attempt = 0; attempt < 3; ++attempt) {
      std::array<u32, kNumVars> beta{};
      for (int v : vars) beta[v] = static_cast<u32>(rng() % (p - 2)) + 2;
      auto image = [&](const Poly& f) {
        UPoly u(f.degree(x) + 1, 0);
        for (const auto& t : f.terms()) {
          u32 c = static_cast<u32>(mpz_fdiv_ui(t.c.get_mpz_t(), p));
          for (int v : vars)
            if (v != x && t.m[v]) c = mulm(c, powm(beta[v], t.m[v], p), p);
          u[t.m[x]] = addm(u[t.m[x]], c, p);
        }
        return u;
      };
      UPoly ua = image(a), ub = image(b);
      if (ua.back() == 0) continue;  // leading coefficient in x vanished
      trim(ub);
      if (ub.empty()) continue;
      bound = udeg(ugcd(ua, ub, p));
      break;
    }
    out.push_back(bound);
  }
  return out;
}

Poly mgcd(const Poly& a, const Poly& b, const std::vector<int>& vars) {
  mpz_class gamma;
  mpz_gcd(gamma.get_mpz_t(), a.lead().c.get_mpz_t(), b.lead().c.get_mpz_t());
  std::map<Mono, mpz_class, std::greater<Mono>> h;
  mpz_class modulus;
  Mono curdeg;
  bool have = false;
  for (u32 p : primes()) {
    if (mpz_fdiv_ui(gamma.get_mpz_t(), p) == 0) continue;
    ModPoly ap = reduce(a, p), bp = reduce(b, p);
    if (ap.empty() || bp.empty()) continue;
    ModPoly gp = pgcd(ap, bp, vars, p);
    if (is_const(gp)) return Poly(1);
    gp = mscale(gp, static_cast<u32>(mpz_fdiv_ui(gamma.get_mpz_t(), p)), p);
    const Mono lm = gp[0].m;
    if (!have || lm < curdeg) {
      h.clear();
      for (const auto& t : gp) h[t.m] = t.c > p / 2 ? mpz_class(t.c) - p : mpz_class(t.c);
      modulus = p;
      curdeg = lm;
      have = true;
    } else if (lm > curdeg) {
      continue;
    } else {
      std::map<Mono, u32, std::greater<Mono>> img;
      for (const auto& t : gp) img[t.m] = t.c;
      for (const auto& kv : h) img.try_emplace(kv.first, 0);
      const u32 minv = invm(static_cast<u32>(mpz_fdiv_ui(modulus.get_mpz_t(), p)), p);
      mpz_class newmod = modulus * p;
      mpz_class half = newmod / 2;
      for (const auto& [m, val] : img) {
        mpz_class& x = h[m];
        u32 xr = static_cast<u32>(mpz_fdiv_ui(x.get_mpz_t(), p));
        u32 k = mulm(subm(val, xr, p), minv, p);
        x += modulus * k;
        if (x > half) x -= newmod;
        if (x < -half) x += newmod;
      }
      std::erase_if(h, [](const auto& kv) { return kv.second == 0; });
      modulus = newmod;
    }
    std::vector<Term> terms;
    for (const auto& [m, c] : h) terms.push_back({m, c});
    Poly cand = primitive_part(Poly::from_terms(std::move(terms)));
    if (cand.is_zero()) continue;
    if (a.divide_exact(cand) && b.divide_exact(cand)) return cand;
  }
  throw std::runtime_error("modular gcd: primes exhausted");
}

// a, b nonzero, primitive and free of monomial factors.
Poly gcd_primitive(const Poly& a, const Poly& b) {
  if (a.is_constant() || b.is_constant()) return Poly(1);
  if (a == b || a == -b) return positive(a);
  const uint64_t sa = a.support(), sb = b.support();
  if (sa != sb) {
    const uint64_t diff = sa ^ sb;
    int x = 0;
    while (!(diff >> x & 1)) ++x;
    const Poly& with = (sa >> x & 1) ? a : b;
    const Poly& without = (sa >> x & 1) ? b : a;
    std::vector<Poly> list = coefficient_list(with, x);
    list.push_back(without);
    return gcd_list(std::move(list));
  }
  const std::vector<int> vars = var_list(sa);
  const std::vector<int> bounds = degree_bounds(a, b, vars);
  if (std::all_of(bounds.begin(), bounds.end(), [](int d) { return d == 0; })) return Poly(1);
  for (size_t k = 0; k < vars.size(); ++k) {
    if (bounds[k] == 0) {
      std::vector<Poly> list = coefficient_list(a, vars[k]);
      for (auto& c : coefficient_list(b, vars[k])) list.push_back(std::move(c));
      return gcd_list(std::move(list));
    }
  }
  if (a.size() <= b.size()) {
    if (b.divide_exact(a)) return positive(a);
  } else if (a.divide_exact(b)) {
    return positive(b);
  }
  return mgcd(a, b, vars);
}

}  // namespace

Poly gcd(const Poly& a, const Poly& b) {
  if (a.is_zero()) return positive(b);
  if (b.is_zero()) return positive(a);
  const mpz_class ca = a.content(), cb = b.content();
  mpz_class cg;
  mpz_gcd(cg.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
  const Mono ma = a.mono_content(), mb = b.mono_content();
  const Mono mg = Mono::min(ma, mb);
  if (a.is_monomial() || b.is_monomial()) return Poly::monomial(mg, cg);
  Poly g = gcd_primitive(a.div_int(ca).div_mono(ma), b.div_int(cb).div_mono(mb));
  return g.mul_term(mg, cg);
}

}  // namespace skc
