// SPDX-License-Identifier: Apache-2.0
#include "skc/scalars.hpp"

#include <stdexcept>
#include <string>

namespace skc {

Rat A_pow(int k) { return Rat::var(var::s, -k); }
Rat q_pow(int k) { return Rat::var(var::s, 2 * k); }
Rat t_pow(int j, int k) { return Rat::var(var::u(j), 2 * k); }
Rat X_pow(int i, int k) { return Rat::var(var::x(i), 2 * k); }

Rat qint(int k) {
  if (k == 0) return Rat();
  if (k < 0) return -qint(-k);
  // Sum of A^{2k-2-4r}, r = 0..k-1.
  std::vector<std::pair<Exps, mpq_class>> terms;
  for (int r = 0; r < k; ++r) {
    Exps e{};
    e[var::s] = -(2 * k - 2 - 4 * r);
    terms.emplace_back(e, 1);
  }
  return Rat::laurent(terms);
}

Rat qfact(int k) {
  if (k < 0) throw std::invalid_argument("qfact: negative argument " + std::to_string(k));
  Rat r = 1;
  for (int j = 2; j <= k; ++j) r *= qint(j);
  return r;
}

std::vector<std::array<int, 3>> ladder_vertices(const std::vector<int>& c, const std::vector<int>& d) {
  const int n = static_cast<int>(c.size()) + 1;
  if (n < 2 || static_cast<int>(d.size()) != n + 2)
    throw std::invalid_argument("ladder coloring needs n-1 internal and n+2 boundary colors");
  // Vertex k meets (f_0, e_1, f_1) for k=0, (e_k, e_{k+1}, f_{k+1}) inside, (e_{n-1}, f_{n+1}, f_n) last.
  std::vector<std::array<int, 3>> v;
  for (int k = 0; k < n; ++k) v.push_back({k == 0 ? d[0] : c[k - 1], k == n - 1 ? d[n + 1] : c[k], d[k + 1]});
  return v;
}

bool admissible_triple(int a, int b, int c) {
  return a >= 0 && b >= 0 && c >= 0 && (a + b + c) % 2 == 0 && a <= b + c && b <= a + c && c <= a + b;
}

Rat kappa(const std::vector<int>& c, const std::vector<int>& d) {
  const auto verts = ladder_vertices(c, d);
  // The half-sum (a+b-opp)/2 at each vertex enters the denominator.
  Rat den = 1;
  for (size_t k = 0; k < verts.size(); ++k) {
    const auto [a, b, opp] = verts[k];
    if (!admissible_triple(a, b, opp))
      throw std::invalid_argument("kappa: inadmissible coloring at vertex " + std::to_string(k) + " (" +
                                  std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(opp) + ")");
    den *= qfact((a + b - opp) / 2);
  }
  Rat num = 1;
  for (int ci : c) num *= qfact(ci);
  return num / den;
}

bool invariant_under_inversion(const Rat& p, const std::vector<int>& J) {
  std::vector<std::optional<Rat>> img(kNumVars);
  for (int j : J) img[var::x(j)] = Rat::var(var::x(j), -1);
  return p.substitute(img) == p;
}

Rat shift(const Rat& p, const std::vector<int>& lambda) {
  Exps w{};
  for (size_t j = 0; j < lambda.size(); ++j) w[var::x(static_cast<int>(j) + 1)] = lambda[j];
  // x_j = X_j^{1/2} picks up q^{lambda_j} = s^{2 lambda_j} per unit.
  for (auto& e : w) e *= 2;
  return p.twist(w);
}

Rat det4(const Mat4& m) {
  // Laplace expansion along the first row.
  auto det3 = [&](int skip) {
    int cols[3], k = 0;
    for (int c = 0; c < 4; ++c)
      if (c != skip) cols[k++] = c;
    const auto& r1 = m[1];
    const auto& r2 = m[2];
    const auto& r3 = m[3];
    return r1[cols[0]] * (r2[cols[1]] * r3[cols[2]] - r2[cols[2]] * r3[cols[1]]) -
           r1[cols[1]] * (r2[cols[0]] * r3[cols[2]] - r2[cols[2]] * r3[cols[0]]) +
           r1[cols[2]] * (r2[cols[0]] * r3[cols[1]] - r2[cols[1]] * r3[cols[0]]);
  };
  Rat d;
  for (int c = 0; c < 4; ++c) {
    if (m[0][c].is_zero()) continue;
    Rat term = m[0][c] * det3(c);
    d = (c % 2 == 0) ? d + term : d - term;
  }
  return d;
}

Mat4 inverse4(const Mat4& m) {
  // Gauss-Jordan on [m | I].
  Mat4 a = m, inv{};
  for (int r = 0; r < 4; ++r) inv[r][r] = 1;
  for (int col = 0; col < 4; ++col) {
    int piv = col;
    while (piv < 4 && a[piv][col].is_zero()) ++piv;
    if (piv == 4) throw std::domain_error("singular 4x4 matrix");
    std::swap(a[piv], a[col]);
    std::swap(inv[piv], inv[col]);
    const Rat scale = a[col][col].inv();
    for (int c = 0; c < 4; ++c) {
      a[col][c] *= scale;
      inv[col][c] *= scale;
    }
    for (int r = 0; r < 4; ++r) {
      if (r == col || a[r][col].is_zero()) continue;
      const Rat f = a[r][col];
      for (int c = 0; c < 4; ++c) {
        a[r][c] -= f * a[col][c];
        inv[r][c] -= f * inv[col][c];
      }
    }
  }
  return inv;
}

}  // namespace skc
