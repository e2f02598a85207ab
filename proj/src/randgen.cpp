// SPDX-License-Identifier: Apache-2.0
#include "skc/randgen.hpp"

#include "skc/scalars.hpp"

namespace skc::gen {

int pick(Rng& rng, int lo, int hi) { return lo + static_cast<int>(rng() % static_cast<uint64_t>(hi - lo + 1)); }

Rat laurent(Rng& rng, const std::vector<int>& vars, int terms, int maxdeg) {
  std::vector<std::pair<Exps, mpq_class>> t;
  for (int k = 0; k < terms; ++k) {
    Exps e{};
    for (int v : vars) e[v] = pick(rng, -maxdeg, maxdeg);
    t.emplace_back(e, mpq_class(pick(rng, -5, 5), pick(rng, 1, 3)));
  }
  return Rat::laurent(t);
}

namespace {

Rat ratio(Rng& rng, const std::vector<int>& vars) {
  Rat num = laurent(rng, vars, pick(rng, 1, 3), 2);
  Rat den = laurent(rng, vars, pick(rng, 1, 2), 2);
  if (den.is_zero()) den = 1;
  return num / den;
}

std::vector<int> coord_vars(const AlgebraSpec& spec) {
  switch (spec.kind) {
    case AlgebraKind::X:
      return {var::s, var::x(1), var::x(2)};
    case AlgebraKind::Z:
      return {var::s, var::Q(1), var::Q(2), var::C(1)};
    case AlgebraKind::D:
      return {var::s, var::wp(1), var::wm(1), var::z(1)};
  }
  return {var::s};
}

}  // namespace

Rat scalar(Rng& rng) { return ratio(rng, {var::s, var::u(1), var::u(2)}); }

Rat coord_rat(Rng& rng) { return ratio(rng, {var::s, var::x(1), var::x(2)}); }

std::vector<mpq_class> point(Rng& rng) {
  std::vector<mpq_class> p(kNumVars);
  for (auto& v : p) {
    v = mpq_class(pick(rng, 1, 9) * (rng() % 2 ? 1 : -1), pick(rng, 1, 7));
    v.canonicalize();
  }
  return p;
}

OpElement op_element(Rng& rng, const AlgebraSpec& spec, int terms) {
  const std::vector<int> vars = coord_vars(spec);
  OpElement r(spec);
  for (int k = 0; k < terms; ++k) {
    ShiftKey key(spec.num_shifts(), 0);
    for (int j = 0; j < 2 && j < spec.num_shifts(); ++j) key[j] = pick(rng, -2, 2);
    r += OpElement::term(spec, key, laurent(rng, vars, pick(rng, 1, 2), 2));
  }
  return r;
}

OpElement balanced_d(Rng& rng, int terms) {
  const AlgebraSpec& D = dalg();
  const std::vector<int> vars{var::s, var::wp(1), var::wm(1), var::z(1)};
  OpElement r(D);
  for (int k = 0; k < terms; ++k) {
    ShiftKey key(D.num_shifts(), 0);
    key[0] = pick(rng, -2, 2);
    key[1] = -key[0];
    r += OpElement::term(D, key, laurent(rng, vars, pick(rng, 1, 2), 2));
  }
  return r;
}

Coweight coweight(Rng& rng, int r, int maxe) {
  std::vector<int> v(r);
  for (int& e : v) e = pick(rng, 0, maxe);
  return Coweight(std::move(v));
}

GradedElement graded_term(Rng& rng, int n, const Coweight& lambda) {
  std::vector<int> free{var::s, var::u(1), var::u(2)};
  for (int j : lambda.support()) free.push_back(var::x(j));
  Rat f = laurent(rng, free, pick(rng, 1, 3), 2);
  // x_j carries X_j^{1/2}; keep only integral X powers.
  f = f.substitute([&] {
    std::vector<std::optional<Rat>> img(kNumVars);
    for (int j : lambda.support()) img[var::x(j)] = X_pow(j, 1);
    return img;
  }());
  for (int j = 1; j <= lambda.rank(); ++j) {
    if (lambda.at(j)) continue;
    const int d = pick(rng, 0, 2);
    f *= (X_pow(j, 1) + X_pow(j, -1) + Rat(pick(rng, -2, 2))).pow(d);
  }
  return GradedElement::basis(n, lambda, f);
}

}  // namespace skc::gen
