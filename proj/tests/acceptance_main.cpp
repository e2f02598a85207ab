// SPDX-License-Identifier: Apache-2.0
// One PASS/FAIL line per acceptance criterion; nonzero exit if any fails.
#include <iostream>

#include "skc/report.hpp"

using namespace skc;
using namespace skc::checks;

namespace {

bool report(int k, const char* title, const std::vector<CheckRecord>& recs) {
  bool ok = true;
  std::string why;
  for (const auto& r : recs) {
    if (r.pass) continue;
    if (ok) why = r.id + ": " + r.counterexample;
    ok = false;
  }
  if (why.size() > 300) why = why.substr(0, 300) + "...";
  std::cout << (ok ? "PASS" : "FAIL") << " criterion " << k << ": " << title;
  if (!ok) std::cout << "  [" << why << "]";
  std::cout << std::endl;
  return ok;
}

}  // namespace

int main() {
  constexpr uint64_t seed = 42;
  bool all = true;
  std::vector<CheckRecord> r;

  for (int n = 2; n <= 5; ++n) r.push_back(factorization(n));
  all &= report(1, "star(Upsilon(g)) = Phi(g) for gamma, delta, sigma, n = 2..5", r);

  r.clear();
  for (int n = 2; n <= 5; ++n) {
    r.push_back(phi_psi(n, -2, 4));
    r.push_back(phi_gamma_psi(n));
  }
  all &= report(2, "dressed monopoles match theta principal parts, n = 2..5, m = -2..4", r);

  r.clear();
  for (int n = 2; n <= 5; ++n) r.push_back(theta_one(n));
  all &= report(3, "theta_{i,1} minus its principal part is a symmetric Laurent polynomial, n <= 5", r);

  r.clear();
  for (int n = 2; n <= 5; ++n) r.push_back(ef_commutator(n));
  all &= report(4, "[E,F] = (q - q^-1) h with h w-swap symmetric, n <= 5", r);

  r.clear();
  for (int n = 3; n <= 6; ++n) {
    r.push_back(graded_displays(n));
    r.push_back(solve_sigma(n));
  }
  r.push_back(graded_gamma_commute(seed, 50));
  r.push_back(graded_multiples(seed + 1, 20));
  r.push_back(graded_assoc(seed + 2, 100));
  all &= report(5, "graded products, commutation, multiples, associativity, sigma recursion n <= 6", r);

  r.clear();
  for (int c = 0; c <= 6; ++c) r.push_back(jones_wenzl(c));
  r.push_back(jones_wenzl_small());
  r.push_back(gamma_loop(8));
  all &= report(6, "Jones-Wenzl axioms c <= 6, small idempotents, loop value", r);

  r.clear();
  r.push_back(skein_matrix_det());
  r.push_back(coulomb_det());
  r.push_back(planted_solve(seed, 20));
  all &= report(7, "skein and Coulomb matrices nondegenerate, planted solutions recovered", r);

  r.clear();
  r.push_back(rat_field_laws(seed, 200));
  r.push_back(rat_eval_oracle(seed + 1, 200));
  r.push_back(scalar_identities(seed + 2, 5));
  r.push_back(kappa_values());
  for (const char* a : {"xtorus", "ztrace", "dz"}) r.push_back(qdiff_laws(a, seed + 3, 200));
  r.push_back(normal_ordering(seed + 4, 200));
  r.push_back(star_antihom(seed + 5, 200));
  r.push_back(psi_multiplicative(seed + 6, 200));
  r.push_back(pairing_relations());
  all &= report(8, "engine laws on 200 random instances each, evaluation oracle", r);

  return all ? 0 : 1;
}
