// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "json.hpp"

namespace skc {

struct SuiteConfig {
  std::vector<int> ns{2, 3, 4};
  int m_min = -2;
  int m_max = 4;
  int max_color = 6;
  uint64_t seed = 42;
  /// scalars, qdiff, skein, monopole, graded, fusion or all.
  std::string suite = "all";
  std::string json_path;
  /// Include per-check wall time in the JSON (makes it run-dependent).
  bool timing = false;

  /// Throws std::invalid_argument describing the first problem.
  void validate() const;
};

struct CheckRecord {
  std::string id;
  /// Short name of the result being checked.
  std::string anchor;
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  bool pass = false;
  double elapsed_ms = 0;
  /// Rendering of the first failing instance, or the error message.
  std::string counterexample;
};

struct VerificationReport {
  std::vector<CheckRecord> records;
  int passed() const;
  int failed() const;
  bool ok() const { return failed() == 0; }
  nlohmann::ordered_json to_json(const SuiteConfig& cfg) const;
};

/// Runs body, timing it; an escaped exception becomes a failure carrying its message.
/// body returns an empty string on success and a counterexample otherwise.
CheckRecord run_check(std::string id, std::string anchor, nlohmann::ordered_json params,
                      const std::function<std::string()>& body);

namespace checks {

// Engine laws.
CheckRecord rat_field_laws(uint64_t seed, int trials);
CheckRecord rat_eval_oracle(uint64_t seed, int trials);
CheckRecord scalar_identities(uint64_t seed, int trials);
CheckRecord kappa_values();
CheckRecord qdiff_laws(const std::string& algebra, uint64_t seed, int trials);
CheckRecord normal_ordering(uint64_t seed, int trials);
CheckRecord star_antihom(uint64_t seed, int trials);
CheckRecord pairing_relations();

// Skein side.
CheckRecord factorization(int n);
CheckRecord theta_one(int n);
CheckRecord gammas_commute(int n);
CheckRecord sigma_principal(int n);
CheckRecord skein_matrix_det();

// Monopole side.
CheckRecord phi_psi(int n, int m_min, int m_max);
CheckRecord phi_gamma_psi(int n);
CheckRecord ef_commutator(int n);
CheckRecord psi_multiplicative(uint64_t seed, int trials);

// Associated graded.
CheckRecord graded_displays(int n);
CheckRecord graded_gamma_commute(uint64_t seed, int trials);
CheckRecord graded_multiples(uint64_t seed, int trials);
CheckRecord graded_assoc(uint64_t seed, int trials);
CheckRecord graded_invariance(uint64_t seed, int trials);
CheckRecord graded_dressed(int n);
CheckRecord solve_sigma(int n);
CheckRecord coulomb_det();
CheckRecord planted_solve(uint64_t seed, int trials);

// Fusion.
CheckRecord jones_wenzl(int c);
CheckRecord jones_wenzl_small();
CheckRecord gamma_loop(int max_c);

}  // namespace checks

/// Execute the selected suites; records are sorted by id.
VerificationReport run_suite(const SuiteConfig& cfg);

}  // namespace skc
