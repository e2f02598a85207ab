// SPDX-License-Identifier: Apache-2.0
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "skc/expr.hpp"
#include "skc/fusion.hpp"
#include "skc/report.hpp"

namespace {

int run_verify(const skc::SuiteConfig& cfg) {
  try {
    cfg.validate();
  } catch (const std::invalid_argument& e) {
    std::cerr << "skc verify: " << e.what() << "\n";
    return 2;
  }
  const skc::VerificationReport rep = skc::run_suite(cfg);
  for (const auto& r : rep.records) {
    std::cout << (r.pass ? "PASS " : "FAIL ") << r.id;
    if (!r.pass) std::cout << "  [" << r.counterexample << "]";
    std::cout << "\n";
  }
  std::cout << rep.passed() << "/" << rep.records.size() << " checks passed\n";
  if (!cfg.json_path.empty()) {
    const std::string text = rep.to_json(cfg).dump(2) + "\n";
    if (cfg.json_path == "-") {
      std::cout << text;
    } else {
      std::ofstream out(cfg.json_path, std::ios::binary);
      if (!out) {
        std::cerr << "skc verify: cannot write " << cfg.json_path << "\n";
        return 2;
      }
      out << text;
    }
  }
  return rep.ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of skein and Coulomb branch identities"};
  app.require_subcommand(1);

  skc::SuiteConfig cfg;
  auto* verify = app.add_subcommand("verify", "Run the verification suites");
  verify->add_option("--n", cfg.ns, "Surface sizes")->delimiter(',');
  verify->add_option("--suite", cfg.suite, "scalars, qdiff, skein, monopole, graded, fusion or all");
  verify->add_option("--m-min", cfg.m_min, "Smallest theta index m");
  verify->add_option("--m-max", cfg.m_max, "Largest theta index m");
  verify->add_option("--max-color", cfg.max_color, "Largest Jones-Wenzl color");
  verify->add_option("--seed", cfg.seed, "Seed for randomized checks");
  verify->add_option("--json", cfg.json_path, "Write a JSON report here ('-' for stdout)");
  verify->add_flag("--timing", cfg.timing, "Include elapsed times in the JSON report");

  std::string algebra = "xtorus", expr;
  int n = 3;
  auto* eval = app.add_subcommand("eval", "Evaluate an expression and print its canonical form");
  eval->add_option("--algebra", algebra, "xtorus, ztrace, dz or graded");
  eval->add_option("--n", n, "Surface size");
  eval->add_option("expr", expr, "Expression")->required();

  auto* fusion = app.add_subcommand("fusion", "Temperley-Lieb computations");
  fusion->require_subcommand(1);
  int color = 2;
  auto* jw = fusion->add_subcommand("jw", "Print a Jones-Wenzl idempotent");
  jw->add_option("--c", color, "Number of strands")->check(CLI::Range(0, 12));
  auto* loop = fusion->add_subcommand("gamma-loop", "Evaluate the loop around a colored strand");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    if (*verify) return run_verify(cfg);
    if (*eval) {
      const skc::EvalContext ctx{skc::parse_eval_algebra(algebra), skc::SurfaceParams(n)};
      std::cout << skc::eval_expression(expr, ctx) << "\n";
      return 0;
    }
    if (*jw) {
      std::cout << skc::jones_wenzl(color).to_string() << "\n";
      return 0;
    }
    if (*loop) {
      const skc::Rat v = skc::gamma_loop_eval();
      std::cout << v.to_string(skc::Style::A) << "\n";
      return v == skc::gamma_loop_closed_form() ? 0 : 1;
    }
  } catch (const skc::ParseError& e) {
    std::cerr << "skc: parse error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "skc: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
