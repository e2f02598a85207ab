// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include "skc/report.hpp"

using namespace skc;

TEST(Report, RejectsBadConfig) {
  SuiteConfig c;
  c.ns = {1, 2};
  EXPECT_THROW(c.validate(), std::invalid_argument);
  c.ns = {};
  EXPECT_THROW(c.validate(), std::invalid_argument);
  c.ns = {3};
  c.m_min = 2;
  c.m_max = 1;
  EXPECT_THROW(c.validate(), std::invalid_argument);
  c.m_max = 4;
  c.suite = "everything";
  EXPECT_THROW(c.validate(), std::invalid_argument);
  c.suite = "graded";
  EXPECT_NO_THROW(c.validate());
  c.ns = {1};
  EXPECT_THROW(run_suite(c), std::invalid_argument);
}

TEST(Report, CrashBecomesFailure) {
  const CheckRecord r = run_check("x", "y", {}, []() -> std::string { throw std::runtime_error("boom"); });
  EXPECT_FALSE(r.pass);
  EXPECT_NE(r.counterexample.find("boom"), std::string::npos);
  EXPECT_TRUE(run_check("x", "y", {}, [] { return std::string(); }).pass);
}

TEST(Report, FusionSuiteSmallColors) {
  SuiteConfig c;
  c.suite = "fusion";
  c.max_color = 3;
  const VerificationReport rep = run_suite(c);
  EXPECT_TRUE(rep.ok());
  EXPECT_EQ(rep.records.size(), 6u);
}

TEST(Report, DeterministicJsonAndCounts) {
  SuiteConfig c;
  c.suite = "graded";
  c.ns = {4};
  const std::string a = run_suite(c).to_json(c).dump(2);
  const VerificationReport rep = run_suite(c);
  EXPECT_EQ(a, rep.to_json(c).dump(2));
  const auto j = rep.to_json(c);
  EXPECT_EQ(j["schema"], 1);
  EXPECT_EQ(j["summary"]["total"], rep.records.size());
  EXPECT_EQ(j["summary"]["passed"].get<int>() + j["summary"]["failed"].get<int>(), static_cast<int>(rep.records.size()));
  EXPECT_TRUE(rep.ok());
  for (size_t k = 1; k < rep.records.size(); ++k) EXPECT_LT(rep.records[k - 1].id, rep.records[k].id);
  EXPECT_FALSE(j["records"][0].contains("elapsed_ms"));
  c.timing = true;
  EXPECT_TRUE(rep.to_json(c)["records"][0].contains("elapsed_ms"));
}
