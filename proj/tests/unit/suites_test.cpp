// Copyright 2026 The qeuler Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "core/suites.hpp"

#include <gtest/gtest.h>

#include <stdexcept>
#include <string>

#include "core/report.hpp"

namespace qeuler {
namespace {

const std::string kFixtures = QEULER_FIXTURES;

TEST(Suites, EveryNamedSuitePassesAtDefaults) {
  for (const auto& name : suite_names()) {
    const Report r = run_suite(name);
    EXPECT_TRUE(r.passed()) << name << "\n" << render_report(r, OutputFormat::Text, false);
    EXPECT_GT(r.items().size(), 0u) << name;
  }
}

TEST(Suites, SpecificBounds) {
  EXPECT_TRUE(run_suite("expansionA", 12).passed());
  EXPECT_TRUE(run_suite("monotone", 8, {Rat(2), Rat::parse("3/2"), Rat::parse("1/2")}).passed());
  const Report d = run_suite("doubloon", 2);
  EXPECT_TRUE(d.passed());
  const std::string text = render_report(d, OutputFormat::Text, false);
  EXPECT_NE(text.find("16"), std::string::npos);
}

TEST(Suites, UsageErrors) {
  EXPECT_THROW(run_suite("bogus"), std::invalid_argument);
  EXPECT_THROW(run_suite("doubloon", 5), std::invalid_argument);
  EXPECT_THROW(run_suite("monotone", 4, {Rat(1)}), std::invalid_argument);
  EXPECT_THROW(conjecture_report(-1), std::invalid_argument);
}

TEST(Conjecture, ReportsConsistent) {
  const Report r = conjecture_report(4);
  EXPECT_EQ(r.verdict(), "consistent");
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(conjecture_report(0).verdict(), "consistent");
}

TEST(Oeis, FixturesMatch) {
  EXPECT_TRUE(oeis_check("A101280", 6, kFixtures + "/b101280.txt").passed());
  EXPECT_TRUE(oeis_check("A008971", 5, kFixtures + "/b008971.txt").passed());
  EXPECT_TRUE(oeis_check("A101280", 9, kFixtures + "/b101280.txt").passed());
  EXPECT_TRUE(oeis_check("A008971", 9, kFixtures + "/b008971.txt").passed());
}

TEST(Oeis, DivisibilityByPowersOfFour) {
  const auto rows = oeis_rows("A008971", 10);
  EXPECT_EQ(rows.size(), 11u);
  EXPECT_EQ(rows[6], (std::vector<BigInt>{1, 179, 479, 61}));
}

TEST(Oeis, ShortFixtureFailsAndBadInputThrows) {
  EXPECT_FALSE(oeis_check("A008971", 10, kFixtures + "/b008971.txt").passed());
  EXPECT_THROW(oeis_check("A000045", 3, kFixtures + "/b101280.txt"), std::invalid_argument);
  EXPECT_THROW(read_bfile(kFixtures + "/missing.txt"), std::runtime_error);
}

TEST(Oeis, ReadsBFile) {
  const BFile b = read_bfile(kFixtures + "/b101280.txt");
  ASSERT_GE(b.terms.size(), 12u);
  EXPECT_EQ(b.terms[0].first, 1);
  EXPECT_EQ(b.terms[11].second, 136);
}

TEST(Report, RenderingIsDeterministicWithoutTiming) {
  const Report r = run_suite("reciprocity", 6);
  for (auto f : {OutputFormat::Text, OutputFormat::Csv, OutputFormat::Json}) {
    EXPECT_EQ(render_report(r, f, false), render_report(run_suite("reciprocity", 6), f, false));
  }
  const auto j = nlohmann::json::parse(render_report(r, OutputFormat::Json, true));
  EXPECT_TRUE(j.contains("summary"));
  EXPECT_EQ(parse_format("csv"), OutputFormat::Csv);
  EXPECT_THROW(parse_format("xml"), std::invalid_argument);
}

}  // namespace
}  // namespace qeuler
