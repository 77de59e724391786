// Copyright 2026 The gateassign Authors
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

#include "gateassign/report_io.h"

#include <random>
#include <sstream>

#include "gtest/gtest.h"
#include "testing/oracles.h"

namespace gateassign {
namespace {

const Schedule& Chain3() {
  static const Schedule s({{"A", 0, 60}, {"B", 120, 180}, {"C", 240, 300}});
  return s;
}

Assignment Parse(const std::string& text, const Schedule& s,
                 std::optional<int> gates = std::nullopt) {
  std::istringstream in(text);
  return ParseAssignment(in, s, gates);
}

TEST(CostReportJsonTest, ChainFields) {
  const CostReport r = TotalCost(Chain3(), {{0, 0, 0}, 1}, 15,
                                 ObjectiveMode::kAdjacentExpected);
  const auto j = CostReportToJson(Chain3(), r);
  EXPECT_EQ(j["mode"], "ADJACENT_EXPECTED");
  EXPECT_EQ(j["buffer"], 15);
  EXPECT_EQ(j["feasible"], true);
  EXPECT_EQ(j["conflicts"], 0);
  EXPECT_NEAR(j["total"].get<double>(), 2.0 / 90, 1e-15);
  ASSERT_EQ(j["terms"].size(), 2u);
  EXPECT_EQ(j["terms"][0]["earlier"], "A");
  EXPECT_EQ(j["terms"][0]["later"], "B");
  EXPECT_EQ(j["terms"][0]["gap"], 60);
  EXPECT_TRUE(j["violations"].empty());
}

TEST(CostReportJsonTest, NamesViolations) {
  const Schedule s({{"F1", 0, 60}, {"F2", 30, 90}});
  const CostReport r =
      EvaluateAssignment(s, {{0, 0}, 1}, 15, ObjectiveMode::kAdjacentExpected);
  const auto j = CostReportToJson(s, r);
  EXPECT_EQ(j["feasible"], false);
  EXPECT_EQ(j["conflicts"], 1);
  ASSERT_EQ(j["violations"].size(), 1u);
  EXPECT_EQ(j["violations"][0]["earlier"], "F1");
  EXPECT_EQ(j["violations"][0]["later"], "F2");
}

TEST(SolveOutcomeJsonTest, DoublesRoundTripExactly) {
  const SolveConfig cfg;
  const SolveOutcome out = SolveExact(Chain3(), cfg);
  const auto j = SolveOutcomeToJson(Chain3(), out, cfg, false);
  EXPECT_EQ(j["status"], "OPTIMAL");
  EXPECT_EQ(j["gates"], 1);
  EXPECT_EQ(j["elapsed_s"], 0.0);
  ASSERT_EQ(j["assignment"].size(), 3u);
  EXPECT_EQ(j["assignment"][2]["flight"], "C");
  const double parsed =
      nlohmann::json::parse(j.dump())["objective"].get<double>();
  EXPECT_EQ(parsed, out.objective());
}

TEST(SolveOutcomeJsonTest, InfeasibleHasNullObjective) {
  const Schedule s({{"F1", 0, 60}, {"F2", 30, 90}});
  const SolveConfig cfg;
  const auto j = SolveOutcomeToJson(s, SolveExact(s, cfg), cfg);
  EXPECT_EQ(j["status"], "INFEASIBLE");
  EXPECT_TRUE(j["objective"].is_null());
  EXPECT_TRUE(j["assignment"].empty());
}

TEST(SweepCsvTest, Format) {
  const std::vector<SweepRow> rows{
      {1, SolveStatus::kInfeasible, std::nullopt, 0.0004},
      {2, SolveStatus::kOptimal, 1.0 / 90, 0.25},
      {3, SolveStatus::kOptimal, 0.0, 1.5}};
  EXPECT_EQ(SweepToCsv(rows),
            "gates,status,objective,runtime_s\n"
            "1,INFEASIBLE,,0.000\n"
            "2,OPTIMAL,0.0111111111,0.250\n"
            "3,OPTIMAL,0,1.500\n");
  EXPECT_EQ(SweepToCsv(rows, false).find("0.250"), std::string::npos);
}

TEST(ParseAssignmentTest, HeaderCommentsAndGateCount) {
  const Assignment a = Parse("flight_id,gate\n# note\nC,0\r\nA, 1\nB,0\n", Chain3());
  EXPECT_EQ(a.gate_of, (std::vector<int>{1, 0, 0}));
  EXPECT_EQ(a.gate_count, 2);
  EXPECT_EQ(Parse("A,0\nB,0\nC,0\n", Chain3(), 4).gate_count, 4);
}

TEST(ParseAssignmentTest, Errors) {
  EXPECT_THROW(Parse("A,0\nB\nC,0\n", Chain3()), ParseError);
  EXPECT_THROW(Parse("A,0\nB,x\nC,0\n", Chain3()), ParseError);
  EXPECT_THROW(Parse("A,0\nB,-1\nC,0\n", Chain3()), ParseError);
  EXPECT_THROW(Parse("A,0\nZ,0\nC,0\n", Chain3()), ParseError);
  EXPECT_THROW(Parse("A,0\nA,1\nC,0\n", Chain3()), ParseError);
  EXPECT_THROW(Parse("A,0\nC,0\n", Chain3()), ContractError);
  EXPECT_THROW(Parse("A,0\nB,3\nC,0\n", Chain3(), 2), ContractError);
  try {
    Parse("A,0\nZ,0\n", Chain3());
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos);
  }
}

TEST(ParseAssignmentTest, RoundTrip) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const Schedule s = testing::RandomSchedule(1 + trial % 30, rng);
    const int gates = 1 + trial % 6;
    const Assignment a = testing::RandomAssignment(s, gates, rng);
    EXPECT_EQ(Parse(SerializeAssignment(s, a), s, gates), a);
  }
}

TEST(TableTest, ListsGatesAndTerms) {
  const SolveConfig cfg;
  const SolveOutcome out = SolveExact(Chain3(), cfg);
  const std::string table = SolveOutcomeToTable(Chain3(), out, cfg);
  EXPECT_NE(table.find("gate 0: A[00:00-01:00] B[02:00-03:00] C[04:00-05:00]"),
            std::string::npos);
  const std::string report = CostReportToTable(Chain3(), *out.report);
  EXPECT_NE(report.find("total     0.0222222222"), std::string::npos);
}

}  // namespace
}  // namespace gateassign
