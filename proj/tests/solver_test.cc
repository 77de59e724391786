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

#include "gateassign/solver.h"

#include <algorithm>
#include <limits>
#include <random>

#include "gtest/gtest.h"
#include "testing/oracles.h"

namespace gateassign {
namespace {

constexpr double kOracleTol = 1e-9;

const Schedule& Overlapping2() {
  static const Schedule s({{"F1", 0, 60}, {"F2", 30, 90}});
  return s;
}

const Schedule& Chain3() {
  static const Schedule s({{"A", 0, 60}, {"B", 120, 180}, {"C", 240, 300}});
  return s;
}

SolveConfig Config(int gates, Minutes buffer = 15,
                   ObjectiveMode mode = ObjectiveMode::kAdjacentExpected) {
  SolveConfig cfg;
  cfg.gate_count = gates;
  cfg.buffer = buffer;
  cfg.mode = mode;
  return cfg;
}

void ExpectValid(const Schedule& s, const SolveOutcome& out,
                 const SolveConfig& cfg) {
  ASSERT_TRUE(out.assignment.has_value());
  EXPECT_EQ(out.assignment->gate_count, cfg.gate_count);
  EXPECT_TRUE(IsFeasible(s, *out.assignment, cfg.buffer));
  EXPECT_TRUE(RespectsPreferences(s, *out.assignment, cfg));
  ASSERT_TRUE(out.report.has_value());
  EXPECT_NEAR(out.report->total,
              TotalCost(s, *out.assignment, cfg.buffer, cfg.mode).total, 1e-12);
}

// ----- brute force --------------------------------------------------------

TEST(BruteForceTest, Examples) {
  EXPECT_EQ(SolveBruteForce(Overlapping2(), Config(1)).status,
            SolveStatus::kInfeasible);
  const SolveOutcome two = SolveBruteForce(Overlapping2(), Config(2));
  EXPECT_EQ(two.status, SolveStatus::kOptimal);
  EXPECT_EQ(two.objective(), 0.0);
  const SolveOutcome chain = SolveBruteForce(Chain3(), Config(1));
  EXPECT_EQ(chain.status, SolveStatus::kOptimal);
  EXPECT_NEAR(chain.objective(), 2.0 / 90, 1e-12);
}

TEST(BruteForceTest, RefusesLargeInstances) {
  std::mt19937_64 rng(1);
  const Schedule s = testing::RandomSchedule(kBruteForceMaxFlights + 1, rng);
  EXPECT_THROW(SolveBruteForce(s, Config(2)), ConfigError);
}

// ----- exact --------------------------------------------------------------

TEST(SolveExactTest, EnoughGatesCostNothing) {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 20; ++trial) {
    const Schedule s = testing::RandomSchedule(1 + trial % 9, rng);
    const SolveOutcome out =
        SolveExact(s, Config(static_cast<int>(s.size()) + trial % 2));
    EXPECT_EQ(out.status, SolveStatus::kOptimal);
    EXPECT_EQ(out.objective(), 0.0);
  }
}

TEST(SolveExactTest, OverlappingPairOnOneGateIsInfeasible) {
  const SolveOutcome out = SolveExact(Overlapping2(), Config(1));
  EXPECT_EQ(out.status, SolveStatus::kInfeasible);
  EXPECT_FALSE(out.assignment.has_value());
  EXPECT_EQ(serial::SolveExact(Overlapping2(), Config(1)).status,
            SolveStatus::kInfeasible);
}

TEST(SolveExactTest, EmptySchedule) {
  const SolveOutcome out = SolveExact(Schedule(), Config(3));
  EXPECT_EQ(out.status, SolveStatus::kOptimal);
  EXPECT_EQ(out.objective(), 0.0);
}

struct OracleCase {
  BoundKind bound;
  bool heuristic;
  ObjectiveMode mode;
};

class ExactVsBruteForceTest : public ::testing::TestWithParam<OracleCase> {};

TEST_P(ExactVsBruteForceTest, AgreeOnRandomInstances) {
  const OracleCase param = GetParam();
  std::mt19937_64 rng(20240 + static_cast<int>(param.bound) * 7 +
                      param.heuristic * 3 + static_cast<int>(param.mode));
  std::uniform_int_distribution<int> flights(2, 7);
  std::uniform_int_distribution<int> gates(1, 3);
  for (int trial = 0; trial < 200; ++trial) {
    const Schedule s = testing::RandomSchedule(flights(rng), rng, 360);
    const SolveConfig cfg = Config(gates(rng), trial % 2 ? 15 : 0, param.mode);
    ExactOptions options;
    options.bound = param.bound;
    options.heuristic_upper_bound = param.heuristic;
    const SolveOutcome exact = SolveExact(s, cfg, options);
    const SolveOutcome brute = SolveBruteForce(s, cfg);
    ASSERT_EQ(exact.status, brute.status) << "trial " << trial;
    if (brute.status == SolveStatus::kOptimal) {
      EXPECT_NEAR(exact.objective(), brute.objective(), kOracleTol);
      EXPECT_EQ(exact.assignment, brute.assignment) << "trial " << trial;
      ExpectValid(s, exact, cfg);
    }
  }
}

INSTANTIATE_TEST_SUITE_P(
    Bounds, ExactVsBruteForceTest,
    ::testing::Values(
        OracleCase{BoundKind::kCommitted, false, ObjectiveMode::kAdjacentExpected},
        OracleCase{BoundKind::kMatching, false, ObjectiveMode::kAdjacentExpected},
        OracleCase{BoundKind::kMatching, true, ObjectiveMode::kAdjacentExpected},
        OracleCase{BoundKind::kCommitted, true, ObjectiveMode::kAllPairsLegacy},
        OracleCase{BoundKind::kMatching, true, ObjectiveMode::kAllPairsLegacy}));

TEST(SolveExactTest, PreferencesAgreeWithBruteForce) {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 150; ++trial) {
    const Schedule s = testing::RandomSchedule(2 + trial % 6, rng, 400);
    SolveConfig cfg = Config(2 + trial % 2, trial % 3 ? 15 : 0,
                             trial % 4 ? ObjectiveMode::kAdjacentExpected
                                       : ObjectiveMode::kAllPairsLegacy);
    std::uniform_int_distribution<int> flight(0, static_cast<int>(s.size()) - 1);
    std::uniform_int_distribution<int> gate(0, cfg.gate_count - 1);
    cfg.preassigned[s[flight(rng)].id] = gate(rng);
    const std::string other = s[flight(rng)].id;
    if (!cfg.preassigned.contains(other)) cfg.forbidden[other] = {gate(rng)};

    const SolveOutcome exact = SolveExact(s, cfg);
    const SolveOutcome brute = SolveBruteForce(s, cfg);
    ASSERT_EQ(exact.status, brute.status) << "trial " << trial;
    if (brute.status == SolveStatus::kOptimal) {
      EXPECT_NEAR(exact.objective(), brute.objective(), kOracleTol);
      EXPECT_EQ(exact.assignment, brute.assignment);
      ExpectValid(s, exact, cfg);
    }
  }
}

TEST(SolveExactTest, FirstUseCanonicalAndRepeatable) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 40; ++trial) {
    const Schedule s = testing::RandomSchedule(9, rng, 500);
    const SolveConfig cfg = Config(4);
    const SolveOutcome a = SolveExact(s, cfg);
    if (!a.assignment) continue;
    EXPECT_EQ(*a.assignment, Canonicalize(s, *a.assignment));
    int highest = -1;
    for (int i : s.chronological_order()) {
      const int g = a.assignment->gate_of[i];
      EXPECT_LE(g, highest + 1);
      highest = std::max(highest, g);
    }
    const SolveOutcome b = SolveExact(s, cfg);
    EXPECT_EQ(a.assignment, b.assignment);
    EXPECT_EQ(a.nodes_explored, b.nodes_explored);
  }
}

TEST(SolveExactTest, OptimumNonIncreasingInGatesAndZeroIffEnough) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 30; ++trial) {
    const Schedule s = testing::RandomSchedule(7, rng, 420);
    const int n = static_cast<int>(s.size());
    const int min_gates = MinGatesRequired(s, 15);
    double previous = std::numeric_limits<double>::infinity();
    for (int c = 1; c <= n + 1; ++c) {
      const SolveOutcome out = SolveExact(s, Config(c));
      if (c < min_gates) {
        EXPECT_EQ(out.status, SolveStatus::kInfeasible);
        continue;
      }
      ASSERT_EQ(out.status, SolveStatus::kOptimal);
      EXPECT_LE(out.objective(), previous + kOracleTol);
      EXPECT_EQ(out.objective() == 0.0, c >= n) << "c=" << c;
      previous = out.objective();
    }
  }
}

TEST(SolveExactTest, InfeasibilityIsMonotoneInBuffer) {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 40; ++trial) {
    const Schedule s = testing::RandomSchedule(6, rng, 500);
    const int c = 1 + trial % 3;
    bool infeasible = false;
    for (Minutes b = 0; b <= 60; b += 10) {
      const bool now = SolveExact(s, Config(c, b)).status == SolveStatus::kInfeasible;
      if (infeasible) EXPECT_TRUE(now) << "b=" << b;
      infeasible = now;
    }
  }
}

TEST(SolveExactTest, TimeLimitReturnsIncumbent) {
  const Schedule s = GenerateSchedule(60, 360, 1439, 60, 3);
  SolveConfig cfg = Config(MinGatesRequired(s, 15) + 3);
  cfg.time_limit_s = 0.0;
  ExactOptions options;
  options.bound = BoundKind::kCommitted;
  const SolveOutcome out = SolveExact(s, cfg, options);
  EXPECT_EQ(out.status, SolveStatus::kFeasible);
  ExpectValid(s, out, cfg);

  const SolveOutcome serial_out = serial::SolveExact(s, cfg);
  EXPECT_TRUE(serial_out.status == SolveStatus::kFeasible ||
              serial_out.status == SolveStatus::kUnknown);
}

TEST(SolveExactTest, WarmStartIsUsedWhenSearchIsCut) {
  const Schedule s = GenerateSchedule(60, 360, 1439, 60, 3);
  SolveConfig cfg = Config(MinGatesRequired(s, 15) + 3);
  const SolveOutcome greedy = SolveGreedy(s, cfg);
  ASSERT_TRUE(greedy.assignment);
  cfg.time_limit_s = 0.0;
  ExactOptions options;
  options.bound = BoundKind::kCommitted;
  options.heuristic_upper_bound = false;
  options.warm_start = greedy.assignment;
  const SolveOutcome out = SolveExact(s, cfg, options);
  EXPECT_EQ(out.status, SolveStatus::kFeasible);
  EXPECT_LE(out.objective(), greedy.objective() + 1e-12);
}

TEST(ConfigTest, Validation) {
  const Schedule& s = Chain3();
  EXPECT_THROW(SolveExact(s, Config(0)), ConfigError);
  EXPECT_THROW(SolveExact(s, Config(1, -1)), ConfigError);
  SolveConfig cfg = Config(2);
  cfg.preassigned["nope"] = 0;
  EXPECT_THROW(SolveExact(s, cfg), ConfigError);
  cfg = Config(2);
  cfg.preassigned["A"] = 2;
  EXPECT_THROW(SolveGreedy(s, cfg), ConfigError);
  cfg = Config(2);
  cfg.preassigned["A"] = 1;
  cfg.forbidden["A"] = {1};
  EXPECT_THROW(SolveBruteForce(s, cfg), ConfigError);
}

TEST(PreferencesTest, PreassignedAndForbiddenAreRespected) {
  const Schedule& s = Chain3();
  SolveConfig cfg = Config(3);
  cfg.preassigned["B"] = 2;
  cfg.forbidden["A"] = {0};
  for (Engine e : {Engine::kExact, Engine::kGreedy, Engine::kGreedyLocal,
                   Engine::kBruteForce}) {
    const SolveOutcome out = Solve(s, cfg, e);
    ExpectValid(s, out, cfg);
    EXPECT_EQ(out.assignment->gate_of[1], 2);
    EXPECT_NE(out.assignment->gate_of[0], 0);
  }
  // A single gate with B pinned to it forces the whole chain together.
  SolveConfig one = Config(1);
  one.preassigned["B"] = 0;
  EXPECT_NEAR(SolveExact(s, one).objective(), 2.0 / 90, 1e-12);
}

// ----- greedy and local search --------------------------------------------

TEST(SolveGreedyTest, Examples) {
  const SolveOutcome chain = SolveGreedy(Chain3(), Config(1));
  EXPECT_EQ(chain.status, SolveStatus::kFeasible);
  EXPECT_EQ(chain.assignment->gate_of, (std::vector<int>{0, 0, 0}));
  EXPECT_EQ(SolveGreedy(Overlapping2(), Config(1)).status,
            SolveStatus::kInfeasible);
}

TEST(SolveGreedyTest, FeasibleWheneverEnoughGates) {
  std::mt19937_64 rng(51);
  for (int trial = 0; trial < 50; ++trial) {
    const Schedule s = testing::RandomSchedule(30, rng, 900);
    const int c = MinGatesRequired(s, 15);
    const SolveOutcome out = SolveGreedy(s, Config(c));
    EXPECT_EQ(out.status, SolveStatus::kFeasible);
    ExpectValid(s, out, Config(c));
  }
}

TEST(LocalSearchTest, OptimalStartIsKept) {
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 30; ++trial) {
    const Schedule s = testing::RandomSchedule(7, rng, 500);
    const SolveConfig cfg = Config(3);
    const SolveOutcome exact = SolveExact(s, cfg);
    if (!exact.assignment) continue;
    const SolveOutcome local = ImproveLocalSearch(s, *exact.assignment, cfg);
    EXPECT_NEAR(local.objective(), exact.objective(), 1e-12);
  }
}

TEST(LocalSearchTest, SingleFlight) {
  const Schedule s({{"F1", 0, 60}});
  const SolveOutcome out = ImproveLocalSearch(s, {{0}, 2}, Config(2));
  EXPECT_EQ(out.objective(), 0.0);
  EXPECT_EQ(out.assignment->gate_of, (std::vector<int>{0}));
}

TEST(LocalSearchTest, InfeasibleStartIsAContractError) {
  EXPECT_THROW(ImproveLocalSearch(Overlapping2(), {{0, 0}, 2}, Config(2)),
               ContractError);
  EXPECT_THROW(ImproveLocalSearch(Overlapping2(), {{0, 1}, 2}, Config(3)),
               ContractError);
}

TEST(HeuristicsTest, DominanceChainAgainstBruteForce) {
  std::mt19937_64 rng(71);
  int compared = 0;
  for (int trial = 0; trial < 150; ++trial) {
    const Schedule s = testing::RandomSchedule(2 + trial % 6, rng, 360);
    const SolveConfig cfg = Config(1 + trial % 3, trial % 2 ? 15 : 0,
                                   trial % 5 ? ObjectiveMode::kAdjacentExpected
                                             : ObjectiveMode::kAllPairsLegacy);
    const SolveOutcome brute = SolveBruteForce(s, cfg);
    const SolveOutcome greedy = SolveGreedy(s, cfg);
    if (!greedy.assignment) continue;
    ASSERT_EQ(brute.status, SolveStatus::kOptimal);
    const SolveOutcome local = ImproveLocalSearch(s, *greedy.assignment, cfg);
    ExpectValid(s, local, cfg);
    EXPECT_LE(brute.objective(), local.objective() + kOracleTol);
    EXPECT_LE(local.objective(), greedy.objective() + kOracleTol);
    ++compared;
  }
  EXPECT_GT(compared, 80);
}

TEST(LocalSearchTest, ImprovesAPoorStart) {
  // Two long-gap pairs forced onto one gate by a bad start; moving one flight
  // to the empty gate removes a term.
  const Schedule s({{"A", 0, 60}, {"B", 100, 160}, {"C", 400, 460}});
  const SolveConfig cfg = Config(2);
  const SolveOutcome out = ImproveLocalSearch(s, {{0, 0, 0}, 2}, cfg);
  EXPECT_LT(out.objective(),
            TotalCost(s, {{0, 0, 0}, 2}, 15, cfg.mode).total - 1e-6);
  ExpectValid(s, out, cfg);
}

// ----- sweep --------------------------------------------------------------

TEST(SweepTest, SingleRowAtFlightCount) {
  std::mt19937_64 rng(81);
  const Schedule s = testing::RandomSchedule(8, rng, 300);
  const int n = static_cast<int>(s.size());
  const auto rows = SweepGates(s, n, n, Config(1), Engine::kExact);
  ASSERT_EQ(rows.size(), 1u);
  EXPECT_EQ(rows[0].gates, n);
  EXPECT_EQ(rows[0].objective, 0.0);
}

TEST(SweepTest, ExactRowsMatchBruteForce) {
  std::mt19937_64 rng(82);
  for (int trial = 0; trial < 5; ++trial) {
    const Schedule s = testing::RandomSchedule(10, rng, 500);
    const auto rows = SweepGates(s, 1, 4, Config(1), Engine::kExact);
    ASSERT_EQ(rows.size(), 4u);
    for (const SweepRow& row : rows) {
      const SolveOutcome brute = SolveBruteForce(s, Config(row.gates));
      ASSERT_EQ(row.status, brute.status) << "gates " << row.gates;
      if (brute.status == SolveStatus::kOptimal) {
        EXPECT_NEAR(*row.objective, brute.objective(), kOracleTol);
      }
    }
  }
}

TEST(SweepTest, RowsOrderedAndThresholdRespected) {
  const Schedule s = GenerateSchedule(40, 360, 1439, 60, 17);
  const int min_gates = MinGatesRequired(s, 15);
  for (Engine e : {Engine::kGreedy, Engine::kGreedyLocal}) {
    const auto rows = SweepGates(s, 1, 12, Config(1), e);
    ASSERT_EQ(rows.size(), 12u);
    std::optional<double> previous;
    for (std::size_t k = 0; k < rows.size(); ++k) {
      EXPECT_EQ(rows[k].gates, static_cast<int>(k) + 1);
      EXPECT_EQ(rows[k].status == SolveStatus::kInfeasible,
                rows[k].gates < min_gates);
      if (e == Engine::kGreedyLocal && rows[k].objective) {
        if (previous) EXPECT_LE(*rows[k].objective, *previous + 1e-12);
        previous = rows[k].objective;
      }
    }
  }
  EXPECT_THROW(SweepGates(s, 3, 2, Config(1), Engine::kGreedy), ConfigError);
  EXPECT_THROW(SweepGates(s, 0, 2, Config(1), Engine::kGreedy), ConfigError);
}

TEST(EngineNamesTest, RoundTrip) {
  for (Engine e : {Engine::kExact, Engine::kGreedy, Engine::kGreedyLocal,
                   Engine::kBruteForce}) {
    EXPECT_EQ(ParseEngine(EngineName(e)), e);
  }
  EXPECT_FALSE(ParseEngine("tabu").has_value());
}

}  // namespace
}  // namespace gateassign
