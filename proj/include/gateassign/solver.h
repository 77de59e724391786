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

// Optimization engines for the gate assignment model.
//
// All engines treat the no-overlap constraint as hard in both objective
// modes. Gates are interchangeable except those named by a preassignment or
// forbidden set; the enumerating engines number the interchangeable gates in
// order of first use along the chronological flight order.

#ifndef GATEASSIGN_SOLVER_H_
#define GATEASSIGN_SOLVER_H_

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "gateassign/objective.h"
#include "gateassign/schedule.h"

namespace gateassign {

class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct SolveConfig {
  int gate_count = 1;
  Minutes buffer = kDefaultBuffer;
  ObjectiveMode mode = ObjectiveMode::kAdjacentExpected;
  std::optional<double> time_limit_s;
  std::uint64_t seed = 0;
  std::map<std::string, int> preassigned;
  std::map<std::string, std::set<int>> forbidden;
};

// Throws ConfigError on a non-positive gate count, negative buffer, unknown
// flight ids, out-of-range gates, or a flight both required on and
// forbidden from the same gate.
void ValidateConfig(const Schedule& s, const SolveConfig& cfg);

enum class SolveStatus {
  kOptimal,
  kFeasible,    // heuristic result or best incumbent at the time limit
  kInfeasible,  // proven: no assignment satisfies the constraints
  kUnknown,     // time limit hit before any feasible assignment was found
};

std::string_view SolveStatusName(SolveStatus status);

struct SolveOutcome {
  SolveStatus status = SolveStatus::kUnknown;
  std::optional<Assignment> assignment;
  std::optional<CostReport> report;
  std::int64_t nodes_explored = 0;
  double elapsed_s = 0.0;

  bool has_solution() const { return assignment.has_value(); }
  double objective() const { return report ? report->total : 0.0; }
};

// Node lower bound used by the exact engine.
enum class BoundKind {
  // Cost of the committed pairs only.
  kCommitted,
  // Committed cost plus a min-cost predecessor matching over the remaining
  // flights. Exact for kAdjacentExpected without preferences.
  kMatching,
};

struct ExactOptions {
  BoundKind bound = BoundKind::kMatching;
  // Seed the search with the greedy + local search cost as an upper bound.
  bool heuristic_upper_bound = true;
  // 0 means the OpenMP default.
  int threads = 0;
  // Feasible assignment whose cost is used as an additional upper bound and
  // returned if the time limit expires first.
  std::optional<Assignment> warm_start;
};

// Exhaustive oracle: enumerates every canonical assignment and filters with
// IsFeasible / TotalCost. Throws ConfigError when the schedule has more than
// kBruteForceMaxFlights flights.
inline constexpr int kBruteForceMaxFlights = 16;
SolveOutcome SolveBruteForce(const Schedule& s, const SolveConfig& cfg);

// Depth-first branch-and-bound over chronologically ordered flights with
// first-use gate symmetry breaking. Subtrees below a shallow frontier are
// searched in parallel; the result equals the sequential canonical one:
// the lexicographically least optimal gate vector over chronological order.
SolveOutcome SolveExact(const Schedule& s, const SolveConfig& cfg,
                        const ExactOptions& options = {});

// Chronological construction; each flight goes to the allowed feasible gate
// with the smallest marginal cost, lowest index on ties.
SolveOutcome SolveGreedy(const Schedule& s, const SolveConfig& cfg);

// Steepest descent over relocate and swap moves. `start` must be feasible
// under `cfg` (ContractError otherwise).
SolveOutcome ImproveLocalSearch(const Schedule& s, const Assignment& start,
                                const SolveConfig& cfg);

enum class Engine { kExact, kGreedy, kGreedyLocal, kBruteForce };

std::string_view EngineName(Engine engine);
std::optional<Engine> ParseEngine(std::string_view name);

// Runs `engine` under `cfg` with `cfg.gate_count` ignored.
SolveOutcome Solve(const Schedule& s, const SolveConfig& cfg, Engine engine);

struct SweepRow {
  int gates = 0;
  SolveStatus status = SolveStatus::kUnknown;
  std::optional<double> objective;
  double runtime_s = 0.0;
};

// One row per gate count in [gates_from, gates_to]. Counts below
// MinGatesRequired are reported infeasible without solving. The exact and
// greedy+local engines carry the previous row's assignment forward, so
// their objective column never increases.
std::vector<SweepRow> SweepGates(const Schedule& s, int gates_from,
                                 int gates_to, const SolveConfig& cfg,
                                 Engine engine);

// Relabels gates so that interchangeable ones appear in first-use order
// along the chronological flight order. Gates in `pinned` keep their label.
Assignment Canonicalize(const Schedule& s, const Assignment& a,
                        const std::set<int>& pinned = {});

// Gates named by a preassignment or forbidden set.
std::set<int> PinnedGates(const SolveConfig& cfg);

// True when every preassigned flight is on its gate and no flight is on a
// forbidden gate.
bool RespectsPreferences(const Schedule& s, const Assignment& a,
                         const SolveConfig& cfg);

// Minimum cost of a matching with exactly `size` edges in a bipartite graph
// given as a dense row-major `rows` x `cols` cost matrix, where +infinity
// marks a missing edge. Returns +infinity when no such matching exists.
double MinCostMatchingOfSize(const std::vector<double>& cost, int rows,
                             int cols, int size);

namespace serial {

// Sequential reference implementations kept for testing and benchmarking
// the parallel kernels.

// Plain depth-first branch-and-bound with the committed-cost bound and a
// single running incumbent.
SolveOutcome SolveExact(const Schedule& s, const SolveConfig& cfg);

// Same move scan as ImproveLocalSearch without OpenMP.
SolveOutcome ImproveLocalSearch(const Schedule& s, const Assignment& start,
                                const SolveConfig& cfg);

int ConflictCount(const Schedule& s, const Assignment& a, Minutes buffer);

}  // namespace serial

}  // namespace gateassign

#endif  // GATEASSIGN_SOLVER_H_
