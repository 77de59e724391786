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

// Shared plumbing for the engines. Flights are addressed by chronological
// rank (position in Schedule::chronological_order()) throughout.

#ifndef GATEASSIGN_SRC_SOLVER_INTERNAL_H_
#define GATEASSIGN_SRC_SOLVER_INTERNAL_H_

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <optional>
#include <vector>

#include "gateassign/solver.h"

namespace gateassign::internal {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

// Relative slack below which two objective values count as equal.
inline constexpr double kCostTol = 1e-12;

inline double Slack(double reference) {
  return kCostTol * std::max(1.0, std::abs(reference));
}

// True when `cost` beats `best` by more than the tolerance.
inline bool Improves(double cost, double best) {
  if (best == kInf) return cost < kInf;
  return cost < best - Slack(best);
}

class Deadline {
 public:
  using Clock = std::chrono::steady_clock;

  explicit Deadline(std::optional<double> limit_s) : start_(Clock::now()) {
    if (limit_s) {
      end_ = start_ + std::chrono::duration_cast<Clock::duration>(
                          std::chrono::duration<double>(*limit_s));
    }
  }
  bool expired() const { return end_ && Clock::now() >= *end_; }
  double elapsed_s() const {
    return std::chrono::duration<double>(Clock::now() - start_).count();
  }

 private:
  Clock::time_point start_;
  std::optional<Clock::time_point> end_;
};

// Model data in chronological order plus the preference masks.
struct Problem {
  const Schedule* schedule = nullptr;
  int n = 0;
  int gates = 0;
  Minutes buffer = 0;
  ObjectiveMode mode = ObjectiveMode::kAdjacentExpected;
  std::vector<int> order;  // rank -> schedule position
  std::vector<Minutes> arrival;
  std::vector<Minutes> departure;
  std::vector<char> allowed;  // rank * gates + gate
  std::vector<char> pinned;   // per gate
  std::vector<int> anonymous;  // interchangeable gates, ascending
  // candidates[k]: branching gates, ascending, when k anonymous gates are in
  // use: every pinned gate, anonymous[0..k-1] and anonymous[k] if present.
  std::vector<std::vector<int>> candidates;

  bool is_allowed(int rank, int gate) const {
    return allowed[static_cast<std::size_t>(rank) * gates + gate] != 0;
  }
  // Later flight `j` may follow earlier flight `i` on one gate.
  bool compatible(int i, int j) const {
    return arrival[j] - departure[i] > 2 * buffer;
  }
  // Adjacent-mode term for consecutive (i, j).
  double adjacent_term(int i, int j) const {
    return 1.0 / (arrival[j] - departure[i] + 2 * buffer);
  }
  // Legacy-mode contribution of an unordered pair.
  double legacy_term(int i, int j) const {
    return LegacyPairTerm(departure[i], arrival[j]) +
           LegacyPairTerm(departure[j], arrival[i]);
  }
};

// Validates `cfg` against `s` and builds the chronological view.
Problem BuildProblem(const Schedule& s, const SolveConfig& cfg);

// Converts a rank-indexed gate vector to an Assignment.
Assignment ToAssignment(const Problem& p, const std::vector<int>& by_rank);
std::vector<int> ToRanks(const Problem& p, const Assignment& a);

// Fills status, assignment and report (via TotalCost) for a solution.
SolveOutcome MakeOutcome(const Problem& p, SolveStatus status,
                         const std::optional<std::vector<int>>& by_rank,
                         std::int64_t nodes, double elapsed_s);

// Cost of a rank-indexed complete assignment, computed incrementally along
// chronological order; kInf if infeasible.
double ChainCost(const Problem& p, const std::vector<int>& by_rank);

// Lower bound on the cost still to be paid by flights [depth, n) given the
// last flight on each gate (`last[g]`, -1 when empty) and the number of
// gates in use. kInf when the remaining flights cannot be placed.
double MatchingBound(const Problem& p, int depth, const std::vector<int>& last,
                     int used_gates);

}  // namespace gateassign::internal

#endif  // GATEASSIGN_SRC_SOLVER_INTERNAL_H_
