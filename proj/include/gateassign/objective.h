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

// Feasibility checking and objective evaluation for a flight-to-gate
// assignment.
//
// Two objective modes are supported:
//
//  * kAdjacentExpected: for every gate, flights are sorted chronologically
//    and each consecutive pair (e, l) contributes the uniform-distribution
//    expected conflict 1 / (a_l - d_e + 2b). Overlapping same-gate pairs are
//    a hard violation.
//  * kAllPairsLegacy: every ordered same-gate pair (i, j) with a_j - d_i > 0
//    contributes 1 / (a_j - d_i); no buffer term, no feasibility requirement.

#ifndef GATEASSIGN_OBJECTIVE_H_
#define GATEASSIGN_OBJECTIVE_H_

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gateassign/schedule.h"

namespace gateassign {

enum class ObjectiveMode { kAdjacentExpected, kAllPairsLegacy };

std::string_view ObjectiveModeName(ObjectiveMode mode);
// Accepts "adjacent" / "legacy" as well as the full names.
std::optional<ObjectiveMode> ParseObjectiveMode(std::string_view name);

// Raised when an assignment does not cover its schedule.
class ContractError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Dense encoding of the binary x matrix: gate_of[i] is the gate of flight i
// (schedule position), in [0, gate_count).
struct Assignment {
  std::vector<int> gate_of;
  int gate_count = 0;

  friend bool operator==(const Assignment&, const Assignment&) = default;
};

// Throws ContractError unless `a` assigns every flight of `s` to a gate in
// [0, gate_count).
void CheckCovers(const Schedule& s, const Assignment& a);

// Flights (schedule positions) on each gate in chronological order.
std::vector<std::vector<int>> GateChains(const Schedule& s,
                                         const Assignment& a);

// Two flights whose locked intervals intersect on the same gate.
struct Violation {
  int earlier = -1;  // schedule positions
  int later = -1;
  int gate = -1;

  friend bool operator==(const Violation&, const Violation&) = default;
};

class InfeasibleAssignmentError : public std::runtime_error {
 public:
  InfeasibleAssignmentError(const std::string& what, Violation v)
      : std::runtime_error(what), violation_(v) {}
  const Violation& violation() const { return violation_; }

 private:
  Violation violation_;
};

struct FeasibilityResult {
  bool feasible = true;
  std::optional<Violation> violation;

  explicit operator bool() const { return feasible; }
};

struct CostTerm {
  std::string earlier;
  std::string later;
  int gate = 0;
  Minutes gap = 0;  // later arrival minus earlier departure
  double value = 0.0;
};

struct CostReport {
  ObjectiveMode mode = ObjectiveMode::kAdjacentExpected;
  Minutes buffer = kDefaultBuffer;
  double total = 0.0;
  std::vector<CostTerm> terms;
  bool feasible = true;
  int conflict_count = 0;
  // Conflicting same-gate pairs; only populated by EvaluateAssignment.
  std::vector<Violation> violations;
};

// 1 / (later_arrival - earlier_departure + 2b). Throws std::domain_error
// when the gap is below 2b (the locked intervals overlap) or the
// denominator is not positive.
double ExpectedConflictProbability(Minutes earlier_departure,
                                   Minutes later_arrival, Minutes buffer);

// Term of an ordered pair in legacy mode: 1 / (a_j - d_i), or 0 when the
// gap is not positive.
double LegacyPairTerm(Minutes earlier_departure, Minutes later_arrival);

// Unordered same-gate pairs (y_ij = 1), each listed once as (i, j) with
// i < j in schedule order.
std::vector<std::pair<int, int>> SameGatePairs(const Schedule& s,
                                               const Assignment& a);

FeasibilityResult IsFeasible(const Schedule& s, const Assignment& a,
                             Minutes buffer);

// Number of unordered same-gate pairs with overlapping locked intervals.
// Gates are scanned in parallel.
int ConflictCount(const Schedule& s, const Assignment& a, Minutes buffer);

// Throws InfeasibleAssignmentError in kAdjacentExpected mode when the
// assignment has a conflict.
CostReport TotalCost(const Schedule& s, const Assignment& a, Minutes buffer,
                     ObjectiveMode mode);

// Like TotalCost but never rejects an infeasible assignment: conflicting
// pairs are listed in `violations` and contribute no term.
CostReport EvaluateAssignment(const Schedule& s, const Assignment& a,
                              Minutes buffer, ObjectiveMode mode);

}  // namespace gateassign

#endif  // GATEASSIGN_OBJECTIVE_H_
