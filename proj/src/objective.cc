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

#include "gateassign/objective.h"

#include <algorithm>

namespace gateassign {
namespace {

// Overlapping pairs within one chronologically sorted gate chain. Locked
// starts are non-decreasing along the chain, so the inner scan stops at the
// first flight that starts after `i` ends.
int ChainConflicts(const Schedule& s, const std::vector<int>& chain,
                   Minutes buffer) {
  int count = 0;
  for (std::size_t x = 0; x < chain.size(); ++x) {
    const LockedInterval li = LockedIntervalOf(s[chain[x]], buffer);
    for (std::size_t y = x + 1; y < chain.size(); ++y) {
      if (s[chain[y]].arrival - buffer > li.end) break;
      ++count;
    }
  }
  return count;
}

std::vector<Violation> ChainViolations(const Schedule& s,
                                       const std::vector<int>& chain, int gate,
                                       Minutes buffer) {
  std::vector<Violation> out;
  for (std::size_t x = 0; x < chain.size(); ++x) {
    const LockedInterval li = LockedIntervalOf(s[chain[x]], buffer);
    for (std::size_t y = x + 1; y < chain.size(); ++y) {
      if (s[chain[y]].arrival - buffer > li.end) break;
      out.push_back({chain[x], chain[y], gate});
    }
  }
  return out;
}

void AppendAdjacentTerms(const Schedule& s, const std::vector<int>& chain,
                         int gate, Minutes buffer, bool skip_conflicts,
                         CostReport& report) {
  for (std::size_t x = 1; x < chain.size(); ++x) {
    const Flight& e = s[chain[x - 1]];
    const Flight& l = s[chain[x]];
    const Minutes gap = l.arrival - e.departure;
    if (skip_conflicts && gap <= 2 * buffer) continue;
    const double v = ExpectedConflictProbability(e.departure, l.arrival, buffer);
    report.terms.push_back({e.id, l.id, gate, gap, v});
    report.total += v;
  }
}

void AppendLegacyTerms(const Schedule& s, const std::vector<int>& chain,
                       int gate, CostReport& report) {
  for (std::size_t y = 0; y < chain.size(); ++y) {
    const Flight& j = s[chain[y]];
    for (std::size_t x = 0; x < chain.size(); ++x) {
      if (x == y) continue;
      const Flight& i = s[chain[x]];
      const Minutes gap = j.arrival - i.departure;
      if (gap <= 0) continue;
      const double v = 1.0 / gap;
      report.terms.push_back({i.id, j.id, gate, gap, v});
      report.total += v;
    }
  }
}

}  // namespace

std::string_view ObjectiveModeName(ObjectiveMode mode) {
  switch (mode) {
    case ObjectiveMode::kAdjacentExpected:
      return "ADJACENT_EXPECTED";
    case ObjectiveMode::kAllPairsLegacy:
      return "ALL_PAIRS_LEGACY";
  }
  return "?";
}

std::optional<ObjectiveMode> ParseObjectiveMode(std::string_view name) {
  if (name == "adjacent" || name == "ADJACENT_EXPECTED") {
    return ObjectiveMode::kAdjacentExpected;
  }
  if (name == "legacy" || name == "ALL_PAIRS_LEGACY") {
    return ObjectiveMode::kAllPairsLegacy;
  }
  return std::nullopt;
}

void CheckCovers(const Schedule& s, const Assignment& a) {
  if (a.gate_count <= 0) throw ContractError("gate count must be positive");
  if (a.gate_of.size() != s.size()) {
    throw ContractError("assignment covers " + std::to_string(a.gate_of.size()) +
                        " flights, schedule has " + std::to_string(s.size()));
  }
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (a.gate_of[i] < 0 || a.gate_of[i] >= a.gate_count) {
      throw ContractError("flight " + s[i].id + " has no gate in [0, " +
                          std::to_string(a.gate_count) + ")");
    }
  }
}

std::vector<std::vector<int>> GateChains(const Schedule& s,
                                         const Assignment& a) {
  CheckCovers(s, a);
  std::vector<std::vector<int>> chains(a.gate_count);
  for (int i : s.chronological_order()) chains[a.gate_of[i]].push_back(i);
  return chains;
}

double ExpectedConflictProbability(Minutes earlier_departure,
                                   Minutes later_arrival, Minutes buffer) {
  const Minutes gap = later_arrival - earlier_departure;
  // The touching boundary gap == 2b is still evaluated.
  if (gap < 2 * buffer || gap + 2 * buffer <= 0) {
    throw std::domain_error("pair cannot share a gate: gap " +
                            std::to_string(gap) + " < 2b = " +
                            std::to_string(2 * buffer));
  }
  return 1.0 / (gap + 2 * buffer);
}

double LegacyPairTerm(Minutes earlier_departure, Minutes later_arrival) {
  const Minutes gap = later_arrival - earlier_departure;
  return gap > 0 ? 1.0 / gap : 0.0;
}

std::vector<std::pair<int, int>> SameGatePairs(const Schedule& s,
                                               const Assignment& a) {
  CheckCovers(s, a);
  std::vector<std::vector<int>> by_gate(a.gate_count);
  for (int i = 0; i < static_cast<int>(s.size()); ++i) {
    by_gate[a.gate_of[i]].push_back(i);
  }
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < static_cast<int>(s.size()); ++i) {
    for (int j : by_gate[a.gate_of[i]]) {
      if (j > i) pairs.emplace_back(i, j);
    }
  }
  return pairs;
}

FeasibilityResult IsFeasible(const Schedule& s, const Assignment& a,
                             Minutes buffer) {
  const auto chains = GateChains(s, a);
  // With locked starts sorted, any overlap implies an overlap between two
  // chronologically consecutive flights.
  for (int g = 0; g < a.gate_count; ++g) {
    const auto& chain = chains[g];
    for (std::size_t x = 1; x < chain.size(); ++x) {
      if (Overlaps(s[chain[x - 1]], s[chain[x]], buffer)) {
        return {false, Violation{chain[x - 1], chain[x], g}};
      }
    }
  }
  return {};
}

int ConflictCount(const Schedule& s, const Assignment& a, Minutes buffer) {
  const auto chains = GateChains(s, a);
  const int gates = a.gate_count;
  int total = 0;
#pragma omp parallel for schedule(dynamic) reduction(+ : total)
  for (int g = 0; g < gates; ++g) {
    total += ChainConflicts(s, chains[g], buffer);
  }
  return total;
}

CostReport TotalCost(const Schedule& s, const Assignment& a, Minutes buffer,
                     ObjectiveMode mode) {
  const auto chains = GateChains(s, a);
  CostReport report;
  report.mode = mode;
  report.buffer = buffer;
  for (int g = 0; g < a.gate_count; ++g) {
    report.conflict_count += ChainConflicts(s, chains[g], buffer);
  }
  report.feasible = report.conflict_count == 0;

  if (mode == ObjectiveMode::kAdjacentExpected) {
    if (!report.feasible) {
      const FeasibilityResult f = IsFeasible(s, a, buffer);
      const Violation v = *f.violation;
      throw InfeasibleAssignmentError(
          "flights " + s[v.earlier].id + " and " + s[v.later].id +
              " overlap on gate " + std::to_string(v.gate),
          v);
    }
    for (int g = 0; g < a.gate_count; ++g) {
      AppendAdjacentTerms(s, chains[g], g, buffer, false, report);
    }
  } else {
    for (int g = 0; g < a.gate_count; ++g) {
      AppendLegacyTerms(s, chains[g], g, report);
    }
  }
  return report;
}

CostReport EvaluateAssignment(const Schedule& s, const Assignment& a,
                              Minutes buffer, ObjectiveMode mode) {
  const auto chains = GateChains(s, a);
  CostReport report;
  report.mode = mode;
  report.buffer = buffer;
  for (int g = 0; g < a.gate_count; ++g) {
    auto v = ChainViolations(s, chains[g], g, buffer);
    report.violations.insert(report.violations.end(), v.begin(), v.end());
  }
  report.conflict_count = static_cast<int>(report.violations.size());
  report.feasible = report.violations.empty();
  for (int g = 0; g < a.gate_count; ++g) {
    if (mode == ObjectiveMode::kAdjacentExpected) {
      AppendAdjacentTerms(s, chains[g], g, buffer, true, report);
    } else {
      AppendLegacyTerms(s, chains[g], g, report);
    }
  }
  return report;
}

}  // namespace gateassign
