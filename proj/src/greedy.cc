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

#include "solver_internal.h"

namespace gateassign {

SolveOutcome SolveGreedy(const Schedule& s, const SolveConfig& cfg) {
  using internal::kInf;
  const internal::Deadline deadline(std::nullopt);
  const internal::Problem p = internal::BuildProblem(s, cfg);

  std::vector<int> by_rank(p.n, -1);
  std::vector<int> last(p.gates, -1);
  std::vector<std::vector<int>> members(p.gates);
  for (int r = 0; r < p.n; ++r) {
    int chosen = -1;
    double chosen_cost = kInf;
    for (int g = 0; g < p.gates; ++g) {
      if (!p.is_allowed(r, g)) continue;
      double increment = 0.0;
      if (last[g] >= 0) {
        if (!p.compatible(last[g], r)) continue;
        if (p.mode == ObjectiveMode::kAdjacentExpected) {
          increment = p.adjacent_term(last[g], r);
        } else {
          for (int m : members[g]) increment += p.legacy_term(m, r);
        }
      }
      if (increment < chosen_cost) {
        chosen = g;
        chosen_cost = increment;
      }
    }
    if (chosen < 0) {
      return internal::MakeOutcome(p, SolveStatus::kInfeasible, std::nullopt,
                                   r + 1, deadline.elapsed_s());
    }
    by_rank[r] = chosen;
    last[chosen] = r;
    members[chosen].push_back(r);
  }
  return internal::MakeOutcome(p, SolveStatus::kFeasible, by_rank, p.n,
                               deadline.elapsed_s());
}

}  // namespace gateassign
