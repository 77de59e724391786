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

#include "local_search_internal.h"
#include "solver_internal.h"

namespace gateassign::serial {
namespace {

using internal::kInf;
using internal::Problem;

class DepthFirst {
 public:
  DepthFirst(const Problem& p, const internal::Deadline& deadline)
      : p_(p),
        deadline_(deadline),
        by_rank_(p.n, -1),
        last_(p.gates, -1),
        members_(p.gates) {}

  void Run() { Visit(0, 0, 0.0); }

  std::optional<std::vector<int>> best;
  double best_cost = kInf;
  std::int64_t nodes = 0;
  bool timed_out = false;

 private:
  void Visit(int depth, int used_anonymous, double cost) {
    ++nodes;
    if (nodes % 256 == 0 && deadline_.expired()) timed_out = true;
    if (timed_out) return;
    if (depth == p_.n) {
      if (internal::Improves(cost, best_cost)) {
        best_cost = cost;
        best = by_rank_;
      }
      return;
    }
    // Committed cost is the whole bound: later terms are all positive.
    if (best_cost < kInf && cost >= best_cost - internal::Slack(best_cost)) {
      return;
    }
    for (int g : p_.candidates[used_anonymous]) {
      if (!p_.is_allowed(depth, g)) continue;
      const int prev = last_[g];
      double next_cost = cost;
      int next_anonymous = used_anonymous;
      if (prev < 0) {
        if (!p_.pinned[g]) ++next_anonymous;
      } else {
        if (!p_.compatible(prev, depth)) continue;
        if (p_.mode == ObjectiveMode::kAdjacentExpected) {
          next_cost += p_.adjacent_term(prev, depth);
        } else {
          for (int m : members_[g]) next_cost += p_.legacy_term(m, depth);
        }
      }
      by_rank_[depth] = g;
      last_[g] = depth;
      members_[g].push_back(depth);
      Visit(depth + 1, next_anonymous, next_cost);
      members_[g].pop_back();
      last_[g] = prev;
      by_rank_[depth] = -1;
      if (timed_out) return;
    }
  }

  const Problem& p_;
  const internal::Deadline& deadline_;
  std::vector<int> by_rank_;
  std::vector<int> last_;
  std::vector<std::vector<int>> members_;
};

}  // namespace

SolveOutcome SolveExact(const Schedule& s, const SolveConfig& cfg) {
  const internal::Deadline deadline(cfg.time_limit_s);
  const Problem p = internal::BuildProblem(s, cfg);
  DepthFirst search(p, deadline);
  search.Run();
  SolveStatus status;
  if (search.timed_out) {
    status = search.best ? SolveStatus::kFeasible : SolveStatus::kUnknown;
  } else {
    status = search.best ? SolveStatus::kOptimal : SolveStatus::kInfeasible;
  }
  return internal::MakeOutcome(p, status, search.best, search.nodes,
                               deadline.elapsed_s());
}

SolveOutcome ImproveLocalSearch(const Schedule& s, const Assignment& start,
                                const SolveConfig& cfg) {
  return internal::RunLocalSearch(s, start, cfg, internal::ScanMode::kSerialFull);
}

int ConflictCount(const Schedule& s, const Assignment& a, Minutes buffer) {
  const auto chains = GateChains(s, a);
  int total = 0;
  for (const auto& chain : chains) {
    for (std::size_t x = 0; x < chain.size(); ++x) {
      const Minutes end = s[chain[x]].departure + buffer;
      for (std::size_t y = x + 1; y < chain.size(); ++y) {
        if (s[chain[y]].arrival - buffer > end) break;
        ++total;
      }
    }
  }
  return total;
}

}  // namespace gateassign::serial
