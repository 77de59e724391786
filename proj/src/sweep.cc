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
namespace {

// Same flights on a larger gate set; the extra gates start empty.
Assignment Widen(const Assignment& a, int gates) {
  return {a.gate_of, gates};
}

}  // namespace

SolveOutcome Solve(const Schedule& s, const SolveConfig& cfg, Engine engine) {
  switch (engine) {
    case Engine::kExact:
      return SolveExact(s, cfg);
    case Engine::kGreedy:
      return SolveGreedy(s, cfg);
    case Engine::kBruteForce:
      return SolveBruteForce(s, cfg);
    case Engine::kGreedyLocal: {
      const internal::Deadline deadline(std::nullopt);
      SolveOutcome greedy = SolveGreedy(s, cfg);
      if (!greedy.assignment) return greedy;
      SolveOutcome out = ImproveLocalSearch(s, *greedy.assignment, cfg);
      out.nodes_explored += greedy.nodes_explored;
      out.elapsed_s = deadline.elapsed_s();
      return out;
    }
  }
  throw ConfigError("unknown engine");
}

std::vector<SweepRow> SweepGates(const Schedule& s, int gates_from,
                                 int gates_to, const SolveConfig& cfg,
                                 Engine engine) {
  if (gates_from < 1 || gates_from > gates_to) {
    throw ConfigError("need 1 <= gates_from <= gates_to");
  }
  const int min_gates = MinGatesRequired(s, cfg.buffer);
  std::vector<SweepRow> rows;
  std::optional<Assignment> carried;
  for (int c = gates_from; c <= gates_to; ++c) {
    const internal::Deadline deadline(std::nullopt);
    SweepRow row;
    row.gates = c;
    if (c < min_gates) {
      row.status = SolveStatus::kInfeasible;
      row.runtime_s = deadline.elapsed_s();
      rows.push_back(row);
      continue;
    }
    SolveConfig at = cfg;
    at.gate_count = c;

    SolveOutcome out;
    if (engine == Engine::kExact) {
      ExactOptions options;
      if (carried) options.warm_start = Widen(*carried, c);
      out = SolveExact(s, at, options);
    } else if (engine == Engine::kGreedyLocal) {
      SolveOutcome greedy = SolveGreedy(s, at);
      std::optional<Assignment> start = greedy.assignment;
      if (carried) {
        const Assignment widened = Widen(*carried, c);
        const double carried_cost =
            TotalCost(s, widened, at.buffer, at.mode).total;
        if (!start || carried_cost < greedy.objective()) start = widened;
      }
      if (start) {
        out = ImproveLocalSearch(s, *start, at);
      } else {
        out = greedy;
      }
    } else {
      out = Solve(s, at, engine);
    }

    if (out.assignment) carried = out.assignment;
    row.status = out.status;
    if (out.report) row.objective = out.report->total;
    row.runtime_s = deadline.elapsed_s();
    rows.push_back(row);
  }
  return rows;
}

}  // namespace gateassign
