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

#include <map>

#include "solver_internal.h"

namespace gateassign {

using internal::Problem;

void ValidateConfig(const Schedule& s, const SolveConfig& cfg) {
  if (cfg.gate_count <= 0) throw ConfigError("gate count must be positive");
  if (cfg.buffer < 0) throw ConfigError("buffer must be non-negative");
  if (cfg.time_limit_s && !(*cfg.time_limit_s >= 0.0)) {
    throw ConfigError("time limit must be non-negative");
  }
  for (const auto& [id, gate] : cfg.preassigned) {
    if (s.IndexOf(id) < 0) throw ConfigError("preassigned unknown flight " + id);
    if (gate < 0 || gate >= cfg.gate_count) {
      throw ConfigError("preassigned gate out of range for " + id);
    }
  }
  for (const auto& [id, gates] : cfg.forbidden) {
    if (s.IndexOf(id) < 0) throw ConfigError("forbidden unknown flight " + id);
    for (int g : gates) {
      if (g < 0 || g >= cfg.gate_count) {
        throw ConfigError("forbidden gate out of range for " + id);
      }
    }
    const auto it = cfg.preassigned.find(id);
    if (it != cfg.preassigned.end() && gates.contains(it->second)) {
      throw ConfigError("flight " + id + " both required on and forbidden from gate " +
                        std::to_string(it->second));
    }
  }
}

std::string_view SolveStatusName(SolveStatus status) {
  switch (status) {
    case SolveStatus::kOptimal:
      return "OPTIMAL";
    case SolveStatus::kFeasible:
      return "FEASIBLE";
    case SolveStatus::kInfeasible:
      return "INFEASIBLE";
    case SolveStatus::kUnknown:
      return "UNKNOWN";
  }
  return "?";
}

std::string_view EngineName(Engine engine) {
  switch (engine) {
    case Engine::kExact:
      return "exact";
    case Engine::kGreedy:
      return "greedy";
    case Engine::kGreedyLocal:
      return "greedy+local";
    case Engine::kBruteForce:
      return "brute";
  }
  return "?";
}

std::optional<Engine> ParseEngine(std::string_view name) {
  if (name == "exact") return Engine::kExact;
  if (name == "greedy") return Engine::kGreedy;
  if (name == "greedy+local") return Engine::kGreedyLocal;
  if (name == "brute") return Engine::kBruteForce;
  return std::nullopt;
}

std::set<int> PinnedGates(const SolveConfig& cfg) {
  std::set<int> pinned;
  for (const auto& [id, gate] : cfg.preassigned) pinned.insert(gate);
  for (const auto& [id, gates] : cfg.forbidden) {
    pinned.insert(gates.begin(), gates.end());
  }
  return pinned;
}

bool RespectsPreferences(const Schedule& s, const Assignment& a,
                         const SolveConfig& cfg) {
  for (const auto& [id, gate] : cfg.preassigned) {
    if (a.gate_of[s.IndexOf(id)] != gate) return false;
  }
  for (const auto& [id, gates] : cfg.forbidden) {
    if (gates.contains(a.gate_of[s.IndexOf(id)])) return false;
  }
  return true;
}

Assignment Canonicalize(const Schedule& s, const Assignment& a,
                        const std::set<int>& pinned) {
  CheckCovers(s, a);
  std::vector<int> anonymous;
  for (int g = 0; g < a.gate_count; ++g) {
    if (!pinned.contains(g)) anonymous.push_back(g);
  }
  std::map<int, int> relabel;
  std::size_t next = 0;
  Assignment out{std::vector<int>(s.size()), a.gate_count};
  for (int i : s.chronological_order()) {
    const int g = a.gate_of[i];
    if (pinned.contains(g)) {
      out.gate_of[i] = g;
      continue;
    }
    auto it = relabel.find(g);
    if (it == relabel.end()) it = relabel.emplace(g, anonymous[next++]).first;
    out.gate_of[i] = it->second;
  }
  return out;
}

namespace internal {

Problem BuildProblem(const Schedule& s, const SolveConfig& cfg) {
  ValidateConfig(s, cfg);
  Problem p;
  p.schedule = &s;
  p.n = static_cast<int>(s.size());
  p.gates = cfg.gate_count;
  p.buffer = cfg.buffer;
  p.mode = cfg.mode;
  p.order = s.chronological_order();
  p.arrival.resize(p.n);
  p.departure.resize(p.n);
  std::vector<int> rank_of(p.n);
  for (int r = 0; r < p.n; ++r) {
    p.arrival[r] = s[p.order[r]].arrival;
    p.departure[r] = s[p.order[r]].departure;
    rank_of[p.order[r]] = r;
  }

  p.allowed.assign(static_cast<std::size_t>(p.n) * p.gates, 1);
  for (const auto& [id, gate] : cfg.preassigned) {
    const int r = rank_of[s.IndexOf(id)];
    for (int g = 0; g < p.gates; ++g) {
      p.allowed[static_cast<std::size_t>(r) * p.gates + g] = g == gate;
    }
  }
  for (const auto& [id, gates] : cfg.forbidden) {
    const int r = rank_of[s.IndexOf(id)];
    for (int g : gates) p.allowed[static_cast<std::size_t>(r) * p.gates + g] = 0;
  }

  const std::set<int> pinned = PinnedGates(cfg);
  p.pinned.assign(p.gates, 0);
  for (int g : pinned) p.pinned[g] = 1;
  for (int g = 0; g < p.gates; ++g) {
    if (!p.pinned[g]) p.anonymous.push_back(g);
  }
  const int anon = static_cast<int>(p.anonymous.size());
  p.candidates.resize(anon + 1);
  for (int k = 0; k <= anon; ++k) {
    auto& c = p.candidates[k];
    for (int g = 0; g < p.gates; ++g) {
      if (p.pinned[g]) c.push_back(g);
    }
    for (int a = 0; a <= k && a < anon; ++a) c.push_back(p.anonymous[a]);
    std::sort(c.begin(), c.end());
  }
  return p;
}

Assignment ToAssignment(const Problem& p, const std::vector<int>& by_rank) {
  Assignment a{std::vector<int>(p.n), p.gates};
  for (int r = 0; r < p.n; ++r) a.gate_of[p.order[r]] = by_rank[r];
  return a;
}

std::vector<int> ToRanks(const Problem& p, const Assignment& a) {
  std::vector<int> by_rank(p.n);
  for (int r = 0; r < p.n; ++r) by_rank[r] = a.gate_of[p.order[r]];
  return by_rank;
}

SolveOutcome MakeOutcome(const Problem& p, SolveStatus status,
                         const std::optional<std::vector<int>>& by_rank,
                         std::int64_t nodes, double elapsed_s) {
  SolveOutcome out;
  out.status = status;
  out.nodes_explored = nodes;
  out.elapsed_s = elapsed_s;
  if (by_rank) {
    out.assignment = ToAssignment(p, *by_rank);
    out.report = TotalCost(*p.schedule, *out.assignment, p.buffer, p.mode);
  }
  return out;
}

double ChainCost(const Problem& p, const std::vector<int>& by_rank) {
  std::vector<std::vector<int>> chains(p.gates);
  double cost = 0.0;
  for (int r = 0; r < p.n; ++r) {
    auto& chain = chains[by_rank[r]];
    if (!chain.empty()) {
      if (!p.compatible(chain.back(), r)) return kInf;
      if (p.mode == ObjectiveMode::kAdjacentExpected) {
        cost += p.adjacent_term(chain.back(), r);
      } else {
        for (int m : chain) cost += p.legacy_term(m, r);
      }
    }
    chain.push_back(r);
  }
  return cost;
}

}  // namespace internal
}  // namespace gateassign
