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

#include <algorithm>

#include "local_search_internal.h"

namespace gateassign {
namespace internal {

LocalSearchState::LocalSearchState(const Problem& p, std::vector<int> by_rank)
    : p_(p), gate_of_(std::move(by_rank)), chains_(p.gates), removal_(p.n) {
  for (int r = 0; r < p_.n; ++r) chains_[gate_of_[r]].push_back(r);
  cost_ = ChainCost(p_, gate_of_);
  for (int g = 0; g < p_.gates; ++g) RefreshRemovalDeltas(g);
}

LocalSearchState::Neighbors LocalSearchState::Around(
    const std::vector<int>& chain, int r, int exclude) const {
  Neighbors nb;
  auto it = std::lower_bound(chain.begin(), chain.end(), r);
  auto after = it;
  if (after != chain.end() && *after == r) ++after;
  if (after != chain.end() && *after == exclude) ++after;
  if (after != chain.end()) nb.next = *after;
  while (it != chain.begin()) {
    --it;
    if (*it != exclude) {
      nb.prev = *it;
      break;
    }
  }
  return nb;
}

double LocalSearchState::Term(int i, int j) const {
  if (i < 0 || j < 0) return 0.0;
  return p_.adjacent_term(i, j);
}

double LocalSearchState::RemoveDelta(int r) const {
  const auto& chain = chains_[gate_of_[r]];
  if (p_.mode == ObjectiveMode::kAdjacentExpected) {
    const Neighbors nb = Around(chain, r, r);
    return Term(nb.prev, nb.next) - Term(nb.prev, r) - Term(r, nb.next);
  }
  double delta = 0.0;
  for (int m : chain) {
    if (m != r) delta -= p_.legacy_term(m, r);
  }
  return delta;
}

bool LocalSearchState::InsertDelta(int gate, int r, int exclude,
                                   double& delta) const {
  const auto& chain = chains_[gate];
  const Neighbors nb = Around(chain, r, exclude);
  if (nb.prev >= 0 && !p_.compatible(nb.prev, r)) return false;
  if (nb.next >= 0 && !p_.compatible(r, nb.next)) return false;
  if (p_.mode == ObjectiveMode::kAdjacentExpected) {
    delta = Term(nb.prev, r) + Term(r, nb.next) - Term(nb.prev, nb.next);
  } else {
    delta = 0.0;
    for (int m : chain) {
      if (m != exclude) delta += p_.legacy_term(m, r);
    }
  }
  return true;
}

void LocalSearchState::RefreshRemovalDeltas(int gate) {
  for (int r : chains_[gate]) removal_[r] = RemoveDelta(r);
}

Move LocalSearchState::BestMoveFor(int f) const {
  Move best;
  const int home = gate_of_[f];
  const double remove_f = removal_[f];
  for (int g = 0; g < p_.gates; ++g) {
    if (g == home || !p_.is_allowed(f, g)) continue;
    double insert = 0.0;
    if (!InsertDelta(g, f, -1, insert)) continue;
    const Move m{remove_f + insert, Move::kRelocate, f, g};
    if (m.BetterThan(best)) best = m;
  }
  for (int h = f + 1; h < p_.n; ++h) {
    const int other = gate_of_[h];
    if (other == home) continue;
    // Insertions never lower the cost, so the two removals bound the swap.
    if (best.kind != Move::kNone && remove_f + removal_[h] >= best.delta) {
      continue;
    }
    if (!p_.is_allowed(f, other) || !p_.is_allowed(h, home)) continue;
    double insert_h = 0.0;
    double insert_f = 0.0;
    if (!InsertDelta(home, h, f, insert_h)) continue;
    if (!InsertDelta(other, f, h, insert_f)) continue;
    const Move m{remove_f + insert_h + removal_[h] + insert_f, Move::kSwap, f,
                 h};
    if (m.BetterThan(best)) best = m;
  }
  return best;
}

Move LocalSearchState::RefreshMoveFor(int f, const Move& cached,
                                      const TouchedGates& touched) const {
  Move best = cached;
  const int home = gate_of_[f];
  const double remove_f = removal_[f];
  for (int k = 0; k < 2; ++k) {
    const int g = touched[k];
    if (k == 1 && g == touched[0]) break;
    if (!p_.is_allowed(f, g)) continue;
    double insert = 0.0;
    if (InsertDelta(g, f, -1, insert)) {
      const Move m{remove_f + insert, Move::kRelocate, f, g};
      if (m.BetterThan(best)) best = m;
    }
    const auto& chain = chains_[g];
    for (auto it = std::upper_bound(chain.begin(), chain.end(), f);
         it != chain.end(); ++it) {
      const int h = *it;
      if (best.kind != Move::kNone && remove_f + removal_[h] >= best.delta) {
        continue;
      }
      if (!p_.is_allowed(h, home)) continue;
      double insert_h = 0.0;
      double insert_f = 0.0;
      if (!InsertDelta(home, h, f, insert_h)) continue;
      if (!InsertDelta(g, f, h, insert_f)) continue;
      const Move m{remove_f + insert_h + removal_[h] + insert_f, Move::kSwap,
                   f, h};
      if (m.BetterThan(best)) best = m;
    }
  }
  return best;
}

bool LocalSearchState::Involves(int flight, const Move& move,
                                const TouchedGates& touched) const {
  const auto hit = [&touched](int g) {
    return g == touched[0] || g == touched[1];
  };
  if (hit(gate_of_[flight])) return true;
  if (move.kind == Move::kRelocate) return hit(move.target);
  if (move.kind == Move::kSwap) return hit(gate_of_[move.target]);
  return false;
}

void LocalSearchState::Erase(int gate, int r) {
  auto& chain = chains_[gate];
  chain.erase(std::lower_bound(chain.begin(), chain.end(), r));
}

void LocalSearchState::Insert(int gate, int r) {
  auto& chain = chains_[gate];
  chain.insert(std::lower_bound(chain.begin(), chain.end(), r), r);
  gate_of_[r] = gate;
}

TouchedGates LocalSearchState::Apply(const Move& move) {
  const int f = move.flight;
  const int home = gate_of_[f];
  TouchedGates touched{home, home};
  if (move.kind == Move::kRelocate) {
    touched[1] = move.target;
    Erase(home, f);
    Insert(move.target, f);
  } else if (move.kind == Move::kSwap) {
    const int h = move.target;
    touched[1] = gate_of_[h];
    Erase(home, f);
    Erase(touched[1], h);
    Insert(touched[1], f);
    Insert(home, h);
  }
  cost_ += move.delta;
  RefreshRemovalDeltas(touched[0]);
  RefreshRemovalDeltas(touched[1]);
  return touched;
}

SolveOutcome RunLocalSearch(const Schedule& s, const Assignment& start,
                            const SolveConfig& cfg, ScanMode mode) {
  const Deadline deadline(cfg.time_limit_s);
  const Problem p = BuildProblem(s, cfg);
  if (start.gate_count != cfg.gate_count) {
    throw ContractError("start assignment uses a different gate count");
  }
  CheckCovers(s, start);
  if (!IsFeasible(s, start, cfg.buffer)) {
    throw ContractError("local search start is infeasible");
  }
  if (!RespectsPreferences(s, start, cfg)) {
    throw ContractError("local search start violates preferences");
  }

  LocalSearchState state(p, ToRanks(p, start));
  const int n = p.n;
  std::vector<Move> per_flight(n);
  if (mode == ScanMode::kSerialFull) {
    for (int f = 0; f < n; ++f) per_flight[f] = state.BestMoveFor(f);
  } else {
#pragma omp parallel for schedule(dynamic, 16)
    for (int f = 0; f < n; ++f) per_flight[f] = state.BestMoveFor(f);
  }

  std::int64_t iterations = 0;
  while (!deadline.expired()) {
    Move best;
    for (const Move& m : per_flight) {
      if (m.BetterThan(best)) best = m;
    }
    if (best.kind == Move::kNone || best.delta >= -Slack(state.cost())) break;
    const TouchedGates touched = state.Apply(best);
    ++iterations;

    if (mode == ScanMode::kSerialFull) {
      for (int f = 0; f < n; ++f) per_flight[f] = state.BestMoveFor(f);
      continue;
    }
#pragma omp parallel for schedule(dynamic, 16)
    for (int f = 0; f < n; ++f) {
      per_flight[f] = state.Involves(f, per_flight[f], touched)
                          ? state.BestMoveFor(f)
                          : state.RefreshMoveFor(f, per_flight[f], touched);
    }
  }
  return MakeOutcome(p, SolveStatus::kFeasible, state.by_rank(), iterations,
                     deadline.elapsed_s());
}

}  // namespace internal

SolveOutcome ImproveLocalSearch(const Schedule& s, const Assignment& start,
                                const SolveConfig& cfg) {
  return internal::RunLocalSearch(s, start, cfg, internal::ScanMode::kParallelIncremental);
}

}  // namespace gateassign
