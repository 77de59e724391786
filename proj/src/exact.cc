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

// Parallel branch-and-bound.
//
// The tree is expanded breadth-first to a frontier of a few nodes per
// thread, listed in lexicographic order. Each frontier subtree is searched
// independently with its own incumbent, pruned by its own incumbent and by
// a fixed upper bound computed up front. Subtrees share no mutable state
// besides the stop flag, so the per-subtree results (and node counts) do
// not depend on scheduling; folding them in frontier order reproduces the
// sequential lexicographically-first optimum.

#include <atomic>

#include <omp.h>

#include "solver_internal.h"

namespace gateassign {
namespace {

using internal::Deadline;
using internal::Improves;
using internal::kInf;
using internal::Problem;
using internal::Slack;

constexpr std::size_t kFrontierSize = 256;
constexpr std::int64_t kClockCheckInterval = 256;

class Searcher {
 public:
  Searcher(const Problem& p, BoundKind bound, double upper,
           const Deadline& deadline, std::atomic<bool>& stop)
      : p_(p),
        bound_kind_(bound),
        upper_(upper),
        deadline_(deadline),
        stop_(stop),
        by_rank_(p.n, -1),
        last_(p.gates, -1),
        members_(p.mode == ObjectiveMode::kAllPairsLegacy ? p.gates : 0) {}

  // Replays `prefix` (gates of the first flights) and searches below it.
  void Search(const std::vector<int>& prefix) {
    for (int r = 0; r < static_cast<int>(prefix.size()); ++r) {
      Place(r, prefix[r]);
    }
    Dfs(static_cast<int>(prefix.size()));
  }

  // Feasible, unpruned children of `prefix`, in branching order.
  std::vector<std::vector<int>> Expand(const std::vector<int>& prefix) {
    const int depth = static_cast<int>(prefix.size());
    for (int r = 0; r < depth; ++r) Place(r, prefix[r]);
    std::vector<std::vector<int>> children;
    ++nodes_;
    if (Pruned(depth)) return children;
    for (int g : p_.candidates[used_anonymous_]) {
      if (!CanPlace(depth, g)) continue;
      children.push_back(prefix);
      children.back().push_back(g);
    }
    return children;
  }

  double best_cost() const { return best_cost_; }
  const std::optional<std::vector<int>>& best() const { return best_; }
  std::int64_t nodes() const { return nodes_; }
  bool timed_out() const { return timed_out_; }

 private:
  struct Undo {
    int previous_last;
    double previous_cost;
  };

  bool CanPlace(int r, int g) const {
    if (!p_.is_allowed(r, g)) return false;
    return last_[g] < 0 || p_.compatible(last_[g], r);
  }

  Undo Place(int r, int g) {
    Undo undo{last_[g], cost_};
    if (last_[g] < 0) {
      ++used_gates_;
      if (!p_.pinned[g]) ++used_anonymous_;
    } else if (p_.mode == ObjectiveMode::kAdjacentExpected) {
      cost_ += p_.adjacent_term(last_[g], r);
    } else {
      for (int m : members_[g]) cost_ += p_.legacy_term(m, r);
    }
    if (!members_.empty()) members_[g].push_back(r);
    last_[g] = r;
    by_rank_[r] = g;
    return undo;
  }

  void Unplace(int r, int g, const Undo& undo) {
    last_[g] = undo.previous_last;
    cost_ = undo.previous_cost;
    if (!members_.empty()) members_[g].pop_back();
    if (last_[g] < 0) {
      --used_gates_;
      if (!p_.pinned[g]) --used_anonymous_;
    }
    by_rank_[r] = -1;
  }

  bool Pruned(int depth) const {
    double bound = cost_;
    if (bound_kind_ == BoundKind::kMatching) {
      bound += internal::MatchingBound(p_, depth, last_, used_gates_);
    }
    if (bound == kInf) return true;
    if (upper_ < kInf && bound > upper_ + Slack(upper_)) return true;
    return best_cost_ < kInf && bound >= best_cost_ - Slack(best_cost_);
  }

  void Dfs(int depth) {
    ++nodes_;
    if (nodes_ % kClockCheckInterval == 0 && deadline_.expired()) {
      stop_.store(true, std::memory_order_relaxed);
    }
    if (stop_.load(std::memory_order_relaxed)) {
      timed_out_ = true;
      return;
    }
    if (depth == p_.n) {
      if (Improves(cost_, best_cost_)) {
        best_cost_ = cost_;
        best_ = by_rank_;
      }
      return;
    }
    if (Pruned(depth)) return;
    for (int g : p_.candidates[used_anonymous_]) {
      if (!CanPlace(depth, g)) continue;
      const Undo undo = Place(depth, g);
      Dfs(depth + 1);
      Unplace(depth, g, undo);
      if (timed_out_) return;
    }
  }

  const Problem& p_;
  const BoundKind bound_kind_;
  const double upper_;
  const Deadline& deadline_;
  std::atomic<bool>& stop_;

  std::vector<int> by_rank_;
  std::vector<int> last_;
  std::vector<std::vector<int>> members_;
  int used_gates_ = 0;
  int used_anonymous_ = 0;
  double cost_ = 0.0;

  double best_cost_ = kInf;
  std::optional<std::vector<int>> best_;
  std::int64_t nodes_ = 0;
  bool timed_out_ = false;
};

struct Incumbent {
  double cost = kInf;
  std::optional<std::vector<int>> by_rank;

  void Offer(const Problem& p, const Schedule& s, const Assignment& a,
             const SolveConfig& cfg) {
    if (a.gate_count != p.gates || a.gate_of.size() != s.size()) return;
    if (!RespectsPreferences(s, a, cfg)) return;
    const Assignment canonical = Canonicalize(s, a, PinnedGates(cfg));
    std::vector<int> ranks = internal::ToRanks(p, canonical);
    const double c = internal::ChainCost(p, ranks);
    if (Improves(c, cost)) {
      cost = c;
      by_rank = std::move(ranks);
    }
  }
};

}  // namespace

SolveOutcome SolveExact(const Schedule& s, const SolveConfig& cfg,
                        const ExactOptions& options) {
  const Deadline deadline(cfg.time_limit_s);
  const Problem p = internal::BuildProblem(s, cfg);
  if (p.n == 0) {
    return internal::MakeOutcome(p, SolveStatus::kOptimal, std::vector<int>{},
                                 0, deadline.elapsed_s());
  }

  Incumbent incumbent;
  if (options.warm_start) incumbent.Offer(p, s, *options.warm_start, cfg);
  if (options.heuristic_upper_bound) {
    const SolveOutcome greedy = Solve(s, cfg, Engine::kGreedyLocal);
    if (greedy.assignment) incumbent.Offer(p, s, *greedy.assignment, cfg);
  }
  const double upper = incumbent.cost;

  const int threads =
      options.threads > 0 ? options.threads : omp_get_max_threads();
  std::atomic<bool> stop{false};
  std::int64_t nodes = 0;

  // Breadth-first expansion to a fixed-size frontier, so the explored tree
  // does not depend on the thread count.
  std::vector<std::vector<int>> frontier{{}};
  int depth = 0;
  while (frontier.size() < kFrontierSize && depth < p.n && !frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& prefix : frontier) {
      Searcher expander(p, options.bound, upper, deadline, stop);
      auto children = expander.Expand(prefix);
      nodes += expander.nodes();
      for (auto& child : children) next.push_back(std::move(child));
    }
    frontier = std::move(next);
    ++depth;
  }

  struct SubtreeResult {
    double cost = kInf;
    std::optional<std::vector<int>> by_rank;
    std::int64_t nodes = 0;
    bool timed_out = false;
  };
  std::vector<SubtreeResult> results(frontier.size());
  const int count = static_cast<int>(frontier.size());
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
  for (int k = 0; k < count; ++k) {
    Searcher searcher(p, options.bound, upper, deadline, stop);
    searcher.Search(frontier[k]);
    results[k] = {searcher.best_cost(), searcher.best(), searcher.nodes(),
                  searcher.timed_out()};
  }

  double best_cost = kInf;
  std::optional<std::vector<int>> best;
  bool timed_out = false;
  for (auto& r : results) {
    nodes += r.nodes;
    timed_out |= r.timed_out;
    if (r.by_rank && Improves(r.cost, best_cost)) {
      best_cost = r.cost;
      best = std::move(r.by_rank);
    }
  }

  if (!timed_out) {
    return internal::MakeOutcome(
        p, best ? SolveStatus::kOptimal : SolveStatus::kInfeasible, best, nodes,
        deadline.elapsed_s());
  }
  if (incumbent.by_rank && Improves(incumbent.cost, best_cost)) {
    best = incumbent.by_rank;
  }
  return internal::MakeOutcome(
      p, best ? SolveStatus::kFeasible : SolveStatus::kUnknown, best, nodes,
      deadline.elapsed_s());
}

}  // namespace gateassign
