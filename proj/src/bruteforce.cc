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

// Exhaustive oracle. Deliberately does no pruning and evaluates every leaf
// through the objective module, so it shares no cost arithmetic with the
// branch-and-bound engines.

#include "solver_internal.h"

namespace gateassign {
namespace {

class Enumerator {
 public:
  Enumerator(const Schedule& s, const SolveConfig& cfg)
      : s_(s), cfg_(cfg), order_(s.chronological_order()),
        current_{std::vector<int>(s.size(), -1), cfg.gate_count} {
    const std::set<int> pinned = PinnedGates(cfg);
    for (int g = 0; g < cfg.gate_count; ++g) {
      if (pinned.contains(g)) {
        pinned_.push_back(g);
      } else {
        anonymous_.push_back(g);
      }
    }
  }

  void Run() { Visit(0, 0); }

  const std::optional<Assignment>& best() const { return best_; }
  std::int64_t leaves() const { return leaves_; }

 private:
  void Visit(std::size_t depth, std::size_t used_anonymous) {
    if (depth == order_.size()) {
      Leaf();
      return;
    }
    // Gates in ascending order: pinned ones, the anonymous gates already
    // opened, and the next unopened anonymous gate.
    std::vector<int> options = pinned_;
    for (std::size_t k = 0; k <= used_anonymous && k < anonymous_.size(); ++k) {
      options.push_back(anonymous_[k]);
    }
    std::sort(options.begin(), options.end());
    for (int g : options) {
      current_.gate_of[order_[depth]] = g;
      const bool opens = used_anonymous < anonymous_.size() &&
                         g == anonymous_[used_anonymous];
      Visit(depth + 1, used_anonymous + (opens ? 1 : 0));
    }
  }

  void Leaf() {
    ++leaves_;
    if (!RespectsPreferences(s_, current_, cfg_)) return;
    if (!IsFeasible(s_, current_, cfg_.buffer)) return;
    const double cost =
        TotalCost(s_, current_, cfg_.buffer, cfg_.mode).total;
    if (internal::Improves(cost, best_cost_)) {
      best_cost_ = cost;
      best_ = current_;
    }
  }

  const Schedule& s_;
  const SolveConfig& cfg_;
  const std::vector<int>& order_;
  std::vector<int> pinned_;
  std::vector<int> anonymous_;
  Assignment current_;
  double best_cost_ = internal::kInf;
  std::optional<Assignment> best_;
  std::int64_t leaves_ = 0;
};

}  // namespace

SolveOutcome SolveBruteForce(const Schedule& s, const SolveConfig& cfg) {
  if (static_cast<int>(s.size()) > kBruteForceMaxFlights) {
    throw ConfigError("brute force refuses " + std::to_string(s.size()) +
                      " flights (limit " +
                      std::to_string(kBruteForceMaxFlights) + ")");
  }
  ValidateConfig(s, cfg);
  const internal::Deadline deadline(std::nullopt);
  Enumerator e(s, cfg);
  e.Run();

  SolveOutcome out;
  out.nodes_explored = e.leaves();
  if (e.best()) {
    out.status = SolveStatus::kOptimal;
    out.assignment = e.best();
    out.report = TotalCost(s, *e.best(), cfg.buffer, cfg.mode);
  } else {
    out.status = SolveStatus::kInfeasible;
  }
  out.elapsed_s = deadline.elapsed_s();
  return out;
}

}  // namespace gateassign
