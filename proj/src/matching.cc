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

// Min-cost bipartite matching of a fixed size, used as the look-ahead bound
// of the exact engine.
//
// With the adjacent objective a gate schedule is a chain of flights in which
// every flight but the first has a compatible predecessor. Picking one
// predecessor per non-first flight, each flight used as a predecessor at
// most once, is a matching; a feasible solution with k gates is a matching
// of size n - k and vice versa. Minimising over matchings of the required
// size therefore bounds (and, without preferences, equals) the remaining
// cost.

#include <algorithm>
#include <cmath>

#include "solver_internal.h"

namespace gateassign {
namespace {

using internal::kInf;

struct Edge {
  int to;
  int cap;
  double cost;
  int rev;
};

class MinCostFlow {
 public:
  explicit MinCostFlow(int nodes) : adj_(nodes) {}

  void AddEdge(int from, int to, double cost) {
    adj_[from].push_back({to, 1, cost, static_cast<int>(adj_[to].size())});
    adj_[to].push_back({from, 0, -cost, static_cast<int>(adj_[from].size()) - 1});
  }

  // Sends `units` one at a time along shortest paths; returns the total
  // cost or kInf when fewer units fit. All initial costs are non-negative,
  // so zero potentials are valid to start with.
  double Run(int source, int sink, int units) {
    const int n = static_cast<int>(adj_.size());
    std::vector<double> potential(n, 0.0);
    std::vector<double> dist(n);
    std::vector<int> prev_node(n);
    std::vector<int> prev_edge(n);
    std::vector<char> done(n);
    double total = 0.0;
    for (int unit = 0; unit < units; ++unit) {
      std::fill(dist.begin(), dist.end(), kInf);
      std::fill(done.begin(), done.end(), 0);
      dist[source] = 0.0;
      // Dense Dijkstra; graphs here have at most a few hundred nodes.
      while (true) {
        int u = -1;
        for (int v = 0; v < n; ++v) {
          if (!done[v] && dist[v] < kInf && (u < 0 || dist[v] < dist[u])) u = v;
        }
        if (u < 0) break;
        done[u] = 1;
        for (int e = 0; e < static_cast<int>(adj_[u].size()); ++e) {
          const Edge& edge = adj_[u][e];
          if (edge.cap <= 0 || done[edge.to]) continue;
          const double reduced =
              std::max(0.0, edge.cost + potential[u] - potential[edge.to]);
          if (dist[u] + reduced < dist[edge.to]) {
            dist[edge.to] = dist[u] + reduced;
            prev_node[edge.to] = u;
            prev_edge[edge.to] = e;
          }
        }
      }
      if (dist[sink] == kInf) return kInf;
      for (int v = 0; v < n; ++v) {
        if (dist[v] < kInf) potential[v] += dist[v];
      }
      for (int v = sink; v != source; v = prev_node[v]) {
        Edge& edge = adj_[prev_node[v]][prev_edge[v]];
        edge.cap -= 1;
        adj_[v][edge.rev].cap += 1;
        total += edge.cost;
      }
    }
    return total;
  }

 private:
  std::vector<std::vector<Edge>> adj_;
};

}  // namespace

double MinCostMatchingOfSize(const std::vector<double>& cost, int rows,
                             int cols, int size) {
  if (size <= 0) return 0.0;
  if (size > std::min(rows, cols)) return kInf;
  const int source = rows + cols;
  const int sink = source + 1;
  MinCostFlow flow(rows + cols + 2);
  for (int r = 0; r < rows; ++r) flow.AddEdge(source, r, 0.0);
  for (int c = 0; c < cols; ++c) flow.AddEdge(rows + c, sink, 0.0);
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      const double w = cost[static_cast<std::size_t>(r) * cols + c];
      if (w < kInf) flow.AddEdge(r, rows + c, w);
    }
  }
  return flow.Run(source, sink, size);
}

namespace internal {

double MatchingBound(const Problem& p, int depth, const std::vector<int>& last,
                     int used_gates) {
  const int remaining = p.n - depth;
  const int need = remaining - (p.gates - used_gates);
  if (need <= 0) return 0.0;

  std::vector<int> preds;
  preds.reserve(used_gates + remaining);
  for (int g = 0; g < p.gates; ++g) {
    if (last[g] >= 0) preds.push_back(last[g]);
  }
  for (int r = depth; r < p.n; ++r) preds.push_back(r);

  const int rows = static_cast<int>(preds.size());
  std::vector<double> cost(static_cast<std::size_t>(rows) * remaining, kInf);
  int reachable = 0;
  for (int c = 0; c < remaining; ++c) {
    const int j = depth + c;
    bool any = false;
    for (int r = 0; r < rows; ++r) {
      const int i = preds[r];
      if (!p.compatible(i, j)) continue;
      cost[static_cast<std::size_t>(r) * remaining + c] =
          p.mode == ObjectiveMode::kAdjacentExpected
              ? p.adjacent_term(i, j)
              : LegacyPairTerm(p.departure[i], p.arrival[j]);
      any = true;
    }
    reachable += any;
  }
  if (reachable < need) return kInf;
  return MinCostMatchingOfSize(cost, rows, remaining, need);
}

}  // namespace internal
}  // namespace gateassign
