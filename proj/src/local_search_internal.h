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

// Move evaluation for the relocate/swap local search. The serial driver
// rescans every move on every iteration; the OpenMP driver caches each
// flight's best move and rescans only moves touching the changed gates.

#ifndef GATEASSIGN_SRC_LOCAL_SEARCH_INTERNAL_H_
#define GATEASSIGN_SRC_LOCAL_SEARCH_INTERNAL_H_

#include <array>
#include <tuple>
#include <vector>

#include "solver_internal.h"

namespace gateassign::internal {

struct Move {
  enum Kind { kNone = 0, kRelocate = 1, kSwap = 2 };

  double delta = 0.0;
  Kind kind = kNone;
  int flight = -1;
  int target = -1;  // gate for kRelocate, flight rank for kSwap

  // Total order: delta, then flight, then relocations before swaps, then
  // target. This is the order in which a full scan meets the moves.
  bool BetterThan(const Move& other) const {
    if (kind == kNone) return false;
    if (other.kind == kNone) return true;
    return std::tie(delta, flight, kind, target) <
           std::tie(other.delta, other.flight, other.kind, other.target);
  }
};

// The gates whose chains changed in the last applied move.
using TouchedGates = std::array<int, 2>;

class LocalSearchState {
 public:
  LocalSearchState(const Problem& p, std::vector<int> by_rank);

  // Lowest-delta move of `flight`: relocations to any other gate, then swaps
  // with later-ranked flights on other gates. kind == kNone when `flight`
  // has no feasible move.
  Move BestMoveFor(int flight) const;

  // Best of `cached` and the moves of `flight` that involve a touched gate.
  // `cached` must be BestMoveFor(flight) from before the last move, and
  // neither `flight` nor the move it describes may involve a touched gate.
  Move RefreshMoveFor(int flight, const Move& cached,
                      const TouchedGates& touched) const;

  // True when `flight` sits on a touched gate or `move` involves one.
  bool Involves(int flight, const Move& move,
                const TouchedGates& touched) const;

  TouchedGates Apply(const Move& move);

  double cost() const { return cost_; }
  const std::vector<int>& by_rank() const { return gate_of_; }
  int n() const { return p_.n; }

 private:
  struct Neighbors {
    int prev = -1;
    int next = -1;
  };
  Neighbors Around(const std::vector<int>& chain, int r, int exclude) const;
  double Term(int i, int j) const;
  double RemoveDelta(int r) const;
  void RefreshRemovalDeltas(int gate);
  // Delta of adding `r` to `gate` with `exclude` removed from it; false when
  // `r` would overlap a neighbour.
  bool InsertDelta(int gate, int r, int exclude, double& delta) const;
  void Erase(int gate, int r);
  void Insert(int gate, int r);

  const Problem& p_;
  std::vector<int> gate_of_;
  std::vector<std::vector<int>> chains_;
  std::vector<double> removal_;
  double cost_ = 0.0;
};

enum class ScanMode {
  kSerialFull,           // every move rescanned on every iteration
  kParallelIncremental,  // cached per-flight moves, OpenMP over flights
};

// Steepest descent driver. Both modes select the same move sequence.
SolveOutcome RunLocalSearch(const Schedule& s, const Assignment& start,
                            const SolveConfig& cfg, ScanMode mode);

}  // namespace gateassign::internal

#endif  // GATEASSIGN_SRC_LOCAL_SEARCH_INTERNAL_H_
