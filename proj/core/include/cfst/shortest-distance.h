// cfst/shortest-distance.h
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//
// \file
// Single-source shortest distance over the tropical semiring: the ⊕-sum
// over all paths of the ⊗-product of weights along each path. Queue-based
// relaxation (FIFO with re-enqueue on improvement); termination holds for
// any machine without negative weights because ⊕ is idempotent.

#ifndef CFST_SHORTEST_DISTANCE_H_
#define CFST_SHORTEST_DISTANCE_H_

#include <vector>

#include "cfst/fst.h"

namespace cfst {

enum class Direction {
  kForward,  // from the initial states: d[q] = ⊕ paths λ ⊗ w(π)
  kReverse,  // to the final states:     d[q] = ⊕ paths w(π) ⊗ ρ(f)
};

struct DistanceVector {
  Direction direction = Direction::kForward;
  // One entry per state of the analyzed machine; unreachable states carry 0̄.
  std::vector<TropicalWeight> distances;

  TropicalWeight operator[](StateId q) const { return distances.at(q); }
};

struct ShortestDistanceOptions {
  // Relaxation safety bound; exceeding it signals a semiring contract
  // violation (e.g. weights smuggled in below zero).
  long max_relaxations = 1'000'000;
};

// Reverse distances are computed as forward distances on reverse(m); the
// super-initial state that reversal introduces is stripped from the result.
DistanceVector shortest_distance(const Wfst& m, Direction direction,
                                 const ShortestDistanceOptions& opts = {});

struct ShortestPathResult {
  Path path;  // empty when `from` is itself final and stopping is cheapest
  TropicalWeight weight;
};

// One concrete cheapest path from `from` to a final state; its weight
// equals the reverse distance at `from` exactly. Equal-weight candidates
// are broken structurally: stop at a final state if possible, otherwise
// take the arc with the smallest (target id, input label id). Throws
// NoAcceptingPathError when no final state is reachable.
ShortestPathResult shortest_path(const Wfst& m, StateId from);

}  // namespace cfst

#endif  // CFST_SHORTEST_DISTANCE_H_
