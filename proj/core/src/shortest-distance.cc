// core/src/shortest-distance.cc
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

#include "cfst/shortest-distance.h"

#include <algorithm>
#include <deque>
#include <string>
#include <tuple>

namespace cfst {

namespace {

DistanceVector forward_distance(const Wfst& m,
                                const ShortestDistanceOptions& opts) {
  DistanceVector result;
  result.direction = Direction::kForward;
  result.distances.assign(m.num_states(), TropicalWeight::zero());

  std::deque<StateId> queue;
  std::vector<bool> queued(m.num_states(), false);
  for (const auto& [q, lambda] : m.initial()) {
    result.distances[q] = plus(result.distances[q], lambda);
    if (!queued[q]) {
      queue.push_back(q);
      queued[q] = true;
    }
  }

  long relaxations = 0;
  while (!queue.empty()) {
    const StateId q = queue.front();
    queue.pop_front();
    queued[q] = false;
    const TropicalWeight dq = result.distances[q];
    for (const Arc& arc : m.arcs(q)) {
      if (++relaxations > opts.max_relaxations) {
        throw NonTerminatingError(
            "shortest distance exceeded " +
            std::to_string(opts.max_relaxations) +
            " relaxations; the weights violate the semiring contract");
      }
      const TropicalWeight candidate = times(dq, arc.weight);
      const TropicalWeight merged = plus(result.distances[arc.target], candidate);
      if (merged != result.distances[arc.target]) {
        result.distances[arc.target] = merged;
        if (!queued[arc.target]) {
          queue.push_back(arc.target);
          queued[arc.target] = true;
        }
      }
    }
  }
  return result;
}

}  // namespace

DistanceVector shortest_distance(const Wfst& m, Direction direction,
                                 const ShortestDistanceOptions& opts) {
  if (direction == Direction::kForward) return forward_distance(m, opts);
  DistanceVector forward_on_reverse = forward_distance(reverse(m), opts);
  DistanceVector result;
  result.direction = Direction::kReverse;
  result.distances = std::move(forward_on_reverse.distances);
  result.distances.resize(m.num_states());  // drop the super-initial entry
  return result;
}

namespace {

// Walks the subgraph of arcs that lie on some cheapest completion,
// smallest (target, ilabel) first with backtracking, so the result is the
// lexicographically smallest simple optimal path. Stopping at a state
// whose ρ already meets the distance beats any continuation.
class PathReconstructor {
 public:
  PathReconstructor(const Wfst& m, const DistanceVector& to_final)
      : m_(m), to_final_(to_final), visited_(m.num_states(), false) {}

  bool search(StateId q, Path& path) {
    if (m_.final_weight(q) == to_final_[q]) return true;
    visited_[q] = true;
    std::vector<const Arc*> optimal;
    for (const Arc& arc : m_.arcs(q)) {
      if (visited_[arc.target]) continue;
      if (times(arc.weight, to_final_[arc.target]) != to_final_[q]) continue;
      optimal.push_back(&arc);
    }
    std::sort(optimal.begin(), optimal.end(), [](const Arc* a, const Arc* b) {
      return std::tie(a->target, a->ilabel, a->olabel) <
             std::tie(b->target, b->ilabel, b->olabel);
    });
    for (const Arc* arc : optimal) {
      path.push_back(*arc);
      if (search(arc->target, path)) return true;
      path.pop_back();
    }
    visited_[q] = false;
    return false;
  }

 private:
  const Wfst& m_;
  const DistanceVector& to_final_;
  std::vector<bool> visited_;
};

}  // namespace

ShortestPathResult shortest_path(const Wfst& m, StateId from) {
  if (!m.has_state(from)) {
    throw UnknownStateError("unknown state id " + std::to_string(from));
  }
  const DistanceVector to_final = shortest_distance(m, Direction::kReverse);
  if (to_final[from].is_zero()) {
    throw NoAcceptingPathError("no final state is reachable from state " +
                               std::to_string(from));
  }

  ShortestPathResult result;
  result.weight = to_final[from];
  if (!PathReconstructor(m, to_final).search(from, result.path)) {
    // Unreachable for exact distances: the cheapest completion is itself a
    // simple path through optimal arcs.
    throw Error("shortest-path reconstruction failed to reach a final state");
  }
  return result;
}

}  // namespace cfst
