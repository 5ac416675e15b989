// tests/oracle.h
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
// Test-only brute-force reference implementations. Everything here is a
// second, independent route: paths are enumerated explicitly by a plain
// recursive walk and weights are folded with raw double arithmetic, never
// through the library's matcher or relaxation code, so these routines can
// referee the production algorithms.

#ifndef CFST_TESTS_ORACLE_H_
#define CFST_TESTS_ORACLE_H_

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "cfst/fst.h"

namespace cfst::testing {

// All accepting paths with at most max_arcs arcs, in discovery order.
// Total for acyclic machines whenever max_arcs >= num_states - 1.
std::vector<Path> enumerate_accepting_paths(const Wfst& m, int max_arcs);

// λ + Σ arc weights + ρ folded left-to-right on raw doubles.
double fold_path_value(const Wfst& m, const Path& p);

// min over enumerated accepting paths whose ε-stripped projections equal
// (x, y); +∞ when none match.
double brute_string_weight(const Wfst& m, const std::vector<Label>& x,
                           const std::vector<Label>& y, int max_arcs);

// Per-state min over exhaustively enumerated simple paths (forward: from
// the initial states; reverse: to a final state). With non-negative
// weights some cheapest path is always simple, so this is exact and total
// on any machine — and on an acyclic machine every path is simple.
std::vector<double> brute_forward_distances(const Wfst& m);
std::vector<double> brute_reverse_distances(const Wfst& m);

// The full accepted weighted relation restricted to inputs of length
// <= max_input_len: (x, y) -> min path value.
using Relation = std::map<std::pair<std::vector<Label>, std::vector<Label>>, double>;
Relation brute_relation(const Wfst& m, int max_input_len, int max_arcs);

// Canonical text form under breadth-first renumbering from the initial
// states; two machines with equal signatures are isomorphic.
std::string canonical_signature(const Wfst& m);

struct RandomMachineOptions {
  int max_states = 6;
  int max_arcs = 12;
  int alphabet = 3;  // input labels 1..alphabet
  int max_weight = 9;
  bool acyclic = false;
  // Output labels are a fixed function of the input label (the highest
  // input label maps to ε); keeps the machine's outputs input-determined
  // the way the contract-style a:b…k:l pairs are.
  bool paired_outputs = true;
};

// ε-input-free machine with integer weights; state 0 is initial with λ=1̄.
Wfst random_machine(std::mt19937& rng, const RandomMachineOptions& opts = {});

inline double weight_value(TropicalWeight w) { return w.value(); }

}  // namespace cfst::testing

#endif  // CFST_TESTS_ORACLE_H_
