// cfst/determinize.h
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
// Weighted subset determinization. Each result state is a set of source
// states paired with the weight and output string still owed to them: per
// input label the construction emits the ⊕-sum (minimum) of the accumulated
// weights and the longest common prefix of the accumulated output strings,
// and carries the normalized remainders into the successor subset. The
// result has at most one transition per state and input label; per-(x,y)
// string weights are preserved exactly.
//
// A transducer whose outputs diverge for a single input string cannot be
// made input-deterministic; leftover output remainders (and multi-symbol
// prefixes) are spilled through chains of ε-input arcs so the weighted
// relation is still preserved, and the strict determinism check reports
// such machines honestly.

#ifndef CFST_DETERMINIZE_H_
#define CFST_DETERMINIZE_H_

#include <string>
#include <vector>

#include "cfst/fst.h"

namespace cfst {

// One source state together with the weight and output string not yet
// emitted on its behalf.
struct Residual {
  StateId state = 0;
  TropicalWeight weight = TropicalWeight::one();
  std::vector<Label> remainder;

  friend bool operator==(const Residual&, const Residual&) = default;
};

// Canonical form: residuals sorted by (state, remainder), weights
// normalized so at least one equals 1̄. Equal subsets hash equal.
struct SubsetState {
  std::vector<Residual> residuals;

  // "{2, 3}" for plain subsets; non-unit weights append "/w" and pending
  // output remainders append ":sym…" (resolved through osymbols if given).
  std::string to_string(const SymbolTable* osymbols = nullptr) const;

  friend bool operator==(const SubsetState&, const SubsetState&) = default;
};

struct DeterminizeOptions {
  // Hard cap on generated states; exceeding it raises
  // StateBudgetExceededError instead of looping on a non-determinizable
  // input.
  int max_states = 10'000;
};

struct DeterminizeResult {
  Wfst fst;
  // Indexed by result state id. Spill-chain states carry an empty residual
  // list; every other entry records which source states the result state
  // stands for — the merge report for nondeterminism diagnostics.
  std::vector<SubsetState> subsets;
};

// Requires an input-ε-free machine that passes validate(). Throws
// InputEpsilonError, StateBudgetExceededError.
DeterminizeResult determinize(const Wfst& m, const DeterminizeOptions& opts = {});

}  // namespace cfst

#endif  // CFST_DETERMINIZE_H_
