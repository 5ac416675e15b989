// cfst/fst.h
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
// Weighted finite-state transducer over the tropical semiring: states,
// labeled weighted arcs (a multiset; parallel arcs are kept), an initial
// weight map λ and a final weight map ρ, plus optional input/output symbol
// tables. A machine is single-writer while it is being built; algorithms
// treat their inputs as immutable and never mutate them.

#ifndef CFST_FST_H_
#define CFST_FST_H_

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cfst/semiring.h"
#include "cfst/symbol-table.h"

namespace cfst {

// One transition. Label id 0 is ε on either side.
struct Arc {
  StateId source = 0;
  Label ilabel = kEpsilonLabel;
  Label olabel = kEpsilonLabel;
  TropicalWeight weight = TropicalWeight::one();
  StateId target = 0;

  friend bool operator==(const Arc&, const Arc&) = default;
};

// A consecutive sequence of arcs (target of arc k = source of arc k+1).
using Path = std::vector<Arc>;

struct Diagnostic {
  enum class Code {
    kNoInitialState,
    kUnknownState,
    kUnknownSymbol,
    kInfiniteArcWeight,
  };
  Code code;
  std::string message;
};

class Wfst {
 public:
  Wfst() = default;

  // Appends a fresh isolated state and returns its id (= previous count).
  StateId add_state();

  // Ensures states 0..id exist.
  void reserve_states(StateId id);

  // Throws UnknownStateError on out-of-range endpoints, NegativeWeightError
  // for negative weights (via TropicalWeight) and InfiniteArcWeightError for
  // weight 0̄ (omit the arc instead). Parallel duplicates are kept.
  void add_arc(const Arc& arc);
  void add_arc(StateId source, Label ilabel, Label olabel,
               TropicalWeight weight, StateId target) {
    add_arc(Arc{source, ilabel, olabel, weight, target});
  }

  // λ(q) = w; weight 0̄ removes q from the initial set.
  void set_initial(StateId q, TropicalWeight w = TropicalWeight::one());

  // ρ(q) = w; weight 0̄ removes q from the final set.
  void set_final(StateId q, TropicalWeight w = TropicalWeight::one());

  int num_states() const { return static_cast<int>(arcs_.size()); }
  int num_arcs() const { return num_arcs_; }
  bool has_state(StateId q) const { return q >= 0 && q < num_states(); }

  std::span<const Arc> arcs(StateId q) const;

  const std::map<StateId, TropicalWeight>& initial() const { return initial_; }
  const std::map<StateId, TropicalWeight>& finals() const { return finals_; }

  bool is_final(StateId q) const { return finals_.count(q) != 0; }
  // ρ(q), or 0̄ when q is not final.
  TropicalWeight final_weight(StateId q) const;
  // λ(q), or 0̄ when q is not initial.
  TropicalWeight initial_weight(StateId q) const;

  void set_input_symbols(SymbolTable table) { isymbols_ = std::move(table); }
  void set_output_symbols(SymbolTable table) { osymbols_ = std::move(table); }
  const SymbolTable* input_symbols() const {
    return isymbols_ ? &*isymbols_ : nullptr;
  }
  const SymbolTable* output_symbols() const {
    return osymbols_ ? &*osymbols_ : nullptr;
  }

  // Empty iff all machine invariants hold and every arc label resolves in
  // the attached symbol tables. Diagnostics, not failures.
  std::vector<Diagnostic> validate() const;

  // State-for-state, arc-for-arc, weight-exact structural equality
  // (symbol tables not compared).
  friend bool operator==(const Wfst& a, const Wfst& b) {
    return a.arcs_ == b.arcs_ && a.initial_ == b.initial_ &&
           a.finals_ == b.finals_;
  }

 private:
  void check_state(StateId q) const;

  std::vector<std::vector<Arc>> arcs_;  // grouped by source state
  std::map<StateId, TropicalWeight> initial_;
  std::map<StateId, TropicalWeight> finals_;
  std::optional<SymbolTable> isymbols_;
  std::optional<SymbolTable> osymbols_;
  int num_arcs_ = 0;
};

// λ(start) ⊗ w(a₁) ⊗ … ⊗ w(aₙ) ⊗ ρ(end). Throws BrokenPathError if the path
// is empty, not consecutive or does not start at an initial state;
// NonAcceptingPathError if the last target is not final.
TropicalWeight path_weight(const Wfst& m, const Path& p);

struct StringWeightOptions {
  // Per-path arc budget is num_arcs × cycle_budget; hitting it on a cyclic
  // machine raises NonTerminatingError.
  int cycle_budget = 2;
};

// ⊕ over all accepting paths whose input/output projections (ε removed)
// equal x/y; 0̄ if there are none. Exhaustive bounded path enumeration —
// exact for acyclic machines and the brute-force reference for everything
// in this library.
TropicalWeight string_weight(const Wfst& m, std::span<const Label> x,
                             std::span<const Label> y,
                             const StringWeightOptions& opts = {});

// Convenience overload resolving whitespace-separated tokens through the
// attached symbol tables (numeric ids when a table is absent). Throws
// UnknownSymbolError.
TropicalWeight string_weight(const Wfst& m, std::string_view x,
                             std::string_view y,
                             const StringWeightOptions& opts = {});

// Tokenizes and resolves one side of a string pair; exposed for the CLI.
std::vector<Label> parse_label_string(std::string_view text,
                                      const SymbolTable* table);

// Arcs flipped, a fresh super-initial state (the highest id) with ε:ε arcs
// of weight ρ(f) to each former final, and former initials final with
// weight λ(q). reverse(reverse(m)) accepts the same weighted relation as m.
Wfst reverse(const Wfst& m);

// True iff |initial| ≤ 1, no arc consumes ε, and no state has two arcs
// sharing an input label. ε-input machines are nondeterministic by fiat:
// an ε arc permits two readings of the same input sequence.
bool is_deterministic(const Wfst& m);

bool has_input_epsilon(const Wfst& m);
bool has_output_epsilon(const Wfst& m);

}  // namespace cfst

#endif  // CFST_FST_H_
