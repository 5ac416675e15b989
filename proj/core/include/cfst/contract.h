// cfst/contract.h
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
// Declarative contract descriptions — lifecycle states, events, dollar
// weights and contract-section citations — compiled to a weighted
// transducer, plus the cost analyses built on top. Ships the manufacturing
// agreement between a widget buyer and manufacturer as a built-in fixture.

#ifndef CFST_CONTRACT_H_
#define CFST_CONTRACT_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cfst/fst.h"
#include "cfst/shortest-distance.h"

namespace cfst {

struct ContractState {
  int id = 0;
  std::string label;     // natural-language label, e.g. "litigation"
  std::string sections;  // contract-section citations, free text

  friend bool operator==(const ContractState&, const ContractState&) = default;
};

struct ContractTransition {
  int source = 0;
  int target = 0;
  std::string input;   // event symbol, e.g. "a"
  std::string output;  // emitted-event symbol, e.g. "b"
  std::int64_t weight_dollars = 0;
  std::string sections;

  friend bool operator==(const ContractTransition&,
                         const ContractTransition&) = default;
};

struct BreachEvent {
  std::string description;
  std::string section;

  friend bool operator==(const BreachEvent&, const BreachEvent&) = default;
};

struct ContractSpec {
  std::string notes;  // free-text description of modeling assumptions
  std::vector<ContractState> states;
  int initial = 0;
  std::vector<int> finals;
  std::vector<ContractTransition> transitions;
  // All breach events are lumped into the single breach input event; the
  // catalog keeps each one traceable to its contract section.
  std::vector<BreachEvent> breach_catalog;

  friend bool operator==(const ContractSpec&, const ContractSpec&) = default;
};

// One machine state per declared state (ids preserved), one arc per
// transition, event symbols interned into attached symbol tables in
// first-use order, λ(initial) = ρ(final) = 1̄. Throws DuplicateStateIdError,
// DanglingStateRefError, NegativeWeightError.
Wfst compile(const ContractSpec& spec);

// Table mapping natural-language state labels to state ids, for drawing.
SymbolTable state_name_table(const ContractSpec& spec);

// The manufacturing agreement: seven lifecycle states, twelve transitions
// priced from the buyer's perspective, and a 31-entry breach catalog, all
// of which lead to the single "litigation" state.
ContractSpec builtin_manufacturing_contract();

struct CostReportRow {
  int state = 0;
  std::string label;
  TropicalWeight cost_from_start;  // cheapest way to reach this state
  TropicalWeight cost_to_final;    // cheapest way to end the deal from here
  // Input event symbols along the cheapest completion path; empty when the
  // state is already final or no completion exists.
  std::vector<std::string> completion_events;
  bool no_completion = false;  // no final state reachable from here
  std::string annotation;
};

struct CostReport {
  std::vector<CostReportRow> rows;  // ordered by state id
};

// Runs forward and reverse shortest distance plus per-state cheapest
// completion paths over compile(spec).
CostReport cost_report(const ContractSpec& spec);

// Line-oriented sectioned text format:
//   [notes]        free text, kept verbatim
//   [states]       id | label | sections
//   [initial]      id
//   [finals]       id per line
//   [transitions]  src -> dst | in : out | $weight | sections
//   [breach-events] description | section
// '#' lines are comments; '$' and ',' in weights are cosmetic. Throws
// ParseError with line and section context.
ContractSpec parse_contract_spec(std::string_view text);
std::string write_contract_spec(const ContractSpec& spec);

}  // namespace cfst

#endif  // CFST_CONTRACT_H_
