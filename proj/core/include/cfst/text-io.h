// cfst/text-io.h
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
// AT&T-style text interchange. Arc lines are
//   src  dst  isym  osym  [weight]
// and final lines are
//   state  [weight]
// with tab separators on output (any run of spaces/tabs on input). An
// omitted weight means 1̄; the source state of the first line is the
// initial state. Symbol tables are lines of "symbol<TAB>id".

#ifndef CFST_TEXT_IO_H_
#define CFST_TEXT_IO_H_

#include <string>
#include <string_view>

#include "cfst/fst.h"
#include "cfst/symbol-table.h"

namespace cfst {

// States are auto-created on first mention. Labels resolve through the
// given tables (which are also attached to the machine), or parse as
// integer ids when a table side is absent. Throws ParseError with the line
// number and UnknownSymbolError with the offending token.
Wfst parse_att(std::string_view text, const SymbolTable* isymbols = nullptr,
               const SymbolTable* osymbols = nullptr);

// Requires a single initial state with λ = 1̄ (see normalize_initial);
// throws MultipleInitialsError otherwise. Arcs are grouped by source in
// state order with the initial state's block first; unit weights are
// omitted. parse_att(write_att(m)) reproduces m state-for-state.
std::string write_att(const Wfst& m);

// Identity when the machine already has exactly one initial state with
// λ = 1̄; otherwise adds a super-initial state with ε:ε arcs of weight λ(q)
// to each former initial.
Wfst normalize_initial(const Wfst& m);

// Alphabet tables must contain ("<eps>", 0) — MissingEpsilonError
// otherwise; pass require_epsilon = false for state-name tables. Symbols
// may contain internal spaces: the id is the last whitespace-separated
// token on the line.
SymbolTable parse_symbols(std::string_view text, bool require_epsilon = true);

std::string write_symbols(const SymbolTable& table);

}  // namespace cfst

#endif  // CFST_TEXT_IO_H_
