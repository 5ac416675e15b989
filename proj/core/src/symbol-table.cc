// core/src/symbol-table.cc
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

#include "cfst/symbol-table.h"

namespace cfst {

SymbolTable SymbolTable::with_epsilon() {
  SymbolTable table;
  table.add(kEpsilonSymbol, kEpsilonLabel);
  return table;
}

void SymbolTable::add(std::string symbol, Label id) {
  if (by_symbol_.count(symbol) != 0) {
    throw DuplicateSymbolError("duplicate symbol: \"" + symbol + "\"");
  }
  if (by_id_.count(id) != 0) {
    throw DuplicateIdError("duplicate symbol id: " + std::to_string(id));
  }
  by_symbol_.emplace(symbol, id);
  by_id_.emplace(id, std::move(symbol));
}

Label SymbolTable::add(std::string symbol) {
  const Label id = by_id_.empty() ? 0 : by_id_.rbegin()->first + 1;
  add(std::move(symbol), id);
  return id;
}

Label SymbolTable::add_or_get(std::string_view symbol) {
  if (auto id = find(symbol)) return *id;
  return add(std::string(symbol));
}

std::optional<Label> SymbolTable::find(std::string_view symbol) const {
  auto it = by_symbol_.find(std::string(symbol));
  if (it == by_symbol_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::string> SymbolTable::find(Label id) const {
  auto it = by_id_.find(id);
  if (it == by_id_.end()) return std::nullopt;
  return it->second;
}

Label SymbolTable::require(std::string_view symbol) const {
  if (auto id = find(symbol)) return *id;
  throw UnknownSymbolError(std::string(symbol));
}

bool SymbolTable::has_epsilon() const {
  auto it = by_id_.find(kEpsilonLabel);
  return it != by_id_.end() && it->second == kEpsilonSymbol;
}

}  // namespace cfst
