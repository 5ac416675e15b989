// cfst/symbol-table.h
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

#ifndef CFST_SYMBOL_TABLE_H_
#define CFST_SYMBOL_TABLE_H_

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>

#include "cfst/errors.h"

namespace cfst {

using Label = int;
using StateId = int;

inline constexpr Label kEpsilonLabel = 0;
inline constexpr const char* kEpsilonSymbol = "<eps>";

// Bijective map between text symbols and integer ids. Alphabet tables
// reserve id 0 for "<eps>"; state-name tables (used only for drawing)
// are plain bijections without the epsilon convention.
class SymbolTable {
 public:
  // An alphabet table, pre-populated with ("<eps>", 0).
  static SymbolTable with_epsilon();

  SymbolTable() = default;

  // Throws DuplicateSymbolError / DuplicateIdError.
  void add(std::string symbol, Label id);

  // Adds with the next free id (max id + 1, or 0 for an empty table).
  Label add(std::string symbol);

  // Returns the id for symbol, inserting it with the next free id if absent.
  Label add_or_get(std::string_view symbol);

  std::optional<Label> find(std::string_view symbol) const;
  std::optional<std::string> find(Label id) const;

  // Like find() but throws UnknownSymbolError / UnknownStateError.
  Label require(std::string_view symbol) const;

  bool contains(std::string_view symbol) const { return find(symbol).has_value(); }
  bool contains(Label id) const { return by_id_.count(id) != 0; }
  std::size_t size() const { return by_id_.size(); }
  bool empty() const { return by_id_.empty(); }
  bool has_epsilon() const;

  // id -> symbol in ascending id order; this is the serialization order.
  const std::map<Label, std::string>& entries() const { return by_id_; }

  friend bool operator==(const SymbolTable& a, const SymbolTable& b) {
    return a.by_id_ == b.by_id_;
  }

 private:
  std::unordered_map<std::string, Label> by_symbol_;
  std::map<Label, std::string> by_id_;
};

}  // namespace cfst

#endif  // CFST_SYMBOL_TABLE_H_
