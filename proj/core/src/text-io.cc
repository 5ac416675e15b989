// core/src/text-io.cc
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

#include "cfst/text-io.h"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <vector>

namespace cfst {

namespace {

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t')) ++pos;
    std::size_t end = pos;
    while (end < line.size() && line[end] != ' ' && line[end] != '\t') ++end;
    if (end > pos) fields.push_back(line.substr(pos, end - pos));
    pos = end;
  }
  return fields;
}

StateId parse_state(std::string_view token, int line_no) {
  StateId id = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), id);
  if (ec != std::errc() || ptr != token.data() + token.size() || id < 0) {
    throw ParseError(line_no, "malformed state id: \"" + std::string(token) + "\"");
  }
  return id;
}

Label parse_label(std::string_view token, const SymbolTable* table, int line_no) {
  if (table != nullptr) return table->require(token);
  Label id = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), id);
  if (ec != std::errc() || ptr != token.data() + token.size() || id < 0) {
    throw ParseError(line_no, "machine has no symbol table; labels must be "
                              "non-negative ids, got \"" +
                                  std::string(token) + "\"");
  }
  return id;
}

TropicalWeight parse_weight(std::string_view token, int line_no) {
  try {
    return TropicalWeight::from_string(token);
  } catch (const Error& e) {
    throw ParseError(line_no, e.what());
  }
}

std::string label_text(Label label, const SymbolTable* table) {
  if (table != nullptr) {
    if (auto sym = table->find(label)) return *sym;
  }
  return std::to_string(label);
}

}  // namespace

Wfst parse_att(std::string_view text, const SymbolTable* isymbols,
               const SymbolTable* osymbols) {
  Wfst m;
  bool saw_initial = false;
  int line_no = 0;
  std::istringstream in{std::string(text)};
  std::string raw;
  while (std::getline(in, raw)) {
    ++line_no;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    const std::vector<std::string_view> fields = split_fields(raw);
    if (fields.empty()) continue;

    const StateId first = parse_state(fields[0], line_no);
    m.reserve_states(first);
    try {
      switch (fields.size()) {
        case 1:
        case 2: {
          const TropicalWeight w = fields.size() == 2
                                       ? parse_weight(fields[1], line_no)
                                       : TropicalWeight::one();
          m.set_final(first, w);
          break;
        }
        case 4:
        case 5: {
          const StateId target = parse_state(fields[1], line_no);
          m.reserve_states(target);
          const Label ilabel = parse_label(fields[2], isymbols, line_no);
          const Label olabel = parse_label(fields[3], osymbols, line_no);
          const TropicalWeight w = fields.size() == 5
                                       ? parse_weight(fields[4], line_no)
                                       : TropicalWeight::one();
          m.add_arc(first, ilabel, olabel, w, target);
          break;
        }
        default:
          throw ParseError(line_no,
                           "expected an arc line (4-5 fields) or a final "
                           "line (1-2 fields), got " +
                               std::to_string(fields.size()) + " fields");
      }
    } catch (const ParseError&) {
      throw;
    } catch (const UnknownSymbolError&) {
      throw;
    } catch (const Error& e) {
      throw ParseError(line_no, e.what());
    }
    if (!saw_initial) {
      m.set_initial(first, TropicalWeight::one());
      saw_initial = true;
    }
  }
  if (!saw_initial) throw ParseError("empty machine description");
  if (isymbols != nullptr) m.set_input_symbols(*isymbols);
  if (osymbols != nullptr) m.set_output_symbols(*osymbols);
  return m;
}

std::string write_att(const Wfst& m) {
  if (m.initial().size() != 1 ||
      !m.initial().begin()->second.is_one()) {
    throw MultipleInitialsError(
        "text serialization needs exactly one initial state with unit "
        "weight; run normalize_initial first");
  }
  const StateId initial = m.initial().begin()->first;

  std::ostringstream out;
  StateId max_mentioned = initial;
  auto note = [&max_mentioned](StateId q) {
    max_mentioned = std::max(max_mentioned, q);
  };

  auto write_arcs = [&](StateId q) {
    for (const Arc& arc : m.arcs(q)) {
      note(q);
      note(arc.target);
      out << q << '\t' << arc.target << '\t'
          << label_text(arc.ilabel, m.input_symbols()) << '\t'
          << label_text(arc.olabel, m.output_symbols());
      if (!arc.weight.is_one()) out << '\t' << arc.weight.to_string();
      out << '\n';
    }
  };
  auto write_final = [&](StateId q) {
    note(q);
    out << q;
    const TropicalWeight rho = m.final_weight(q);
    if (!rho.is_one()) out << '\t' << rho.to_string();
    out << '\n';
  };

  // The initial state must own the first line; a final (or explicit
  // non-final) line stands in when it has no arcs.
  if (m.arcs(initial).empty()) {
    if (m.is_final(initial)) {
      write_final(initial);
    } else {
      out << initial << "\tInfinity\n";
    }
  } else {
    write_arcs(initial);
  }
  for (StateId q = 0; q < m.num_states(); ++q) {
    if (q != initial) write_arcs(q);
  }
  for (const auto& [q, rho] : m.finals()) {
    if (q == initial && m.arcs(initial).empty()) continue;  // already written
    write_final(q);
  }
  // Trailing states no line mentioned would otherwise be lost.
  for (StateId q = max_mentioned + 1; q < m.num_states(); ++q) {
    out << q << "\tInfinity\n";
  }
  return out.str();
}

Wfst normalize_initial(const Wfst& m) {
  if (m.initial().size() == 1 && m.initial().begin()->second.is_one()) {
    return m;
  }
  Wfst n = m;
  const std::map<StateId, TropicalWeight> old_initials = n.initial();
  const StateId super_initial = n.add_state();
  for (const auto& [q, lambda] : old_initials) {
    n.add_arc(super_initial, kEpsilonLabel, kEpsilonLabel, lambda, q);
    n.set_initial(q, TropicalWeight::zero());
  }
  n.set_initial(super_initial, TropicalWeight::one());
  return n;
}

SymbolTable parse_symbols(std::string_view text, bool require_epsilon) {
  SymbolTable table;
  int line_no = 0;
  std::istringstream in{std::string(text)};
  std::string raw;
  while (std::getline(in, raw)) {
    ++line_no;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    // The id is the last whitespace-separated token; the symbol is
    // everything before it (state names may contain spaces).
    const std::size_t last_ws = raw.find_last_of(" \t");
    if (raw.find_first_not_of(" \t") == std::string::npos) continue;
    if (last_ws == std::string::npos) {
      throw ParseError(line_no, "expected \"symbol<TAB>id\"");
    }
    const std::string_view id_token =
        std::string_view(raw).substr(last_ws + 1);
    std::string symbol = raw.substr(0, last_ws);
    const std::size_t begin = symbol.find_first_not_of(" \t");
    const std::size_t end = symbol.find_last_not_of(" \t");
    if (begin == std::string::npos || id_token.empty()) {
      throw ParseError(line_no, "expected \"symbol<TAB>id\"");
    }
    symbol = symbol.substr(begin, end - begin + 1);

    Label id = 0;
    auto [ptr, ec] =
        std::from_chars(id_token.data(), id_token.data() + id_token.size(), id);
    if (ec != std::errc() || ptr != id_token.data() + id_token.size() ||
        id < 0) {
      throw ParseError(line_no, "malformed symbol id: \"" +
                                    std::string(id_token) + "\"");
    }
    table.add(std::move(symbol), id);
  }
  if (require_epsilon && !table.has_epsilon()) {
    throw MissingEpsilonError(
        "symbol table is missing the (\"<eps>\", 0) entry");
  }
  return table;
}

std::string write_symbols(const SymbolTable& table) {
  std::ostringstream out;
  for (const auto& [id, symbol] : table.entries()) {
    out << symbol << '\t' << id << '\n';
  }
  return out.str();
}

}  // namespace cfst
