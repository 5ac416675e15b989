// core/src/contract.cc
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

#include "cfst/contract.h"

#include <algorithm>
#include <charconv>
#include <set>
#include <sstream>
#include <unordered_map>

namespace cfst {

namespace {

std::string trim(std::string_view s) {
  const std::size_t begin = s.find_first_not_of(" \t");
  if (begin == std::string_view::npos) return "";
  const std::size_t end = s.find_last_not_of(" \t");
  return std::string(s.substr(begin, end - begin + 1));
}

std::vector<std::string> split_on(std::string_view s, char sep) {
  std::vector<std::string> parts;
  std::size_t pos = 0;
  while (true) {
    const std::size_t next = s.find(sep, pos);
    if (next == std::string_view::npos) {
      parts.push_back(trim(s.substr(pos)));
      return parts;
    }
    parts.push_back(trim(s.substr(pos, next - pos)));
    pos = next + 1;
  }
}

int parse_int(const std::string& token, int line_no, const char* what) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw ParseError(line_no, std::string("malformed ") + what + ": \"" +
                                  token + "\"");
  }
  return v;
}

// "$15,000" -> 15000; the dollar sign and commas are cosmetic.
std::int64_t parse_dollars(const std::string& token, int line_no) {
  std::string digits;
  bool negative = false;
  for (char c : token) {
    if (c == '$' || c == ',') continue;
    if (c == '-' && digits.empty() && !negative) {
      negative = true;
      continue;
    }
    if (c < '0' || c > '9') {
      throw ParseError(line_no, "malformed dollar amount: \"" + token + "\"");
    }
    digits.push_back(c);
  }
  if (digits.empty()) {
    throw ParseError(line_no, "malformed dollar amount: \"" + token + "\"");
  }
  std::int64_t value = 0;
  for (char c : digits) value = value * 10 + (c - '0');
  if (negative) {
    throw ParseError(line_no,
                     "negative weight \"" + token + "\" is outside the cost "
                     "semiring");
  }
  return value;
}

std::string format_dollars(std::int64_t value) {
  const std::string digits = std::to_string(value);
  std::string grouped;
  const std::size_t n = digits.size();
  for (std::size_t k = 0; k < n; ++k) {
    if (k > 0 && (n - k) % 3 == 0) grouped.push_back(',');
    grouped.push_back(digits[k]);
  }
  return "$" + grouped;
}

}  // namespace

Wfst compile(const ContractSpec& spec) {
  std::set<int> declared;
  int max_id = -1;
  for (const ContractState& s : spec.states) {
    if (!declared.insert(s.id).second) {
      throw DuplicateStateIdError("contract declares state " +
                                  std::to_string(s.id) + " twice");
    }
    if (s.id < 0) {
      throw DanglingStateRefError("contract state ids must be non-negative");
    }
    max_id = std::max(max_id, s.id);
  }
  auto check_ref = [&declared](int id, const char* what) {
    if (declared.count(id) == 0) {
      throw DanglingStateRefError(std::string(what) + " references "
                                  "undeclared state " + std::to_string(id));
    }
  };
  check_ref(spec.initial, "initial");
  for (int f : spec.finals) check_ref(f, "final");
  for (const ContractTransition& t : spec.transitions) {
    check_ref(t.source, "transition");
    check_ref(t.target, "transition");
    if (t.weight_dollars < 0) {
      throw NegativeWeightError("transition " + std::to_string(t.source) +
                                " -> " + std::to_string(t.target) +
                                " has a negative dollar weight");
    }
  }

  Wfst m;
  m.reserve_states(max_id);
  SymbolTable isymbols = SymbolTable::with_epsilon();
  SymbolTable osymbols = SymbolTable::with_epsilon();
  for (const ContractTransition& t : spec.transitions) {
    m.add_arc(t.source, isymbols.add_or_get(t.input),
              osymbols.add_or_get(t.output),
              TropicalWeight(static_cast<double>(t.weight_dollars)), t.target);
  }
  m.set_initial(spec.initial, TropicalWeight::one());
  for (int f : spec.finals) m.set_final(f, TropicalWeight::one());
  m.set_input_symbols(std::move(isymbols));
  m.set_output_symbols(std::move(osymbols));
  return m;
}

SymbolTable state_name_table(const ContractSpec& spec) {
  SymbolTable names;
  for (const ContractState& s : spec.states) {
    names.add(s.label, s.id);
  }
  return names;
}

ContractSpec builtin_manufacturing_contract() {
  ContractSpec spec;
  spec.notes =
      "Manufacturing agreement between a widget buyer and manufacturer,\n"
      "modeled from the buyer's side: weights are the buyer's costs in\n"
      "dollars. The buyer pays half of the $30,000 price up front (a:b)\n"
      "and the remaining $15,000 on timely completion (e:f). Delay and\n"
      "cure extensions each cost six weeks of lost profit at $10,000 per\n"
      "month (g:h, k:l). Any breach event goes straight to litigation at\n"
      "an estimated $30,000 (c:d): we assume the buyer always grants the\n"
      "optional extension and cure periods, and that neither party\n"
      "otherwise offers a chance to cure a breach. Litigation costs\n"
      "themselves are not modeled.";
  spec.states = {
      {0, "START", "n/a"},
      {1, "production period has elapsed", "8"},
      {2, "litigation", "9, 18-37"},
      {3, "produce shipped", "4, 7"},
      {4, "six week production extension period elapses", "8"},
      {5, "TERM/contract complete", "n/a"},
      {6, "\"cure period\" has elapsed", "8"},
  };
  spec.initial = 0;
  spec.finals = {2, 5};
  spec.transitions = {
      {0, 1, "a", "b", 15000, "4, 5"},
      {0, 2, "c", "d", 30000, "*, 18"},
      {1, 3, "e", "f", 15000, "4, 8"},
      {1, 4, "g", "h", 15000, "8"},
      {1, 2, "c", "d", 30000, "*, 18"},
      {3, 5, "i", "j", 0, "8"},
      {3, 6, "k", "l", 15000, "10"},
      {3, 2, "c", "d", 30000, "*, 18"},
      {4, 3, "e", "f", 15000, "4, 8"},
      {4, 2, "c", "d", 30000, "*, 18"},
      {6, 5, "i", "j", 0, "8"},
      {6, 2, "c", "d", 30000, "*, 18"},
  };
  spec.breach_catalog = {
      {"Products insufficient quality and quantity", "1"},
      {"Products not in compliance with standards and warranties", "1(a)"},
      {"Manufacturer does not provide parts, labor, or materials", "1(b)"},
      {"Manufacturer does not make its facility and product available for "
       "inspection",
       "1(c)"},
      {"Manufacturer does not provide QC or product information upon request",
       "1(d)"},
      {"Manufacturer utilizes unauthorized subcontractors and suppliers",
       "1(e)"},
      {"Manufacturer does not provide batch and lot codes", "1(f)"},
      {"Manufacturer does not provide certificate of analysis", "1(g)"},
      {"Manufacturer does not provide date of manufacturer on products",
       "1(h)"},
      {"Manufacturer does not maintain manufacturing certifications or GMPs",
       "2(a)"},
      {"Manufacturer does not maintain emergency action plan", "2(b)"},
      {"Manufacturer does not assist in product enhancement and product "
       "development",
       "2(c)"},
      {"Manufacturer does not provide management supports", "2(d)"},
      {"Manufacturer does not provide assistance with product development in "
       "developing markets",
       "2(e)"},
      {"Manufacturer does not make its facility available for inspection",
       "2(f)"},
      {"Manufacturer does not comply with price increase/price decease "
       "procedures",
       "3(a), (b)"},
      {"Manufacturer does not remit down payment or final payment", "4"},
      {"Manufacturer does not meet manufacturing requirements (e.g. "
       "compliance manufacturing laws)",
       "6(a)"},
      {"Product does not comply with laws in target market", "6(b)"},
      {"Product does not comply with labeling requirements", "6(c)"},
      {"Breach of delivery terms", "7"},
      {"Delay of delivery of product, including after six week extension "
       "period",
       "8"},
      {"Manufacturer does not provide and maintain an inspection procedure "
       "and quality assurance program",
       "10"},
      {"Buyer or Manufacturer breach of confidentiality program", "11"},
      {"Buyer IP infringement", "12"},
      {"Seller IP infringement", "12"},
      {"Manufacturer failure to notify of inspection event", "13"},
      {"Manufacturer failure to notify of return or recall", "14"},
      {"Manufacturer failure to notify of regulatory action", "15"},
      {"Buyer or seller: bankruptcy, liquidation, government action "
       "(including litigation), or material breach",
       "16"},
      {"Manufacturer failure to maintain insurance", "17"},
  };
  return spec;
}

CostReport cost_report(const ContractSpec& spec) {
  const Wfst m = compile(spec);
  const DistanceVector from_start = shortest_distance(m, Direction::kForward);
  const DistanceVector to_final = shortest_distance(m, Direction::kReverse);

  std::vector<ContractState> states = spec.states;
  std::sort(states.begin(), states.end(),
            [](const ContractState& a, const ContractState& b) {
              return a.id < b.id;
            });

  CostReport report;
  for (const ContractState& s : states) {
    CostReportRow row;
    row.state = s.id;
    row.label = s.label;
    row.cost_from_start = from_start[s.id];
    row.cost_to_final = to_final[s.id];
    if (to_final[s.id].is_zero()) {
      row.no_completion = true;
      row.annotation = "no completion path";
    } else {
      const ShortestPathResult completion = shortest_path(m, s.id);
      for (const Arc& arc : completion.path) {
        if (auto sym = m.input_symbols()->find(arc.ilabel)) {
          row.completion_events.push_back(*sym);
        } else {
          row.completion_events.push_back(std::to_string(arc.ilabel));
        }
      }
    }
    // The lumping rule collapses every breach event into the single
    // litigation state, whose own costs are deliberately left unmodeled.
    if (!spec.breach_catalog.empty() && s.label == "litigation") {
      row.annotation = "litigation costs not modeled";
    }
    report.rows.push_back(std::move(row));
  }
  return report;
}

namespace {

enum class Section {
  kNone,
  kNotes,
  kStates,
  kInitial,
  kFinals,
  kTransitions,
  kBreachEvents,
};

}  // namespace

ContractSpec parse_contract_spec(std::string_view text) {
  ContractSpec spec;
  bool saw_initial = false;
  std::set<Section> seen;
  Section section = Section::kNone;
  std::vector<std::string> notes_lines;

  int line_no = 0;
  std::istringstream in{std::string(text)};
  std::string raw;
  while (std::getline(in, raw)) {
    ++line_no;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    const std::string line = trim(raw);
    if (line.empty() || line[0] == '#') continue;

    if (line.front() == '[' && line.back() == ']') {
      static const std::unordered_map<std::string, Section> kSections = {
          {"[notes]", Section::kNotes},
          {"[states]", Section::kStates},
          {"[initial]", Section::kInitial},
          {"[finals]", Section::kFinals},
          {"[transitions]", Section::kTransitions},
          {"[breach-events]", Section::kBreachEvents},
      };
      auto it = kSections.find(line);
      if (it == kSections.end()) {
        throw ParseError(line_no, "unknown section " + line);
      }
      section = it->second;
      if (!seen.insert(section).second) {
        throw ParseError(line_no, "duplicate section " + line);
      }
      continue;
    }

    switch (section) {
      case Section::kNone:
        throw ParseError(line_no, "content before any [section] header");
      case Section::kNotes:
        notes_lines.push_back(line);
        break;
      case Section::kStates: {
        const std::vector<std::string> parts = split_on(line, '|');
        if (parts.size() != 3) {
          throw ParseError(line_no,
                           "[states] lines are \"id | label | sections\"");
        }
        spec.states.push_back({parse_int(parts[0], line_no, "state id"),
                               parts[1], parts[2]});
        break;
      }
      case Section::kInitial:
        if (saw_initial) {
          throw ParseError(line_no, "[initial] takes a single state id");
        }
        spec.initial = parse_int(line, line_no, "initial state id");
        saw_initial = true;
        break;
      case Section::kFinals:
        spec.finals.push_back(parse_int(line, line_no, "final state id"));
        break;
      case Section::kTransitions: {
        const std::vector<std::string> parts = split_on(line, '|');
        if (parts.size() != 4) {
          throw ParseError(line_no,
                           "[transitions] lines are \"src -> dst | in : out "
                           "| $weight | sections\"");
        }
        const std::size_t arrow = parts[0].find("->");
        if (arrow == std::string::npos) {
          throw ParseError(line_no, "expected \"src -> dst\", got \"" +
                                        parts[0] + "\"");
        }
        const std::size_t colon = parts[1].find(':');
        if (colon == std::string::npos) {
          throw ParseError(line_no,
                           "expected \"in : out\", got \"" + parts[1] + "\"");
        }
        ContractTransition t;
        t.source = parse_int(trim(parts[0].substr(0, arrow)), line_no, "state id");
        t.target = parse_int(trim(parts[0].substr(arrow + 2)), line_no, "state id");
        t.input = trim(parts[1].substr(0, colon));
        t.output = trim(parts[1].substr(colon + 1));
        if (t.input.empty() || t.output.empty()) {
          throw ParseError(line_no, "empty event symbol");
        }
        t.weight_dollars = parse_dollars(parts[2], line_no);
        t.sections = parts[3];
        spec.transitions.push_back(std::move(t));
        break;
      }
      case Section::kBreachEvents: {
        const std::vector<std::string> parts = split_on(line, '|');
        if (parts.size() != 2) {
          throw ParseError(line_no,
                           "[breach-events] lines are \"description | "
                           "section\"");
        }
        spec.breach_catalog.push_back({parts[0], parts[1]});
        break;
      }
    }
  }

  if (spec.states.empty()) {
    throw ParseError("a contract needs a non-empty [states] section");
  }
  if (!saw_initial) {
    throw ParseError("a contract needs an [initial] section");
  }
  std::ostringstream notes;
  for (std::size_t k = 0; k < notes_lines.size(); ++k) {
    if (k > 0) notes << '\n';
    notes << notes_lines[k];
  }
  spec.notes = notes.str();
  return spec;
}

std::string write_contract_spec(const ContractSpec& spec) {
  std::ostringstream out;
  if (!spec.notes.empty()) {
    out << "[notes]\n" << spec.notes << "\n\n";
  }
  out << "[states]\n";
  for (const ContractState& s : spec.states) {
    out << s.id << " | " << s.label << " | " << s.sections << "\n";
  }
  out << "\n[initial]\n" << spec.initial << "\n";
  out << "\n[finals]\n";
  for (int f : spec.finals) out << f << "\n";
  out << "\n[transitions]\n";
  for (const ContractTransition& t : spec.transitions) {
    out << t.source << " -> " << t.target << " | " << t.input << " : "
        << t.output << " | " << format_dollars(t.weight_dollars) << " | "
        << t.sections << "\n";
  }
  if (!spec.breach_catalog.empty()) {
    out << "\n[breach-events]\n";
    for (const BreachEvent& e : spec.breach_catalog) {
      out << e.description << " | " << e.section << "\n";
    }
  }
  return out.str();
}

}  // namespace cfst
