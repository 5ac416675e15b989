// core/src/dot.cc
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

#include "cfst/dot.h"

#include <sstream>

namespace cfst {

namespace {

std::string escape(const std::string& text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out;
}

std::string label_text(Label label, const SymbolTable* table) {
  if (table != nullptr) {
    if (auto sym = table->find(label)) return *sym;
  }
  return std::to_string(label);
}

}  // namespace

std::string export_dot(const Wfst& m, const DotOptions& opts) {
  std::ostringstream out;
  out << "digraph " << opts.graph_name << " {\n";
  out << "  rankdir = LR;\n";

  for (StateId q = 0; q < m.num_states(); ++q) {
    const bool is_initial = !m.initial_weight(q).is_zero();
    const bool is_final = m.is_final(q);

    std::string name;
    if (opts.state_names != nullptr) {
      if (auto sym = opts.state_names->find(q)) name = *sym;
    }
    const TropicalWeight rho = m.final_weight(q);
    if (is_final && !rho.is_one()) {
      if (name.empty()) name = std::to_string(q);
      name += "/" + rho.to_string();
    }

    out << "  " << q << " [";
    if (!name.empty()) out << "label=\"" << escape(name) << "\", ";
    out << "shape=" << (is_final ? "doublecircle" : "circle");
    if (is_initial) out << ", style=bold";
    out << "];\n";
  }

  for (StateId q = 0; q < m.num_states(); ++q) {
    for (const Arc& arc : m.arcs(q)) {
      std::string label = label_text(arc.ilabel, m.input_symbols()) + ":" +
                          label_text(arc.olabel, m.output_symbols());
      if (!(opts.suppress_unit_weights && arc.weight.is_one())) {
        label += "/" + arc.weight.to_string();
      }
      out << "  " << q << " -> " << arc.target << " [label=\""
          << escape(label) << "\"];\n";
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace cfst
