// core/src/fst.cc
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

#include "cfst/fst.h"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <unordered_set>

namespace cfst {

StateId Wfst::add_state() {
  arcs_.emplace_back();
  return num_states() - 1;
}

void Wfst::reserve_states(StateId id) {
  while (num_states() <= id) add_state();
}

void Wfst::check_state(StateId q) const {
  if (!has_state(q)) {
    throw UnknownStateError("unknown state id " + std::to_string(q) +
                            " (machine has " + std::to_string(num_states()) +
                            " states)");
  }
}

void Wfst::add_arc(const Arc& arc) {
  check_state(arc.source);
  check_state(arc.target);
  if (arc.weight.is_zero()) {
    throw InfiniteArcWeightError(
        "arc with infinite weight carries no path; omit it instead");
  }
  arcs_[arc.source].push_back(arc);
  ++num_arcs_;
}

void Wfst::set_initial(StateId q, TropicalWeight w) {
  check_state(q);
  if (w.is_zero()) {
    initial_.erase(q);
  } else {
    initial_[q] = w;
  }
}

void Wfst::set_final(StateId q, TropicalWeight w) {
  check_state(q);
  if (w.is_zero()) {
    finals_.erase(q);
  } else {
    finals_[q] = w;
  }
}

std::span<const Arc> Wfst::arcs(StateId q) const {
  check_state(q);
  return arcs_[q];
}

TropicalWeight Wfst::final_weight(StateId q) const {
  auto it = finals_.find(q);
  return it == finals_.end() ? TropicalWeight::zero() : it->second;
}

TropicalWeight Wfst::initial_weight(StateId q) const {
  auto it = initial_.find(q);
  return it == initial_.end() ? TropicalWeight::zero() : it->second;
}

std::vector<Diagnostic> Wfst::validate() const {
  std::vector<Diagnostic> out;
  if (initial_.empty()) {
    out.push_back({Diagnostic::Code::kNoInitialState, "no initial state"});
  }
  auto check_member = [&](const std::map<StateId, TropicalWeight>& set,
                          const char* what) {
    for (const auto& [q, w] : set) {
      if (!has_state(q)) {
        out.push_back({Diagnostic::Code::kUnknownState,
                       std::string(what) + " state " + std::to_string(q) +
                           " does not exist"});
      }
    }
  };
  check_member(initial_, "initial");
  check_member(finals_, "final");

  auto check_label = [&](const SymbolTable* table, Label label, StateId q,
                         int arc_index, const char* side) {
    if (table == nullptr || label == kEpsilonLabel) return;
    if (!table->contains(label)) {
      std::ostringstream msg;
      msg << side << " label " << label << " on arc " << arc_index
          << " of state " << q << " missing from the symbol table";
      out.push_back({Diagnostic::Code::kUnknownSymbol, msg.str()});
    }
  };
  for (StateId q = 0; q < num_states(); ++q) {
    int index = 0;
    for (const Arc& arc : arcs_[q]) {
      if (!has_state(arc.target)) {
        out.push_back({Diagnostic::Code::kUnknownState,
                       "arc " + std::to_string(index) + " of state " +
                           std::to_string(q) + " targets unknown state " +
                           std::to_string(arc.target)});
      }
      if (arc.weight.is_zero()) {
        out.push_back({Diagnostic::Code::kInfiniteArcWeight,
                       "arc " + std::to_string(index) + " of state " +
                           std::to_string(q) + " has infinite weight"});
      }
      check_label(input_symbols(), arc.ilabel, q, index, "input");
      check_label(output_symbols(), arc.olabel, q, index, "output");
      ++index;
    }
  }
  return out;
}

TropicalWeight path_weight(const Wfst& m, const Path& p) {
  if (p.empty()) throw BrokenPathError("empty path");
  if (m.initial_weight(p.front().source).is_zero()) {
    throw BrokenPathError("path does not start at an initial state");
  }
  TropicalWeight w = m.initial_weight(p.front().source);
  for (std::size_t k = 0; k < p.size(); ++k) {
    if (k > 0 && p[k].source != p[k - 1].target) {
      throw BrokenPathError("path is not consecutive at arc " +
                            std::to_string(k));
    }
    w = times(w, p[k].weight);
  }
  const StateId end = p.back().target;
  if (!m.is_final(end)) {
    throw NonAcceptingPathError("path ends at non-final state " +
                                std::to_string(end));
  }
  return times(w, m.final_weight(end));
}

namespace {

// Depth-first search over (state, input position, output position)
// configurations, bounded by a per-path arc budget.
class StringMatcher {
 public:
  StringMatcher(const Wfst& m, std::span<const Label> x,
                std::span<const Label> y, int max_path_arcs)
      : m_(m), x_(x), y_(y), max_path_arcs_(max_path_arcs) {}

  TropicalWeight run() {
    for (const auto& [q, lambda] : m_.initial()) {
      walk(q, 0, 0, lambda, 0);
    }
    if (truncated_) {
      throw NonTerminatingError(
          "path enumeration hit its traversal budget on a cyclic machine");
    }
    return best_;
  }

 private:
  void walk(StateId q, std::size_t i, std::size_t j, TropicalWeight w,
            int depth) {
    if (i == x_.size() && j == y_.size() && m_.is_final(q)) {
      best_ = plus(best_, times(w, m_.final_weight(q)));
    }
    for (const Arc& arc : m_.arcs(q)) {
      std::size_t ni = i;
      std::size_t nj = j;
      if (arc.ilabel != kEpsilonLabel) {
        if (i == x_.size() || x_[i] != arc.ilabel) continue;
        ni = i + 1;
      }
      if (arc.olabel != kEpsilonLabel) {
        if (j == y_.size() || y_[j] != arc.olabel) continue;
        nj = j + 1;
      }
      if (depth == max_path_arcs_) {
        truncated_ = true;
        continue;
      }
      walk(arc.target, ni, nj, times(w, arc.weight), depth + 1);
    }
  }

  const Wfst& m_;
  std::span<const Label> x_;
  std::span<const Label> y_;
  int max_path_arcs_;
  TropicalWeight best_ = TropicalWeight::zero();
  bool truncated_ = false;
};

}  // namespace

TropicalWeight string_weight(const Wfst& m, std::span<const Label> x,
                             std::span<const Label> y,
                             const StringWeightOptions& opts) {
  const int budget = std::max(1, m.num_arcs()) * std::max(1, opts.cycle_budget);
  return StringMatcher(m, x, y, budget).run();
}

std::vector<Label> parse_label_string(std::string_view text,
                                      const SymbolTable* table) {
  std::vector<Label> labels;
  std::istringstream in{std::string(text)};
  std::string token;
  while (in >> token) {
    Label label;
    if (table != nullptr) {
      label = table->require(token);
    } else {
      auto [ptr, ec] =
          std::from_chars(token.data(), token.data() + token.size(), label);
      if (ec != std::errc() || ptr != token.data() + token.size()) {
        throw UnknownSymbolError(token);
      }
    }
    if (label == kEpsilonLabel) {
      // String projections are ε-free by construction.
      throw UnknownSymbolError(token);
    }
    labels.push_back(label);
  }
  return labels;
}

TropicalWeight string_weight(const Wfst& m, std::string_view x,
                             std::string_view y,
                             const StringWeightOptions& opts) {
  const std::vector<Label> xs = parse_label_string(x, m.input_symbols());
  const std::vector<Label> ys = parse_label_string(y, m.output_symbols());
  return string_weight(m, xs, ys, opts);
}

Wfst reverse(const Wfst& m) {
  Wfst r;
  r.reserve_states(m.num_states());  // original ids plus the super-initial
  const StateId super_initial = m.num_states();
  r.set_initial(super_initial, TropicalWeight::one());
  for (const auto& [f, rho] : m.finals()) {
    r.add_arc(super_initial, kEpsilonLabel, kEpsilonLabel, rho, f);
  }
  for (StateId q = 0; q < m.num_states(); ++q) {
    for (const Arc& arc : m.arcs(q)) {
      r.add_arc(arc.target, arc.ilabel, arc.olabel, arc.weight, arc.source);
    }
  }
  for (const auto& [q, lambda] : m.initial()) {
    r.set_final(q, lambda);
  }
  if (const SymbolTable* t = m.input_symbols()) r.set_input_symbols(*t);
  if (const SymbolTable* t = m.output_symbols()) r.set_output_symbols(*t);
  return r;
}

bool is_deterministic(const Wfst& m) {
  if (m.initial().size() > 1) return false;
  std::unordered_set<Label> seen;
  for (StateId q = 0; q < m.num_states(); ++q) {
    seen.clear();
    for (const Arc& arc : m.arcs(q)) {
      if (arc.ilabel == kEpsilonLabel) return false;
      if (!seen.insert(arc.ilabel).second) return false;
    }
  }
  return true;
}

bool has_input_epsilon(const Wfst& m) {
  for (StateId q = 0; q < m.num_states(); ++q) {
    for (const Arc& arc : m.arcs(q)) {
      if (arc.ilabel == kEpsilonLabel) return true;
    }
  }
  return false;
}

bool has_output_epsilon(const Wfst& m) {
  for (StateId q = 0; q < m.num_states(); ++q) {
    for (const Arc& arc : m.arcs(q)) {
      if (arc.olabel == kEpsilonLabel) return true;
    }
  }
  return false;
}

}  // namespace cfst
