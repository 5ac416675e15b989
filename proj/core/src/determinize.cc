// core/src/determinize.cc
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

#include "cfst/determinize.h"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <deque>
#include <map>
#include <sstream>
#include <unordered_map>

namespace cfst {

namespace {

// Tropical residue: a ⊘ w, defined for a ≥ w; exact for our integer weights.
TropicalWeight divide(TropicalWeight a, TropicalWeight w) {
  if (a.is_zero()) return TropicalWeight::zero();
  return TropicalWeight(a.value() - w.value());
}

struct SubsetHash {
  std::size_t operator()(const SubsetState& s) const {
    std::size_t h = 0xcbf29ce484222325ull;
    auto mix = [&h](std::uint64_t v) {
      h ^= v;
      h *= 0x100000001b3ull;
    };
    for (const Residual& r : s.residuals) {
      mix(static_cast<std::uint64_t>(r.state));
      mix(std::bit_cast<std::uint64_t>(r.weight.value()));
      for (Label l : r.remainder) mix(static_cast<std::uint64_t>(l) + 0x9e37);
    }
    return h;
  }
};

// Sort by (state, remainder), ⊕-merge duplicates, factor the minimum weight
// out so at least one residual weight is 1̄. Returns the factored weight.
TropicalWeight canonicalize(std::vector<Residual>& residuals) {
  TropicalWeight min_weight = TropicalWeight::zero();
  for (const Residual& r : residuals) min_weight = plus(min_weight, r.weight);
  for (Residual& r : residuals) r.weight = divide(r.weight, min_weight);

  std::sort(residuals.begin(), residuals.end(),
            [](const Residual& a, const Residual& b) {
              if (a.state != b.state) return a.state < b.state;
              return a.remainder < b.remainder;
            });
  std::vector<Residual> merged;
  for (Residual& r : residuals) {
    if (!merged.empty() && merged.back().state == r.state &&
        merged.back().remainder == r.remainder) {
      merged.back().weight = plus(merged.back().weight, r.weight);
    } else {
      merged.push_back(std::move(r));
    }
  }
  residuals = std::move(merged);
  return min_weight;
}

std::vector<Label> common_prefix(const std::vector<std::vector<Label>>& strings) {
  if (strings.empty()) return {};
  std::vector<Label> prefix = strings.front();
  for (const auto& s : strings) {
    std::size_t k = 0;
    while (k < prefix.size() && k < s.size() && prefix[k] == s[k]) ++k;
    prefix.resize(k);
    if (prefix.empty()) break;
  }
  return prefix;
}

class Determinizer {
 public:
  Determinizer(const Wfst& m, const DeterminizeOptions& opts)
      : m_(m), opts_(opts) {}

  DeterminizeResult run() {
    std::vector<Residual> start;
    for (const auto& [q, lambda] : m_.initial()) {
      start.push_back({q, lambda, {}});
    }
    const TropicalWeight start_weight = canonicalize(start);
    const StateId start_id = intern(SubsetState{std::move(start)});
    result_.fst.set_initial(start_id, start_weight);

    while (!queue_.empty()) {
      const StateId sid = queue_.front();
      queue_.pop_front();
      expand(sid);
    }

    if (const SymbolTable* t = m_.input_symbols())
      result_.fst.set_input_symbols(*t);
    if (const SymbolTable* t = m_.output_symbols())
      result_.fst.set_output_symbols(*t);
    return std::move(result_);
  }

 private:
  StateId new_state(SubsetState subset) {
    if (result_.fst.num_states() >= opts_.max_states) {
      throw StateBudgetExceededError(
          "determinization exceeded the " + std::to_string(opts_.max_states) +
          "-state budget; the machine may not be determinizable");
    }
    // Residual volume counts against the same budget: a transducer whose
    // output remainders multiply per step can otherwise exhaust memory
    // inside a handful of subsets.
    for (const Residual& r : subset.residuals) {
      work_units_ += 1 + static_cast<long>(r.remainder.size());
    }
    if (work_units_ > 32L * opts_.max_states) {
      throw StateBudgetExceededError(
          "determinization residuals outgrew the state budget (" +
          std::to_string(opts_.max_states) +
          " states); the machine may not be determinizable");
    }
    const StateId id = result_.fst.add_state();
    result_.subsets.push_back(std::move(subset));
    return id;
  }

  StateId intern(SubsetState subset) {
    auto it = ids_.find(subset);
    if (it != ids_.end()) return it->second;
    const StateId id = new_state(subset);
    ids_.emplace(std::move(subset), id);
    queue_.push_back(id);
    return id;
  }

  // Emits `output` from `source` toward `target` on one transition reading
  // `ilabel`; outputs longer than one symbol spill through chained ε-input
  // states. A target of -1 means "end on a fresh final state".
  void emit(StateId source, Label ilabel, const std::vector<Label>& output,
            TropicalWeight weight, StateId target) {
    StateId cur = source;
    Label in = ilabel;
    TropicalWeight w = weight;
    const std::size_t chain_len = output.empty() ? 0 : output.size() - 1;
    for (std::size_t k = 0; k < chain_len; ++k) {
      const StateId chain = new_state(SubsetState{});
      result_.fst.add_arc(cur, in, output[k], w, chain);
      cur = chain;
      in = kEpsilonLabel;
      w = TropicalWeight::one();
    }
    const Label last = output.empty() ? kEpsilonLabel : output.back();
    if (target < 0) {
      target = new_state(SubsetState{});
      result_.fst.set_final(target, TropicalWeight::one());
    }
    result_.fst.add_arc(cur, in, last, w, target);
  }

  void expand(StateId sid) {
    // Residuals are copied: intern() may rehash ids_ while we emit.
    const SubsetState subset = result_.subsets[sid];

    // Finality. Residuals owed an output string past the end of the input
    // are flushed through ε-input chains (grouped per distinct remainder).
    std::map<std::vector<Label>, TropicalWeight> final_by_remainder;
    for (const Residual& r : subset.residuals) {
      if (!m_.is_final(r.state)) continue;
      const TropicalWeight w = times(r.weight, m_.final_weight(r.state));
      auto [it, inserted] = final_by_remainder.emplace(r.remainder, w);
      if (!inserted) it->second = plus(it->second, w);
    }
    for (const auto& [remainder, w] : final_by_remainder) {
      if (remainder.empty()) {
        result_.fst.set_final(sid, w);
      } else {
        emit(sid, kEpsilonLabel, remainder, w, -1);
      }
    }

    // Transitions, grouped by input label (ordered for reproducibility).
    // The transient accumulation is budgeted too (more loosely than the
    // stored subsets, since ⊕-merging may shrink it again).
    std::map<Label, std::vector<Residual>> moves;
    long move_units = 0;
    for (const Residual& r : subset.residuals) {
      for (const Arc& arc : m_.arcs(r.state)) {
        std::vector<Label> accumulated = r.remainder;
        if (arc.olabel != kEpsilonLabel) accumulated.push_back(arc.olabel);
        move_units += 1 + static_cast<long>(accumulated.size());
        if (move_units > 256L * opts_.max_states) {
          throw StateBudgetExceededError(
              "determinization residuals outgrew the state budget (" +
              std::to_string(opts_.max_states) +
              " states); the machine may not be determinizable");
        }
        moves[arc.ilabel].push_back(
            {arc.target, times(r.weight, arc.weight), std::move(accumulated)});
      }
    }
    for (auto& [ilabel, residuals] : moves) {
      std::vector<std::vector<Label>> accumulated;
      accumulated.reserve(residuals.size());
      for (const Residual& r : residuals) accumulated.push_back(r.remainder);
      const std::vector<Label> lcp = common_prefix(accumulated);
      for (Residual& r : residuals) {
        r.remainder.erase(r.remainder.begin(), r.remainder.begin() + lcp.size());
      }
      const TropicalWeight arc_weight = canonicalize(residuals);
      const StateId tid = intern(SubsetState{std::move(residuals)});
      emit(sid, ilabel, lcp, arc_weight, tid);
    }
  }

  const Wfst& m_;
  DeterminizeOptions opts_;
  DeterminizeResult result_;
  std::unordered_map<SubsetState, StateId, SubsetHash> ids_;
  std::deque<StateId> queue_;
  long work_units_ = 0;
};

}  // namespace

std::string SubsetState::to_string(const SymbolTable* osymbols) const {
  std::ostringstream out;
  out << "{";
  bool first = true;
  for (const Residual& r : residuals) {
    if (!first) out << ", ";
    first = false;
    out << r.state;
    if (!r.weight.is_one()) out << "/" << r.weight.to_string();
    if (!r.remainder.empty()) {
      out << ":";
      for (std::size_t k = 0; k < r.remainder.size(); ++k) {
        if (k > 0) out << " ";
        if (osymbols != nullptr) {
          if (auto sym = osymbols->find(r.remainder[k])) {
            out << *sym;
            continue;
          }
        }
        out << r.remainder[k];
      }
    }
  }
  out << "}";
  return out.str();
}

DeterminizeResult determinize(const Wfst& m, const DeterminizeOptions& opts) {
  const std::vector<Diagnostic> problems = m.validate();
  if (!problems.empty()) {
    throw Error("determinize: invalid machine: " + problems.front().message);
  }
  if (has_input_epsilon(m)) {
    throw InputEpsilonError(
        "determinize requires an input-epsilon-free machine");
  }
  return Determinizer(m, opts).run();
}

}  // namespace cfst
