// cfst/dot.h
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

#ifndef CFST_DOT_H_
#define CFST_DOT_H_

#include <string>

#include "cfst/fst.h"

namespace cfst {

struct DotOptions {
  // Drop the "/weight" suffix on edges whose weight is 1̄.
  bool suppress_unit_weights = false;
  // Optional table mapping state names to state ids (no epsilon
  // convention); when given, nodes are labeled by name instead of id.
  const SymbolTable* state_names = nullptr;
  std::string graph_name = "wfst";
};

// Graphviz rendering: the initial state is bold, final states are double
// circled, edges read "in:out/weight". Deterministic — identical machines
// yield byte-identical documents.
std::string export_dot(const Wfst& m, const DotOptions& opts = {});

}  // namespace cfst

#endif  // CFST_DOT_H_
