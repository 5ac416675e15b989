// tests/test-machines.h
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
// Machines the suites share.

#ifndef CFST_TESTS_TEST_MACHINES_H_
#define CFST_TESTS_TEST_MACHINES_H_

#include "cfst/contract.h"
#include "cfst/fst.h"

namespace cfst::testing {

inline Wfst contract_machine() { return compile(builtin_manufacturing_contract()); }

// Two parallel routes for input "xy": one costing 2+3, one costing 5+2.
// Labels: x=1, y=2 on both tapes.
inline Wfst two_path_automaton() {
  Wfst m;
  m.reserve_states(3);
  m.set_initial(0);
  m.add_arc(0, 1, 1, TropicalWeight(2), 1);
  m.add_arc(0, 1, 1, TropicalWeight(5), 2);
  m.add_arc(1, 2, 2, TropicalWeight(3), 3);
  m.add_arc(2, 2, 2, TropicalWeight(2), 3);
  m.set_final(3);
  return m;
}

// The conflicting-provisions machine: state 1 emits the same event A
// (label 1) into both state 2 ("payment due") and state 3 ("nonconforming
// goods"). Unweighted, so every weight is 1̄.
inline Wfst conflict_machine() {
  Wfst m;
  m.reserve_states(3);
  m.set_initial(1);
  m.add_arc(1, 1, 1, TropicalWeight::one(), 2);
  m.add_arc(1, 1, 1, TropicalWeight::one(), 3);
  m.set_final(2);
  m.set_final(3);
  return m;
}

}  // namespace cfst::testing

#endif  // CFST_TESTS_TEST_MACHINES_H_
