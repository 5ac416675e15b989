// tests/test-text-io.cc
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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <random>
#include <sstream>

#include "cfst/text-io.h"
#include "oracle.h"
#include "test-machines.h"

using namespace cfst;
using cfst::testing::contract_machine;
using cfst::testing::random_machine;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  REQUIRE_MESSAGE(in.good(), path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string data_file(const std::string& name) {
  return std::string(CFST_DATA_DIR) + "/" + name;
}

}  // namespace

TEST_CASE("parse_att reads the canonical arc and final lines") {
  SymbolTable syms = SymbolTable::with_epsilon();
  syms.add("a");
  syms.add("b");
  const Wfst m = parse_att(
      "0\t1\ta\tb\t2\n"
      "1 2 a b\n"  // spaces work too; missing weight means 1̄
      "2\t0.5\n"
      "1\n",
      &syms, &syms);
  CHECK(m.num_states() == 3);
  CHECK(m.num_arcs() == 2);
  REQUIRE(m.initial().size() == 1);
  CHECK(m.initial().begin()->first == 0);
  CHECK(m.initial().begin()->second == TropicalWeight::one());
  CHECK(m.final_weight(2) == TropicalWeight(0.5));
  CHECK(m.final_weight(1) == TropicalWeight::one());
  // No tables given: labels parse as integer ids.
  const Wfst numeric = parse_att("0\t1\t3\t4\t2\n1\n");
  CHECK(numeric.arcs(0)[0].ilabel == 3);
  CHECK(numeric.arcs(0)[0].olabel == 4);
}

TEST_CASE("a single final line makes a one-state machine") {
  const Wfst m = parse_att("0\n");
  CHECK(m.num_states() == 1);
  CHECK(m.num_arcs() == 0);
  CHECK(m.initial_weight(0) == TropicalWeight::one());
  CHECK(m.final_weight(0) == TropicalWeight::one());
}

TEST_CASE("parse_att errors carry the line number") {
  SUBCASE("missing output symbol") {
    try {
      parse_att("0 1 a\n");
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.line() == 1);
    }
  }
  SUBCASE("second line bad") {
    try {
      parse_att("0 1 1 1\n0 1 1\n");
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.line() == 2);
    }
  }
  SUBCASE("empty text") { CHECK_THROWS_AS(parse_att(""), ParseError); }
  SUBCASE("negative weight") {
    CHECK_THROWS_AS(parse_att("0 1 1 1 -4\n1\n"), ParseError);
  }
  SUBCASE("infinite arc weight") {
    CHECK_THROWS_AS(parse_att("0 1 1 1 Infinity\n1\n"), ParseError);
  }
  SUBCASE("unknown symbol keeps the offending token") {
    SymbolTable syms = SymbolTable::with_epsilon();
    syms.add("a");
    try {
      parse_att("0 1 a zz\n1\n", &syms, &syms);
      FAIL("expected UnknownSymbolError");
    } catch (const UnknownSymbolError& e) {
      CHECK(e.token() == "zz");
    }
  }
}

TEST_CASE("write_att requires the single-unit-initial normal form") {
  Wfst m;
  m.add_state();
  m.set_final(0);
  CHECK_THROWS_AS(write_att(m), MultipleInitialsError);  // no initial at all

  m.set_initial(0, TropicalWeight(3));
  CHECK_THROWS_AS(write_att(m), MultipleInitialsError);  // non-unit λ

  const Wfst n = normalize_initial(m);
  REQUIRE(n.initial().size() == 1);
  CHECK(n.initial().begin()->second == TropicalWeight::one());
  CHECK(n.num_states() == 2);
  CHECK(string_weight(n, std::vector<Label>{}, std::vector<Label>{}) ==
        TropicalWeight(3));
}

TEST_CASE("an empty-but-final machine writes a single line") {
  Wfst m;
  m.add_state();
  m.set_initial(0);
  m.set_final(0);
  CHECK(write_att(m) == "0\n");
}

TEST_CASE("the contract fixture files parse to the built machine") {
  const SymbolTable isyms =
      parse_symbols(slurp(data_file("manufacturing.isyms")));
  const SymbolTable osyms =
      parse_symbols(slurp(data_file("manufacturing.osyms")));
  const Wfst parsed =
      parse_att(slurp(data_file("manufacturing.fst.txt")), &isyms, &osyms);
  const Wfst built = contract_machine();
  CHECK(parsed == built);  // state-for-state, arc-for-arc, weight-exact
  CHECK(*built.input_symbols() == isyms);
  CHECK(*built.output_symbols() == osyms);
}

TEST_CASE("round-trip: parse after write reproduces the machine") {
  SUBCASE("contract machine") {
    const Wfst m = contract_machine();
    CHECK(parse_att(write_att(m), m.input_symbols(), m.output_symbols()) == m);
  }
  SUBCASE("random machines, normalized when needed") {
    std::mt19937 rng(71);
    for (int trial = 0; trial < 200; ++trial) {
      const Wfst m = normalize_initial(random_machine(rng));
      const Wfst back = parse_att(write_att(m));
      REQUIRE(back == m);
    }
  }
  SUBCASE("isolated trailing states survive") {
    Wfst m;
    m.add_state();
    m.add_state();
    m.add_state();  // never mentioned by arcs or finals
    m.set_initial(0);
    m.set_final(1);
    m.add_arc(0, 1, 1, TropicalWeight(2), 1);
    const Wfst back = parse_att(write_att(m));
    CHECK(back == m);
    CHECK(back.num_states() == 3);
  }
  SUBCASE("isolated initial state still leads the document") {
    Wfst m;
    m.add_state();
    m.add_state();
    m.add_state();
    m.set_initial(0);
    m.set_final(2);
    m.add_arc(1, 1, 1, TropicalWeight(2), 2);  // unreachable island
    const Wfst back = parse_att(write_att(m));
    CHECK(back == m);
    CHECK(back.initial_weight(0) == TropicalWeight::one());
  }
}

TEST_CASE("symbol tables round-trip") {
  const std::string fixture = slurp(data_file("manufacturing.isyms"));
  const SymbolTable isyms = parse_symbols(fixture);
  CHECK(parse_symbols(write_symbols(isyms)) == isyms);
  CHECK(write_symbols(isyms) == fixture);  // id-sorted input: byte identical
  CHECK(isyms.require("a") == 1);
  CHECK(isyms.require("k") == 6);

  SymbolTable t = SymbolTable::with_epsilon();
  t.add("pay", 4);
  t.add("ship", 2);
  CHECK(parse_symbols(write_symbols(t)) == t);
}

TEST_CASE("symbol table parse errors") {
  CHECK_THROWS_AS(parse_symbols("a\t1\n"), MissingEpsilonError);
  CHECK_THROWS_AS(parse_symbols("<eps>\t0\na\t3\nb\t3\n"), DuplicateIdError);
  CHECK_THROWS_AS(parse_symbols("<eps>\t0\na\t1\na\t2\n"),
                  DuplicateSymbolError);
  CHECK_THROWS_AS(parse_symbols("justonetoken\n"), ParseError);
  CHECK_THROWS_AS(parse_symbols("a\t-1\n"), ParseError);

  // State-name tables skip the epsilon requirement and may hold spaces.
  const SymbolTable names =
      parse_symbols("START\t0\nproduction period has elapsed\t1\n",
                    /*require_epsilon=*/false);
  CHECK(names.require("production period has elapsed") == 1);
  CHECK(*names.find(0) == "START");
}
