// benchmarks/wfst-bench.cc
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

#include <benchmark/benchmark.h>

#include <random>

#include "cfst/contract.h"
#include "cfst/determinize.h"
#include "cfst/shortest-distance.h"
#include "cfst/text-io.h"

namespace {

using namespace cfst;

// A layered nondeterministic machine: `layers` ranks of `width` states,
// every state fanning out to the whole next rank on a couple of labels.
Wfst layered_machine(int layers, int width, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> weight(0, 9);
  Wfst m;
  m.reserve_states(layers * width);
  m.set_initial(0);
  for (int layer = 0; layer + 1 < layers; ++layer) {
    for (int a = 0; a < width; ++a) {
      for (int b = 0; b < width; ++b) {
        const Label label = 1 + (a + b) % 2;
        m.add_arc(layer * width + a, label, label,
                  TropicalWeight(weight(rng)), (layer + 1) * width + b);
      }
    }
  }
  for (int b = 0; b < width; ++b) {
    m.set_final((layers - 1) * width + b);
  }
  return m;
}

void BM_CompileContract(benchmark::State& state) {
  const ContractSpec spec = builtin_manufacturing_contract();
  for (auto _ : state) {
    benchmark::DoNotOptimize(compile(spec));
  }
}
BENCHMARK(BM_CompileContract);

void BM_IsDeterministicContract(benchmark::State& state) {
  const Wfst m = compile(builtin_manufacturing_contract());
  for (auto _ : state) {
    benchmark::DoNotOptimize(is_deterministic(m));
  }
}
BENCHMARK(BM_IsDeterministicContract);

void BM_ShortestDistance(benchmark::State& state) {
  const Wfst m = layered_machine(static_cast<int>(state.range(0)), 8, 5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(shortest_distance(m, Direction::kForward));
  }
}
BENCHMARK(BM_ShortestDistance)->Arg(4)->Arg(16)->Arg(64);

void BM_ShortestPathContract(benchmark::State& state) {
  const Wfst m = compile(builtin_manufacturing_contract());
  for (auto _ : state) {
    benchmark::DoNotOptimize(shortest_path(m, 0));
  }
}
BENCHMARK(BM_ShortestPathContract);

void BM_Determinize(benchmark::State& state) {
  const Wfst m = layered_machine(static_cast<int>(state.range(0)), 6, 7);
  DeterminizeOptions opts;
  opts.max_states = 1'000'000;
  for (auto _ : state) {
    benchmark::DoNotOptimize(determinize(m, opts));
  }
}
BENCHMARK(BM_Determinize)->Arg(4)->Arg(8)->Arg(16);

void BM_ParseAtt(benchmark::State& state) {
  const std::string text = write_att(layered_machine(16, 8, 11));
  for (auto _ : state) {
    benchmark::DoNotOptimize(parse_att(text));
  }
  state.SetBytesProcessed(static_cast<int64_t>(state.iterations()) *
                          static_cast<int64_t>(text.size()));
}
BENCHMARK(BM_ParseAtt);

void BM_CostReport(benchmark::State& state) {
  const ContractSpec spec = builtin_manufacturing_contract();
  for (auto _ : state) {
    benchmark::DoNotOptimize(cost_report(spec));
  }
}
BENCHMARK(BM_CostReport);

}  // namespace

BENCHMARK_MAIN();
