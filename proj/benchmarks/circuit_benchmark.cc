// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <vector>

#include <benchmark/benchmark.h>

#include "circuit/generators.h"
#include "circuit/influence.h"
#include "circuit/maximizer.h"
#include "circuit/simulator.h"
#include "circuit/transmission.h"

namespace circuit {
namespace {

InfluenceModel WcModel(const Graph& g) {
  return InfluenceModel(BuildTransmission(g, WeightScheme::WeightedCascade()),
                        DampingVector::Uniform(g.num_nodes(), kDefaultDamping));
}

// Scale-free graphs of n nodes with three arcs added per node.
Graph ScaleFree(std::size_t n) {
  return generators::PreferentialAttachment(n, 3, 42);
}

void BM_ModelConstruction(benchmark::State& state) {
  const Graph g = ScaleFree(state.range(0));
  TransmissionMatrix t = BuildTransmission(g, WeightScheme::WeightedCascade());
  for (auto _ : state) {
    InfluenceModel model(t, DampingVector::Uniform(g.num_nodes(), 0.25));
    benchmark::DoNotOptimize(model.column_sums().data());
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ModelConstruction)->RangeMultiplier(4)->Range(1 << 10, 1 << 16)
    ->Complexity()->Unit(benchmark::kMillisecond);

void BM_ColumnSolve(benchmark::State& state) {
  const Graph g = ScaleFree(state.range(0));
  const InfluenceModel model = WcModel(g);
  NodeId i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(model.SolveColumn(i).data());
    i = (i + 7919) % g.num_nodes();
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ColumnSolve)->RangeMultiplier(4)->Range(1 << 10, 1 << 16)
    ->Complexity()->Unit(benchmark::kMicrosecond);

void BM_CircuitMaximize(benchmark::State& state) {
  const Graph g = ScaleFree(5000);
  const InfluenceModel model = WcModel(g);
  const std::size_t k = state.range(0);
  std::size_t evaluated = 0;
  for (auto _ : state) {
    SelectionTrace trace = CircuitMaximize(model, k);
    evaluated = trace.TotalEvaluated();
    benchmark::DoNotOptimize(trace.spread);
  }
  state.counters["evaluated"] = static_cast<double>(evaluated);
}
BENCHMARK(BM_CircuitMaximize)->Arg(10)->Arg(50)->Unit(benchmark::kMillisecond);

void BM_CascadeRun(benchmark::State& state) {
  const Graph g = ScaleFree(state.range(0));
  const WeightedCascade cascade(g);
  const std::vector<NodeId> seeds = {0, 1, 2, 3, 4};
  std::uint64_t run = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(CascadeRun(cascade, seeds, RunStream(1, run++)));
  }
}
BENCHMARK(BM_CascadeRun)->Arg(1 << 12)->Arg(1 << 16)
    ->Unit(benchmark::kMicrosecond);

void BM_EstimateSpread(benchmark::State& state) {
  const Graph g = ScaleFree(5000);
  const WeightedCascade cascade(g);
  const std::vector<NodeId> seeds = {0, 1, 2, 3, 4};
  SimulationOptions options;
  options.runs = 1000;
  options.workers = state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(EstimateSpread(cascade, seeds, options).mean);
  }
}
BENCHMARK(BM_EstimateSpread)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond)
    ->UseRealTime();

}  // namespace
}  // namespace circuit

BENCHMARK_MAIN();
