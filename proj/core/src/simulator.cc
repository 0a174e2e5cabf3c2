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

#include "circuit/simulator.h"

#include <algorithm>
#include <cmath>

#include "circuit/errors.h"
#include "circuit/parallel.h"

namespace circuit {

WeightedCascade::WeightedCascade(const Graph& g) {
  const std::size_t n = g.num_nodes();
  offsets_.assign(n + 1, 0);
  targets_.reserve(g.num_arcs());
  probabilities_.reserve(g.num_arcs());
  // Arc index doubles as the coin counter.
  for (NodeId u = 0; u < n; ++u) {
    for (const Arc& a : g.OutArcs(u)) {
      targets_.push_back(a.dst);
      probabilities_.push_back(
          std::min(1.0, a.conductance / g.InConductance(a.dst)));
    }
    offsets_[u + 1] = targets_.size();
  }
}

std::size_t WeightedCascade::Run(std::span<const NodeId> seeds,
                                 const RunStream& stream,
                                 Scratch& scratch) const {
  if (++scratch.epoch_ == 0) {
    std::fill(scratch.stamp_.begin(), scratch.stamp_.end(), 0);
    scratch.epoch_ = 1;
  }
  const std::uint32_t epoch = scratch.epoch_;
  auto& frontier = scratch.frontier_;
  frontier.clear();
  for (NodeId s : seeds) {
    if (scratch.stamp_[s] != epoch) {
      scratch.stamp_[s] = epoch;
      frontier.push_back(s);
    }
  }
  // Activation order does not change the outcome: every arc is tried at most
  // once and its coin is fixed by the stream.
  for (std::size_t head = 0; head < frontier.size(); ++head) {
    const NodeId u = frontier[head];
    for (std::size_t id = offsets_[u]; id < offsets_[u + 1]; ++id) {
      const NodeId v = targets_[id];
      if (scratch.stamp_[v] == epoch) continue;
      if (stream.Uniform(id) < probabilities_[id]) {
        scratch.stamp_[v] = epoch;
        frontier.push_back(v);
      }
    }
  }
  return frontier.size();
}

std::size_t CascadeRun(const WeightedCascade& cascade,
                       std::span<const NodeId> seeds, const RunStream& stream) {
  if (seeds.empty()) throw ArgumentError("cascade needs at least one seed");
  WeightedCascade::Scratch scratch(cascade.num_nodes());
  return cascade.Run(seeds, stream, scratch);
}

SpreadEstimate EstimateSpread(const WeightedCascade& cascade,
                              std::span<const NodeId> seeds,
                              const SimulationOptions& options) {
  if (seeds.empty()) throw ArgumentError("spread estimate needs seeds");
  if (options.runs == 0) throw ArgumentError("run count must be at least 1");
  for (NodeId s : seeds) {
    if (s >= cascade.num_nodes()) throw ArgumentError("seed out of range");
  }

  const std::size_t runs = options.runs;
  std::vector<std::uint32_t> counts(runs);
  const std::size_t workers =
      std::min(ResolveWorkers(options.workers), runs);
  std::vector<WeightedCascade::Scratch> scratch(
      std::max<std::size_t>(1, workers),
      WeightedCascade::Scratch(cascade.num_nodes()));
  ParallelFor(runs, workers, [&](std::size_t r, std::size_t w) {
    counts[r] = static_cast<std::uint32_t>(
        cascade.Run(seeds, RunStream(options.rng_seed, r), scratch[w]));
  });

  SpreadEstimate est;
  est.runs = runs;
  est.rng_seed = options.rng_seed;
  for (std::uint32_t c : counts) est.total += c;
  est.mean = static_cast<double>(est.total) / static_cast<double>(runs);
  if (runs > 1) {
    double ss = 0.0;
    for (std::uint32_t c : counts) {
      const double d = static_cast<double>(c) - est.mean;
      ss += d * d;
    }
    est.std_error =
        std::sqrt(ss / static_cast<double>(runs - 1) / static_cast<double>(runs));
  }
  if (options.keep_counts) est.counts = std::move(counts);
  return est;
}

}  // namespace circuit
