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

#ifndef CIRCUIT_SIMULATOR_H_
#define CIRCUIT_SIMULATOR_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "circuit/graph.h"

namespace circuit {

inline constexpr std::size_t kDefaultRuns = 10000;

// SplitMix64 finalizer.
constexpr std::uint64_t Mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Counter-based random stream for one simulation run. Every arc owns a fixed
// coin per (seed, run), so a run's outcome depends neither on traversal order
// nor on which thread executes it, and runs over different seed sets share
// the same coins.
class RunStream {
 public:
  RunStream(std::uint64_t seed, std::uint64_t run)
      : key_(Mix64(seed ^ Mix64(run))) {}

  // Uniform in [0, 1) for the given counter.
  double Uniform(std::uint64_t counter) const {
    const std::uint64_t h = Mix64(key_ ^ (counter * 0xd6e8feb86659fd93ULL));
    return static_cast<double>(h >> 11) * 0x1.0p-53;
  }

 private:
  std::uint64_t key_;
};

// Weighted Cascade view of a graph: arc u -> v fires with probability
// c_uv / d_v, where d_v is v's total in-conductance. Immutable.
class WeightedCascade {
 public:
  explicit WeightedCascade(const Graph& g);

  std::size_t num_nodes() const { return offsets_.size() - 1; }
  std::size_t num_arcs() const { return targets_.size(); }
  std::span<const NodeId> targets() const { return targets_; }
  std::span<const double> probabilities() const { return probabilities_; }
  std::size_t arc_begin(NodeId u) const { return offsets_[u]; }
  std::size_t arc_end(NodeId u) const { return offsets_[u + 1]; }

  // Reusable per-worker buffers.
  class Scratch {
   public:
    explicit Scratch(std::size_t n) : stamp_(n, 0) {}

   private:
    friend class WeightedCascade;
    std::vector<std::uint32_t> stamp_;
    std::uint32_t epoch_ = 0;
    std::vector<NodeId> frontier_;
  };

  // One cascade: seeds are active at t = 0; each newly active node makes one
  // attempt on each inactive out-neighbour. Returns the number activated.
  std::size_t Run(std::span<const NodeId> seeds, const RunStream& stream,
                  Scratch& scratch) const;

 private:
  std::vector<std::size_t> offsets_;
  std::vector<NodeId> targets_;
  std::vector<double> probabilities_;
};

struct SpreadEstimate {
  double mean = 0.0;
  double std_error = 0.0;
  std::size_t runs = 0;
  std::uint64_t rng_seed = 0;
  // Sum of per-run activated counts; exact.
  std::uint64_t total = 0;
  std::vector<std::uint32_t> counts;  // per run, when requested
};

struct SimulationOptions {
  std::size_t runs = kDefaultRuns;
  std::uint64_t rng_seed = 1;
  std::size_t workers = 1;
  bool keep_counts = false;
};

// Throws ArgumentError when `seeds` is empty.
std::size_t CascadeRun(const WeightedCascade& cascade,
                       std::span<const NodeId> seeds, const RunStream& stream);

// Mean and standard error over runs 0..R-1. Bit-identical for any worker
// count. Throws ArgumentError when `seeds` is empty or R is 0.
SpreadEstimate EstimateSpread(const WeightedCascade& cascade,
                              std::span<const NodeId> seeds,
                              const SimulationOptions& options = {});

}  // namespace circuit

#endif  // CIRCUIT_SIMULATOR_H_
