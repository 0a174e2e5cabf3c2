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

#ifndef CIRCUIT_INDEPENDENT_INFLUENCE_H_
#define CIRCUIT_INDEPENDENT_INFLUENCE_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "circuit/influence.h"

namespace circuit {

// Insertion-ordered seed set with O(1) membership.
class SeedSet {
 public:
  explicit SeedSet(std::size_t n) : member_(n, 0) {}

  // Throws ArgumentError if `s` is out of range or already present.
  void Insert(NodeId s);
  bool contains(NodeId s) const { return member_[s] != 0; }
  std::size_t size() const { return order_.size(); }
  bool empty() const { return order_.empty(); }
  std::span<const NodeId> order() const { return order_; }
  // One byte per node, nonzero on seeds; usable as a solver mask.
  std::span<const std::uint8_t> mask() const { return member_; }

 private:
  std::vector<NodeId> order_;
  std::vector<std::uint8_t> member_;
};

// Seed set S with its joint influence f_S and the per-node gain bookkeeping
// used by lazy selection. Updated only through JointUpdate.
struct InfluenceState {
  explicit InfluenceState(std::size_t n)
      : seeds(n), joint(n, 0.0), gains(n, 0.0), gain_round(n, -1) {}

  SeedSet seeds;
  std::vector<double> joint;
  // Last known marginal gain (or initial upper bound) per node.
  std::vector<double> gains;
  // Round in which gains[i] was computed exactly; -1 if never.
  std::vector<long> gain_round;

  // sigma(S): seeds count one each, the rest contribute their joint value.
  double Spread() const;
};

// Influence of k on every node with the seeds grounded: the k-th column of
// the inverse of Gamma restricted to non-seeds, normalized to 1 at k and
// exactly 0 on the seeds. Throws ArgumentError if k is a seed.
std::vector<double> IndependentInfluence(const InfluenceModel& model, NodeId k,
                                         const SeedSet& seeds);

// sum_j indep_j * (1 - joint_j) over non-seeds.
double GainFrom(const InfluenceState& state, std::span<const double> indep);

// sigma(S + s) - sigma(S), from one masked solve.
double MarginalGain(const InfluenceModel& model, NodeId s,
                    const InfluenceState& state);

// Adds s to the seeds and folds its independent influence into the joint
// vector with the product rule joint <- 1 - (1 - joint)(1 - indep).
void JointUpdate(InfluenceState& state, NodeId s, std::span<const double> indep);

// Convenience: IndependentInfluence followed by JointUpdate. Returns the
// realized gain.
double AddSeed(const InfluenceModel& model, InfluenceState& state, NodeId s);

}  // namespace circuit

#endif  // CIRCUIT_INDEPENDENT_INFLUENCE_H_
