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

#include "circuit/independent_influence.h"

#include <string>

#include "circuit/errors.h"

namespace circuit {

void SeedSet::Insert(NodeId s) {
  if (s >= member_.size()) throw ArgumentError("seed index out of range");
  if (member_[s]) {
    throw ArgumentError("node " + std::to_string(s) + " is already a seed");
  }
  member_[s] = 1;
  order_.push_back(s);
}

double InfluenceState::Spread() const {
  double sigma = static_cast<double>(seeds.size());
  for (NodeId j = 0; j < joint.size(); ++j) {
    if (!seeds.contains(j)) sigma += joint[j];
  }
  return sigma;
}

std::vector<double> IndependentInfluence(const InfluenceModel& model, NodeId k,
                                         const SeedSet& seeds) {
  if (k >= model.size()) throw ArgumentError("node index out of range");
  if (seeds.contains(k)) {
    throw ArgumentError("node " + std::to_string(k) +
                        " is in the seed set; independent influence needs a "
                        "non-seed source");
  }
  std::vector<double> x = model.SolveColumn(k, seeds.mask());
  const double pivot = x[k];
  if (!(pivot > 0.0)) {
    throw NumericalError("non-positive diagonal potential at node " +
                         std::to_string(k));
  }
  for (double& v : x) v /= pivot;
  x[k] = 1.0;
  return x;
}

double GainFrom(const InfluenceState& state, std::span<const double> indep) {
  double gain = 0.0;
  for (NodeId j = 0; j < indep.size(); ++j) {
    if (!state.seeds.contains(j)) gain += indep[j] * (1.0 - state.joint[j]);
  }
  return gain;
}

double MarginalGain(const InfluenceModel& model, NodeId s,
                    const InfluenceState& state) {
  return GainFrom(state, IndependentInfluence(model, s, state.seeds));
}

void JointUpdate(InfluenceState& state, NodeId s,
                 std::span<const double> indep) {
  if (indep.size() != state.joint.size()) {
    throw ArgumentError("independent influence vector has the wrong length");
  }
  state.seeds.Insert(s);
  for (std::size_t j = 0; j < indep.size(); ++j) {
    state.joint[j] = 1.0 - (1.0 - state.joint[j]) * (1.0 - indep[j]);
  }
  state.joint[s] = 1.0;
}

double AddSeed(const InfluenceModel& model, InfluenceState& state, NodeId s) {
  std::vector<double> indep = IndependentInfluence(model, s, state.seeds);
  const double gain = GainFrom(state, indep);
  JointUpdate(state, s, indep);
  return gain;
}

}  // namespace circuit
