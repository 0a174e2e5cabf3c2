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

#ifndef CIRCUIT_INFLUENCE_H_
#define CIRCUIT_INFLUENCE_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "circuit/solver.h"
#include "circuit/transmission.h"

namespace circuit {

inline constexpr double kDefaultDamping = 0.25;
inline constexpr std::size_t kFullMatrixCap = 5000;

// f_i: probability that an event seeded at `source` reaches each node.
struct InfluenceVector {
  NodeId source = 0;
  std::vector<double> values;
  // Diagonal entry of the system inverse used as normalizer.
  double self_potential = 0.0;

  double Total() const;
};

// The linear influence model: transmission probabilities, damping and the
// solver configuration, plus the column sums of the system inverse computed
// once at construction. Immutable; safe to query from several threads.
class InfluenceModel {
 public:
  InfluenceModel(TransmissionMatrix transmission, DampingVector damping,
                 SolverOptions solver = {});

  std::size_t size() const { return transmission_.size(); }
  const TransmissionMatrix& transmission() const { return transmission_; }
  const DampingVector& damping() const { return damping_; }
  const SolverOptions& solver_options() const { return solver_; }

  // Column sums of Gamma^{-1} (one per node).
  std::span<const double> column_sums() const { return column_sums_; }
  // (1 + lambda_i) * column_sums[i]; dominates TotalInfluence(i).
  double UpperBound(NodeId i) const {
    return (1.0 + damping_[i]) * column_sums_[i];
  }

  // Solves Gamma_{masked} x = e_i. Throws ConvergenceError when the solve
  // misses tolerance, unless fixed sweeps were configured.
  std::vector<double> SolveColumn(NodeId i,
                                  std::span<const std::uint8_t> mask = {}) const;

  InfluenceVector Influence(NodeId i) const;
  double TotalInfluence(NodeId i) const { return Influence(i).Total(); }

  // Row i is Influence(i). Throws CapacityError above `cap` nodes.
  DenseMatrix InfluenceMatrix(std::size_t cap = kFullMatrixCap,
                              std::size_t workers = 1) const;

 private:
  TransmissionMatrix transmission_;
  DampingVector damping_;
  SolverOptions solver_;
  std::vector<double> column_sums_;
};

// Per-node upper bounds with lazily filled exact totals.
struct BoundTable {
  std::vector<double> upper_bound;
  std::vector<std::optional<double>> total;

  // Ratio total/upper_bound for a filled entry.
  std::optional<double> Tightness(NodeId i) const;
};

BoundTable MakeBoundTable(const InfluenceModel& model);

// Computes exact totals for `nodes`; each entry is written by one worker.
void FillTotals(const InfluenceModel& model, std::span<const NodeId> nodes,
                BoundTable& table, std::size_t workers = 1);

}  // namespace circuit

#endif  // CIRCUIT_INFLUENCE_H_
