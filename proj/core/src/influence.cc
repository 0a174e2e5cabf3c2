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

#include "circuit/influence.h"

#include <numeric>
#include <string>

#include "circuit/errors.h"
#include "circuit/parallel.h"

namespace circuit {

double InfluenceVector::Total() const {
  return std::accumulate(values.begin(), values.end(), 0.0);
}

InfluenceModel::InfluenceModel(TransmissionMatrix transmission,
                               DampingVector damping, SolverOptions solver)
    : transmission_(std::move(transmission)),
      damping_(std::move(damping)),
      solver_(solver) {
  if (damping_.size() != transmission_.size()) {
    throw ArgumentError("damping vector size does not match the graph");
  }
  column_sums_ = SolveColumnSums(transmission_, damping_, solver_);
}

std::vector<double> InfluenceModel::SolveColumn(
    NodeId i, std::span<const std::uint8_t> mask) const {
  if (i >= size()) throw ArgumentError("node index out of range");
  GammaOperator op(transmission_, damping_, Orientation::kTransposed, mask);
  std::vector<double> rhs(size(), 0.0);
  rhs[i] = 1.0;
  SolveReport report = GaussSeidelSolve(op, rhs, solver_);
  if (!report.converged && solver_.fixed_sweeps == 0) {
    throw ConvergenceError("solve for node " + std::to_string(i) +
                           " did not converge in " +
                           std::to_string(report.iterations) + " sweeps");
  }
  return std::move(report.x);
}

InfluenceVector InfluenceModel::Influence(NodeId i) const {
  InfluenceVector f;
  f.source = i;
  f.values = SolveColumn(i);
  f.self_potential = f.values[i];
  if (!(f.self_potential > 0.0)) {
    throw NumericalError("non-positive diagonal potential at node " +
                         std::to_string(i));
  }
  const double nu = 1.0 / f.self_potential;
  for (double& v : f.values) v *= nu;
  f.values[i] = 1.0;
  return f;
}

DenseMatrix InfluenceModel::InfluenceMatrix(std::size_t cap,
                                            std::size_t workers) const {
  const std::size_t n = size();
  if (n > cap) {
    throw CapacityError("full influence matrix is capped at " +
                        std::to_string(cap) + " nodes (graph has " +
                        std::to_string(n) +
                        "); query individual sources instead");
  }
  DenseMatrix f(n, n);
  ParallelFor(n, workers, [&](std::size_t i, std::size_t) {
    InfluenceVector row = Influence(static_cast<NodeId>(i));
    std::copy(row.values.begin(), row.values.end(), f.Row(i).begin());
  });
  return f;
}

std::optional<double> BoundTable::Tightness(NodeId i) const {
  if (!total[i]) return std::nullopt;
  return *total[i] / upper_bound[i];
}

BoundTable MakeBoundTable(const InfluenceModel& model) {
  BoundTable table;
  table.upper_bound.resize(model.size());
  table.total.resize(model.size());
  for (NodeId i = 0; i < model.size(); ++i) {
    table.upper_bound[i] = model.UpperBound(i);
  }
  return table;
}

void FillTotals(const InfluenceModel& model, std::span<const NodeId> nodes,
                BoundTable& table, std::size_t workers) {
  ParallelFor(nodes.size(), workers, [&](std::size_t k, std::size_t) {
    table.total[nodes[k]] = model.TotalInfluence(nodes[k]);
  });
}

}  // namespace circuit
