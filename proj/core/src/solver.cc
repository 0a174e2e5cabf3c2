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

#include "circuit/solver.h"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>

#include "circuit/errors.h"

namespace circuit {

std::vector<double> DenseMatrix::Column(std::size_t c) const {
  std::vector<double> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

GammaOperator::GammaOperator(const TransmissionMatrix& t,
                             const DampingVector& damping,
                             Orientation orientation,
                             std::span<const std::uint8_t> mask)
    : t_(&t), damping_(&damping), orientation_(orientation), mask_(mask) {
  if (damping.size() != t.size()) {
    throw ArgumentError("damping vector size does not match the graph");
  }
  if (!mask.empty() && mask.size() != t.size()) {
    throw ArgumentError("mask size does not match the graph");
  }
}

double GammaOperator::ApplyRow(NodeId i, std::span<const double> x) const {
  double acc = diagonal(i) * x[i];
  for (const TransmissionEntry& e : Couplings(i)) {
    if (!masked(e.node)) acc -= e.probability * x[e.node];
  }
  return acc;
}

std::size_t SolverOptions::SweepBudget(std::size_t n) const {
  if (fixed_sweeps != 0) return fixed_sweeps;
  if (max_iters != 0) return max_iters;
  return std::clamp<std::size_t>(10 * n, 1000, 10000);
}

namespace {

double ResidualNorm(const GammaOperator& op, std::span<const double> rhs,
                    std::span<const double> x) {
  double worst = 0.0;
  for (NodeId i = 0; i < op.size(); ++i) {
    if (op.masked(i)) continue;
    worst = std::max(worst, std::abs(op.ApplyRow(i, x) - rhs[i]));
  }
  return worst;
}

}  // namespace

SolveReport GaussSeidelSolve(const GammaOperator& op,
                             std::span<const double> rhs,
                             const SolverOptions& options) {
  const std::size_t n = op.size();
  if (rhs.size() != n) throw ArgumentError("rhs length does not match system");
  if (!(options.tol > 0.0)) throw ArgumentError("solver tolerance must be > 0");

  double rhs_norm = 0.0;
  for (NodeId i = 0; i < n; ++i) {
    if (op.masked(i)) continue;
    if (!std::isfinite(rhs[i])) throw NumericalError("non-finite rhs");
    rhs_norm = std::max(rhs_norm, std::abs(rhs[i]));
  }

  SolveReport report;
  report.x.assign(n, 0.0);
  std::vector<double>& x = report.x;
  const std::size_t budget = options.SweepBudget(n);
  const bool fixed = options.fixed_sweeps != 0;

  for (std::size_t sweep = 1; sweep <= budget; ++sweep) {
    double max_update = 0.0;
    double x_norm = 0.0;
    for (NodeId i = 0; i < n; ++i) {
      if (op.masked(i)) continue;
      // Masked unknowns are never written, so they read as zero here.
      double acc = rhs[i];
      for (const TransmissionEntry& e : op.Couplings(i)) {
        acc += e.probability * x[e.node];
      }
      const double next = acc / op.diagonal(i);
      max_update = std::max(max_update, std::abs(next - x[i]));
      x_norm = std::max(x_norm, std::abs(next));
      x[i] = next;
    }
    if (!std::isfinite(max_update) || !std::isfinite(x_norm)) {
      throw NumericalError("Gauss-Seidel iterate became non-finite");
    }
    report.iterations = sweep;
    report.max_update = max_update;
    const bool settled = max_update <= options.tol * std::max(1.0, x_norm);
    if (fixed && sweep < budget) continue;
    if (settled || fixed) {
      report.residual = ResidualNorm(op, rhs, x);
      report.converged =
          settled && report.residual <= options.tol * rhs_norm;
      if (report.converged || fixed) break;
    }
  }
  if (!report.converged && !fixed) report.residual = ResidualNorm(op, rhs, x);
  return report;
}

DenseMatrix Materialize(const GammaOperator& op) {
  const std::size_t n = op.size();
  DenseMatrix m(n, n);
  for (NodeId i = 0; i < n; ++i) {
    if (op.masked(i)) continue;
    m(i, i) = op.diagonal(i);
    for (const TransmissionEntry& e : op.Couplings(i)) {
      if (!op.masked(e.node)) m(i, e.node) -= e.probability;
    }
  }
  return m;
}

DenseMatrix DenseInverseOracle(const GammaOperator& op, std::size_t cap) {
  const std::size_t n = op.size();
  if (n > cap) {
    throw CapacityError("dense oracle limited to " + std::to_string(cap) +
                        " nodes (graph has " + std::to_string(n) + ")");
  }
  std::vector<NodeId> keep;
  keep.reserve(n);
  for (NodeId i = 0; i < n; ++i) {
    if (!op.masked(i)) keep.push_back(i);
  }
  const auto k = static_cast<Eigen::Index>(keep.size());
  DenseMatrix full = Materialize(op);
  Eigen::MatrixXd block(k, k);
  for (Eigen::Index r = 0; r < k; ++r) {
    for (Eigen::Index c = 0; c < k; ++c) block(r, c) = full(keep[r], keep[c]);
  }

  DenseMatrix out(n, n);
  if (k == 0) return out;
  Eigen::PartialPivLU<Eigen::MatrixXd> lu(block);
  if (!(lu.rcond() > std::numeric_limits<double>::epsilon())) {
    throw NumericalError("system matrix is singular to working precision");
  }
  Eigen::MatrixXd inv = lu.inverse();
  if (!inv.allFinite()) throw NumericalError("dense inverse is non-finite");
  for (Eigen::Index r = 0; r < k; ++r) {
    for (Eigen::Index c = 0; c < k; ++c) out(keep[r], keep[c]) = inv(r, c);
  }
  return out;
}

std::vector<double> SolveColumnSums(const TransmissionMatrix& t,
                                    const DampingVector& damping,
                                    const SolverOptions& options) {
  GammaOperator op(t, damping, Orientation::kUntransposed);
  std::vector<double> ones(t.size(), 1.0);
  SolveReport report = GaussSeidelSolve(op, ones, options);
  if (!report.converged && options.fixed_sweeps == 0) {
    throw ConvergenceError("column-sum solve did not converge in " +
                           std::to_string(report.iterations) + " sweeps");
  }
  for (double v : report.x) {
    if (!(v > 0.0)) throw NumericalError("column sum is not positive");
  }
  return std::move(report.x);
}

}  // namespace circuit
