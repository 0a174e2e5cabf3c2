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

#ifndef CIRCUIT_SOLVER_H_
#define CIRCUIT_SOLVER_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "circuit/transmission.h"

namespace circuit {

// Row-major dense matrix, used by the oracle and full influence matrices.
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  double& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  double operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }
  std::span<double> Row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const double> Row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }
  std::vector<double> Column(std::size_t c) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

enum class Orientation {
  // Gamma = I + Lambda - T': row j reads the arcs entering j.
  kTransposed,
  // I + Lambda - T: row i reads the arcs leaving i.
  kUntransposed,
};

// Matrix-free view of the diagonally dominant system matrix, optionally
// restricted to the nodes outside a mask. Masked rows are skipped and masked
// unknowns are held at zero. Borrows its inputs; they must outlive it.
class GammaOperator {
 public:
  GammaOperator(const TransmissionMatrix& t, const DampingVector& damping,
                Orientation orientation = Orientation::kTransposed,
                std::span<const std::uint8_t> mask = {});

  std::size_t size() const { return t_->size(); }
  Orientation orientation() const { return orientation_; }
  bool masked(NodeId i) const { return !mask_.empty() && mask_[i] != 0; }
  std::span<const std::uint8_t> mask() const { return mask_; }
  double diagonal(NodeId i) const { return 1.0 + (*damping_)[i]; }

  // Row i's off-diagonal entries, negated: each (node, t) stands for the
  // matrix entry -t in column `node`.
  std::span<const TransmissionEntry> Couplings(NodeId i) const {
    return orientation_ == Orientation::kTransposed ? t_->Column(i)
                                                    : t_->Row(i);
  }

  // (Gamma x)_i for an unmasked row, treating masked entries of x as zero.
  double ApplyRow(NodeId i, std::span<const double> x) const;

  const TransmissionMatrix& transmission() const { return *t_; }
  const DampingVector& damping() const { return *damping_; }

 private:
  const TransmissionMatrix* t_;
  const DampingVector* damping_;
  Orientation orientation_;
  std::span<const std::uint8_t> mask_;
};

struct SolverOptions {
  // Stop once max |x_new - x_old| <= tol * max(1, |x|_inf) and the residual
  // satisfies |Gamma x - b|_inf <= tol * |b|_inf.
  double tol = 1e-9;
  // 0 selects the default budget: 10 n sweeps clamped to [1000, 10000].
  std::size_t max_iters = 0;
  // When nonzero, run exactly this many sweeps and report whether the
  // tolerance happened to be met.
  std::size_t fixed_sweeps = 0;

  std::size_t SweepBudget(std::size_t n) const;
};

struct SolveReport {
  std::vector<double> x;  // full length; zero on masked nodes
  std::size_t iterations = 0;
  double max_update = 0.0;
  double residual = 0.0;  // |Gamma x - b|_inf over unmasked rows
  bool converged = false;
};

// Gauss-Seidel sweeps in ascending node order starting from x = 0. `rhs` is
// full length; its masked entries are ignored. Throws NumericalError on
// NaN/Inf. Non-convergence is reported, not thrown.
SolveReport GaussSeidelSolve(const GammaOperator& op,
                             std::span<const double> rhs,
                             const SolverOptions& options = {});

inline constexpr std::size_t kDenseOracleCap = 2000;

// Dense inverse of the operator's unmasked block by LU with partial
// pivoting, embedded into an n x n matrix that is zero on masked rows and
// columns. Throws CapacityError above `cap` nodes and NumericalError when the
// matrix is singular to working precision.
DenseMatrix DenseInverseOracle(const GammaOperator& op,
                               std::size_t cap = kDenseOracleCap);

// The dense matrix represented by the operator (masked rows/columns zero).
DenseMatrix Materialize(const GammaOperator& op);

// Column sums of Gamma^{-1}, obtained from (I + Lambda - T) p = 1.
// Throws ConvergenceError unless the solve converged (or fixed sweeps were
// requested).
std::vector<double> SolveColumnSums(const TransmissionMatrix& t,
                                    const DampingVector& damping,
                                    const SolverOptions& options = {});

}  // namespace circuit

#endif  // CIRCUIT_SOLVER_H_
