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

#ifndef CIRCUIT_TRANSMISSION_H_
#define CIRCUIT_TRANSMISSION_H_

#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "circuit/graph.h"

namespace circuit {

// Slack allowed on the inflow bound before it is reported as a violation.
inline constexpr double kInflowSlack = 1e-12;

struct WeightScheme {
  enum class Kind { kWeightedCascade, kUniform, kExplicit };

  Kind kind = Kind::kWeightedCascade;
  double probability = 0.0;  // kUniform only

  // t_ij = c_ij / d_j, where d_j sums the conductances entering j.
  static WeightScheme WeightedCascade() { return {Kind::kWeightedCascade, 0.0}; }
  // t_ij = p on every arc.
  static WeightScheme Uniform(double p) { return {Kind::kUniform, p}; }
  // Conductances are used verbatim as probabilities.
  static WeightScheme Explicit() { return {Kind::kExplicit, 0.0}; }

  std::string Name() const;
};

// One stored transmission probability. In a row view `node` is the target,
// in a column view it is the source.
struct TransmissionEntry {
  NodeId node;
  double probability;
};

// Sparse matrix T of arc transmission probabilities, held in both row
// (out-arc) and column (in-arc) compressed form, plus the column sums theta.
// Satisfies theta_j <= 1 for every node. Immutable once built.
class TransmissionMatrix {
 public:
  std::size_t size() const { return theta_.size(); }
  std::size_t num_entries() const { return rows_.size(); }

  // t_ij for all j with an arc i -> j.
  std::span<const TransmissionEntry> Row(NodeId i) const {
    return std::span<const TransmissionEntry>(rows_).subspan(
        row_offsets_[i], row_offsets_[i + 1] - row_offsets_[i]);
  }
  // t_kj for all k with an arc k -> j.
  std::span<const TransmissionEntry> Column(NodeId j) const {
    return std::span<const TransmissionEntry>(columns_).subspan(
        column_offsets_[j], column_offsets_[j + 1] - column_offsets_[j]);
  }
  double theta(NodeId j) const { return theta_[j]; }
  std::span<const double> theta() const { return theta_; }

  // Probability on arc i -> j, or 0 when the arc does not exist.
  double At(NodeId i, NodeId j) const;

  friend TransmissionMatrix BuildTransmission(const Graph& g,
                                              const WeightScheme& scheme);

 private:
  std::vector<std::size_t> row_offsets_;
  std::vector<TransmissionEntry> rows_;
  std::vector<std::size_t> column_offsets_;
  std::vector<TransmissionEntry> columns_;
  std::vector<double> theta_;
};

// Throws ValidationError when any probability falls outside (0, 1] or some
// inflow sum exceeds 1 + kInflowSlack; the message names the node's label.
TransmissionMatrix BuildTransmission(const Graph& g,
                                     const WeightScheme& scheme);

// Per-node damping coefficients, each strictly inside (0, 1).
class DampingVector {
 public:
  static DampingVector Uniform(std::size_t n, double lambda);
  static DampingVector FromValues(std::vector<double> values);

  std::size_t size() const { return values_.size(); }
  double operator[](NodeId i) const { return values_[i]; }
  std::span<const double> values() const { return values_; }

 private:
  explicit DampingVector(std::vector<double> values)
      : values_(std::move(values)) {}
  std::vector<double> values_;
};

// Throws ValidationError unless 0 < lambda < 1.
void CheckDamping(double lambda);

// Reads `label lambda` lines (`#` comments allowed). Nodes not listed keep
// `default_lambda`; unknown labels are a ParseError.
DampingVector ReadDampingFile(std::istream& in, const Graph& g,
                              double default_lambda);

}  // namespace circuit

#endif  // CIRCUIT_TRANSMISSION_H_
