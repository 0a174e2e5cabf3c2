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

#ifndef CIRCUIT_MAXIMIZER_H_
#define CIRCUIT_MAXIMIZER_H_

#include <cstddef>
#include <string>
#include <vector>

#include "circuit/errors.h"
#include "circuit/independent_influence.h"
#include "circuit/influence.h"

namespace circuit {

struct RoundRecord {
  NodeId seed = 0;
  double gain = 0.0;
  std::size_t evaluated = 0;   // exact marginal-gain evaluations this round
  std::size_t candidates = 0;  // non-seed nodes at the start of the round
  double seconds = 0.0;

  double search_ratio() const {
    return candidates == 0 ? 0.0
                           : static_cast<double>(evaluated) /
                                 static_cast<double>(candidates);
  }
};

struct Evaluation {
  std::size_t round;
  NodeId node;
  double gain;
};

struct SelectionTrace {
  std::string algorithm;
  std::size_t num_nodes = 0;
  std::vector<RoundRecord> rounds;
  // Every exact evaluation in order; filled only when requested.
  std::vector<Evaluation> evaluations;
  // Model spread of the selected set (sum of the joint vector).
  double spread = 0.0;

  std::vector<NodeId> Seeds() const;
  std::size_t TotalEvaluated() const;
  // Mean of the per-round search ratios.
  double MeanSearchRatio() const;
  double TotalSeconds() const;
};

// Raised when a solve fails mid-selection; carries the rounds completed so far.
class SelectionError : public ConvergenceError {
 public:
  SelectionError(const std::string& message, SelectionTrace partial)
      : ConvergenceError(message), partial_(std::move(partial)) {}
  const SelectionTrace& partial() const { return partial_; }

 private:
  SelectionTrace partial_;
};

struct MaximizerOptions {
  // Gains within tie_tolerance * max(1, best) of the round's best are ties,
  // resolved toward the lowest node index. Absorbs solver noise so that
  // analytically equal gains select deterministically.
  double tie_tolerance = 1e-7;
  // Exact evaluations of one round may run concurrently; results do not
  // depend on this value (search counts may grow slightly for the lazy
  // variant because candidates are evaluated in batches).
  std::size_t workers = 1;
  bool record_evaluations = false;
  // Largest graph reference_greedy accepts.
  std::size_t reference_cap = 500;
};

// Greedy selection with upper-bound initialization and lazy re-evaluation:
// each round scans candidates by descending stored bound and stops at the
// first bound that cannot beat the best exact gain found so far.
SelectionTrace CircuitMaximize(const InfluenceModel& model, std::size_t k,
                               const MaximizerOptions& options = {});

// Unpruned greedy: every non-seed is evaluated exactly in every round.
SelectionTrace ReferenceGreedy(const InfluenceModel& model, std::size_t k,
                               const MaximizerOptions& options = {});

}  // namespace circuit

#endif  // CIRCUIT_MAXIMIZER_H_
