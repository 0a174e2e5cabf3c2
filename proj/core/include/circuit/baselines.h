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

#ifndef CIRCUIT_BASELINES_H_
#define CIRCUIT_BASELINES_H_

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "circuit/graph.h"
#include "circuit/simulator.h"

namespace circuit {

// Seeds from a comparison selector, in selection order, with the score that
// ranked each one (degree, discounted degree, PageRank, or estimated gain).
struct BaselineResult {
  std::string algorithm;
  std::vector<NodeId> seeds;
  std::vector<double> scores;
  std::size_t evaluations = 0;  // spread estimates (Monte-Carlo greedy only)
  double seconds = 0.0;
};

enum class DegreeMode { kOut, kIn, kTotal };

// Ties go to the lowest node index throughout.
BaselineResult DegreeTopK(const Graph& g, std::size_t k,
                          DegreeMode mode = DegreeMode::kOut);

inline constexpr double kDefaultDiscountProbability = 0.01;

// Degree discount: dd_v = d_v - 2 t_v - (d_v - t_v) t_v p, where t_v counts
// already selected nodes with an arc into v and d_v is v's out-degree.
BaselineResult DegreeDiscountIC(const Graph& g, std::size_t k,
                                double p = kDefaultDiscountProbability);

struct PageRankOptions {
  double damping = 0.85;
  double tol = 1e-8;  // L1 change between iterations
  std::size_t max_iters = 1000;
};

// PageRank on the reversed graph, so rank accrues to nodes whose arcs point
// at highly ranked nodes. Transitions are conductance-weighted; dangling mass
// is spread uniformly. Scores sum to one. Throws ConvergenceError.
std::vector<double> PageRankScores(const Graph& g,
                                   const PageRankOptions& options = {});
BaselineResult PageRankTopK(const Graph& g, std::size_t k,
                            const PageRankOptions& options = {});

struct MonteCarloGreedyOptions {
  std::size_t runs = kDefaultRuns;
  std::uint64_t rng_seed = 1;
  std::size_t workers = 1;
  // Lazy-forward (CELF) re-evaluation; false evaluates every candidate each
  // round.
  bool lazy = true;
};

// Greedy on Monte-Carlo Weighted Cascade spread estimates. All candidate sets
// share the same per-run coins, so the estimated spread is itself monotone
// and submodular and the lazy and exhaustive variants select identically.
BaselineResult MonteCarloGreedy(const Graph& g, std::size_t k,
                                const MonteCarloGreedyOptions& options = {});

}  // namespace circuit

#endif  // CIRCUIT_BASELINES_H_
