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

#include "circuit/baselines.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numeric>
#include <queue>

#include "circuit/errors.h"

namespace circuit {

namespace {

using Clock = std::chrono::steady_clock;

double Since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

void CheckK(const Graph& g, std::size_t k) {
  if (k == 0) throw ArgumentError("seed count must be at least 1");
  if (k > g.num_nodes()) {
    throw ArgumentError("seed count " + std::to_string(k) +
                        " exceeds node count " + std::to_string(g.num_nodes()));
  }
}

// Top-k indices by score, ties to the lowest index.
std::vector<NodeId> TopK(const std::vector<double>& score, std::size_t k) {
  std::vector<NodeId> idx(score.size());
  std::iota(idx.begin(), idx.end(), NodeId{0});
  std::partial_sort(idx.begin(), idx.begin() + static_cast<std::ptrdiff_t>(k),
                    idx.end(), [&](NodeId a, NodeId b) {
                      if (score[a] != score[b]) return score[a] > score[b];
                      return a < b;
                    });
  idx.resize(k);
  return idx;
}

}  // namespace

BaselineResult DegreeTopK(const Graph& g, std::size_t k, DegreeMode mode) {
  CheckK(g, k);
  const auto start = Clock::now();
  std::vector<double> degree(g.num_nodes());
  for (NodeId v = 0; v < g.num_nodes(); ++v) {
    switch (mode) {
      case DegreeMode::kOut:
        degree[v] = static_cast<double>(g.OutDegree(v));
        break;
      case DegreeMode::kIn:
        degree[v] = static_cast<double>(g.InDegree(v));
        break;
      case DegreeMode::kTotal:
        degree[v] = static_cast<double>(g.OutDegree(v) + g.InDegree(v));
        break;
    }
  }
  BaselineResult result;
  result.algorithm = "degree";
  result.seeds = TopK(degree, k);
  for (NodeId s : result.seeds) result.scores.push_back(degree[s]);
  result.seconds = Since(start);
  return result;
}

BaselineResult DegreeDiscountIC(const Graph& g, std::size_t k, double p) {
  CheckK(g, k);
  if (!(p > 0.0 && p < 1.0)) {
    throw ArgumentError("degree discount probability must lie in (0, 1)");
  }
  const auto start = Clock::now();
  const std::size_t n = g.num_nodes();
  std::vector<double> degree(n);
  std::vector<double> discounted(n);
  std::vector<double> selected_neighbors(n, 0.0);
  std::vector<bool> chosen(n, false);
  for (NodeId v = 0; v < n; ++v) {
    degree[v] = static_cast<double>(g.OutDegree(v));
    discounted[v] = degree[v];
  }

  BaselineResult result;
  result.algorithm = "degree-discount";
  for (std::size_t round = 0; round < k; ++round) {
    NodeId best = 0;
    bool found = false;
    for (NodeId v = 0; v < n; ++v) {
      if (chosen[v]) continue;
      if (!found || discounted[v] > discounted[best]) {
        best = v;
        found = true;
      }
    }
    chosen[best] = true;
    result.seeds.push_back(best);
    result.scores.push_back(discounted[best]);
    for (const Arc& a : g.OutArcs(best)) {
      const NodeId v = a.dst;
      if (chosen[v]) continue;
      const double t = ++selected_neighbors[v];
      discounted[v] = degree[v] - 2.0 * t - (degree[v] - t) * t * p;
    }
  }
  result.seconds = Since(start);
  return result;
}

std::vector<double> PageRankScores(const Graph& g,
                                   const PageRankOptions& options) {
  if (!(options.damping > 0.0 && options.damping < 1.0)) {
    throw ArgumentError("PageRank damping must lie in (0, 1)");
  }
  const std::size_t n = g.num_nodes();
  const double inv_n = 1.0 / static_cast<double>(n);
  std::vector<double> rank(n, inv_n);
  std::vector<double> next(n);
  // Reversed arc v -> u for every original u -> v; v's reversed out-weight is
  // its original in-conductance.
  for (std::size_t iter = 0; iter < options.max_iters; ++iter) {
    double dangling = 0.0;
    for (NodeId v = 0; v < n; ++v) {
      if (g.InDegree(v) == 0) dangling += rank[v];
    }
    const double base =
        (1.0 - options.damping) * inv_n + options.damping * dangling * inv_n;
    for (NodeId u = 0; u < n; ++u) {
      double acc = 0.0;
      for (const Arc& a : g.OutArcs(u)) {
        acc += rank[a.dst] * a.conductance / g.InConductance(a.dst);
      }
      next[u] = base + options.damping * acc;
    }
    double total = std::accumulate(next.begin(), next.end(), 0.0);
    double change = 0.0;
    for (NodeId u = 0; u < n; ++u) {
      next[u] /= total;
      change += std::abs(next[u] - rank[u]);
    }
    rank.swap(next);
    if (change < options.tol) return rank;
  }
  throw ConvergenceError("PageRank did not converge in " +
                         std::to_string(options.max_iters) + " iterations");
}

BaselineResult PageRankTopK(const Graph& g, std::size_t k,
                            const PageRankOptions& options) {
  CheckK(g, k);
  const auto start = Clock::now();
  std::vector<double> score = PageRankScores(g, options);
  BaselineResult result;
  result.algorithm = "pagerank";
  result.seeds = TopK(score, k);
  for (NodeId s : result.seeds) result.scores.push_back(score[s]);
  result.seconds = Since(start);
  return result;
}

BaselineResult MonteCarloGreedy(const Graph& g, std::size_t k,
                                const MonteCarloGreedyOptions& options) {
  CheckK(g, k);
  if (options.runs == 0) throw ArgumentError("run count must be at least 1");
  const auto start = Clock::now();
  const std::size_t n = g.num_nodes();
  WeightedCascade cascade(g);
  SimulationOptions sim;
  sim.runs = options.runs;
  sim.rng_seed = options.rng_seed;
  sim.workers = options.workers;

  BaselineResult result;
  result.algorithm = options.lazy ? "celf" : "mc-greedy";
  std::vector<NodeId> seeds;
  std::vector<bool> chosen(n, false);
  std::uint64_t base_total = 0;  // summed counts of the current seed set

  // Summed activation counts of seeds + {v}; differences are exact.
  auto total_with = [&](NodeId v) {
    seeds.push_back(v);
    const std::uint64_t total = EstimateSpread(cascade, seeds, sim).total;
    seeds.pop_back();
    ++result.evaluations;
    return total;
  };
  auto accept = [&](NodeId v, std::uint64_t total) {
    const auto delta = static_cast<double>(total - base_total);
    result.seeds.push_back(v);
    result.scores.push_back(delta / static_cast<double>(options.runs));
    seeds.push_back(v);
    chosen[v] = true;
    base_total = total;
  };

  if (!options.lazy) {
    for (std::size_t round = 0; round < k; ++round) {
      NodeId best = 0;
      std::uint64_t best_total = 0;
      bool found = false;
      for (NodeId v = 0; v < n; ++v) {
        if (chosen[v]) continue;
        const std::uint64_t total = total_with(v);
        if (!found || total > best_total) {
          best = v;
          best_total = total;
          found = true;
        }
      }
      accept(best, best_total);
    }
    result.seconds = Since(start);
    return result;
  }

  struct Entry {
    std::uint64_t gain;   // summed-count marginal gain, possibly stale
    std::uint64_t total;  // summed counts of seeds + {node} when evaluated
    NodeId node;
    std::size_t round;
  };
  // Max-heap on gain, then lowest node index.
  auto lower = [](const Entry& a, const Entry& b) {
    if (a.gain != b.gain) return a.gain < b.gain;
    return a.node > b.node;
  };
  std::priority_queue<Entry, std::vector<Entry>, decltype(lower)> heap(lower);
  for (NodeId v = 0; v < n; ++v) {
    const std::uint64_t total = total_with(v);
    heap.push({total, total, v, 0});
  }
  for (std::size_t round = 0; round < k; ++round) {
    while (true) {
      Entry top = heap.top();
      heap.pop();
      if (top.round == round) {
        accept(top.node, top.total);
        break;
      }
      top.total = total_with(top.node);
      top.gain = top.total - base_total;
      top.round = round;
      heap.push(top);
    }
  }
  result.seconds = Since(start);
  return result;
}

}  // namespace circuit
