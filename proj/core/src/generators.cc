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

#include "circuit/generators.h"

#include <algorithm>
#include <random>
#include <vector>

#include "circuit/errors.h"

namespace circuit::generators {

namespace {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  double Uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  // Slightly biased for huge bounds; irrelevant at these sizes.
  std::size_t Below(std::size_t bound) { return engine_() % bound; }

 private:
  std::mt19937_64 engine_;
};

Graph Gnp(std::size_t n, double p, std::uint64_t seed, bool undirected,
          bool weighted) {
  if (n == 0) throw ArgumentError("graph needs at least one node");
  if (!(p >= 0.0 && p <= 1.0)) throw ArgumentError("probability out of range");
  Rng rng(seed);
  std::vector<Arc> arcs;
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId v = undirected ? u + 1 : 0; v < n; ++v) {
      if (u == v) continue;
      if (rng.Uniform() >= p) continue;
      const double c = weighted ? 0.5 + 1.5 * rng.Uniform() : 1.0;
      arcs.push_back({u, v, c});
      if (undirected) arcs.push_back({v, u, c});
    }
  }
  return Graph::FromArcs(n, std::move(arcs), {}, !undirected);
}

}  // namespace

Graph PreferentialAttachment(std::size_t n, std::size_t edges_per_node,
                             std::uint64_t seed) {
  if (edges_per_node == 0) throw ArgumentError("edges_per_node must be >= 1");
  if (n <= edges_per_node) {
    throw ArgumentError("preferential attachment needs n > edges_per_node");
  }
  Rng rng(seed);
  const std::size_t m = edges_per_node;
  std::vector<Arc> arcs;
  // Endpoint list: a node appears once per incident edge.
  std::vector<NodeId> endpoints;
  // Seed clique on the first m + 1 nodes.
  for (NodeId u = 0; u <= m; ++u) {
    for (NodeId v = u + 1; v <= m; ++v) {
      arcs.push_back({u, v, 1.0});
      arcs.push_back({v, u, 1.0});
      endpoints.push_back(u);
      endpoints.push_back(v);
    }
  }
  std::vector<NodeId> picked;
  for (NodeId u = static_cast<NodeId>(m + 1); u < n; ++u) {
    picked.clear();
    while (picked.size() < m) {
      const NodeId v = endpoints[rng.Below(endpoints.size())];
      if (std::find(picked.begin(), picked.end(), v) == picked.end()) {
        picked.push_back(v);
      }
    }
    for (NodeId v : picked) {
      arcs.push_back({u, v, 1.0});
      arcs.push_back({v, u, 1.0});
      endpoints.push_back(u);
      endpoints.push_back(v);
    }
  }
  return Graph::FromArcs(n, std::move(arcs), {}, /*directed=*/false);
}

Graph RandomDirected(std::size_t n, double arc_probability, std::uint64_t seed) {
  return Gnp(n, arc_probability, seed, false, false);
}

Graph RandomUndirected(std::size_t n, double edge_probability,
                       std::uint64_t seed) {
  return Gnp(n, edge_probability, seed, true, false);
}

Graph RandomWeightedDirected(std::size_t n, double arc_probability,
                             std::uint64_t seed) {
  return Gnp(n, arc_probability, seed, false, true);
}

}  // namespace circuit::generators
