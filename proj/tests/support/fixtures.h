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

#ifndef CIRCUIT_TESTS_SUPPORT_FIXTURES_H_
#define CIRCUIT_TESTS_SUPPORT_FIXTURES_H_

#include <cstddef>
#include <vector>

#include "circuit/graph.h"
#include "circuit/influence.h"
#include "circuit/transmission.h"

namespace circuit::testing {

// Labels 1 and 2, one undirected unit edge.
inline Graph TwoNodeGraph() {
  return ParseEdgeList("1 2\n", {.undirected = true}).graph;
}

// Path 1 - 2 - 3, undirected unit edges.
inline Graph PathGraph() {
  return ParseEdgeList("1 2\n2 3\n", {.undirected = true}).graph;
}

inline Graph EmptyGraph(std::size_t n) { return Graph::FromArcs(n, {}); }

// Center 0 joined both ways to leaves 1..leaves.
inline Graph StarGraph(std::size_t leaves) {
  std::vector<Arc> arcs;
  for (NodeId v = 1; v <= leaves; ++v) {
    arcs.push_back({0, v, 1.0});
    arcs.push_back({v, 0, 1.0});
  }
  return Graph::FromArcs(leaves + 1, std::move(arcs), {}, false);
}

inline Graph TriangleGraph() {
  return ParseEdgeList("0 1\n1 2\n2 0\n", {.undirected = true}).graph;
}

inline InfluenceModel WcModel(const Graph& g, double lambda = 0.25,
                              SolverOptions solver = {}) {
  return InfluenceModel(BuildTransmission(g, WeightScheme::WeightedCascade()),
                        DampingVector::Uniform(g.num_nodes(), lambda), solver);
}

}  // namespace circuit::testing

#endif  // CIRCUIT_TESTS_SUPPORT_FIXTURES_H_
