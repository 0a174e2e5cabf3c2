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

#ifndef CIRCUIT_GENERATORS_H_
#define CIRCUIT_GENERATORS_H_

#include <cstddef>
#include <cstdint>

#include "circuit/graph.h"

// Deterministic synthetic graphs. Output depends only on the arguments (no
// implementation-defined standard distributions are used).
namespace circuit::generators {

// Barabasi-Albert preferential attachment: each new node links to
// `edges_per_node` distinct existing nodes chosen proportionally to degree.
// Stored undirected (both arc directions), unit conductances.
Graph PreferentialAttachment(std::size_t n, std::size_t edges_per_node,
                             std::uint64_t seed);

// Directed G(n, p) without self-loops, unit conductances.
Graph RandomDirected(std::size_t n, double arc_probability, std::uint64_t seed);

// Undirected G(n, p) stored with both arc directions.
Graph RandomUndirected(std::size_t n, double edge_probability,
                       std::uint64_t seed);

// Directed G(n, p) with conductances drawn uniformly from [0.5, 2).
Graph RandomWeightedDirected(std::size_t n, double arc_probability,
                             std::uint64_t seed);

}  // namespace circuit::generators

#endif  // CIRCUIT_GENERATORS_H_
