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

#ifndef CIRCUIT_GRAPH_H_
#define CIRCUIT_GRAPH_H_

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace circuit {

using NodeId = std::uint32_t;
using Label = std::uint64_t;

struct Arc {
  NodeId src;
  NodeId dst;
  double conductance;

  friend bool operator==(const Arc&, const Arc&) = default;
};

struct GraphBuildStats {
  std::size_t self_loops_dropped = 0;
  std::size_t duplicates_merged = 0;
};

// Directed graph with positive arc conductances over dense node indices
// [0, n). Arcs are stored sorted by (src, dst) so the out-arcs of a node are
// contiguous; a second index orders them by (dst, src) for in-arc scans.
// Immutable once built.
class Graph {
 public:
  Graph() = default;

  // Builds from arcs over dense indices. Self-loops are dropped and duplicate
  // (src, dst) pairs merged by summing conductance; both are counted in
  // `stats` when given. `labels[i]` is the original label of node i and must
  // be unique; pass an empty vector for the identity labelling.
  static Graph FromArcs(std::size_t n, std::vector<Arc> arcs,
                        std::vector<Label> labels = {}, bool directed = true,
                        GraphBuildStats* stats = nullptr);

  std::size_t num_nodes() const { return labels_.size(); }
  std::size_t num_arcs() const { return arcs_.size(); }
  bool directed() const { return directed_; }

  std::span<const Arc> arcs() const { return arcs_; }
  std::span<const Arc> OutArcs(NodeId u) const {
    return std::span<const Arc>(arcs_).subspan(
        out_offsets_[u], out_offsets_[u + 1] - out_offsets_[u]);
  }
  // Indices into arcs() of the arcs entering v, ordered by source.
  std::span<const std::uint32_t> InArcIds(NodeId v) const {
    return std::span<const std::uint32_t>(in_arc_ids_)
        .subspan(in_offsets_[v], in_offsets_[v + 1] - in_offsets_[v]);
  }

  std::size_t OutDegree(NodeId u) const {
    return out_offsets_[u + 1] - out_offsets_[u];
  }
  std::size_t InDegree(NodeId v) const {
    return in_offsets_[v + 1] - in_offsets_[v];
  }
  // d_v: total conductance of the arcs entering v.
  double InConductance(NodeId v) const { return in_conductance_[v]; }

  Label label(NodeId v) const { return labels_[v]; }
  std::span<const Label> labels() const { return labels_; }
  std::optional<NodeId> IndexOf(Label label) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.labels_ == b.labels_ && a.arcs_ == b.arcs_ &&
           a.directed_ == b.directed_;
  }

 private:
  std::vector<Label> labels_;
  std::unordered_map<Label, NodeId> index_;
  std::vector<Arc> arcs_;
  std::vector<std::size_t> out_offsets_;
  std::vector<std::size_t> in_offsets_;
  std::vector<std::uint32_t> in_arc_ids_;
  std::vector<double> in_conductance_;
  bool directed_ = true;
};

struct EdgeListOptions {
  // Emit both arc directions for every line.
  bool undirected = false;
};

struct ParsedGraph {
  Graph graph;
  GraphBuildStats stats;
};

// Reads a SNAP-style edge list: `src dst [weight]` per line, `#` comments,
// nonnegative integer labels, weight defaulting to 1. Nodes are re-indexed
// densely in ascending label order. Throws ParseError.
ParsedGraph ParseEdgeList(std::istream& in, const EdgeListOptions& options = {});
ParsedGraph ParseEdgeList(std::string_view text,
                          const EdgeListOptions& options = {});
ParsedGraph ReadEdgeListFile(const std::string& path,
                             const EdgeListOptions& options = {});

// Flips every arc. Labels and the directed flag are preserved.
Graph Reverse(const Graph& g);

}  // namespace circuit

#endif  // CIRCUIT_GRAPH_H_
