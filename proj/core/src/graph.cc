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

#include "circuit/graph.h"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <sstream>
#include <tuple>

#include "circuit/errors.h"

namespace circuit {

Graph Graph::FromArcs(std::size_t n, std::vector<Arc> arcs,
                      std::vector<Label> labels, bool directed,
                      GraphBuildStats* stats) {
  if (n > std::size_t{UINT32_MAX}) {
    throw CapacityError("graph has more nodes than NodeId can index");
  }
  if (labels.empty()) {
    labels.resize(n);
    for (std::size_t i = 0; i < n; ++i) labels[i] = i;
  }
  if (labels.size() != n) {
    throw ArgumentError("label count does not match node count");
  }

  Graph g;
  g.directed_ = directed;
  g.labels_ = std::move(labels);
  g.index_.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!g.index_.emplace(g.labels_[i], static_cast<NodeId>(i)).second) {
      throw ArgumentError("duplicate node label " +
                          std::to_string(g.labels_[i]));
    }
  }

  GraphBuildStats local;
  std::vector<Arc> kept;
  kept.reserve(arcs.size());
  for (const Arc& a : arcs) {
    if (a.src >= n || a.dst >= n) {
      throw ArgumentError("arc endpoint out of range");
    }
    if (!(a.conductance > 0.0) || !std::isfinite(a.conductance)) {
      throw ValidationError("arc conductance must be positive and finite");
    }
    if (a.src == a.dst) {
      ++local.self_loops_dropped;
      continue;
    }
    kept.push_back(a);
  }
  std::sort(kept.begin(), kept.end(), [](const Arc& a, const Arc& b) {
    return std::tie(a.src, a.dst) < std::tie(b.src, b.dst);
  });
  for (const Arc& a : kept) {
    if (!g.arcs_.empty() && g.arcs_.back().src == a.src &&
        g.arcs_.back().dst == a.dst) {
      g.arcs_.back().conductance += a.conductance;
      ++local.duplicates_merged;
    } else {
      g.arcs_.push_back(a);
    }
  }
  if (g.arcs_.size() > std::size_t{UINT32_MAX}) {
    throw CapacityError("too many arcs");
  }

  g.out_offsets_.assign(n + 1, 0);
  g.in_offsets_.assign(n + 1, 0);
  g.in_conductance_.assign(n, 0.0);
  for (const Arc& a : g.arcs_) {
    ++g.out_offsets_[a.src + 1];
    ++g.in_offsets_[a.dst + 1];
    g.in_conductance_[a.dst] += a.conductance;
  }
  for (std::size_t i = 0; i < n; ++i) {
    g.out_offsets_[i + 1] += g.out_offsets_[i];
    g.in_offsets_[i + 1] += g.in_offsets_[i];
  }
  // Arcs are sorted by source, so filling buckets in order keeps each
  // in-list sorted by source as well.
  g.in_arc_ids_.resize(g.arcs_.size());
  std::vector<std::size_t> cursor(g.in_offsets_.begin(), g.in_offsets_.end() - 1);
  for (std::size_t id = 0; id < g.arcs_.size(); ++id) {
    g.in_arc_ids_[cursor[g.arcs_[id].dst]++] = static_cast<std::uint32_t>(id);
  }

  if (stats != nullptr) *stats = local;
  return g;
}

std::optional<NodeId> Graph::IndexOf(Label label) const {
  auto it = index_.find(label);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

namespace {

struct RawArc {
  Label src;
  Label dst;
  double weight;
};

std::string_view Trim(std::string_view s) {
  const auto* ws = " \t\r\n\v\f";
  auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

std::vector<std::string_view> SplitFields(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    std::size_t j = i;
    while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

Label ParseLabel(std::string_view field, std::size_t line) {
  Label value = 0;
  auto [ptr, ec] =
      std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc() || ptr != field.data() + field.size()) {
    throw ParseError("invalid node label '" + std::string(field) +
                         "' (expected a nonnegative integer)",
                     line);
  }
  return value;
}

double ParseWeight(std::string_view field, std::size_t line) {
  double value = 0.0;
  auto [ptr, ec] =
      std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc() || ptr != field.data() + field.size() ||
      !std::isfinite(value)) {
    throw ParseError("invalid weight '" + std::string(field) + "'", line);
  }
  if (value < 0.0) {
    throw ParseError("negative weight " + std::string(field), line);
  }
  if (value == 0.0) {
    throw ParseError("zero weight (conductances must be positive)", line);
  }
  return value;
}

ParsedGraph Assemble(const std::vector<RawArc>& raw,
                     const EdgeListOptions& options) {
  std::vector<Label> labels;
  labels.reserve(raw.size() * 2);
  for (const RawArc& r : raw) {
    labels.push_back(r.src);
    labels.push_back(r.dst);
  }
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
  if (labels.empty()) throw ParseError("edge list contains no nodes", 0);

  auto dense = [&labels](Label l) {
    return static_cast<NodeId>(
        std::lower_bound(labels.begin(), labels.end(), l) - labels.begin());
  };
  std::vector<Arc> arcs;
  arcs.reserve(raw.size() * (options.undirected ? 2 : 1));
  for (const RawArc& r : raw) {
    NodeId s = dense(r.src);
    NodeId d = dense(r.dst);
    arcs.push_back({s, d, r.weight});
    if (options.undirected) arcs.push_back({d, s, r.weight});
  }
  ParsedGraph out;
  std::size_t n = labels.size();
  out.graph = Graph::FromArcs(n, std::move(arcs), std::move(labels),
                              !options.undirected, &out.stats);
  if (options.undirected) {
    // Every line was emitted in both directions; report per input line.
    out.stats.self_loops_dropped /= 2;
    out.stats.duplicates_merged /= 2;
  }
  return out;
}

}  // namespace

ParsedGraph ParseEdgeList(std::istream& in, const EdgeListOptions& options) {
  std::vector<RawArc> raw;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view body = Trim(line);
    if (body.empty() || body.front() == '#') continue;
    auto fields = SplitFields(body);
    if (fields.size() < 2 || fields.size() > 3) {
      throw ParseError("expected 'src dst [weight]'", line_no);
    }
    RawArc r{ParseLabel(fields[0], line_no), ParseLabel(fields[1], line_no),
             1.0};
    if (fields.size() == 3) r.weight = ParseWeight(fields[2], line_no);
    raw.push_back(r);
  }
  if (in.bad()) throw ParseError("read failure", line_no);
  return Assemble(raw, options);
}

ParsedGraph ParseEdgeList(std::string_view text,
                          const EdgeListOptions& options) {
  std::istringstream in{std::string(text)};
  return ParseEdgeList(in, options);
}

ParsedGraph ReadEdgeListFile(const std::string& path,
                             const EdgeListOptions& options) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path, 0);
  return ParseEdgeList(in, options);
}

Graph Reverse(const Graph& g) {
  std::vector<Arc> flipped;
  flipped.reserve(g.num_arcs());
  for (const Arc& a : g.arcs()) flipped.push_back({a.dst, a.src, a.conductance});
  std::vector<Label> labels(g.labels().begin(), g.labels().end());
  return Graph::FromArcs(g.num_nodes(), std::move(flipped), std::move(labels),
                         g.directed());
}

}  // namespace circuit
