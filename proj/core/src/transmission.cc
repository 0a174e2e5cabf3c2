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

#include "circuit/transmission.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <istream>
#include <sstream>

#include "circuit/errors.h"

namespace circuit {

std::string WeightScheme::Name() const {
  switch (kind) {
    case Kind::kWeightedCascade:
      return "weighted-cascade";
    case Kind::kUniform: {
      std::ostringstream os;
      os << "uniform(" << probability << ")";
      return os.str();
    }
    case Kind::kExplicit:
      return "explicit";
  }
  return "unknown";
}

double TransmissionMatrix::At(NodeId i, NodeId j) const {
  auto row = Row(i);
  auto it = std::lower_bound(
      row.begin(), row.end(), j,
      [](const TransmissionEntry& e, NodeId target) { return e.node < target; });
  return (it != row.end() && it->node == j) ? it->probability : 0.0;
}

TransmissionMatrix BuildTransmission(const Graph& g,
                                     const WeightScheme& scheme) {
  if (scheme.kind == WeightScheme::Kind::kUniform &&
      !(scheme.probability > 0.0 && scheme.probability <= 1.0)) {
    throw ValidationError("uniform transmission probability must lie in (0, 1]");
  }
  const std::size_t n = g.num_nodes();
  TransmissionMatrix t;
  t.theta_.assign(n, 0.0);

  std::vector<double> prob(g.num_arcs());
  auto arcs = g.arcs();
  for (std::size_t id = 0; id < arcs.size(); ++id) {
    const Arc& a = arcs[id];
    double p = 0.0;
    switch (scheme.kind) {
      case WeightScheme::Kind::kWeightedCascade:
        p = a.conductance / g.InConductance(a.dst);
        break;
      case WeightScheme::Kind::kUniform:
        p = scheme.probability;
        break;
      case WeightScheme::Kind::kExplicit:
        p = a.conductance;
        break;
    }
    if (!(p > 0.0) || p > 1.0 + kInflowSlack) {
      throw ValidationError("transmission probability " + std::to_string(p) +
                            " on arc " + std::to_string(g.label(a.src)) +
                            " -> " + std::to_string(g.label(a.dst)) +
                            " is outside (0, 1]");
    }
    prob[id] = std::min(p, 1.0);
  }

  // Column sums accumulate in source order, matching the solver's sweeps.
  for (NodeId j = 0; j < n; ++j) {
    double theta = 0.0;
    for (std::uint32_t id : g.InArcIds(j)) theta += prob[id];
    if (scheme.kind == WeightScheme::Kind::kWeightedCascade && theta > 0.0) {
      // Exactly one by construction; strip the rounding residue.
      if (std::abs(theta - 1.0) <= kInflowSlack) theta = 1.0;
    }
    if (theta > 1.0 + kInflowSlack) {
      throw ValidationError("inflow sum " + std::to_string(theta) +
                            " exceeds 1 at node " + std::to_string(g.label(j)));
    }
    t.theta_[j] = theta;
  }

  t.row_offsets_.assign(n + 1, 0);
  t.rows_.reserve(arcs.size());
  for (std::size_t id = 0; id < arcs.size(); ++id) {
    t.rows_.push_back({arcs[id].dst, prob[id]});
    ++t.row_offsets_[arcs[id].src + 1];
  }
  t.column_offsets_.assign(n + 1, 0);
  t.columns_.reserve(arcs.size());
  for (NodeId j = 0; j < n; ++j) {
    for (std::uint32_t id : g.InArcIds(j)) {
      t.columns_.push_back({arcs[id].src, prob[id]});
    }
    t.column_offsets_[j + 1] = t.columns_.size();
  }
  for (std::size_t i = 0; i < n; ++i) t.row_offsets_[i + 1] += t.row_offsets_[i];
  return t;
}

void CheckDamping(double lambda) {
  if (!(lambda > 0.0 && lambda < 1.0)) {
    std::ostringstream os;
    os << "damping coefficient " << lambda
       << " is outside the valid range (0, 1)";
    throw ValidationError(os.str());
  }
}

DampingVector DampingVector::Uniform(std::size_t n, double lambda) {
  CheckDamping(lambda);
  return DampingVector(std::vector<double>(n, lambda));
}

DampingVector DampingVector::FromValues(std::vector<double> values) {
  for (double v : values) CheckDamping(v);
  return DampingVector(std::move(values));
}

DampingVector ReadDampingFile(std::istream& in, const Graph& g,
                              double default_lambda) {
  CheckDamping(default_lambda);
  std::vector<double> values(g.num_nodes(), default_lambda);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream fields(line);
    std::string first;
    if (!(fields >> first) || first.front() == '#') continue;
    Label label = 0;
    double lambda = 0.0;
    std::string extra;
    auto [ptr, ec] =
        std::from_chars(first.data(), first.data() + first.size(), label);
    if (ec != std::errc() || ptr != first.data() + first.size() ||
        !(fields >> lambda) || (fields >> extra)) {
      throw ParseError("expected 'label lambda'", line_no);
    }
    auto node = g.IndexOf(label);
    if (!node) {
      throw ParseError("unknown node label " + std::to_string(label), line_no);
    }
    try {
      CheckDamping(lambda);
    } catch (const ValidationError& e) {
      throw ParseError(e.what(), line_no);
    }
    values[*node] = lambda;
  }
  return DampingVector::FromValues(std::move(values));
}

}  // namespace circuit
