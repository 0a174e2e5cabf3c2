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

#include "support/oracles.h"

#include <algorithm>
#include <stdexcept>

#include "circuit/generators.h"

namespace circuit::testing {

Eigen::MatrixXd DenseWcTransmission(const Graph& g) {
  const auto n = static_cast<Eigen::Index>(g.num_nodes());
  Eigen::MatrixXd c = Eigen::MatrixXd::Zero(n, n);
  for (const Arc& a : g.arcs()) c(a.src, a.dst) += a.conductance;
  Eigen::RowVectorXd d = c.colwise().sum();
  Eigen::MatrixXd t = Eigen::MatrixXd::Zero(n, n);
  for (Eigen::Index j = 0; j < n; ++j) {
    if (d(j) > 0) t.col(j) = c.col(j) / d(j);
  }
  return t;
}

Eigen::MatrixXd DenseGamma(const Eigen::MatrixXd& t,
                           const std::vector<double>& lambda) {
  const Eigen::Index n = t.rows();
  Eigen::MatrixXd gamma = -t.transpose();
  for (Eigen::Index i = 0; i < n; ++i) gamma(i, i) += 1.0 + lambda[i];
  return gamma;
}

Eigen::MatrixXd DenseInfluenceMatrix(const Eigen::MatrixXd& gamma) {
  Eigen::MatrixXd p = gamma.fullPivLu().inverse();
  Eigen::MatrixXd f = p.transpose();
  for (Eigen::Index i = 0; i < f.rows(); ++i) f.row(i) /= p(i, i);
  return f;
}

Eigen::VectorXd DenseIndependentInfluence(const Eigen::MatrixXd& gamma, int k,
                                          const std::vector<int>& seeds) {
  const Eigen::Index n = gamma.rows();
  std::vector<Eigen::Index> keep;
  for (Eigen::Index i = 0; i < n; ++i) {
    if (std::find(seeds.begin(), seeds.end(), i) == seeds.end()) {
      keep.push_back(i);
    }
  }
  const auto m = static_cast<Eigen::Index>(keep.size());
  Eigen::MatrixXd block(m, m);
  Eigen::Index pos_k = -1;
  for (Eigen::Index r = 0; r < m; ++r) {
    if (keep[r] == k) pos_k = r;
    for (Eigen::Index c = 0; c < m; ++c) block(r, c) = gamma(keep[r], keep[c]);
  }
  if (pos_k < 0) throw std::invalid_argument("k is a seed");
  Eigen::MatrixXd inv = block.fullPivLu().inverse();
  Eigen::VectorXd out = Eigen::VectorXd::Zero(n);
  for (Eigen::Index r = 0; r < m; ++r) {
    out(keep[r]) = inv(r, pos_k) / inv(pos_k, pos_k);
  }
  return out;
}

Eigen::VectorXd DenseJointFromScratch(const Eigen::MatrixXd& gamma,
                                      const std::vector<int>& order) {
  Eigen::VectorXd joint = Eigen::VectorXd::Zero(gamma.rows());
  std::vector<int> seeds;
  for (int s : order) {
    Eigen::VectorXd f = DenseIndependentInfluence(gamma, s, seeds);
    joint = (Eigen::VectorXd::Ones(joint.size()) -
             ((Eigen::VectorXd::Ones(joint.size()) - joint).array() *
              (Eigen::VectorXd::Ones(joint.size()) - f).array())
                 .matrix());
    seeds.push_back(s);
  }
  return joint;
}

double DenseSpreadFromScratch(const Eigen::MatrixXd& gamma,
                              const std::vector<int>& order) {
  return DenseJointFromScratch(gamma, order).sum();
}

double ExactLiveEdgeSpread(const Graph& g, const std::vector<NodeId>& seeds) {
  const std::size_t m = g.num_arcs();
  if (m > 20) throw std::invalid_argument("too many arcs to enumerate");
  const std::size_t n = g.num_nodes();
  std::vector<double> p(m);
  auto arcs = g.arcs();
  for (std::size_t e = 0; e < m; ++e) {
    p[e] = arcs[e].conductance / g.InConductance(arcs[e].dst);
  }
  double expected = 0.0;
  std::vector<bool> reached(n);
  std::vector<NodeId> stack;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    double weight = 1.0;
    for (std::size_t e = 0; e < m; ++e) {
      weight *= (mask >> e & 1) ? p[e] : 1.0 - p[e];
    }
    if (weight == 0.0) continue;
    std::fill(reached.begin(), reached.end(), false);
    stack.clear();
    for (NodeId s : seeds) {
      if (!reached[s]) {
        reached[s] = true;
        stack.push_back(s);
      }
    }
    std::size_t count = stack.size();
    while (!stack.empty()) {
      NodeId u = stack.back();
      stack.pop_back();
      for (std::size_t e = 0; e < m; ++e) {
        if (arcs[e].src == u && (mask >> e & 1) && !reached[arcs[e].dst]) {
          reached[arcs[e].dst] = true;
          stack.push_back(arcs[e].dst);
          ++count;
        }
      }
    }
    expected += weight * static_cast<double>(count);
  }
  return expected;
}

Graph RandomWcGraph(std::size_t n, double avg_out_degree, std::uint64_t seed) {
  const double p =
      std::min(1.0, avg_out_degree / static_cast<double>(std::max<std::size_t>(1, n - 1)));
  return generators::RandomWeightedDirected(n, p, seed);
}

}  // namespace circuit::testing
