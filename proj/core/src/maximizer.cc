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

#include "circuit/maximizer.h"

#include <algorithm>
#include <chrono>
#include <limits>
#include <numeric>
#include <optional>

#include "circuit/parallel.h"

namespace circuit {

std::vector<NodeId> SelectionTrace::Seeds() const {
  std::vector<NodeId> out;
  out.reserve(rounds.size());
  for (const RoundRecord& r : rounds) out.push_back(r.seed);
  return out;
}

std::size_t SelectionTrace::TotalEvaluated() const {
  std::size_t total = 0;
  for (const RoundRecord& r : rounds) total += r.evaluated;
  return total;
}

double SelectionTrace::MeanSearchRatio() const {
  if (rounds.empty()) return 0.0;
  double sum = 0.0;
  for (const RoundRecord& r : rounds) sum += r.search_ratio();
  return sum / static_cast<double>(rounds.size());
}

double SelectionTrace::TotalSeconds() const {
  double sum = 0.0;
  for (const RoundRecord& r : rounds) sum += r.seconds;
  return sum;
}

namespace {

using Clock = std::chrono::steady_clock;

void CheckK(const InfluenceModel& model, std::size_t k) {
  if (k == 0) throw ArgumentError("seed count must be at least 1");
  if (k > model.size()) {
    throw ArgumentError("seed count " + std::to_string(k) +
                        " exceeds node count " + std::to_string(model.size()));
  }
}

// Lowest threshold a gain may reach and still tie with `best`.
double TieFloor(double best, double tie_tolerance) {
  return best - tie_tolerance * std::max(1.0, best);
}

struct Scored {
  NodeId node;
  double gain;
};

// The round winner: lowest index among gains tying with the maximum.
NodeId PickWinner(const std::vector<Scored>& scored, double tie_tolerance) {
  double best = -std::numeric_limits<double>::infinity();
  for (const Scored& s : scored) best = std::max(best, s.gain);
  const double floor = TieFloor(best, tie_tolerance);
  NodeId winner = std::numeric_limits<NodeId>::max();
  for (const Scored& s : scored) {
    if (s.gain >= floor) winner = std::min(winner, s.node);
  }
  return winner;
}

// Evaluates the marginal gain of each node in `batch` against a frozen state.
void EvaluateBatch(const InfluenceModel& model, const InfluenceState& state,
                   std::span<const NodeId> batch, std::size_t workers,
                   std::vector<double>& out) {
  out.assign(batch.size(), 0.0);
  ParallelFor(batch.size(), workers, [&](std::size_t idx, std::size_t) {
    out[idx] = MarginalGain(model, batch[idx], state);
  });
}

class Selector {
 public:
  Selector(const InfluenceModel& model, const MaximizerOptions& options,
           std::string name, bool lazy)
      : model_(model), options_(options), lazy_(lazy), state_(model.size()) {
    trace_.algorithm = std::move(name);
    trace_.num_nodes = model.size();
    for (NodeId i = 0; i < model.size(); ++i) {
      state_.gains[i] = lazy ? model.UpperBound(i)
                             : std::numeric_limits<double>::infinity();
    }
    order_.resize(model.size());
    std::iota(order_.begin(), order_.end(), NodeId{0});
  }

  SelectionTrace Run(std::size_t k) {
    for (std::size_t round = 0; round < k; ++round) {
      try {
        RunRound(round);
      } catch (const ConvergenceError& e) {
        throw SelectionError(e.what(), trace_);
      }
    }
    trace_.spread = state_.Spread();
    return std::move(trace_);
  }

 private:
  void RunRound(std::size_t round) {
    const auto start = Clock::now();
    const std::size_t workers = std::max<std::size_t>(1, options_.workers);

    if (lazy_) {
      std::stable_sort(order_.begin(), order_.end(), [&](NodeId a, NodeId b) {
        if (state_.gains[a] != state_.gains[b]) {
          return state_.gains[a] > state_.gains[b];
        }
        return a < b;
      });
    }

    std::vector<Scored> scored;
    std::vector<double> batch_gains;
    double best = 0.0;
    std::size_t cursor = 0;
    while (cursor < order_.size()) {
      std::size_t end = cursor;
      if (lazy_) {
        // The stored gain bounds the current one from above; once it falls
        // below the tie floor no later candidate can win.
        const double floor = TieFloor(best, options_.tie_tolerance);
        while (end < order_.size() && end - cursor < workers &&
               state_.gains[order_[end]] > floor) {
          ++end;
        }
        if (end == cursor) break;
      } else {
        end = order_.size();
      }
      std::span<const NodeId> batch(order_.data() + cursor, end - cursor);
      EvaluateBatch(model_, state_, batch, workers, batch_gains);
      for (std::size_t b = 0; b < batch.size(); ++b) {
        const NodeId node = batch[b];
        state_.gains[node] = batch_gains[b];
        state_.gain_round[node] = static_cast<long>(round);
        scored.push_back({node, batch_gains[b]});
        best = std::max(best, batch_gains[b]);
        if (options_.record_evaluations) {
          trace_.evaluations.push_back({round, node, batch_gains[b]});
        }
      }
      cursor = end;
    }

    const NodeId winner = PickWinner(scored, options_.tie_tolerance);
    std::vector<double> indep =
        IndependentInfluence(model_, winner, state_.seeds);
    RoundRecord record;
    record.seed = winner;
    record.gain = GainFrom(state_, indep);
    record.evaluated = scored.size();
    record.candidates = order_.size();
    JointUpdate(state_, winner, indep);
    state_.gains[winner] = 0.0;
    order_.erase(std::find(order_.begin(), order_.end(), winner));
    record.seconds =
        std::chrono::duration<double>(Clock::now() - start).count();
    trace_.rounds.push_back(record);
  }

  const InfluenceModel& model_;
  MaximizerOptions options_;
  bool lazy_;
  InfluenceState state_;
  std::vector<NodeId> order_;  // non-seeds
  SelectionTrace trace_;
};

}  // namespace

SelectionTrace CircuitMaximize(const InfluenceModel& model, std::size_t k,
                               const MaximizerOptions& options) {
  CheckK(model, k);
  return Selector(model, options, "circuit", /*lazy=*/true).Run(k);
}

SelectionTrace ReferenceGreedy(const InfluenceModel& model, std::size_t k,
                               const MaximizerOptions& options) {
  CheckK(model, k);
  if (model.size() > options.reference_cap) {
    throw CapacityError("reference greedy is limited to " +
                        std::to_string(options.reference_cap) + " nodes");
  }
  return Selector(model, options, "reference", /*lazy=*/false).Run(k);
}

}  // namespace circuit
