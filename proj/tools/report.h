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

// Report emitters. JSON reports have the top-level shape
// {config, result, timing}; CSV reports start with one "# config: ..."
// comment line followed by a header row. Node ids are always the original
// labels from the input file.

#ifndef CIRCUIT_TOOLS_REPORT_H_
#define CIRCUIT_TOOLS_REPORT_H_

#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "circuit/baselines.h"
#include "circuit/graph.h"
#include "circuit/influence.h"
#include "circuit/maximizer.h"
#include "circuit/simulator.h"
#include "json.hpp"

namespace circuit::report {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

enum class Format { kJson, kCsv };

// Version stamp plus the caller's resolved parameters.
Json ConfigEcho(const std::string& command, Json parameters);

Json GraphSummary(const Graph& g, const GraphBuildStats& stats);

// result: {"sources": [{"source", "self_potential", "total", "values"}]},
// where values maps each label to f.
Json InfluenceJson(const Graph& g, std::span<const InfluenceVector> vectors);
void InfluenceCsv(std::ostream& out, const Graph& g,
                  std::span<const InfluenceVector> vectors);

Json BoundsJson(const Graph& g, const BoundTable& table);
void BoundsCsv(std::ostream& out, const Graph& g, const BoundTable& table);

// Per-round timings appear only when `with_timing` is set so that repeated
// runs stay byte-identical by default.
Json SelectionJson(const Graph& g, const SelectionTrace& trace,
                   bool with_timing);
void SelectionCsv(std::ostream& out, const Graph& g,
                  const SelectionTrace& trace, bool with_timing);

Json BaselineJson(const Graph& g, const BaselineResult& result);
void BaselineCsv(std::ostream& out, const Graph& g,
                 const BaselineResult& result);

Json SpreadJson(const Graph& g, std::span<const NodeId> seeds,
                const SpreadEstimate& estimate);
void SpreadCsv(std::ostream& out, const SpreadEstimate& estimate);
// One row per run: run,count.
void PerRunCsv(std::ostream& out, const SpreadEstimate& estimate);

struct SweepRow {
  double lambda = 0.0;
  std::vector<NodeId> seeds;
  double model_spread = 0.0;
  SpreadEstimate simulated;
  double mean_search_ratio = 0.0;
};

Json SweepJson(const Graph& g, std::span<const SweepRow> rows);
void SweepCsv(std::ostream& out, const Graph& g, std::span<const SweepRow> rows);

// Writes {config, result, timing}; `timing` is null unless provided.
void WriteJson(std::ostream& out, const Json& config, const Json& result,
               const std::optional<Json>& timing);

// Writes the config comment line; the caller then writes the table.
void WriteCsvPreamble(std::ostream& out, const Json& config);

// Labels joined with ';' for CSV cells.
std::string JoinLabels(const Graph& g, std::span<const NodeId> nodes);

}  // namespace circuit::report

#endif  // CIRCUIT_TOOLS_REPORT_H_
