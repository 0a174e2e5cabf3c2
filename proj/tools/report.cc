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

#include "report.h"

#include <charconv>

#include "circuit/version.h"

namespace circuit::report {

namespace {

// Shortest text that parses back to the same double.
std::string Num(double v) {
  char buf[32];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, end);
}

Json LabelList(const Graph& g, std::span<const NodeId> nodes) {
  Json out = Json::array();
  for (NodeId v : nodes) out.push_back(g.label(v));
  return out;
}

}  // namespace

Json ConfigEcho(const std::string& command, Json parameters) {
  Json config;
  config["tool"] = "circuit";
  config["version"] = kVersion;
  config["schema_version"] = kSchemaVersion;
  config["command"] = command;
  for (auto& [key, value] : parameters.items()) config[key] = value;
  return config;
}

Json GraphSummary(const Graph& g, const GraphBuildStats& stats) {
  Json out;
  out["nodes"] = g.num_nodes();
  out["arcs"] = g.num_arcs();
  out["self_loops_dropped"] = stats.self_loops_dropped;
  out["duplicates_merged"] = stats.duplicates_merged;
  return out;
}

Json InfluenceJson(const Graph& g, std::span<const InfluenceVector> vectors) {
  Json sources = Json::array();
  for (const InfluenceVector& f : vectors) {
    Json values = Json::object();
    for (NodeId j = 0; j < f.values.size(); ++j) {
      values[std::to_string(g.label(j))] = f.values[j];
    }
    Json entry;
    entry["source"] = g.label(f.source);
    entry["self_potential"] = f.self_potential;
    entry["total"] = f.Total();
    entry["values"] = std::move(values);
    sources.push_back(std::move(entry));
  }
  Json result;
  result["sources"] = std::move(sources);
  return result;
}

void InfluenceCsv(std::ostream& out, const Graph& g,
                  std::span<const InfluenceVector> vectors) {
  out << "source,node,value\n";
  for (const InfluenceVector& f : vectors) {
    for (NodeId j = 0; j < f.values.size(); ++j) {
      out << g.label(f.source) << ',' << g.label(j) << ',' << Num(f.values[j])
          << '\n';
    }
  }
}

Json BoundsJson(const Graph& g, const BoundTable& table) {
  Json nodes = Json::array();
  for (NodeId v = 0; v < table.upper_bound.size(); ++v) {
    Json entry;
    entry["node"] = g.label(v);
    entry["upper_bound"] = table.upper_bound[v];
    if (table.total[v]) {
      entry["total"] = *table.total[v];
      entry["tightness"] = *table.Tightness(v);
    } else {
      entry["total"] = nullptr;
      entry["tightness"] = nullptr;
    }
    nodes.push_back(std::move(entry));
  }
  Json result;
  result["nodes"] = std::move(nodes);
  return result;
}

void BoundsCsv(std::ostream& out, const Graph& g, const BoundTable& table) {
  out << "node,upper_bound,total,tightness\n";
  for (NodeId v = 0; v < table.upper_bound.size(); ++v) {
    out << g.label(v) << ',' << Num(table.upper_bound[v]) << ',';
    if (table.total[v]) {
      out << Num(*table.total[v]) << ',' << Num(*table.Tightness(v));
    } else {
      out << ',';
    }
    out << '\n';
  }
}

Json SelectionJson(const Graph& g, const SelectionTrace& trace,
                   bool with_timing) {
  Json rounds = Json::array();
  for (const RoundRecord& r : trace.rounds) {
    Json entry;
    entry["node"] = g.label(r.seed);
    entry["gain"] = r.gain;
    entry["evaluated"] = r.evaluated;
    entry["candidates"] = r.candidates;
    entry["search_ratio"] = r.search_ratio();
    if (with_timing) entry["seconds"] = r.seconds;
    rounds.push_back(std::move(entry));
  }
  Json result;
  result["algorithm"] = trace.algorithm;
  result["seeds"] = LabelList(g, trace.Seeds());
  result["model_spread"] = trace.spread;
  result["total_evaluated"] = trace.TotalEvaluated();
  result["mean_search_ratio"] = trace.MeanSearchRatio();
  result["rounds"] = std::move(rounds);
  return result;
}

void SelectionCsv(std::ostream& out, const Graph& g,
                  const SelectionTrace& trace, bool with_timing) {
  out << "rank,node,gain,evaluated,candidates" << (with_timing ? ",seconds" : "")
      << '\n';
  for (std::size_t i = 0; i < trace.rounds.size(); ++i) {
    const RoundRecord& r = trace.rounds[i];
    out << i + 1 << ',' << g.label(r.seed) << ',' << Num(r.gain) << ','
        << r.evaluated << ',' << r.candidates;
    if (with_timing) out << ',' << Num(r.seconds);
    out << '\n';
  }
}

Json BaselineJson(const Graph& g, const BaselineResult& result) {
  Json out;
  out["algorithm"] = result.algorithm;
  out["seeds"] = LabelList(g, result.seeds);
  out["scores"] = result.scores;
  if (result.evaluations > 0) out["spread_evaluations"] = result.evaluations;
  return out;
}

void BaselineCsv(std::ostream& out, const Graph& g,
                 const BaselineResult& result) {
  out << "rank,node,score\n";
  for (std::size_t i = 0; i < result.seeds.size(); ++i) {
    out << i + 1 << ',' << g.label(result.seeds[i]) << ','
        << Num(result.scores[i]) << '\n';
  }
}

Json SpreadJson(const Graph& g, std::span<const NodeId> seeds,
                const SpreadEstimate& estimate) {
  Json out;
  out["seeds"] = LabelList(g, seeds);
  out["mean"] = estimate.mean;
  out["std_error"] = estimate.std_error;
  out["runs"] = estimate.runs;
  out["rng_seed"] = estimate.rng_seed;
  out["total_activated"] = estimate.total;
  return out;
}

void SpreadCsv(std::ostream& out, const SpreadEstimate& estimate) {
  out << "mean,std_error,runs,rng_seed\n"
      << Num(estimate.mean) << ',' << Num(estimate.std_error) << ','
      << estimate.runs << ',' << estimate.rng_seed << '\n';
}

void PerRunCsv(std::ostream& out, const SpreadEstimate& estimate) {
  out << "run,count\n";
  for (std::size_t r = 0; r < estimate.counts.size(); ++r) {
    out << r << ',' << estimate.counts[r] << '\n';
  }
}

Json SweepJson(const Graph& g, std::span<const SweepRow> rows) {
  Json out = Json::array();
  for (const SweepRow& row : rows) {
    Json entry;
    entry["lambda"] = row.lambda;
    entry["seeds"] = LabelList(g, row.seeds);
    entry["model_spread"] = row.model_spread;
    entry["simulated_spread"] = row.simulated.mean;
    entry["std_error"] = row.simulated.std_error;
    entry["mean_search_ratio"] = row.mean_search_ratio;
    out.push_back(std::move(entry));
  }
  Json result;
  result["rows"] = std::move(out);
  return result;
}

void SweepCsv(std::ostream& out, const Graph& g, std::span<const SweepRow> rows) {
  out << "lambda,seeds,model_spread,simulated_spread,std_error,"
         "mean_search_ratio\n";
  for (const SweepRow& row : rows) {
    out << Num(row.lambda) << ',' << JoinLabels(g, row.seeds) << ','
        << Num(row.model_spread) << ',' << Num(row.simulated.mean) << ','
        << Num(row.simulated.std_error) << ',' << Num(row.mean_search_ratio)
        << '\n';
  }
}

void WriteJson(std::ostream& out, const Json& config, const Json& result,
               const std::optional<Json>& timing) {
  Json doc;
  doc["config"] = config;
  doc["result"] = result;
  doc["timing"] = timing ? *timing : Json(nullptr);
  out << doc.dump(2) << '\n';
}

void WriteCsvPreamble(std::ostream& out, const Json& config) {
  out << "# config: " << config.dump() << '\n';
}

std::string JoinLabels(const Graph& g, std::span<const NodeId> nodes) {
  std::string out;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (i > 0) out += ';';
    out += std::to_string(g.label(nodes[i]));
  }
  return out;
}

}  // namespace circuit::report
