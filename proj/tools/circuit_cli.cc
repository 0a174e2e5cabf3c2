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

// circuit: influence queries, seed selection and spread simulation.
//
// Exit codes: 0 success, 1 input or validation error, 2 numerical failure,
// 3 resource cap exceeded.

#include <algorithm>
#include <charconv>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "circuit/baselines.h"
#include "circuit/errors.h"
#include "circuit/graph.h"
#include "circuit/independent_influence.h"
#include "circuit/influence.h"
#include "circuit/maximizer.h"
#include "circuit/parallel.h"
#include "circuit/simulator.h"
#include "circuit/transmission.h"
#include "circuit/version.h"
#include "report.h"

namespace circuit {
namespace {

using report::Json;

enum ExitCode { kOk = 0, kInputError = 1, kNumericalError = 2, kCapacityError = 3 };

struct CommonOptions {
  std::string graph_path;
  bool undirected = false;
  bool reverse = false;
  std::string weights = "wc";
  double uniform_p = 0.01;
  double lambda = kDefaultDamping;
  std::string lambda_file;
  double tol = 1e-9;
  std::size_t max_iters = 0;
  std::size_t fixed_sweeps = 0;
  std::size_t workers = 1;
  std::string output = "-";
  std::string format = "json";
  bool timing = false;
};

struct InfluenceOptions {
  std::vector<Label> sources;
  bool all = false;
  std::size_t cap = kFullMatrixCap;
};

struct BoundsOptions {
  std::size_t fill = 0;
  std::string rank = "degree";
};

struct MaximizeOptions {
  std::string algorithm = "circuit";
  std::size_t k = 0;
  double tie_tolerance = 1e-7;
  std::size_t reference_cap = 500;
  std::string degree_mode = "out";
  double discount_p = kDefaultDiscountProbability;
  double pagerank_damping = 0.85;
  double pagerank_tol = 1e-8;
  std::size_t runs = kDefaultRuns;
  std::uint64_t rng_seed = 1;
  bool exhaustive = false;
  bool evaluate = false;
};

struct SimulateOptions {
  std::string seeds;
  std::size_t runs = kDefaultRuns;
  std::uint64_t rng_seed = 1;
  std::string per_run;
};

struct SweepOptions {
  std::size_t k = 0;
  std::vector<double> lambdas = {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9};
  std::size_t runs = kDefaultRuns;
  std::uint64_t rng_seed = 1;
};

using Clock = std::chrono::steady_clock;

double Since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

void Merge(Json& into, const Json& from) {
  for (const auto& [key, value] : from.items()) into[key] = value;
}

// Loaded input shared by every subcommand.
struct Workspace {
  Graph graph;
  GraphBuildStats stats;
  Json graph_echo;
};

Workspace LoadGraph(const CommonOptions& common) {
  ParsedGraph parsed =
      ReadEdgeListFile(common.graph_path, {.undirected = common.undirected});
  Workspace ws{common.reverse ? Reverse(parsed.graph) : std::move(parsed.graph),
               parsed.stats, Json()};
  ws.graph_echo["path"] = common.graph_path;
  ws.graph_echo["undirected"] = common.undirected;
  ws.graph_echo["reverse"] = common.reverse;
  Merge(ws.graph_echo, report::GraphSummary(ws.graph, ws.stats));
  return ws;
}

WeightScheme ResolveWeights(const CommonOptions& common) {
  if (common.weights == "wc") return WeightScheme::WeightedCascade();
  if (common.weights == "explicit") return WeightScheme::Explicit();
  return WeightScheme::Uniform(common.uniform_p);
}

SolverOptions ResolveSolver(const CommonOptions& common) {
  SolverOptions solver;
  solver.tol = common.tol;
  solver.max_iters = common.max_iters;
  solver.fixed_sweeps = common.fixed_sweeps;
  return solver;
}

DampingVector ResolveDamping(const CommonOptions& common, const Graph& g) {
  CheckDamping(common.lambda);
  if (common.lambda_file.empty()) {
    return DampingVector::Uniform(g.num_nodes(), common.lambda);
  }
  std::ifstream in(common.lambda_file);
  if (!in) throw ParseError("cannot open damping file " + common.lambda_file, 0);
  return ReadDampingFile(in, g, common.lambda);
}

Json ModelEcho(const CommonOptions& common) {
  Json echo;
  echo["weights"] = common.weights;
  if (common.weights == "uniform") echo["uniform_p"] = common.uniform_p;
  echo["lambda"] = common.lambda;
  echo["lambda_file"] =
      common.lambda_file.empty() ? Json(nullptr) : Json(common.lambda_file);
  echo["solver"] = {{"tol", common.tol},
                    {"max_iters", common.max_iters},
                    {"fixed_sweeps", common.fixed_sweeps}};
  return echo;
}

InfluenceModel BuildModel(const CommonOptions& common, const Graph& g) {
  return InfluenceModel(BuildTransmission(g, ResolveWeights(common)),
                        ResolveDamping(common, g), ResolveSolver(common));
}

NodeId Resolve(const Graph& g, Label label) {
  std::optional<NodeId> id = g.IndexOf(label);
  if (!id) throw ArgumentError("unknown node id " + std::to_string(label));
  return *id;
}

// Seeds from "all", a file of labels, or an inline comma list.
std::vector<NodeId> ParseSeeds(const Graph& g, const std::string& spec) {
  std::vector<NodeId> seeds;
  if (spec == "all") {
    seeds.resize(g.num_nodes());
    std::iota(seeds.begin(), seeds.end(), NodeId{0});
    return seeds;
  }
  std::string text = spec;
  const bool from_file = std::filesystem::is_regular_file(spec);
  if (from_file) {
    std::ifstream in(spec);
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }
  std::vector<bool> seen(g.num_nodes(), false);
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    if (const auto hash = line.find('#'); hash != std::string::npos) {
      line.erase(hash);
    }
    std::replace(line.begin(), line.end(), ',', ' ');
    std::istringstream tokens(line);
    std::string token;
    while (tokens >> token) {
      Label label = 0;
      auto [ptr, ec] =
          std::from_chars(token.data(), token.data() + token.size(), label);
      if (ec != std::errc() || ptr != token.data() + token.size()) {
        throw ArgumentError("seed '" + token + "' is not a node id");
      }
      const NodeId v = Resolve(g, label);
      if (seen[v]) throw ArgumentError("seed " + token + " listed twice");
      seen[v] = true;
      seeds.push_back(v);
    }
  }
  if (seeds.empty()) throw ArgumentError("no seeds given");
  return seeds;
}

// Writes to --output, or stdout for "-".
class Output {
 public:
  explicit Output(const std::string& path) {
    if (path != "-") {
      file_.open(path);
      if (!file_) throw ArgumentError("cannot open output file " + path);
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

report::Format ResolveFormat(const CommonOptions& common) {
  return common.format == "csv" ? report::Format::kCsv : report::Format::kJson;
}

std::optional<Json> Timing(const CommonOptions& common, double load,
                           double compute) {
  if (!common.timing) return std::nullopt;
  return Json{{"load_seconds", load}, {"compute_seconds", compute}};
}

int RunInfluence(const CommonOptions& common, const InfluenceOptions& opts) {
  const auto t0 = Clock::now();
  Workspace ws = LoadGraph(common);
  InfluenceModel model = BuildModel(common, ws.graph);
  const double load = Since(t0);
  if (opts.all == !opts.sources.empty()) {
    throw ArgumentError("give either --source or --all");
  }

  const auto t1 = Clock::now();
  std::vector<InfluenceVector> vectors;
  if (opts.all) {
    const std::size_t n = ws.graph.num_nodes();
    if (n > opts.cap) {
      // Reuse the core's capacity check and message.
      model.InfluenceMatrix(opts.cap, common.workers);
    }
    vectors.resize(n);
    ParallelFor(n, common.workers, [&](std::size_t i, std::size_t) {
      vectors[i] = model.Influence(static_cast<NodeId>(i));
    });
  } else {
    for (Label label : opts.sources) {
      vectors.push_back(model.Influence(Resolve(ws.graph, label)));
    }
  }
  const double compute = Since(t1);

  Json params;
  params["graph"] = ws.graph_echo;
  Merge(params, ModelEcho(common));
  params["sources"] = opts.all ? Json("all") : Json(opts.sources);
  if (opts.all) params["matrix_cap"] = opts.cap;
  Json config = report::ConfigEcho("influence", std::move(params));

  Output out(common.output);
  if (ResolveFormat(common) == report::Format::kCsv) {
    report::WriteCsvPreamble(out.stream(), config);
    report::InfluenceCsv(out.stream(), ws.graph, vectors);
  } else {
    report::WriteJson(out.stream(), config,
                      report::InfluenceJson(ws.graph, vectors),
                      Timing(common, load, compute));
  }
  return kOk;
}

int RunBounds(const CommonOptions& common, const BoundsOptions& opts) {
  const auto t0 = Clock::now();
  Workspace ws = LoadGraph(common);
  InfluenceModel model = BuildModel(common, ws.graph);
  const double load = Since(t0);

  const auto t1 = Clock::now();
  BoundTable table = MakeBoundTable(model);
  const std::size_t n = ws.graph.num_nodes();
  const std::size_t fill = std::min(opts.fill, n);
  if (fill > 0) {
    std::vector<NodeId> order(n);
    std::iota(order.begin(), order.end(), NodeId{0});
    std::stable_sort(order.begin(), order.end(), [&](NodeId a, NodeId b) {
      if (opts.rank == "bound") return table.upper_bound[a] > table.upper_bound[b];
      return ws.graph.OutDegree(a) > ws.graph.OutDegree(b);
    });
    order.resize(fill);
    FillTotals(model, order, table, common.workers);
  }
  const double compute = Since(t1);

  Json params;
  params["graph"] = ws.graph_echo;
  Merge(params, ModelEcho(common));
  params["fill"] = fill;
  params["rank"] = opts.rank;
  Json config = report::ConfigEcho("bounds", std::move(params));

  Output out(common.output);
  if (ResolveFormat(common) == report::Format::kCsv) {
    report::WriteCsvPreamble(out.stream(), config);
    report::BoundsCsv(out.stream(), ws.graph, table);
  } else {
    report::WriteJson(out.stream(), config, report::BoundsJson(ws.graph, table),
                      Timing(common, load, compute));
  }
  return kOk;
}

DegreeMode ResolveDegreeMode(const std::string& mode) {
  if (mode == "in") return DegreeMode::kIn;
  if (mode == "total") return DegreeMode::kTotal;
  return DegreeMode::kOut;
}

int RunMaximize(const CommonOptions& common, const MaximizeOptions& opts) {
  const auto t0 = Clock::now();
  Workspace ws = LoadGraph(common);
  const Graph& g = ws.graph;
  const bool model_based =
      opts.algorithm == "circuit" || opts.algorithm == "reference";
  std::optional<InfluenceModel> model;
  if (model_based) model.emplace(BuildModel(common, g));
  const double load = Since(t0);

  const auto t1 = Clock::now();
  Json result;
  std::vector<NodeId> seeds;
  std::optional<SelectionTrace> trace;
  std::optional<BaselineResult> baseline;
  if (model_based) {
    MaximizerOptions m;
    m.tie_tolerance = opts.tie_tolerance;
    m.workers = common.workers;
    m.reference_cap = opts.reference_cap;
    trace = opts.algorithm == "circuit" ? CircuitMaximize(*model, opts.k, m)
                                        : ReferenceGreedy(*model, opts.k, m);
    seeds = trace->Seeds();
    result = report::SelectionJson(g, *trace, common.timing);
  } else {
    if (opts.algorithm == "degree") {
      baseline = DegreeTopK(g, opts.k, ResolveDegreeMode(opts.degree_mode));
    } else if (opts.algorithm == "degree-discount") {
      baseline = DegreeDiscountIC(g, opts.k, opts.discount_p);
    } else if (opts.algorithm == "pagerank") {
      baseline = PageRankTopK(
          g, opts.k, {opts.pagerank_damping, opts.pagerank_tol, 1000});
    } else {
      MonteCarloGreedyOptions mc;
      mc.runs = opts.runs;
      mc.rng_seed = opts.rng_seed;
      mc.workers = common.workers;
      mc.lazy = !opts.exhaustive;
      baseline = MonteCarloGreedy(g, opts.k, mc);
    }
    seeds = baseline->seeds;
    result = report::BaselineJson(g, *baseline);
  }
  std::optional<SpreadEstimate> spread;
  if (opts.evaluate) {
    SimulationOptions sim;
    sim.runs = opts.runs;
    sim.rng_seed = opts.rng_seed;
    sim.workers = common.workers;
    spread = EstimateSpread(WeightedCascade(g), seeds, sim);
    result["simulated_spread"] = report::SpreadJson(g, seeds, *spread);
  }
  const double compute = Since(t1);

  Json params;
  params["graph"] = ws.graph_echo;
  params["algorithm"] = opts.algorithm;
  params["k"] = opts.k;
  if (model_based) {
    Merge(params, ModelEcho(common));
    params["tie_tolerance"] = opts.tie_tolerance;
    if (opts.algorithm == "reference") params["reference_cap"] = opts.reference_cap;
  } else if (opts.algorithm == "degree") {
    params["degree_mode"] = opts.degree_mode;
  } else if (opts.algorithm == "degree-discount") {
    params["discount_p"] = opts.discount_p;
  } else if (opts.algorithm == "pagerank") {
    params["pagerank_damping"] = opts.pagerank_damping;
    params["pagerank_tol"] = opts.pagerank_tol;
  } else {
    params["lazy"] = !opts.exhaustive;
  }
  if (opts.algorithm == "celf" || opts.evaluate) {
    params["runs"] = opts.runs;
    params["rng_seed"] = opts.rng_seed;
  }
  params["evaluate"] = opts.evaluate;
  Json config = report::ConfigEcho("maximize", std::move(params));

  Output out(common.output);
  if (ResolveFormat(common) == report::Format::kCsv) {
    report::WriteCsvPreamble(out.stream(), config);
    if (trace) {
      report::SelectionCsv(out.stream(), g, *trace, common.timing);
    } else {
      report::BaselineCsv(out.stream(), g, *baseline);
    }
    if (spread) {
      out.stream() << '\n';
      report::SpreadCsv(out.stream(), *spread);
    }
  } else {
    report::WriteJson(out.stream(), config, result,
                      Timing(common, load, compute));
  }
  return kOk;
}

int RunSimulate(const CommonOptions& common, const SimulateOptions& opts) {
  const auto t0 = Clock::now();
  Workspace ws = LoadGraph(common);
  std::vector<NodeId> seeds = ParseSeeds(ws.graph, opts.seeds);
  const double load = Since(t0);

  const auto t1 = Clock::now();
  SimulationOptions sim;
  sim.runs = opts.runs;
  sim.rng_seed = opts.rng_seed;
  sim.workers = common.workers;
  sim.keep_counts = !opts.per_run.empty();
  SpreadEstimate estimate = EstimateSpread(WeightedCascade(ws.graph), seeds, sim);
  const double compute = Since(t1);

  Json params;
  params["graph"] = ws.graph_echo;
  params["seeds"] = opts.seeds;
  params["runs"] = opts.runs;
  params["rng_seed"] = opts.rng_seed;
  Json config = report::ConfigEcho("simulate", std::move(params));

  if (!opts.per_run.empty()) {
    Output per_run(opts.per_run);
    report::WriteCsvPreamble(per_run.stream(), config);
    report::PerRunCsv(per_run.stream(), estimate);
  }
  Output out(common.output);
  if (ResolveFormat(common) == report::Format::kCsv) {
    report::WriteCsvPreamble(out.stream(), config);
    report::SpreadCsv(out.stream(), estimate);
  } else {
    report::WriteJson(out.stream(), config,
                      report::SpreadJson(ws.graph, seeds, estimate),
                      Timing(common, load, compute));
  }
  return kOk;
}

int RunSweep(const CommonOptions& common, const SweepOptions& opts) {
  if (!common.lambda_file.empty()) {
    throw ArgumentError("sweep-lambda varies a uniform lambda; drop --lambda-file");
  }
  const auto t0 = Clock::now();
  Workspace ws = LoadGraph(common);
  const Graph& g = ws.graph;
  const double load = Since(t0);

  const auto t1 = Clock::now();
  TransmissionMatrix t = BuildTransmission(g, ResolveWeights(common));
  WeightedCascade cascade(g);
  std::vector<report::SweepRow> rows;
  for (double lambda : opts.lambdas) {
    InfluenceModel model(t, DampingVector::Uniform(g.num_nodes(), lambda),
                         ResolveSolver(common));
    MaximizerOptions m;
    m.workers = common.workers;
    SelectionTrace trace = CircuitMaximize(model, opts.k, m);
    report::SweepRow row;
    row.lambda = lambda;
    row.seeds = trace.Seeds();
    row.model_spread = trace.spread;
    row.mean_search_ratio = trace.MeanSearchRatio();
    SimulationOptions sim;
    sim.runs = opts.runs;
    sim.rng_seed = opts.rng_seed;
    sim.workers = common.workers;
    row.simulated = EstimateSpread(cascade, row.seeds, sim);
    rows.push_back(std::move(row));
  }
  const double compute = Since(t1);

  Json params;
  params["graph"] = ws.graph_echo;
  Merge(params, ModelEcho(common));
  params.erase("lambda");
  params.erase("lambda_file");
  params["lambdas"] = opts.lambdas;
  params["k"] = opts.k;
  params["runs"] = opts.runs;
  params["rng_seed"] = opts.rng_seed;
  Json config = report::ConfigEcho("sweep-lambda", std::move(params));

  Output out(common.output);
  if (ResolveFormat(common) == report::Format::kCsv) {
    report::WriteCsvPreamble(out.stream(), config);
    report::SweepCsv(out.stream(), g, rows);
  } else {
    report::WriteJson(out.stream(), config, report::SweepJson(g, rows),
                      Timing(common, load, compute));
  }
  return kOk;
}

void AddCommon(CLI::App* cmd, CommonOptions& common) {
  cmd->add_option("--graph", common.graph_path, "Edge list file")
      ->required()
      ->check(CLI::ExistingFile);
  cmd->add_flag("--undirected", common.undirected,
                "Treat every line as an edge in both directions");
  cmd->add_flag("--reverse", common.reverse, "Reverse every arc after loading");
  cmd->add_option("--weights", common.weights,
                  "Transmission weights: wc (c_ij / d_j), uniform, explicit")
      ->check(CLI::IsMember({"wc", "uniform", "explicit"}))
      ->capture_default_str();
  cmd->add_option("--uniform-p", common.uniform_p,
                  "Arc probability for --weights uniform")
      ->capture_default_str();
  cmd->add_option("--lambda", common.lambda, "Uniform damping in (0, 1)")
      ->capture_default_str();
  cmd->add_option("--lambda-file", common.lambda_file,
                  "Per-node damping, lines 'node lambda'; others use --lambda")
      ->check(CLI::ExistingFile);
  cmd->add_option("--tol", common.tol, "Solver tolerance")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd->add_option("--max-iters", common.max_iters,
                  "Sweep budget per solve (0 = automatic)");
  cmd->add_option("--fixed-sweeps", common.fixed_sweeps,
                  "Run exactly this many sweeps per solve");
  cmd->add_option("--workers", common.workers,
                  "Worker threads (0 = hardware threads); results do not depend "
                  "on this")
      ->capture_default_str();
  cmd->add_option("-o,--output", common.output, "Output path, '-' for stdout")
      ->capture_default_str();
  cmd->add_option("--format", common.format, "Report format")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  cmd->add_flag("--timing", common.timing, "Include wall-clock timings");
}

int Main(int argc, char** argv) {
  CLI::App app{"Influence analysis and seed selection on weighted graphs"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);

  CommonOptions common;

  InfluenceOptions influence;
  CLI::App* influence_cmd =
      app.add_subcommand("influence", "Influence vectors of chosen sources");
  AddCommon(influence_cmd, common);
  influence_cmd->add_option("--source", influence.sources, "Source node id(s)");
  influence_cmd->add_flag("--all", influence.all, "Full influence matrix");
  influence_cmd->add_option("--max-nodes", influence.cap,
                            "Largest graph accepted by --all")
      ->capture_default_str();

  BoundsOptions bounds;
  CLI::App* bounds_cmd = app.add_subcommand(
      "bounds", "Upper bounds on total influence, optionally with exact totals");
  AddCommon(bounds_cmd, common);
  bounds_cmd->add_option("--fill", bounds.fill,
                         "Compute exact totals for this many top-ranked nodes");
  bounds_cmd->add_option("--rank", bounds.rank, "Ranking for --fill")
      ->check(CLI::IsMember({"degree", "bound"}))
      ->capture_default_str();

  MaximizeOptions maximize;
  CLI::App* maximize_cmd = app.add_subcommand("maximize", "Select K seeds");
  AddCommon(maximize_cmd, common);
  maximize_cmd->add_option("--algorithm", maximize.algorithm, "Selector")
      ->check(CLI::IsMember({"circuit", "reference", "degree", "degree-discount",
                             "pagerank", "celf"}))
      ->capture_default_str();
  maximize_cmd->add_option("--k", maximize.k, "Number of seeds")->required();
  maximize_cmd->add_option("--tie-tol", maximize.tie_tolerance,
                           "Relative gap under which gains tie")
      ->capture_default_str();
  maximize_cmd->add_option("--reference-cap", maximize.reference_cap,
                           "Largest graph accepted by the reference selector")
      ->capture_default_str();
  maximize_cmd->add_option("--degree-mode", maximize.degree_mode,
                           "Degree used by the degree selector")
      ->check(CLI::IsMember({"out", "in", "total"}))
      ->capture_default_str();
  maximize_cmd->add_option("--discount-p", maximize.discount_p,
                           "Propagation probability for degree-discount")
      ->capture_default_str();
  maximize_cmd->add_option("--pagerank-damping", maximize.pagerank_damping)
      ->capture_default_str();
  maximize_cmd->add_option("--pagerank-tol", maximize.pagerank_tol)
      ->capture_default_str();
  maximize_cmd->add_option("--runs", maximize.runs,
                           "Cascade runs for celf and --evaluate")
      ->capture_default_str();
  maximize_cmd->add_option("--rng-seed", maximize.rng_seed)->capture_default_str();
  maximize_cmd->add_flag("--exhaustive", maximize.exhaustive,
                         "celf without lazy re-evaluation");
  maximize_cmd->add_flag("--evaluate", maximize.evaluate,
                         "Also simulate the spread of the selected seeds");

  SimulateOptions simulate;
  CLI::App* simulate_cmd =
      app.add_subcommand("simulate", "Monte-Carlo spread of a seed set");
  AddCommon(simulate_cmd, common);
  simulate_cmd->add_option("--seeds", simulate.seeds,
                           "'all', a file of node ids, or a comma list")
      ->required();
  simulate_cmd->add_option("--runs", simulate.runs)->capture_default_str();
  simulate_cmd->add_option("--rng-seed", simulate.rng_seed)->capture_default_str();
  simulate_cmd->add_option("--per-run", simulate.per_run,
                           "Write per-run activation counts as CSV");

  SweepOptions sweep;
  CLI::App* sweep_cmd = app.add_subcommand(
      "sweep-lambda", "Select seeds over a damping grid and simulate each set");
  AddCommon(sweep_cmd, common);
  sweep_cmd->add_option("--k", sweep.k, "Number of seeds")->required();
  sweep_cmd->add_option("--lambdas", sweep.lambdas, "Damping grid")
      ->delimiter(',');
  sweep_cmd->add_option("--runs", sweep.runs)->capture_default_str();
  sweep_cmd->add_option("--rng-seed", sweep.rng_seed)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (*influence_cmd) return RunInfluence(common, influence);
    if (*bounds_cmd) return RunBounds(common, bounds);
    if (*maximize_cmd) return RunMaximize(common, maximize);
    if (*simulate_cmd) return RunSimulate(common, simulate);
    return RunSweep(common, sweep);
  } catch (const CapacityError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kCapacityError;
  } catch (const NumericalError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kNumericalError;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  }
}

}  // namespace
}  // namespace circuit

int main(int argc, char** argv) { return circuit::Main(argc, argv); }
