// Copyright 2026 The evflow Authors.
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

// evflow command-line front end. Results go to stdout (or --output) as JSON,
// diagnostics to stderr.
//
// Exit codes: 0 success, 1 infeasible / unbounded / assumption violated,
// 2 input error, 3 internal error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "absl/status/status.h"
#include "evflow/charge_augment.h"
#include "evflow/edge_cap.h"
#include "evflow/export.h"
#include "evflow/flow_lp.h"
#include "evflow/metric_closure.h"
#include "evflow/network.h"
#include "evflow/oracle.h"
#include "evflow/single_router.h"

namespace evflow {
namespace {

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitInput = 2;
constexpr int kExitInternal = 3;

constexpr char kSchemaHelp[] = R"(
Network file (JSON; every number is a string: "9", "2.5" or "7/3"):
  {
    "L": "9",                          battery capacity
    "thresholds": ["0", "5", "9"],     charging-curve breakpoints (optional,
                                       default ["0", L])
    "nodes": ["s", "i1", "i2", "t"],
    "edges": [{"tail": "s", "head": "i1",
               "d": "5",               battery consumed
               "ell": "5",             travel time
               "u": "1"}],             flow capacity (optional)
    "stations": [{"node": "i1",
                  "chargers": 1,       integer
                  "speeds": ["2", "1"],  one per interval
                  "prices": ["0", "0"],  per unit of battery
                  "occupancy_price": "0",  per unit of charging time
                  "thresholds": [...]}],   own breakpoints (optional)
    "od_pairs": [{"s": "s", "t": "t", "demand": "1"}]
  }
A node may carry several station entries (charger types); origins and
destinations may not carry stations.

Exit codes: 0 success, 1 infeasible, unbounded or assumption violated,
2 input error, 3 internal error.)";

struct Config {
  std::string input;
  std::string output;
  std::string emit = "json";
  bool auxiliary = false;
  int od = 0;
  bool edge_caps = false;
  bool use_float = false;
  double tol = 1e-9;
  std::string epsilon = "0";
  bool oracle = false;
  std::string lp_out;
  std::vector<int64_t> values;
};

class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) file_.open(path);
  }
  bool ok() const { return !file_.is_open() || file_.good(); }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

int Emit(const Config& config, const std::string& text) {
  Output out(config.output);
  if (!out.ok()) {
    std::cerr << "error: cannot write " << config.output << "\n";
    return kExitInput;
  }
  out.stream() << text;
  return kExitOk;
}

int EmitJson(const Config& config, const Json& json) {
  return Emit(config, json.dump(2) + "\n");
}

int StatusExit(const absl::Status& status) {
  std::cerr << "error: " << status.message() << "\n";
  switch (status.code()) {
    case absl::StatusCode::kInvalidArgument:
    case absl::StatusCode::kNotFound:
    case absl::StatusCode::kFailedPrecondition:
    case absl::StatusCode::kOutOfRange:
      return kExitInput;
    default:
      return kExitInternal;
  }
}

std::optional<ChargingNetwork> Load(const Config& config, int* exit_code) {
  absl::StatusOr<ChargingNetwork> net = LoadNetworkFile(config.input);
  if (!net.ok()) {
    *exit_code = StatusExit(net.status());
    return std::nullopt;
  }
  return *std::move(net);
}

int RunValidate(const Config& config) {
  int code = kExitOk;
  std::optional<ChargingNetwork> net = Load(config, &code);
  if (!net) return code;
  Json out = {{"valid", true},
              {"nodes", net->num_nodes()},
              {"edges", net->edges().size()},
              {"stations", net->stations().size()},
              {"intervals", net->num_intervals()},
              {"od_pairs", net->od_pairs().size()},
              {"edge_capacities", net->HasEdgeCapacities()}};
  return EmitJson(config, out);
}

int RunAssumption(const Config& config) {
  int code = kExitOk;
  std::optional<ChargingNetwork> net = Load(config, &code);
  if (!net) return code;
  MetricAgreementReport report = CheckMetricAgreement(*net);
  code = EmitJson(config, AssumptionJson(*net, report, config.use_float));
  if (code != kExitOk) return code;
  return report.holds ? kExitOk : kExitNegative;
}

int RunAugment(const Config& config) {
  int code = kExitOk;
  std::optional<ChargingNetwork> net = Load(config, &code);
  if (!net) return code;
  FlowProblem fp = PrepareFlowProblem(*net);
  if (config.emit == "dot") {
    return Emit(config, config.auxiliary
                            ? AuxiliaryNetworkDot(*net, fp.aux)
                            : AugmentedGraphDot(*net, fp.aux, fp.graph));
  }
  if (config.emit != "json") {
    std::cerr << "error: augment emits json or dot\n";
    return kExitInput;
  }
  return EmitJson(config,
                  config.auxiliary
                      ? AuxiliaryNetworkJson(*net, fp.aux, config.use_float)
                      : AugmentedGraphJson(*net, fp.aux, fp.graph,
                                           config.use_float));
}

int RunRoute(const Config& config) {
  int code = kExitOk;
  std::optional<ChargingNetwork> net = Load(config, &code);
  if (!net) return code;
  if (config.od < 0 ||
      config.od >= static_cast<int>(net->od_pairs().size())) {
    std::cerr << "error: --od " << config.od << " out of range\n";
    return kExitInput;
  }
  MetricAgreementReport report = CheckMetricAgreement(*net);
  if (!report.holds) {
    Json out = {{"status", "assumption_violated"},
                {"assumption", AssumptionJson(*net, report, config.use_float)}};
    code = EmitJson(config, out);
    return code == kExitOk ? kExitNegative : code;
  }
  FlowProblem fp = PrepareFlowProblem(*net);
  absl::StatusOr<Route> route = RouteSingle(*net, fp.aux, config.od);
  if (!route.ok()) {
    if (route.status().code() != absl::StatusCode::kNotFound) {
      return StatusExit(route.status());
    }
    code = EmitJson(config, Json{{"status", "infeasible"}});
    return code == kExitOk ? kExitNegative : code;
  }
  Json out = StrategyJson(*net, route->strategy, config.use_float);
  out["status"] = "optimal";
  bool agrees = true;
  if (config.oracle) {
    absl::StatusOr<StrategyUniverse> universe =
        EnumerateStrategies(*net, config.od);
    if (!universe.ok()) return StatusExit(universe.status());
    absl::StatusOr<SingleOptimum> best = BruteSingleOpt(*net, *universe);
    if (!best.ok()) return StatusExit(best.status());
    agrees = best->cost == route->cost;
    out["oracle"] = {{"cost", NumberJson(best->cost, config.use_float)},
                     {"strategies", universe->strategies.size()},
                     {"agrees", agrees}};
  }
  code = EmitJson(config, out);
  if (code != kExitOk) return code;
  if (!agrees) {
    std::cerr << "error: oracle disagrees with the router\n";
    return kExitInternal;
  }
  return kExitOk;
}

int RunFlow(const Config& config, bool min_cost) {
  int code = kExitOk;
  std::optional<ChargingNetwork> net = Load(config, &code);
  if (!net) return code;
  if (config.emit != "json" && config.emit != "lp") {
    std::cerr << "error: flow subcommands emit json or lp\n";
    return kExitInput;
  }
  absl::StatusOr<Rational> epsilon = ParseRational(config.epsilon);
  if (!epsilon.ok() || *epsilon < 0) {
    std::cerr << "error: --epsilon must be a nonnegative number\n";
    return kExitInput;
  }
  LpOptions lp;
  lp.exact = !config.use_float;
  lp.tolerance = config.tol;

  LpProblem problem;
  FlowSolution solution;
  if (config.edge_caps) {
    CapacitatedOptions options;
    options.lp = lp;
    options.epsilon = *epsilon;
    solution = min_cost ? SolveCapacitatedMinCost(*net, options, &problem)
                        : SolveCapacitatedMaxFlow(*net, options, &problem);
  } else {
    FlowOptions options;
    options.lp = lp;
    FlowProblem fp = PrepareFlowProblem(*net);
    solution = min_cost ? SolveMinCost(*net, fp, options, &problem)
                        : SolveMaxFlow(*net, fp, options, &problem);
  }

  const std::string lp_name = min_cost ? "MINCOST" : "MAXFLOW";
  if (!config.lp_out.empty()) {
    std::ofstream f(config.lp_out);
    f << WriteMps(problem, lp_name);
    if (!f.good()) {
      std::cerr << "error: cannot write " << config.lp_out << "\n";
      return kExitInput;
    }
  }

  Json out = FlowSolutionJson(*net, solution, config.use_float);
  bool agrees = true;
  if (config.oracle && solution.status == FlowStatus::kOptimal) {
    std::vector<StrategyUniverse> universes;
    for (int k = 0; k < static_cast<int>(net->od_pairs().size()); ++k) {
      absl::StatusOr<StrategyUniverse> u = EnumerateStrategies(*net, k);
      if (!u.ok()) return StatusExit(u.status());
      universes.push_back(*std::move(u));
    }
    BruteFlowResult brute =
        BruteFlow(*net, universes,
                  min_cost ? BruteProblem::kMinCost : BruteProblem::kMaxFlow,
                  config.edge_caps);
    // With epsilon > 0 the solver only promises a (1 + epsilon) factor.
    if (brute.status != LpStatus::kOptimal) {
      agrees = false;
    } else if (config.use_float) {
      agrees = std::abs(ToDouble(brute.objective - solution.objective)) <=
               1e-6 * (1 + std::abs(ToDouble(brute.objective)));
    } else if (*epsilon == 0) {
      agrees = brute.objective == solution.objective;
    } else {
      Rational factor = 1 + *epsilon;
      agrees = min_cost ? solution.objective <= factor * brute.objective
                        : factor * solution.objective >= brute.objective;
    }
    out["oracle"] = {{"status", LpStatusName(brute.status)},
                     {"objective", NumberJson(brute.objective, config.use_float)},
                     {"columns", brute.columns},
                     {"agrees", agrees}};
  }

  code = config.emit == "lp" ? Emit(config, WriteMps(problem, lp_name))
                             : EmitJson(config, out);
  if (code != kExitOk) return code;
  switch (solution.status) {
    case FlowStatus::kOptimal:
      break;
    case FlowStatus::kInfeasible:
    case FlowStatus::kUnbounded:
    case FlowStatus::kAssumptionViolated:
      std::cerr << FlowStatusName(solution.status) << ": " << solution.message
                << "\n";
      return kExitNegative;
    case FlowStatus::kSolverLimit:
      std::cerr << "error: " << solution.message << "\n";
      return kExitInternal;
  }
  if (!agrees) {
    std::cerr << "error: oracle disagrees with the flow solver\n";
    return kExitInternal;
  }
  return kExitOk;
}

int RunGenPartition(const Config& config) {
  absl::StatusOr<NetworkSpec> spec = PartitionInstance(config.values);
  if (!spec.ok()) return StatusExit(spec.status());
  return Emit(config, NetworkSpecToJson(*spec) + "\n");
}

int Main(int argc, char** argv) {
  CLI::App app{"Electric-vehicle routing and flow over charging networks"};
  app.footer(kSchemaHelp);
  app.require_subcommand(1);
  Config config;
  app.add_option("-o,--output", config.output, "Write results to this file");

  auto add_input = [&](CLI::App* sub) {
    sub->add_option("network", config.input, "Network JSON file")
        ->required()
        ->check(CLI::ExistingFile);
    sub->add_flag("--float", config.use_float,
                  "Floating-point LP and decimal output");
  };

  CLI::App* validate = app.add_subcommand("validate", "Check a network file");
  add_input(validate);

  CLI::App* assumption = app.add_subcommand(
      "assumption", "Check that shortest battery and time paths agree");
  add_input(assumption);

  CLI::App* augment = app.add_subcommand(
      "augment", "Print the charge-augmented graph (or the auxiliary network)");
  add_input(augment);
  augment->add_option("--emit", config.emit, "json or dot")
      ->check(CLI::IsMember({"json", "dot"}));
  augment->add_flag("--auxiliary", config.auxiliary,
                    "Print the station-copy network instead");

  CLI::App* route =
      app.add_subcommand("route", "Cheapest charging strategy for one EV");
  add_input(route);
  route->add_option("--od", config.od, "OD pair index")->required();
  route->add_flag("--oracle", config.oracle,
                  "Cross-check against exhaustive enumeration");

  std::vector<CLI::App*> flows;
  for (const char* name : {"maxflow", "mincost"}) {
    CLI::App* sub = app.add_subcommand(
        name, std::string(name) == "maxflow"
                  ? "Maximum EV flow under charger limits"
                  : "Cheapest EV flow meeting every demand");
    add_input(sub);
    sub->add_flag("--edge-caps", config.edge_caps,
                  "Honour edge capacities (column generation)");
    sub->add_option("--tol", config.tol, "Float-mode tolerance")
        ->capture_default_str();
    sub->add_option("--epsilon", config.epsilon,
                    "Column-generation approximation factor")
        ->capture_default_str();
    sub->add_flag("--oracle", config.oracle,
                  "Cross-check against the enumerated-strategy LP");
    sub->add_option("--emit", config.emit, "json or lp (fixed MPS)")
        ->check(CLI::IsMember({"json", "lp"}));
    sub->add_option("--lp-out", config.lp_out, "Also write the LP here");
    flows.push_back(sub);
  }

  CLI::App* gen = app.add_subcommand(
      "gen-partition", "Print the two-unit flow instance for a partition set");
  gen->add_option("--values", config.values, "Positive integers")
      ->required()
      ->delimiter(',');

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (validate->parsed()) return RunValidate(config);
    if (assumption->parsed()) return RunAssumption(config);
    if (augment->parsed()) return RunAugment(config);
    if (route->parsed()) return RunRoute(config);
    if (flows[0]->parsed()) return RunFlow(config, false);
    if (flows[1]->parsed()) return RunFlow(config, true);
    if (gen->parsed()) return RunGenPartition(config);
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitInput;
}

}  // namespace
}  // namespace evflow

int main(int argc, char** argv) { return evflow::Main(argc, argv); }
