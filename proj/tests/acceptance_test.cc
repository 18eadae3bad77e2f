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

// End-to-end acceptance checks. Prints one PASS/FAIL line per criterion and
// exits nonzero if any fails.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "evflow/charge_augment.h"
#include "evflow/edge_cap.h"
#include "evflow/flow_lp.h"
#include "evflow/metric_closure.h"
#include "evflow/network.h"
#include "evflow/oracle.h"
#include "evflow/single_router.h"
#include "random_instances.h"

namespace evflow {
namespace {

// Wall-clock limits, seconds.
constexpr double kLimitAugment = 1.0;
constexpr double kLimitRoute = 1.0;
constexpr double kLimitOracleSuite = 60.0;
constexpr double kLimitMaxFlow = 5.0;
constexpr double kLimitMinCost = 5.0;
constexpr double kLimitGadgets = 120.0;
constexpr double kLimitUnbounded = 1.0;
constexpr double kLimitHomogeneity = 30.0;

// Suite sizes.
constexpr int kOracleInstances = 200;
constexpr int kGadgetSeeds = 50;
constexpr int kGadgetMaxLength = 10;
constexpr int kHomogeneityInstances = 20;

// Every comparison below is exact rational equality; no tolerance applies.

struct Outcome {
  bool pass = true;
  std::string detail;
};

Outcome Fail(std::string detail) { return {false, std::move(detail)}; }

ChargingNetwork Example1() {
  return *LoadNetworkFile(std::string(EVFLOW_TESTDATA_DIR) + "/example1.json");
}

Outcome AugmentedExample() {
  ChargingNetwork net = Example1();
  FlowProblem fp = PrepareFlowProblem(net);
  std::set<std::string> nodes;
  for (int v = 0; v < fp.graph.num_nodes(); ++v) {
    nodes.insert(AugNodeLabel(net, fp.aux, fp.graph.node(v)));
  }
  const std::set<std::string> want_nodes = {
      "(s,9)",     "(t,0)",     "(i1,1,0)", "(i1,1,4)", "(i1,1,5)",
      "(i1,2,5)",  "(i1,2,6)",  "(i1,2,9)", "(i2,1,0)", "(i2,1,3)",
      "(i2,1,5)",  "(i2,2,5)",  "(i2,2,6)", "(i2,2,9)"};
  using Arc = std::tuple<std::string, std::string, std::string>;
  std::set<Arc> edges;
  for (const AugEdge& e : fp.graph.edges()) {
    std::string type = e.type == AugEdgeType::kCharge  ? "I"
                       : e.type == AugEdgeType::kChain ? "II"
                                                       : "III";
    edges.insert({type, AugNodeLabel(net, fp.aux, fp.graph.node(e.tail)),
                  AugNodeLabel(net, fp.aux, fp.graph.node(e.head))});
  }
  const std::set<Arc> want_edges = {
      {"I", "(i1,1,0)", "(i1,1,4)"},   {"I", "(i1,1,4)", "(i1,1,5)"},
      {"I", "(i1,2,5)", "(i1,2,6)"},   {"I", "(i1,2,6)", "(i1,2,9)"},
      {"I", "(i2,1,0)", "(i2,1,3)"},   {"I", "(i2,1,3)", "(i2,1,5)"},
      {"I", "(i2,2,5)", "(i2,2,6)"},   {"I", "(i2,2,6)", "(i2,2,9)"},
      {"II", "(i1,1,5)", "(i1,2,5)"},  {"II", "(i2,1,5)", "(i2,2,5)"},
      {"III", "(s,9)", "(i1,1,4)"},    {"III", "(s,9)", "(i2,1,5)"},
      {"III", "(s,9)", "(i2,2,5)"},    {"III", "(i1,1,5)", "(t,0)"},
      {"III", "(i1,2,5)", "(t,0)"},    {"III", "(i1,2,6)", "(i2,1,0)"},
      {"III", "(i1,2,9)", "(i2,1,3)"}, {"III", "(i2,2,6)", "(t,0)"}};
  if (nodes != want_nodes || fp.graph.num_nodes() != 14) {
    return Fail("node set differs");
  }
  if (edges != want_edges || fp.graph.edges().size() != 18) {
    return Fail("edge set differs");
  }
  return {true, "14 nodes, 18 edges"};
}

// Each positive charge either departs at a threshold or leaves exactly
// enough battery to arrive at a later point on a threshold (zero at the
// destination).
bool ThresholdPattern(const ChargingNetwork& net, const ChargingStrategy& s) {
  const std::vector<Rational>& alpha = net.curve().thresholds();
  std::vector<int> nodes = s.Nodes(net);
  std::vector<Rational> battery(nodes.size());
  Rational b = s.initial_battery;
  for (size_t p = 0; p < nodes.size(); ++p) {
    b += s.charge[p];
    battery[p] = b;  // departure level
    if (p < s.edges.size()) b -= net.edges()[s.edges[p]].battery;
  }
  for (size_t p = 0; p < nodes.size(); ++p) {
    if (IsZero(s.charge[p])) continue;
    const Rational& out = battery[p];
    if (std::find(alpha.begin(), alpha.end(), out) != alpha.end()) continue;
    bool ok = false;
    Rational level = out;
    for (size_t q = p + 1; q < nodes.size() && !ok; ++q) {
      level -= net.edges()[s.edges[q - 1]].battery;
      bool last = q + 1 == nodes.size();
      bool stop = net.StationIndexAt(nodes[q]) >= 0;
      if (last && IsZero(level)) ok = true;
      if (stop && std::find(alpha.begin(), alpha.end(), level) != alpha.end()) {
        ok = true;
      }
      if (!IsZero(s.charge[q])) break;
    }
    if (!ok) return false;
  }
  return true;
}

Outcome SingleEvOptimum() {
  ChargingNetwork net = Example1();
  FlowProblem fp = PrepareFlowProblem(net);
  absl::StatusOr<Route> route = RouteSingle(net, fp.aux, 0);
  if (!route.ok()) return Fail(std::string(route.status().message()));
  if (route->cost != Rational(21, 2)) {
    return Fail("cost " + FormatRational(route->cost));
  }
  absl::StatusOr<StrategyCost> cost = EvaluateStrategy(net, route->strategy);
  if (!cost.ok() || cost->total != Rational(21, 2)) {
    return Fail("strategy does not evaluate to 21/2");
  }
  if (!ThresholdPattern(net, route->strategy)) {
    return Fail("charges do not follow the threshold pattern");
  }
  return {true, "cost 21/2"};
}

Outcome OracleSuite() {
  testing::RandomOptions options;
  options.max_od_pairs = 2;
  int routes = 0;
  for (int seed = 1; seed <= kOracleInstances; ++seed) {
    NetworkSpec spec = testing::RandomInstance(seed, options);
    absl::StatusOr<ChargingNetwork> net = BuildNetwork(spec);
    if (!net.ok()) return Fail("seed " + std::to_string(seed) + ": invalid");
    FlowProblem fp = PrepareFlowProblem(*net);
    std::vector<StrategyUniverse> universes;
    for (int k = 0; k < static_cast<int>(net->od_pairs().size()); ++k) {
      absl::StatusOr<StrategyUniverse> u = EnumerateStrategies(*net, k);
      if (!u.ok()) {
        return Fail("seed " + std::to_string(seed) + ": " +
                    std::string(u.status().message()));
      }
      absl::StatusOr<Route> route = RouteSingle(*net, fp.aux, k);
      absl::StatusOr<SingleOptimum> brute = BruteSingleOpt(*net, *u);
      if (route.ok() != brute.ok() ||
          (route.ok() && route->cost != brute->cost)) {
        return Fail("seed " + std::to_string(seed) + " od " +
                    std::to_string(k) + ": route " +
                    (route.ok() ? FormatRational(route->cost) : "none") +
                    " vs brute " +
                    (brute.ok() ? FormatRational(brute->cost) : "none"));
      }
      routes += route.ok();
      universes.push_back(*std::move(u));
    }
    FlowSolution flow = SolveMaxFlow(*net, fp, {}, nullptr);
    BruteFlowResult brute =
        BruteFlow(*net, universes, BruteProblem::kMaxFlow, false);
    Rational value = flow.status == FlowStatus::kOptimal ? flow.objective
                                                         : Rational(0);
    bool flow_ok = flow.status == FlowStatus::kOptimal ||
                   flow.status == FlowStatus::kInfeasible;
    if (!flow_ok || brute.status != LpStatus::kOptimal ||
        value != brute.objective) {
      return Fail("seed " + std::to_string(seed) + ": maxflow " +
                  FormatRational(value) + " (" + FlowStatusName(flow.status) +
                  ") vs brute " + FormatRational(brute.objective));
    }
  }
  return {true, std::to_string(kOracleInstances) + " instances, " +
                    std::to_string(routes) + " routed OD pairs"};
}

Outcome MaxFlowValue() {
  ChargingNetwork net = Example1();
  FlowSolution sol = SolveMaxFlow(net, PrepareFlowProblem(net), {}, nullptr);
  if (sol.status != FlowStatus::kOptimal) return Fail(sol.message);
  if (sol.objective != 4) return Fail("value " + FormatRational(sol.objective));
  if (sol.dual_objective != sol.objective) {
    return Fail("dual " + FormatRational(sol.dual_objective));
  }
  if (!VerifyFlow(net, sol.strategies).feasible) {
    return Fail("decomposed strategies exceed charger capacity");
  }
  return {true, "value 4, dual 4"};
}

Outcome MinCostConsistency() {
  NetworkSpec spec = ToSpec(Example1());
  for (StationSpec& st : spec.stations) st.chargers = 1000;
  std::string detail;
  for (int demand : {1, 3}) {
    spec.od_pairs[0].demand = demand;
    ChargingNetwork net = *BuildNetwork(spec);
    FlowSolution sol = SolveMinCost(net, PrepareFlowProblem(net), {}, nullptr);
    if (sol.status != FlowStatus::kOptimal) return Fail(sol.message);
    std::vector<StrategyUniverse> universes = {*EnumerateStrategies(net, 0)};
    BruteFlowResult brute =
        BruteFlow(net, universes, BruteProblem::kMinCost, false);
    if (brute.status != LpStatus::kOptimal || brute.objective != sol.objective) {
      return Fail("D=" + std::to_string(demand) + ": LP " +
                  FormatRational(sol.objective) + " vs enumerated " +
                  FormatRational(brute.objective));
    }
    if (demand == 1 && sol.objective != Rational(21, 2)) {
      return Fail("D=1 cost " + FormatRational(sol.objective));
    }
    if (sol.objective < Rational(21, 2) * demand) {
      return Fail("D=" + std::to_string(demand) + " cost below D * 21/2");
    }
    detail += "D=" + std::to_string(demand) + " cost " +
              FormatRational(sol.objective) + " ";
  }
  detail.pop_back();
  return {true, detail};
}

bool HasPartition(const std::vector<int64_t>& z) {
  int64_t sum = 0;
  for (int64_t v : z) sum += v;
  if (sum % 2 != 0) return false;
  std::vector<bool> reach(sum / 2 + 1, false);
  reach[0] = true;
  for (int64_t v : z) {
    for (int64_t s = sum / 2; s >= v; --s) reach[s] = reach[s] || reach[s - v];
  }
  return reach[sum / 2];
}

Outcome GadgetSuite() {
  int yes = 0;
  int no = 0;
  for (int seed = 1; seed <= kGadgetSeeds; ++seed) {
    std::mt19937_64 rng(seed);
    const int n = std::uniform_int_distribution<int>(2, kGadgetMaxLength)(rng);
    std::vector<int64_t> z(n);
    int64_t sum = 0;
    for (int64_t& v : z) {
      v = std::uniform_int_distribution<int64_t>(1, 12)(rng);
      sum += v;
    }
    if (sum % 2 != 0) ++z.back();
    absl::StatusOr<NetworkSpec> spec = PartitionInstance(z);
    if (!spec.ok()) return Fail(std::string(spec.status().message()));
    ChargingNetwork net = *BuildNetwork(*spec);
    FlowSolution sol = SolveCapacitatedMaxFlow(net, {}, nullptr);
    if (sol.status != FlowStatus::kOptimal) {
      return Fail("seed " + std::to_string(seed) + ": " + sol.message);
    }
    bool partition = HasPartition(z);
    bool two = sol.objective == 2;
    if (partition != two || sol.objective > 2) {
      return Fail("seed " + std::to_string(seed) + ": flow " +
                  FormatRational(sol.objective) +
                  (partition ? " with" : " without") + " a partition");
    }
    (partition ? yes : no)++;
  }
  return {true, std::to_string(yes) + " with partition, " +
                    std::to_string(no) + " without"};
}

Outcome Unboundedness() {
  auto load = [](const char* name) {
    return *LoadNetworkFile(std::string(EVFLOW_TESTDATA_DIR) + "/" + name);
  };
  ChargingNetwork unbounded = load("unbounded.json");
  FlowSolution a =
      SolveMaxFlow(unbounded, PrepareFlowProblem(unbounded), {}, nullptr);
  if (a.status != FlowStatus::kUnbounded) {
    return Fail("d = L reported " + FlowStatusName(a.status));
  }
  ChargingNetwork far = load("out_of_range.json");
  FlowSolution b = SolveMaxFlow(far, PrepareFlowProblem(far), {}, nullptr);
  if (b.status != FlowStatus::kInfeasible || b.objective != 0) {
    return Fail("d = L + 1 reported " + FlowStatusName(b.status));
  }
  return {true, "unbounded; infeasible with value 0"};
}

Outcome Homogeneity() {
  testing::RandomOptions options;
  options.max_od_pairs = 2;
  int positive = 0;
  for (int i = 0; i < kHomogeneityInstances; ++i) {
    const int seed = 5000 + i;
    const int scale = 2 + i % 4;
    NetworkSpec spec = testing::RandomInstance(seed, options);
    ChargingNetwork base = *BuildNetwork(spec);
    for (StationSpec& st : spec.stations) st.chargers *= scale;
    ChargingNetwork scaled = *BuildNetwork(spec);
    FlowSolution a = SolveMaxFlow(base, PrepareFlowProblem(base), {}, nullptr);
    FlowSolution b =
        SolveMaxFlow(scaled, PrepareFlowProblem(scaled), {}, nullptr);
    if (a.status != b.status) return Fail("seed " + std::to_string(seed));
    if (a.objective * scale != b.objective) {
      return Fail("seed " + std::to_string(seed) + ": " +
                  FormatRational(a.objective) + " x " + std::to_string(scale) +
                  " != " + FormatRational(b.objective));
    }
    positive += a.objective > 0;
  }
  return {true, std::to_string(kHomogeneityInstances) + " instances, " +
                    std::to_string(positive) + " with positive flow"};
}

struct Criterion {
  int id;
  const char* name;
  double limit;
  std::function<Outcome()> run;
};

int Run() {
  const std::vector<Criterion> criteria = {
      {1, "augmented graph of the example network", kLimitAugment, AugmentedExample},
      {2, "single-EV optimum 21/2", kLimitRoute, SingleEvOptimum},
      {3, "router and max flow match enumeration", kLimitOracleSuite,
       OracleSuite},
      {4, "max flow 4 with zero duality gap", kLimitMaxFlow, MaxFlowValue},
      {5, "min-cost consistency", kLimitMinCost, MinCostConsistency},
      {6, "partition gadgets", kLimitGadgets, GadgetSuite},
      {7, "unbounded and infeasible detection", kLimitUnbounded, Unboundedness},
      {8, "charger scaling homogeneity", kLimitHomogeneity, Homogeneity},
  };
  int failures = 0;
  for (const Criterion& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    Outcome outcome = c.run();
    double seconds = std::chrono::duration<double>(
                         std::chrono::steady_clock::now() - start)
                         .count();
    if (outcome.pass && seconds >= c.limit) {
      outcome = Fail("took " + std::to_string(seconds) + " s");
    }
    std::ostringstream line;
    line.precision(3);
    line << std::fixed << (outcome.pass ? "PASS" : "FAIL") << " " << c.id
         << " " << c.name << " (" << seconds << " s / " << c.limit
         << " s): " << outcome.detail;
    std::cout << line.str() << std::endl;
    failures += !outcome.pass;
  }
  return failures == 0 ? 0 : 1;
}

}  // namespace
}  // namespace evflow

int main() { return evflow::Run(); }
