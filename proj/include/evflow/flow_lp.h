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

// Maximum and minimum-cost EV flow as multicommodity flow LPs on the
// charge-augmented network, plus decomposition of edge flows into charging
// strategies.

#ifndef EVFLOW_FLOW_LP_H_
#define EVFLOW_FLOW_LP_H_

#include <string>
#include <vector>

#include "evflow/charge_augment.h"
#include "evflow/lp.h"
#include "evflow/metric_closure.h"
#include "evflow/network.h"
#include "evflow/rational.h"
#include "evflow/single_router.h"

namespace evflow {

// Variable and row indices of a flow LP.
struct FlowLpLayout {
  std::vector<std::vector<int>> flow_var;  // [od][aug edge], -1 if absent
  std::vector<int> alloc_var;              // per aux copy
  std::vector<int> capacity_row;           // per aux copy
  std::vector<int> station_row;            // per station
  std::vector<int> demand_row;             // per od (min-cost only)
  std::vector<std::vector<int>> conservation_row;  // [od][aug node], -1
};

struct FlowLp {
  LpProblem problem;
  FlowLpLayout layout;
};

FlowLp BuildMaxFlowLp(const ChargingNetwork& network,
                      const AuxiliaryNetwork& aux, const AugmentedGraph& graph);

// Edges with infinite cost are left out.
FlowLp BuildMinCostLp(const ChargingNetwork& network,
                      const AuxiliaryNetwork& aux, const AugmentedGraph& graph);

struct StrategyFlow {
  ChargingStrategy strategy;
  Rational value;
  std::vector<int> aug_edges;
};

struct Decomposition {
  std::vector<StrategyFlow> paths;
  // Flow left on cycles after removing every path, per [od][aug edge].
  std::vector<std::vector<Rational>> cycle_flow;
};

// Splits per-commodity edge flows into path flows. Values at or below
// `tolerance` count as zero.
Decomposition DecomposeFlow(const AuxiliaryNetwork& aux,
                            const AugmentedGraph& graph,
                            const std::vector<std::vector<Rational>>& edge_flow,
                            const Rational& tolerance = Rational(0));

// Original-network strategy of an augmented (s_k, L) -> (t_k, 0) path.
ChargingStrategy StrategyOfPath(const AuxiliaryNetwork& aux,
                                const AugmentedGraph& graph, int od,
                                const std::vector<int>& aug_edges);

struct StationUsage {
  int station = -1;
  std::vector<Rational> charge;  // per interval, summed over strategies
  Rational required;             // sum_j charge_j / r_j (chargers needed)
  Rational slack;                // a_i - required
  bool feasible = true;
  std::string violation;         // first problem found, if any
};

struct FlowCheck {
  bool feasible = true;
  std::vector<StationUsage> stations;
};

// Whether some allocation of each station's chargers over intervals serves
// the given strategy flows.
FlowCheck VerifyFlow(const ChargingNetwork& network,
                     const std::vector<StrategyFlow>& flows);

enum class FlowStatus {
  kOptimal,
  kInfeasible,
  kUnbounded,
  kAssumptionViolated,
  kSolverLimit,
};

std::string FlowStatusName(FlowStatus status);

struct FlowSolution {
  FlowStatus status = FlowStatus::kOptimal;
  std::string message;
  Rational objective;
  std::vector<std::vector<Rational>> edge_flow;  // [od][aug edge]
  std::vector<Rational> allocation;              // z per aux copy
  std::vector<StrategyFlow> strategies;
  std::vector<std::vector<Rational>> cycle_flow;
  std::vector<Rational> pi;   // per aux copy
  std::vector<Rational> y;    // per station
  std::vector<Rational> phi;  // per od (min-cost)
  std::vector<Rational> w;    // per original edge (edge capacities)
  std::vector<Rational> farkas;  // LP rows, when the LP is infeasible
  std::vector<int> infeasible_od;  // OD pairs with no feasible strategy
  std::vector<UnboundedPair> unbounded;
  Rational dual_objective;
  int64_t iterations = 0;
};

struct FlowOptions {
  LpOptions lp;
};

struct FlowProblem {
  AuxiliaryNetwork aux;
  LevelSets sets;
  AugmentedGraph graph;
};

// Closure (battery first, then time), auxiliary network, level sets and the
// augmented graph for `network`.
FlowProblem PrepareFlowProblem(const ChargingNetwork& network);

FlowSolution SolveMaxFlow(const ChargingNetwork& network,
                          const FlowProblem& prepared,
                          const FlowOptions& options, LpProblem* lp_out);

FlowSolution SolveMinCost(const ChargingNetwork& network,
                          const FlowProblem& prepared,
                          const FlowOptions& options, LpProblem* lp_out);

}  // namespace evflow

#endif  // EVFLOW_FLOW_LP_H_
