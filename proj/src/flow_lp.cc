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

#include "evflow/flow_lp.h"

#include <algorithm>
#include <map>

#include "absl/strings/str_cat.h"

namespace evflow {
namespace {

std::string CopyName(const ChargingNetwork& network, const AuxNode& copy) {
  return absl::StrCat(network.label(copy.node), "_", copy.interval + 1);
}

// Whether commodity `od` may use augmented edge `e`.
bool UsableBy(const AuxiliaryNetwork& aux, const AugmentedGraph& graph,
              int od, int e) {
  const AugEdge& edge = graph.edges()[e];
  for (int v : {edge.tail, edge.head}) {
    const AuxNode& a = aux.node(graph.node(v).aux);
    if (a.kind != AuxKind::kCopy && a.od != od) return false;
  }
  return true;
}

FlowLp BuildFlowLp(const ChargingNetwork& network, const AuxiliaryNetwork& aux,
                   const AugmentedGraph& graph, bool min_cost) {
  FlowLp lp;
  LpProblem& p = lp.problem;
  FlowLpLayout& layout = lp.layout;
  p.sense = min_cost ? Sense::kMinimize : Sense::kMaximize;
  const int num_od = graph.num_od_pairs();
  const int num_edges = static_cast<int>(graph.edges().size());

  layout.flow_var.assign(num_od, std::vector<int>(num_edges, -1));
  for (int k = 0; k < num_od; ++k) {
    for (int e = 0; e < num_edges; ++e) {
      const AugEdge& edge = graph.edges()[e];
      if (!UsableBy(aux, graph, k, e)) continue;
      if (min_cost && !edge.cost) continue;
      Rational cost = 0;
      if (min_cost) {
        cost = *edge.cost;
      } else if (edge.head == graph.Destination(k)) {
        cost = 1;
      }
      layout.flow_var[k][e] = p.AddVariable(absl::StrCat("f", k, "_", e), cost);
    }
  }
  layout.alloc_var.assign(aux.num_copies(), -1);
  for (int c = 0; c < aux.num_copies(); ++c) {
    layout.alloc_var[c] =
        p.AddVariable(absl::StrCat("z_", CopyName(network, aux.node(c))));
  }

  // Charge served at each copy is bounded by its speed times its chargers.
  layout.capacity_row.assign(aux.num_copies(), -1);
  std::vector<std::vector<std::pair<int, Rational>>> cap(aux.num_copies());
  for (int e = 0; e < num_edges; ++e) {
    const AugEdge& edge = graph.edges()[e];
    if (edge.type != AugEdgeType::kCharge) continue;
    for (int k = 0; k < num_od; ++k) {
      if (layout.flow_var[k][e] >= 0) {
        cap[edge.copy].push_back({layout.flow_var[k][e], edge.lambda});
      }
    }
  }
  for (int c = 0; c < aux.num_copies(); ++c) {
    const AuxNode& copy = aux.node(c);
    const Rational& r = network.stations()[copy.station].speeds[copy.interval];
    cap[c].push_back({layout.alloc_var[c], -r});
    layout.capacity_row[c] =
        p.AddRow(absl::StrCat("cap_", CopyName(network, copy)), cap[c],
                 RowType::kLessEqual, Rational(0));
  }
  layout.station_row.assign(network.stations().size(), -1);
  for (int i = 0; i < static_cast<int>(network.stations().size()); ++i) {
    std::vector<std::pair<int, Rational>> row;
    for (int j = 0; j < aux.num_intervals(); ++j) {
      row.push_back({layout.alloc_var[aux.Copy(i, j)], Rational(1)});
    }
    const Station& st = network.stations()[i];
    layout.station_row[i] =
        p.AddRow(absl::StrCat("chargers_", network.label(st.node)), row,
                 RowType::kEqual, Rational(st.chargers));
  }
  layout.conservation_row.assign(num_od,
                                 std::vector<int>(graph.num_nodes(), -1));
  for (int k = 0; k < num_od; ++k) {
    for (int v = 0; v < graph.num_nodes(); ++v) {
      if (aux.node(graph.node(v).aux).kind != AuxKind::kCopy) continue;
      std::vector<std::pair<int, Rational>> row;
      for (int e : graph.in_edges(v)) {
        if (layout.flow_var[k][e] >= 0) row.push_back({layout.flow_var[k][e], 1});
      }
      for (int e : graph.out_edges(v)) {
        if (layout.flow_var[k][e] >= 0) row.push_back({layout.flow_var[k][e], -1});
      }
      layout.conservation_row[k][v] =
          p.AddRow(absl::StrCat("flow", k, "_", v), row, RowType::kEqual,
                   Rational(0));
    }
  }
  if (min_cost) {
    layout.demand_row.assign(num_od, -1);
    for (int k = 0; k < num_od; ++k) {
      std::vector<std::pair<int, Rational>> row;
      for (int e : graph.in_edges(graph.Destination(k))) {
        if (layout.flow_var[k][e] >= 0) row.push_back({layout.flow_var[k][e], 1});
      }
      layout.demand_row[k] =
          p.AddRow(absl::StrCat("demand", k), row, RowType::kGreaterEqual,
                   network.od_pairs()[k].demand);
    }
  }
  return lp;
}

std::string PathText(const ChargingNetwork& network,
                     const std::vector<int>& edges, int origin) {
  std::string text = network.label(origin);
  for (int e : edges) absl::StrAppend(&text, " -> ", network.label(network.edges()[e].head));
  return text;
}

void Extract(const FlowProblem& prepared,
             const FlowLp& lp, const LpSolution& sol,
             const FlowOptions& options, FlowSolution* out) {
  const AugmentedGraph& graph = prepared.graph;
  const AuxiliaryNetwork& aux = prepared.aux;
  const FlowLpLayout& layout = lp.layout;
  out->objective = sol.objective;
  out->iterations = sol.iterations;
  const int num_od = graph.num_od_pairs();
  out->edge_flow.assign(num_od,
                        std::vector<Rational>(graph.edges().size(), Rational(0)));
  for (int k = 0; k < num_od; ++k) {
    for (size_t e = 0; e < graph.edges().size(); ++e) {
      if (layout.flow_var[k][e] >= 0) {
        out->edge_flow[k][e] = sol.x[layout.flow_var[k][e]];
      }
    }
  }
  for (int c = 0; c < aux.num_copies(); ++c) {
    out->allocation.push_back(sol.x[layout.alloc_var[c]]);
    out->pi.push_back(sol.duals[layout.capacity_row[c]]);
  }
  for (int row : layout.station_row) out->y.push_back(sol.duals[row]);
  for (int row : layout.demand_row) out->phi.push_back(sol.duals[row]);
  out->dual_objective = 0;
  for (int r = 0; r < lp.problem.num_rows(); ++r) {
    out->dual_objective += lp.problem.rows[r].rhs * sol.duals[r];
  }
  Rational tol = options.lp.exact ? Rational(0) : Rational(options.lp.tolerance);
  Decomposition d = DecomposeFlow(aux, graph, out->edge_flow, tol);
  out->strategies = std::move(d.paths);
  out->cycle_flow = std::move(d.cycle_flow);
}

}  // namespace

FlowLp BuildMaxFlowLp(const ChargingNetwork& network,
                      const AuxiliaryNetwork& aux,
                      const AugmentedGraph& graph) {
  return BuildFlowLp(network, aux, graph, false);
}

FlowLp BuildMinCostLp(const ChargingNetwork& network,
                      const AuxiliaryNetwork& aux,
                      const AugmentedGraph& graph) {
  return BuildFlowLp(network, aux, graph, true);
}

ChargingStrategy StrategyOfPath(const AuxiliaryNetwork& aux,
                                const AugmentedGraph& graph, int od,
                                const std::vector<int>& aug_edges) {
  ChargingStrategy s;
  s.od = od;
  s.origin = aux.node(aux.Origin(od)).node;
  s.initial_battery = aux.battery_capacity();
  s.charge.push_back(Rational(0));
  for (int e : aug_edges) {
    const AugEdge& edge = graph.edges()[e];
    if (edge.type == AugEdgeType::kCharge) {
      s.charge.back() += edge.lambda;
      continue;
    }
    if (edge.type == AugEdgeType::kChain) continue;
    const AuxEdge& ae = aux.edges()[edge.aux_edge];
    int from = aux.node(ae.tail).node;
    int to = aux.node(ae.head).node;
    if (from == to) continue;
    for (int pe : aux.closure().PathEdges(from, to)) {
      s.edges.push_back(pe);
      s.charge.push_back(Rational(0));
    }
  }
  return s;
}

Decomposition DecomposeFlow(const AuxiliaryNetwork& aux,
                            const AugmentedGraph& graph,
                            const std::vector<std::vector<Rational>>& edge_flow,
                            const Rational& tolerance) {
  Decomposition out;
  const int num_od = static_cast<int>(edge_flow.size());
  for (int k = 0; k < num_od; ++k) {
    std::vector<Rational> flow = edge_flow[k];
    std::vector<Rational> cancelled(flow.size(), Rational(0));
    auto positive = [&](int e) { return flow[e] > tolerance; };
    auto take = [&](const std::vector<int>& edges) {
      Rational m = flow[edges.front()];
      for (int e : edges) m = std::min(m, flow[e]);
      for (int e : edges) {
        flow[e] -= m;
        if (flow[e] <= tolerance) {
          cancelled[e] += flow[e];
          flow[e] = 0;
        }
      }
      return m;
    };
    const int origin = graph.Origin(k);
    const int target = graph.Destination(k);
    bool stuck = false;
    while (!stuck) {
      std::vector<int> walk;
      std::map<int, int> position = {{origin, 0}};
      int cur = origin;
      while (cur != target) {
        int next_edge = -1;
        for (int e : graph.out_edges(cur)) {
          if (positive(e)) {
            next_edge = e;
            break;
          }
        }
        if (next_edge < 0) {
          stuck = true;
          break;
        }
        int next = graph.edges()[next_edge].head;
        auto seen = position.find(next);
        if (seen == position.end()) {
          walk.push_back(next_edge);
          position[next] = static_cast<int>(walk.size());
          cur = next;
          continue;
        }
        // Cancel the cycle closed by next_edge.
        std::vector<int> cycle(walk.begin() + seen->second, walk.end());
        cycle.push_back(next_edge);
        Rational m = take(cycle);
        for (int e : cycle) cancelled[e] += m;
        for (size_t q = seen->second; q < walk.size(); ++q) {
          position.erase(graph.edges()[walk[q]].head);
        }
        walk.resize(seen->second);
        cur = next;
        position[next] = seen->second;
      }
      if (stuck) break;
      StrategyFlow sf;
      sf.value = take(walk);
      sf.aug_edges = walk;
      sf.strategy = StrategyOfPath(aux, graph, k, walk);
      out.paths.push_back(std::move(sf));
    }
    for (size_t e = 0; e < flow.size(); ++e) cancelled[e] += flow[e];
    out.cycle_flow.push_back(std::move(cancelled));
  }
  return out;
}

FlowCheck VerifyFlow(const ChargingNetwork& network,
                     const std::vector<StrategyFlow>& flows) {
  FlowCheck check;
  const int J = network.num_intervals();
  check.stations.resize(network.stations().size());
  for (size_t i = 0; i < network.stations().size(); ++i) {
    check.stations[i].station = static_cast<int>(i);
    check.stations[i].charge.assign(J, Rational(0));
  }
  for (const StrategyFlow& f : flows) {
    absl::StatusOr<StrategyCost> cost = EvaluateStrategy(network, f.strategy);
    if (!cost.ok()) {
      check.feasible = false;
      continue;
    }
    for (const StopTrace& stop : cost->stops) {
      StationUsage& use = check.stations[network.StationIndexAt(stop.node)];
      for (int j = 0; j < J; ++j) use.charge[j] += f.value * stop.split[j];
    }
  }
  for (size_t i = 0; i < network.stations().size(); ++i) {
    const Station& st = network.stations()[i];
    StationUsage& use = check.stations[i];
    for (int j = 0; j < J; ++j) {
      if (IsZero(use.charge[j])) continue;
      if (IsZero(st.speeds[j])) {
        use.feasible = false;
        if (use.violation.empty()) {
          use.violation = absl::StrCat("charge ", FormatRational(use.charge[j]),
                                       " in zero-speed interval ", j + 1);
        }
        continue;
      }
      use.required += use.charge[j] / st.speeds[j];
    }
    use.slack = Rational(st.chargers) - use.required;
    if (use.slack < 0) {
      use.feasible = false;
      if (use.violation.empty()) {
        use.violation = absl::StrCat("needs ", FormatRational(use.required),
                                     " chargers, has ", st.chargers,
                                     " (excess ", FormatRational(-use.slack),
                                     ")");
      }
    }
    if (!use.feasible) check.feasible = false;
  }
  return check;
}

std::string FlowStatusName(FlowStatus status) {
  switch (status) {
    case FlowStatus::kOptimal:
      return "optimal";
    case FlowStatus::kInfeasible:
      return "infeasible";
    case FlowStatus::kUnbounded:
      return "unbounded";
    case FlowStatus::kAssumptionViolated:
      return "assumption_violated";
    case FlowStatus::kSolverLimit:
      return "iteration_limit";
  }
  return "unknown";
}

FlowProblem PrepareFlowProblem(const ChargingNetwork& network) {
  FlowProblem fp;
  fp.aux = AuxiliaryNetwork::Build(
      network, MetricClosure::Compute(network, Metric::kBatteryThenTime));
  fp.sets = ComputeLevelSets(fp.aux);
  fp.graph = AugmentedGraph::Build(fp.aux, fp.sets);
  return fp;
}

namespace {

bool RefuseUnbounded(const ChargingNetwork& network, const FlowProblem& fp,
                     FlowSolution* out) {
  out->unbounded = DetectUnbounded(network, fp.aux.closure());
  if (out->unbounded.empty()) return false;
  const UnboundedPair& u = out->unbounded.front();
  out->status = FlowStatus::kUnbounded;
  out->message = absl::StrCat(
      "OD pair ", u.od, " is unbounded: ",
      PathText(network, u.path_edges, network.od_pairs()[u.od].origin),
      " needs no charging");
  return true;
}

}  // namespace

FlowSolution SolveMaxFlow(const ChargingNetwork& network,
                          const FlowProblem& prepared,
                          const FlowOptions& options, LpProblem* lp_out) {
  FlowSolution out;
  if (RefuseUnbounded(network, prepared, &out)) return out;
  out.infeasible_od = prepared.graph.UnreachableOdPairs();
  FlowLp lp = BuildMaxFlowLp(network, prepared.aux, prepared.graph);
  if (out.infeasible_od.size() == network.od_pairs().size()) {
    if (lp_out != nullptr) *lp_out = lp.problem;
    out.status = FlowStatus::kInfeasible;
    out.message = "no OD pair has a feasible charging strategy";
    return out;
  }
  if (lp_out != nullptr) *lp_out = lp.problem;
  LpSolution sol = SolveLp(lp.problem, options.lp);
  if (sol.status != LpStatus::kOptimal) {
    out.status = sol.status == LpStatus::kIterationLimit
                     ? FlowStatus::kSolverLimit
                     : FlowStatus::kUnbounded;
    out.message = absl::StrCat("LP ", LpStatusName(sol.status));
    out.iterations = sol.iterations;
    return out;
  }
  Extract(prepared, lp, sol, options, &out);
  return out;
}

FlowSolution SolveMinCost(const ChargingNetwork& network,
                          const FlowProblem& prepared,
                          const FlowOptions& options, LpProblem* lp_out) {
  FlowSolution out;
  MetricAgreementReport agreement = CheckMetricAgreement(network);
  if (!agreement.holds) {
    out.status = FlowStatus::kAssumptionViolated;
    out.message = absl::StrCat(
        "battery-shortest and time-shortest paths differ from \"",
        network.label(agreement.from), "\" to \"",
        network.label(agreement.to), "\"");
    return out;
  }
  if (RefuseUnbounded(network, prepared, &out)) return out;
  out.infeasible_od = prepared.graph.UnreachableOdPairs();
  FlowLp lp = BuildMinCostLp(network, prepared.aux, prepared.graph);
  if (lp_out != nullptr) *lp_out = lp.problem;
  LpSolution sol = SolveLp(lp.problem, options.lp);
  out.iterations = sol.iterations;
  if (sol.status == LpStatus::kInfeasible) {
    out.status = FlowStatus::kInfeasible;
    out.message = "demand cannot be met";
    out.farkas = std::move(sol.farkas);
    return out;
  }
  if (sol.status != LpStatus::kOptimal) {
    out.status = sol.status == LpStatus::kIterationLimit
                     ? FlowStatus::kSolverLimit
                     : FlowStatus::kUnbounded;
    out.message = absl::StrCat("LP ", LpStatusName(sol.status));
    return out;
  }
  Extract(prepared, lp, sol, options, &out);
  return out;
}

}  // namespace evflow
