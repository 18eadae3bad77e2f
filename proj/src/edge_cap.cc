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

#include "evflow/edge_cap.h"

#include <algorithm>
#include <functional>
#include <queue>
#include <tuple>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"

namespace evflow {
namespace {

// Step size of the battery lattice: every d, threshold and L is a multiple.
Rational LatticeStep(const ChargingNetwork& network) {
  std::vector<Rational> values = network.curve().thresholds();
  for (const Edge& e : network.edges()) values.push_back(e.battery);
  return *RationalGcd(values);
}

}  // namespace

PricingResult PriceStrategy(const ChargingNetwork& network, int od,
                            std::span<const Rational> charge_price,
                            std::span<const Rational> edge_price,
                            bool with_costs) {
  const Rational delta = LatticeStep(network);
  const Rational levels_q = network.battery_capacity() / delta;
  const int top = static_cast<int>(levels_q.get_num().get_si());
  const int width = top + 1;
  const int n = network.num_nodes();
  const int J = network.num_intervals();
  const OdPair& pair = network.od_pairs()[od];

  auto id = [&](int v, int level) { return v * width + level; };
  std::vector<std::optional<Rational>> dist(static_cast<size_t>(n) * width);
  std::vector<int> pred(dist.size(), -1);
  std::vector<int> pred_edge(dist.size(), -1);  // -1 marks a charging step
  std::vector<int> best_settled(n, -1);

  using Item = std::tuple<Rational, int, int>;  // cost, node, -level
  std::priority_queue<Item, std::vector<Item>, std::greater<Item>> heap;
  dist[id(pair.origin, top)] = Rational(0);
  heap.push({Rational(0), pair.origin, -top});
  int goal = -1;
  while (!heap.empty()) {
    auto [cost, v, neg_level] = heap.top();
    heap.pop();
    const int level = -neg_level;
    if (*dist[id(v, level)] < cost) continue;
    if (level <= best_settled[v]) continue;  // dominated
    best_settled[v] = level;
    if (v == pair.destination) {
      goal = id(v, level);
      break;
    }
    auto relax = [&](int w, int next_level, const Rational& step, int edge) {
      int target = id(w, next_level);
      Rational cand = cost + step;
      if (dist[target] && *dist[target] <= cand) return;
      dist[target] = cand;
      pred[target] = id(v, level);
      pred_edge[target] = edge;
      heap.push({cand, w, -next_level});
    };
    for (int e : network.out_edges(v)) {
      const Edge& edge = network.edges()[e];
      Rational steps_q = edge.battery / delta;
      int steps = static_cast<int>(steps_q.get_num().get_si());
      if (steps > level) continue;
      Rational step = edge_price[e];
      if (with_costs) step += edge.time;
      relax(edge.head, level - steps, step, e);
    }
    int station = network.StationIndexAt(v);
    if (station >= 0 && level < top) {
      const Station& st = network.stations()[station];
      int j = network.curve().IntervalOf(delta * level);
      if (!IsZero(st.speeds[j])) {
        Rational unit = charge_price[station * J + j];
        if (with_costs) unit += *st.UnitCost(j);
        relax(v, level + 1, unit * delta, -1);
      }
    }
  }

  PricingResult result;
  if (goal < 0) return result;
  result.value = *dist[goal];
  std::vector<int> trail;  // edge index, or -1 for a charging step
  for (int s = goal; pred[s] >= 0; s = pred[s]) trail.push_back(pred_edge[s]);
  std::reverse(trail.begin(), trail.end());
  ChargingStrategy strategy;
  strategy.od = od;
  strategy.origin = pair.origin;
  strategy.initial_battery = network.battery_capacity();
  strategy.charge.push_back(Rational(0));
  for (int step : trail) {
    if (step < 0) {
      strategy.charge.back() += delta;
    } else {
      strategy.edges.push_back(step);
      strategy.charge.push_back(Rational(0));
    }
  }
  result.strategy = std::move(strategy);
  return result;
}

namespace {

struct Column {
  ChargingStrategy strategy;
  std::vector<Rational> charge;  // per station * J + interval
  std::vector<int> edge_count;   // per original edge
  Rational cost;
};

Column MakeColumn(const ChargingNetwork& network, ChargingStrategy strategy) {
  Column col;
  const int J = network.num_intervals();
  col.charge.assign(network.stations().size() * J, Rational(0));
  col.edge_count.assign(network.edges().size(), 0);
  for (int e : strategy.edges) ++col.edge_count[e];
  StrategyCost cost = *EvaluateStrategy(network, strategy);
  for (const StopTrace& stop : cost.stops) {
    int i = network.StationIndexAt(stop.node);
    for (int j = 0; j < J; ++j) col.charge[i * J + j] += stop.split[j];
  }
  col.cost = cost.total;
  col.strategy = std::move(strategy);
  return col;
}

bool SameColumn(const Column& a, const Column& b) {
  return a.strategy.od == b.strategy.od && a.strategy.edges == b.strategy.edges &&
         a.strategy.charge == b.strategy.charge;
}

struct Master {
  LpProblem problem;
  std::vector<int> column_var;
  std::vector<int> alloc_var;
  std::vector<int> charge_row;   // per station * J + interval
  std::vector<int> station_row;  // per station
  std::vector<int> edge_row;     // per original edge, -1 when uncapacitated
  std::vector<int> demand_row;   // per od (min-cost)
};

Master BuildMaster(const ChargingNetwork& network,
                   const std::vector<Column>& columns, bool min_cost) {
  Master m;
  LpProblem& p = m.problem;
  p.sense = min_cost ? Sense::kMinimize : Sense::kMaximize;
  const int J = network.num_intervals();
  const int num_stations = static_cast<int>(network.stations().size());
  for (size_t c = 0; c < columns.size(); ++c) {
    m.column_var.push_back(p.AddVariable(
        absl::StrCat("x", c), min_cost ? columns[c].cost : Rational(1)));
  }
  for (int i = 0; i < num_stations; ++i) {
    for (int j = 0; j < J; ++j) {
      m.alloc_var.push_back(p.AddVariable(absl::StrCat(
          "z_", network.label(network.stations()[i].node), "_", j + 1)));
    }
  }
  for (int i = 0; i < num_stations; ++i) {
    const Station& st = network.stations()[i];
    for (int j = 0; j < J; ++j) {
      std::vector<std::pair<int, Rational>> row;
      for (size_t c = 0; c < columns.size(); ++c) {
        const Rational& q = columns[c].charge[i * J + j];
        if (!IsZero(q)) row.push_back({m.column_var[c], q});
      }
      row.push_back({m.alloc_var[i * J + j], -st.speeds[j]});
      m.charge_row.push_back(p.AddRow(
          absl::StrCat("cap_", network.label(st.node), "_", j + 1), row,
          RowType::kLessEqual, Rational(0)));
    }
  }
  for (int i = 0; i < num_stations; ++i) {
    std::vector<std::pair<int, Rational>> row;
    for (int j = 0; j < J; ++j) row.push_back({m.alloc_var[i * J + j], 1});
    const Station& st = network.stations()[i];
    m.station_row.push_back(p.AddRow(absl::StrCat("chargers_", network.label(st.node)),
                                     row, RowType::kEqual,
                                     Rational(st.chargers)));
  }
  m.edge_row.assign(network.edges().size(), -1);
  for (size_t e = 0; e < network.edges().size(); ++e) {
    const Edge& edge = network.edges()[e];
    if (!edge.capacity) continue;
    std::vector<std::pair<int, Rational>> row;
    for (size_t c = 0; c < columns.size(); ++c) {
      if (columns[c].edge_count[e] > 0) {
        row.push_back({m.column_var[c], Rational(columns[c].edge_count[e])});
      }
    }
    m.edge_row[e] = p.AddRow(absl::StrCat("edge", e), row, RowType::kLessEqual,
                             *edge.capacity);
  }
  if (min_cost) {
    for (size_t k = 0; k < network.od_pairs().size(); ++k) {
      std::vector<std::pair<int, Rational>> row;
      for (size_t c = 0; c < columns.size(); ++c) {
        if (columns[c].strategy.od == static_cast<int>(k)) {
          row.push_back({m.column_var[c], 1});
        }
      }
      m.demand_row.push_back(p.AddRow(absl::StrCat("demand", k), row,
                                      RowType::kGreaterEqual,
                                      network.od_pairs()[k].demand));
    }
  }
  return m;
}

// Zero-charge route within L over uncapacitated edges, if any.
std::optional<std::vector<int>> FreeRoute(const ChargingNetwork& network,
                                          int od) {
  const OdPair& pair = network.od_pairs()[od];
  const int n = network.num_nodes();
  std::vector<std::optional<Rational>> dist(n);
  std::vector<int> pred(n, -1);
  using Item = std::pair<Rational, int>;
  std::priority_queue<Item, std::vector<Item>, std::greater<Item>> heap;
  dist[pair.origin] = Rational(0);
  heap.push({Rational(0), pair.origin});
  while (!heap.empty()) {
    auto [d, v] = heap.top();
    heap.pop();
    if (*dist[v] < d) continue;
    for (int e : network.out_edges(v)) {
      const Edge& edge = network.edges()[e];
      if (edge.capacity) continue;
      Rational cand = d + edge.battery;
      if (dist[edge.head] && *dist[edge.head] <= cand) continue;
      dist[edge.head] = cand;
      pred[edge.head] = e;
      heap.push({cand, edge.head});
    }
  }
  if (!dist[pair.destination] ||
      *dist[pair.destination] > network.battery_capacity()) {
    return std::nullopt;
  }
  std::vector<int> path;
  for (int v = pair.destination; v != pair.origin;) {
    path.push_back(pred[v]);
    v = network.edges()[pred[v]].tail;
  }
  std::reverse(path.begin(), path.end());
  return path;
}

Rational Clamp(const Rational& v) { return v < 0 ? Rational(0) : v; }

FlowSolution SolveCapacitated(const ChargingNetwork& network,
                              const CapacitatedOptions& options, bool min_cost,
                              LpProblem* lp_out) {
  FlowSolution out;
  const int num_od = static_cast<int>(network.od_pairs().size());
  const int J = network.num_intervals();
  const size_t num_copies = network.stations().size() * J;
  if (!min_cost) {
    for (int k = 0; k < num_od; ++k) {
      if (auto path = FreeRoute(network, k)) {
        out.status = FlowStatus::kUnbounded;
        out.unbounded.push_back({k, *path});
        std::string text = network.label(network.od_pairs()[k].origin);
        for (int e : *path) {
          absl::StrAppend(&text, " -> ", network.label(network.edges()[e].head));
        }
        out.message = absl::StrCat("OD pair ", k, " is unbounded: ", text,
                                   " needs no charging and no capacity");
        return out;
      }
    }
  }
  const Rational one_plus = 1 + options.epsilon;
  std::vector<Column> columns;
  std::vector<bool> reachable(num_od, true);
  LpSolution sol;
  Master master;
  for (int round = 0;; ++round) {
    if (round >= options.max_rounds) {
      out.status = FlowStatus::kSolverLimit;
      out.message = "column generation round limit reached";
      return out;
    }
    master = BuildMaster(network, columns, min_cost);
    sol = SolveLp(master.problem, options.lp);
    out.iterations += sol.iterations;
    std::vector<Rational> charge_price(num_copies), edge_price(network.edges().size());
    std::vector<Rational> threshold(num_od);
    bool with_costs = min_cost;
    if (sol.status == LpStatus::kInfeasible) {
      with_costs = false;
      for (size_t c = 0; c < num_copies; ++c) {
        charge_price[c] = Clamp(-sol.farkas[master.charge_row[c]]);
      }
      for (size_t e = 0; e < network.edges().size(); ++e) {
        if (master.edge_row[e] >= 0) edge_price[e] = Clamp(-sol.farkas[master.edge_row[e]]);
      }
      for (int k = 0; k < num_od; ++k) threshold[k] = sol.farkas[master.demand_row[k]];
    } else if (sol.status == LpStatus::kOptimal) {
      const int sign = min_cost ? -1 : 1;
      for (size_t c = 0; c < num_copies; ++c) {
        charge_price[c] = Clamp(sign * sol.duals[master.charge_row[c]]);
      }
      for (size_t e = 0; e < network.edges().size(); ++e) {
        if (master.edge_row[e] >= 0) {
          edge_price[e] = Clamp(sign * sol.duals[master.edge_row[e]]);
        }
      }
      for (int k = 0; k < num_od; ++k) {
        threshold[k] = min_cost ? Rational(sol.duals[master.demand_row[k]] / one_plus)
                                : Rational(1 / one_plus);
      }
    } else {
      out.status = sol.status == LpStatus::kIterationLimit
                       ? FlowStatus::kSolverLimit
                       : FlowStatus::kUnbounded;
      out.message = absl::StrCat("master LP ", LpStatusName(sol.status));
      return out;
    }

    bool added = false;
    for (int k = 0; k < num_od; ++k) {
      if (!reachable[k]) continue;
      PricingResult priced =
          PriceStrategy(network, k, charge_price, edge_price, with_costs);
      if (!priced.strategy) {
        reachable[k] = false;
        out.infeasible_od.push_back(k);
        continue;
      }
      if (!(priced.value < threshold[k])) continue;
      Column col = MakeColumn(network, *std::move(priced.strategy));
      bool duplicate = std::any_of(columns.begin(), columns.end(),
                                   [&](const Column& c) { return SameColumn(c, col); });
      if (duplicate) continue;
      columns.push_back(std::move(col));
      added = true;
    }
    if (!added) break;
  }
  if (lp_out != nullptr) *lp_out = master.problem;

  if (sol.status == LpStatus::kInfeasible) {
    out.status = FlowStatus::kInfeasible;
    out.message = "demand cannot be met";
    out.farkas = sol.farkas;
    return out;
  }
  out.objective = sol.objective;
  const int sign = min_cost ? -1 : 1;
  for (size_t c = 0; c < num_copies; ++c) {
    out.allocation.push_back(sol.x[master.alloc_var[c]]);
    out.pi.push_back(sign * sol.duals[master.charge_row[c]]);
  }
  for (int row : master.station_row) out.y.push_back(sol.duals[row]);
  for (int row : master.demand_row) out.phi.push_back(sol.duals[row]);
  for (size_t e = 0; e < network.edges().size(); ++e) {
    out.w.push_back(master.edge_row[e] >= 0
                        ? Rational(sign * sol.duals[master.edge_row[e]])
                        : Rational(0));
  }
  out.dual_objective = 0;
  for (int r = 0; r < master.problem.num_rows(); ++r) {
    out.dual_objective += master.problem.rows[r].rhs * sol.duals[r];
  }
  for (size_t c = 0; c < columns.size(); ++c) {
    const Rational& x = sol.x[master.column_var[c]];
    if (sgn(x) > 0) out.strategies.push_back({columns[c].strategy, x, {}});
  }
  return out;
}

}  // namespace

FlowSolution SolveCapacitatedMaxFlow(const ChargingNetwork& network,
                                     const CapacitatedOptions& options,
                                     LpProblem* lp_out) {
  FlowSolution out = SolveCapacitated(network, options, false, lp_out);
  if (out.status == FlowStatus::kOptimal &&
      out.infeasible_od.size() == network.od_pairs().size()) {
    out.status = FlowStatus::kInfeasible;
    out.message = "no OD pair has a feasible charging strategy";
  }
  return out;
}

FlowSolution SolveCapacitatedMinCost(const ChargingNetwork& network,
                                     const CapacitatedOptions& options,
                                     LpProblem* lp_out) {
  return SolveCapacitated(network, options, true, lp_out);
}

absl::StatusOr<NetworkSpec> PartitionInstance(std::span<const int64_t> values) {
  if (values.empty()) {
    return absl::InvalidArgumentError("need at least one value");
  }
  int64_t total = 0;
  for (int64_t z : values) {
    if (z < 0) return absl::InvalidArgumentError("values must be >= 0");
    total += z;
  }
  if (total == 0) return absl::InvalidArgumentError("values sum to zero");
  if (total % 2 != 0) {
    return absl::InvalidArgumentError(
        absl::StrCat("values sum to ", total, ", which is odd"));
  }
  const Rational L(total / 2);
  NetworkSpec spec;
  spec.battery_capacity = L;
  spec.thresholds = {Rational(0), L};
  const size_t n = values.size();
  spec.nodes.push_back("s");
  for (size_t k = 1; k < n; ++k) spec.nodes.push_back(std::to_string(k));
  spec.nodes.push_back("t");
  for (size_t k = 0; k < n; ++k) {
    const std::string& tail = spec.nodes[k];
    const std::string& head = spec.nodes[k + 1];
    Rational z(values[k]);
    spec.edges.push_back({tail, head, z, z, Rational(1)});
    spec.edges.push_back({tail, head, Rational(0), Rational(0), Rational(1)});
  }
  for (size_t k = 1; k < n; ++k) {
    spec.stations.push_back(
        {spec.nodes[k], 1, {Rational(0)}, {Rational(0)}, Rational(0), {}});
  }
  spec.od_pairs.push_back({"s", "t", Rational(2)});
  return spec;
}

}  // namespace evflow
