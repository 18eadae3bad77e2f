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

#include "evflow/oracle.h"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <tuple>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"

namespace evflow {
namespace {

absl::Status Exhausted(std::string_view what) {
  return absl::ResourceExhaustedError(
      absl::StrCat("enumeration cap exceeded: ", std::string(what)));
}

// Calls `visit` with the edge list of every origin-destination walk in
// which a node repeats only with a station strictly after its earlier visit
// and before the repeat, and no stretch between stations uses more than L.
absl::Status ForEachWalk(
    const ChargingNetwork& network, int od, const EnumerationCaps& caps,
    const std::function<absl::Status(const std::vector<int>&)>& visit) {
  const OdPair& pair = network.od_pairs()[od];
  const Rational& L = network.battery_capacity();
  std::vector<int> visits(network.stations().size(), 0);
  std::vector<int> edges;
  // `recent` holds the nodes seen since the last station (inclusive).
  std::function<absl::Status(int, std::vector<bool>&, const Rational&)> dfs =
      [&](int v, std::vector<bool>& recent,
          const Rational& stretch) -> absl::Status {
    if (v == pair.destination) {
      absl::Status s = visit(edges);
      if (!s.ok()) return s;
    }
    if (static_cast<int>(edges.size()) >= caps.max_path_edges) {
      return absl::OkStatus();
    }
    for (int e : network.out_edges(v)) {
      const Edge& edge = network.edges()[e];
      const int w = edge.head;
      if (recent[w]) continue;
      Rational used = stretch + edge.battery;
      if (used > L) continue;
      const int station = network.StationIndexAt(w);
      edges.push_back(e);
      absl::Status s;
      if (station >= 0) {
        if (visits[station] < caps.max_station_visits) {
          ++visits[station];
          std::vector<bool> fresh(network.num_nodes(), false);
          fresh[w] = true;
          s = dfs(w, fresh, Rational(0));
          --visits[station];
        }
      } else {
        recent[w] = true;
        s = dfs(w, recent, used);
        recent[w] = false;
      }
      edges.pop_back();
      if (!s.ok()) return s;
    }
    return absl::OkStatus();
  };
  std::vector<bool> recent(network.num_nodes(), false);
  recent[pair.origin] = true;
  return dfs(pair.origin, recent, Rational(0));
}

}  // namespace

absl::StatusOr<StrategyUniverse> EnumerateStrategies(
    const ChargingNetwork& network, int od, const EnumerationCaps& caps) {
  StrategyUniverse universe;
  universe.od = od;
  const Rational& L = network.battery_capacity();
  const std::vector<Rational>& alpha = network.curve().thresholds();

  auto per_walk = [&](const std::vector<int>& edges) -> absl::Status {
    const int m = static_cast<int>(edges.size());
    std::vector<int> nodes = {network.od_pairs()[od].origin};
    for (int e : edges) nodes.push_back(network.edges()[e].head);
    // dist[p] = battery used from node p to the end of the path.
    std::vector<Rational> to_end(m + 1, Rational(0));
    for (int p = m - 1; p >= 0; --p) {
      to_end[p] = to_end[p + 1] + network.edges()[edges[p]].battery;
    }
    std::vector<int> stops;
    for (int p = 0; p <= m; ++p) {
      if (network.StationIndexAt(nodes[p]) >= 0) stops.push_back(p);
    }
    ChargingStrategy base;
    base.od = od;
    base.origin = nodes[0];
    base.initial_battery = L;
    base.edges = edges;
    base.charge.assign(m + 1, Rational(0));

    // Recurse over stops; `battery` is the level on arrival at stops[s].
    std::function<absl::Status(size_t, Rational)> choose =
        [&](size_t s, Rational battery) -> absl::Status {
      if (s == stops.size()) {
        if (battery < 0) return absl::OkStatus();
        if (EvaluateStrategy(network, base).ok()) {
          if (static_cast<int64_t>(universe.strategies.size()) >=
              caps.max_count) {
            return Exhausted("strategy count");
          }
          universe.strategies.push_back(base);
        }
        return absl::OkStatus();
      }
      const int p = stops[s];
      if (battery < 0) return absl::OkStatus();
      std::set<Rational> targets = {battery};
      for (const Rational& a : alpha) targets.insert(a);
      for (size_t later = s + 1; later < stops.size(); ++later) {
        Rational d = to_end[p] - to_end[stops[later]];
        for (const Rational& a : alpha) targets.insert(a + d);
      }
      targets.insert(to_end[p]);
      for (const Rational& out : targets) {
        if (out < battery || out > L) continue;
        base.charge[p] = out - battery;
        Rational next = s + 1 < stops.size()
                            ? Rational(out - (to_end[p] - to_end[stops[s + 1]]))
                            : Rational(out - to_end[p]);
        absl::Status st = choose(s + 1, next);
        base.charge[p] = 0;
        if (!st.ok()) return st;
      }
      return absl::OkStatus();
    };
    Rational first = stops.empty() ? Rational(L - to_end[0])
                                   : Rational(L - (to_end[0] - to_end[stops[0]]));
    return choose(0, first);
  };
  absl::Status s = ForEachWalk(network, od, caps, per_walk);
  if (!s.ok()) return s;
  return universe;
}

absl::StatusOr<SingleOptimum> BruteSingleOpt(const ChargingNetwork& network,
                                             const StrategyUniverse& universe) {
  std::optional<SingleOptimum> best;
  for (const ChargingStrategy& s : universe.strategies) {
    absl::StatusOr<StrategyCost> cost = EvaluateStrategy(network, s);
    if (!cost.ok()) continue;
    if (!best || cost->total < best->cost) best = SingleOptimum{cost->total, s};
  }
  if (!best) return absl::NotFoundError("no feasible charging strategy");
  return *std::move(best);
}

absl::StatusOr<Rational> GridSingleOpt(const ChargingNetwork& network, int od,
                                       const EnumerationCaps& caps) {
  std::vector<Rational> values = network.curve().thresholds();
  for (const Edge& e : network.edges()) values.push_back(e.battery);
  const Rational delta = *RationalGcd(values);
  const Rational& L = network.battery_capacity();
  const int top = static_cast<int>(Rational(L / delta).get_num().get_si());
  std::optional<Rational> best;

  auto per_walk = [&](const std::vector<int>& edges) -> absl::Status {
    std::vector<int> nodes = {network.od_pairs()[od].origin};
    for (int e : edges) nodes.push_back(network.edges()[e].head);
    // cost[level] = cheapest cost of arriving at the current node with
    // battery level * delta.
    std::map<int, Rational> cost = {{top, Rational(0)}};
    for (size_t p = 0; p < nodes.size(); ++p) {
      if (p > 0) {
        const Edge& edge = network.edges()[edges[p - 1]];
        int steps = static_cast<int>(Rational(edge.battery / delta).get_num().get_si());
        std::map<int, Rational> moved;
        for (const auto& [level, c] : cost) {
          if (level >= steps) moved[level - steps] = c + edge.time;
        }
        cost = std::move(moved);
      }
      int station = network.StationIndexAt(nodes[p]);
      if (station < 0 || p + 1 == nodes.size()) continue;
      const Station& st = network.stations()[station];
      std::map<int, Rational> charged = cost;
      for (const auto& [level, c] : cost) {
        Rational acc = c;
        for (int next = level + 1; next <= top; ++next) {
          int j = network.curve().IntervalOf(delta * (next - 1));
          std::optional<Rational> unit = st.UnitCost(j);
          if (!unit) break;
          acc += *unit * delta;
          auto it = charged.find(next);
          if (it == charged.end() || acc < it->second) charged[next] = acc;
        }
      }
      cost = std::move(charged);
    }
    for (const auto& [level, c] : cost) {
      if (!best || c < *best) best = c;
    }
    return absl::OkStatus();
  };
  absl::Status s = ForEachWalk(network, od, caps, per_walk);
  if (!s.ok()) return s;
  if (!best) return absl::NotFoundError("no feasible charging strategy");
  return *best;
}

namespace {

struct BruteColumn {
  int od = -1;
  std::vector<Rational> charge;  // per station * J + interval
  std::vector<int> edge_count;
  Rational cost;
};

bool Dominates(const BruteColumn& a, const BruteColumn& b, bool edge_caps,
               bool min_cost) {
  if (a.od != b.od) return false;
  for (size_t c = 0; c < a.charge.size(); ++c) {
    if (a.charge[c] > b.charge[c]) return false;
  }
  if (edge_caps) {
    for (size_t e = 0; e < a.edge_count.size(); ++e) {
      if (a.edge_count[e] > b.edge_count[e]) return false;
    }
  }
  if (min_cost && a.cost > b.cost) return false;
  return true;
}

}  // namespace

BruteFlowResult BruteFlow(const ChargingNetwork& network,
                          const std::vector<StrategyUniverse>& universes,
                          BruteProblem problem, bool edge_caps) {
  const bool min_cost = problem == BruteProblem::kMinCost;
  const int J = network.num_intervals();
  const int num_stations = static_cast<int>(network.stations().size());
  std::vector<BruteColumn> all;
  for (const StrategyUniverse& u : universes) {
    for (const ChargingStrategy& s : u.strategies) {
      BruteColumn col;
      col.od = u.od;
      col.charge.assign(num_stations * J, Rational(0));
      col.edge_count.assign(network.edges().size(), 0);
      for (int e : s.edges) ++col.edge_count[e];
      StrategyCost cost = *EvaluateStrategy(network, s);
      for (const StopTrace& stop : cost.stops) {
        int i = network.StationIndexAt(stop.node);
        for (int j = 0; j < J; ++j) col.charge[i * J + j] += stop.split[j];
      }
      col.cost = cost.total;
      all.push_back(std::move(col));
    }
  }
  // Identical usage vectors collapse to the first (cheapest, for min-cost)
  // column; then dominated columns go.
  std::map<std::tuple<int, std::vector<Rational>, std::vector<int>>, size_t>
      first;
  std::vector<BruteColumn> unique;
  for (BruteColumn& col : all) {
    auto key = std::make_tuple(col.od, col.charge,
                               edge_caps ? col.edge_count : std::vector<int>());
    auto [it, inserted] = first.try_emplace(key, unique.size());
    if (inserted) {
      unique.push_back(std::move(col));
    } else if (min_cost && col.cost < unique[it->second].cost) {
      unique[it->second] = std::move(col);
    }
  }
  // A dominating column has a strictly smaller total, so scanning by total
  // only needs the frontier found so far.
  auto total = [&](const BruteColumn& c) {
    Rational t = min_cost ? c.cost : Rational(0);
    for (const Rational& q : c.charge) t += q;
    if (edge_caps) {
      for (int n : c.edge_count) t += n;
    }
    return t;
  };
  std::vector<std::pair<Rational, size_t>> order;
  for (size_t i = 0; i < unique.size(); ++i) order.push_back({total(unique[i]), i});
  std::stable_sort(order.begin(), order.end(),
                   [](const auto& x, const auto& y) { return x.first < y.first; });
  std::vector<size_t> frontier;
  for (const auto& [t, i] : order) {
    bool dominated = std::any_of(frontier.begin(), frontier.end(), [&](size_t f) {
      return Dominates(unique[f], unique[i], edge_caps, min_cost);
    });
    if (!dominated) frontier.push_back(i);
  }
  std::sort(frontier.begin(), frontier.end());
  std::vector<BruteColumn> kept;
  for (size_t i : frontier) kept.push_back(std::move(unique[i]));

  LpProblem lp;
  lp.sense = min_cost ? Sense::kMinimize : Sense::kMaximize;
  std::vector<int> x;
  for (size_t c = 0; c < kept.size(); ++c) {
    x.push_back(lp.AddVariable(absl::StrCat("x", c),
                               min_cost ? kept[c].cost : Rational(1)));
  }
  std::vector<int> z;
  for (int c = 0; c < num_stations * J; ++c) {
    z.push_back(lp.AddVariable(absl::StrCat("z", c)));
  }
  for (int i = 0; i < num_stations; ++i) {
    const Station& st = network.stations()[i];
    std::vector<std::pair<int, Rational>> alloc;
    for (int j = 0; j < J; ++j) {
      std::vector<std::pair<int, Rational>> row;
      for (size_t c = 0; c < kept.size(); ++c) {
        if (!IsZero(kept[c].charge[i * J + j])) {
          row.push_back({x[c], kept[c].charge[i * J + j]});
        }
      }
      row.push_back({z[i * J + j], -st.speeds[j]});
      lp.AddRow("serve", row, RowType::kLessEqual, Rational(0));
      alloc.push_back({z[i * J + j], Rational(1)});
    }
    lp.AddRow("alloc", alloc, RowType::kEqual, Rational(st.chargers));
  }
  if (edge_caps) {
    for (size_t e = 0; e < network.edges().size(); ++e) {
      if (!network.edges()[e].capacity) continue;
      std::vector<std::pair<int, Rational>> row;
      for (size_t c = 0; c < kept.size(); ++c) {
        if (kept[c].edge_count[e] > 0) row.push_back({x[c], kept[c].edge_count[e]});
      }
      lp.AddRow("edge", row, RowType::kLessEqual, *network.edges()[e].capacity);
    }
  }
  if (min_cost) {
    for (size_t k = 0; k < network.od_pairs().size(); ++k) {
      std::vector<std::pair<int, Rational>> row;
      for (size_t c = 0; c < kept.size(); ++c) {
        if (kept[c].od == static_cast<int>(k)) row.push_back({x[c], 1});
      }
      lp.AddRow("demand", row, RowType::kGreaterEqual,
                network.od_pairs()[k].demand);
    }
  }
  LpSolution sol = SolveLp(lp);
  BruteFlowResult result;
  result.status = sol.status;
  result.objective = sol.objective;
  result.columns = static_cast<int>(kept.size());
  return result;
}

}  // namespace evflow
