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

#include "evflow/single_router.h"

#include <algorithm>
#include <functional>
#include <map>
#include <queue>
#include <tuple>
#include <utility>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"

namespace evflow {

std::vector<int> ChargingStrategy::Nodes(const ChargingNetwork& network) const {
  std::vector<int> nodes = {origin};
  for (int e : edges) nodes.push_back(network.edges()[e].head);
  return nodes;
}

std::vector<Rational> SplitCharge(const ChargingCurve& curve,
                                  const Rational& from, const Rational& to) {
  std::vector<Rational> split(curve.num_intervals());
  for (int j = 0; j < curve.num_intervals(); ++j) {
    Rational lo = std::max(from, curve.lower(j));
    Rational hi = std::min(to, curve.upper(j));
    if (hi > lo) split[j] = hi - lo;
  }
  return split;
}

absl::StatusOr<StrategyCost> EvaluateStrategy(
    const ChargingNetwork& network, const ChargingStrategy& strategy) {
  std::vector<int> nodes = strategy.Nodes(network);
  if (strategy.charge.size() != nodes.size()) {
    return absl::InvalidArgumentError(
        absl::StrCat("charge vector has ", strategy.charge.size(),
                     " entries for a path of ", nodes.size(), " nodes"));
  }
  const Rational& L = network.battery_capacity();
  StrategyCost cost;
  Rational battery = strategy.initial_battery;
  for (size_t p = 0; p < nodes.size(); ++p) {
    const std::string& label = network.label(nodes[p]);
    if (p > 0) {
      const Edge& edge = network.edges()[strategy.edges[p - 1]];
      battery -= edge.battery;
      cost.drive_time += edge.time;
    }
    if (battery < 0) {
      return absl::FailedPreconditionError(
          absl::StrCat("battery ", FormatRational(battery),
                       " below zero on arrival at node \"", label, "\""));
    }
    const Rational& q = strategy.charge[p];
    if (q < 0) {
      return absl::FailedPreconditionError(absl::StrCat(
          "negative charge at node \"", label, "\" (position ", p, ")"));
    }
    if (IsZero(q)) continue;
    int station = network.StationIndexAt(nodes[p]);
    if (station < 0) {
      return absl::FailedPreconditionError(
          absl::StrCat("charging at node \"", label, "\" without chargers"));
    }
    if (battery + q > L) {
      return absl::FailedPreconditionError(
          absl::StrCat("battery ", FormatRational(battery + q),
                       " above capacity after charging at node \"", label,
                       "\""));
    }
    const Station& st = network.stations()[station];
    StopTrace stop{static_cast<int>(p), nodes[p], battery, battery + q,
                   SplitCharge(network.curve(), battery, battery + q)};
    for (int j = 0; j < network.num_intervals(); ++j) {
      if (IsZero(stop.split[j])) continue;
      if (IsZero(st.speeds[j])) {
        return absl::FailedPreconditionError(
            absl::StrCat("charging in zero-speed interval ", j + 1,
                         " at node \"", label, "\""));
      }
      Rational time = stop.split[j] / st.speeds[j];
      cost.charge_time += time;
      cost.money += st.prices[j] * stop.split[j] + st.occupancy_price * time;
    }
    battery += q;
    cost.stops.push_back(std::move(stop));
  }
  cost.final_battery = battery;
  cost.total = cost.drive_time + cost.charge_time + cost.money;
  return cost;
}

namespace {

bool Cheaper(const ExtendedCost& a, const ExtendedCost& b) {
  if (!a) return false;
  if (!b) return true;
  return *a < *b;
}

struct Move {
  int aux_edge;
  Rational charge;
  Rational arrival;
  Rational cost;
};

// Moves out of (u, b) toward destination `target`.
std::vector<Move> Moves(const AuxiliaryNetwork& aux, int u, const Rational& b,
                        int target) {
  std::vector<Move> moves;
  const AuxNode& from = aux.node(u);
  if (from.kind == AuxKind::kDestination) return moves;
  const bool is_copy = from.kind == AuxKind::kCopy;
  auto push = [&](int e, const Rational& x, const Rational& arrival) {
    const AuxEdge& edge = aux.edges()[e];
    Rational cost = edge.time;
    if (!IsZero(x)) {
      if (!is_copy || !from.unit_cost || x < 0 || b + x > from.upper) return;
      cost += *from.unit_cost * x;
    }
    moves.push_back({e, x, arrival, cost});
  };
  for (int e : aux.out_edges(u)) {
    const AuxEdge& edge = aux.edges()[e];
    const AuxNode& to = aux.node(edge.head);
    if (to.kind == AuxKind::kOrigin) continue;
    if (to.kind == AuxKind::kDestination) {
      if (edge.head != target) continue;
      Rational x = edge.battery > b ? Rational(edge.battery - b) : Rational(0);
      push(e, x, b + x - edge.battery);
      continue;
    }
    // Pass through without charging.
    Rational coast = b - edge.battery;
    if (coast >= to.lower && coast <= to.upper) push(e, Rational(0), coast);
    if (!is_copy) continue;
    if (Cheaper(to.unit_cost, from.unit_cost)) {
      Rational x = edge.battery + to.lower - b;
      if (x > 0) push(e, x, to.lower);
    } else {
      Rational x = from.upper - b;
      Rational arrival = from.upper - edge.battery;
      if (x > 0 && arrival >= to.lower && arrival <= to.upper) {
        push(e, x, arrival);
      }
    }
  }
  return moves;
}

ChargingStrategy Expand(const AuxiliaryNetwork& aux, int start,
                        const Rational& battery, int od,
                        const std::vector<RouteStep>& steps) {
  ChargingStrategy s;
  s.od = od;
  s.origin = aux.node(start).node;
  s.initial_battery = battery;
  s.charge.push_back(Rational(0));
  for (const RouteStep& step : steps) {
    const AuxEdge& edge = aux.edges()[step.aux_edge];
    s.charge.back() += step.charge;
    int from = aux.node(edge.tail).node;
    int to = aux.node(edge.head).node;
    if (from == to) continue;
    for (int e : aux.closure().PathEdges(from, to)) {
      s.edges.push_back(e);
      s.charge.push_back(Rational(0));
    }
  }
  return s;
}

}  // namespace

std::optional<Route> RouteFrom(const AuxiliaryNetwork& aux, int start,
                               const Rational& battery, int od) {
  using StateKey = std::pair<int, Rational>;
  std::map<StateKey, int> index;
  std::vector<StateKey> states;
  std::vector<std::optional<Rational>> dist;
  std::vector<bool> settled;
  std::vector<int> pred;
  std::vector<RouteStep> pred_step;
  auto state_of = [&](int u, const Rational& b) {
    auto [it, fresh] = index.emplace(StateKey{u, b}, states.size());
    if (fresh) {
      states.push_back({u, b});
      dist.push_back(std::nullopt);
      settled.push_back(false);
      pred.push_back(-1);
      pred_step.push_back({});
    }
    return it->second;
  };

  const int target = aux.Destination(od);
  using Item = std::tuple<Rational, int, Rational, int>;
  std::priority_queue<Item, std::vector<Item>, std::greater<Item>> heap;
  int source = state_of(start, battery);
  dist[source] = Rational(0);
  heap.push({Rational(0), start, battery, source});
  int goal = -1;
  while (!heap.empty()) {
    auto [cost, u, b, id] = heap.top();
    heap.pop();
    if (settled[id]) continue;
    settled[id] = true;
    if (u == target) {
      goal = id;
      break;
    }
    for (const Move& m : Moves(aux, u, b, target)) {
      int v = aux.edges()[m.aux_edge].head;
      int next = state_of(v, m.arrival);
      if (settled[next]) continue;
      Rational cand = cost + m.cost;
      if (!dist[next] || cand < *dist[next]) {
        dist[next] = cand;
        pred[next] = id;
        pred_step[next] = {m.aux_edge, m.charge};
        heap.push({cand, v, m.arrival, next});
      }
    }
  }
  if (goal < 0) return std::nullopt;

  Route route;
  route.cost = *dist[goal];
  for (int v = goal; v != source; v = pred[v]) route.steps.push_back(pred_step[v]);
  std::reverse(route.steps.begin(), route.steps.end());
  route.strategy = Expand(aux, start, battery, od, route.steps);
  return route;
}

absl::StatusOr<Route> RouteSingle(const ChargingNetwork& network,
                                  const AuxiliaryNetwork& aux, int od) {
  if (od < 0 || od >= aux.num_od_pairs()) {
    return absl::InvalidArgumentError(absl::StrCat("no OD pair ", od));
  }
  std::optional<Route> route = RouteFrom(aux, aux.Origin(od),
                                         aux.battery_capacity(), od);
  if (!route) {
    const OdPair& pair = network.od_pairs()[od];
    return absl::NotFoundError(absl::StrCat(
        "no feasible charging strategy from \"", network.label(pair.origin),
        "\" to \"", network.label(pair.destination), "\""));
  }
  return *std::move(route);
}

}  // namespace evflow
