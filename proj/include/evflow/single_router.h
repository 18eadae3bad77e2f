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

// Charging strategies and the optimal single-vehicle router.
//
// A vehicle at a station copy either charges just enough to reach the next
// copy at its lower bound (when that copy is cheaper) or fills up to the top
// of the current copy. Searching over these moves from (s, L) finds an
// optimal strategy whenever battery-shortest paths are also time-shortest.

#ifndef EVFLOW_SINGLE_ROUTER_H_
#define EVFLOW_SINGLE_ROUTER_H_

#include <optional>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "evflow/metric_closure.h"
#include "evflow/network.h"
#include "evflow/rational.h"

namespace evflow {

// A path in the original network and the charge added at each of its nodes.
struct ChargingStrategy {
  int od = -1;
  int origin = -1;
  Rational initial_battery;
  std::vector<int> edges;
  std::vector<Rational> charge;  // one per node of the path (edges + 1)

  std::vector<int> Nodes(const ChargingNetwork& network) const;
};

struct StopTrace {
  int position = 0;  // index into Nodes()
  int node = -1;
  Rational arrival;
  Rational departure;
  std::vector<Rational> split;  // charge per interval
};

struct StrategyCost {
  Rational drive_time;
  Rational charge_time;
  Rational money;  // prices plus occupancy
  Rational total;
  std::vector<StopTrace> stops;  // nodes with positive charge
  Rational final_battery;
};

// Checks battery feasibility along the path and returns the cost breakdown.
// Errors name the first node where the battery leaves [0, L], where charge is
// added off a station, or where a zero-speed interval would be used.
absl::StatusOr<StrategyCost> EvaluateStrategy(const ChargingNetwork& network,
                                              const ChargingStrategy& strategy);

// Charge amount per interval when charging from `from` up to `to`.
std::vector<Rational> SplitCharge(const ChargingCurve& curve,
                                  const Rational& from, const Rational& to);

struct RouteStep {
  int aux_edge = -1;
  Rational charge;  // added at the tail copy before driving
};

struct Route {
  Rational cost;
  std::vector<RouteStep> steps;
  ChargingStrategy strategy;
};

// Optimal strategy for OD pair `od`; NotFound when none is feasible.
absl::StatusOr<Route> RouteSingle(const ChargingNetwork& network,
                                  const AuxiliaryNetwork& aux, int od);

// Same search started from an arbitrary auxiliary node at `battery`. Used to
// inspect the cost-to-go; nullopt when the destination is unreachable.
std::optional<Route> RouteFrom(const AuxiliaryNetwork& aux, int start,
                               const Rational& battery, int od);

}  // namespace evflow

#endif  // EVFLOW_SINGLE_ROUTER_H_
