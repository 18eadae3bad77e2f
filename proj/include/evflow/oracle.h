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

// Brute-force references for small instances: every walk (within caps) with
// every "charge to a threshold or just enough for a later point" pattern,
// and the flow LP over those strategies as explicit columns. A walk revisits
// a node only after charging somewhere in between.

#ifndef EVFLOW_ORACLE_H_
#define EVFLOW_ORACLE_H_

#include <cstdint>
#include <vector>

#include "absl/status/statusor.h"
#include "evflow/lp.h"
#include "evflow/network.h"
#include "evflow/rational.h"
#include "evflow/single_router.h"

namespace evflow {

// Walks longer than `max_path_edges` or entering a station more than
// `max_station_visits` times are not generated.
struct EnumerationCaps {
  int max_path_edges = 16;
  int max_station_visits = 2;
  int64_t max_count = 200000;
};

struct StrategyUniverse {
  int od = -1;
  std::vector<ChargingStrategy> strategies;  // all feasible, in DFS order
};

// ResourceExhausted when more than `max_count` strategies are feasible.
absl::StatusOr<StrategyUniverse> EnumerateStrategies(
    const ChargingNetwork& network, int od, const EnumerationCaps& caps = {});

struct SingleOptimum {
  Rational cost;
  ChargingStrategy strategy;
};

// First minimum-cost strategy of the universe; NotFound when it is empty.
absl::StatusOr<SingleOptimum> BruteSingleOpt(const ChargingNetwork& network,
                                             const StrategyUniverse& universe);

// Optimum over the same walks with charge levels on the lattice of step
// gcd(d, thresholds, L), by dynamic programming along each path.
absl::StatusOr<Rational> GridSingleOpt(const ChargingNetwork& network, int od,
                                       const EnumerationCaps& caps = {});

enum class BruteProblem { kMaxFlow, kMinCost };

struct BruteFlowResult {
  LpStatus status = LpStatus::kOptimal;
  Rational objective;
  int columns = 0;
};

// Solves the flow LP whose columns are the enumerated strategies (dominated
// ones removed). Edge capacities are enforced when `edge_caps` is set.
BruteFlowResult BruteFlow(const ChargingNetwork& network,
                          const std::vector<StrategyUniverse>& universes,
                          BruteProblem problem, bool edge_caps);

}  // namespace evflow

#endif  // EVFLOW_ORACLE_H_
