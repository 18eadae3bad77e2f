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

// EV flow with edge capacities, solved by column generation over charging
// strategies. Pricing is an exact label-setting search over (node, battery)
// states, so running time is exponential in the worst case.

#ifndef EVFLOW_EDGE_CAP_H_
#define EVFLOW_EDGE_CAP_H_

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "absl/status/statusor.h"
#include "evflow/flow_lp.h"
#include "evflow/lp.h"
#include "evflow/network.h"
#include "evflow/rational.h"
#include "evflow/single_router.h"

namespace evflow {

struct PricingResult {
  std::optional<ChargingStrategy> strategy;  // nullopt: no feasible strategy
  Rational value;
};

// Minimizes sum_ij charge_price[i*J + j] * q_ij + sum_e edge_price[e] over
// strategies for OD pair `od` (edges counted with multiplicity). With
// `with_costs`, adds the strategy's own cost (time plus money). Prices must
// be nonnegative.
PricingResult PriceStrategy(const ChargingNetwork& network, int od,
                            std::span<const Rational> charge_price,
                            std::span<const Rational> edge_price,
                            bool with_costs);

struct CapacitatedOptions {
  LpOptions lp;
  Rational epsilon = 0;
  int max_rounds = 100000;
};

FlowSolution SolveCapacitatedMaxFlow(const ChargingNetwork& network,
                                     const CapacitatedOptions& options,
                                     LpProblem* lp_out);

FlowSolution SolveCapacitatedMinCost(const ChargingNetwork& network,
                                     const CapacitatedOptions& options,
                                     LpProblem* lp_out);

// Chain s, 1, ..., n-1, t with a battery-hungry arc (d = z_k) and a free arc
// (d = 0) across each gap, unit capacities and zero-speed chargers at the
// inner nodes; L = sum(z) / 2. Two units of flow fit iff z splits into two
// halves of equal sum.
absl::StatusOr<NetworkSpec> PartitionInstance(std::span<const int64_t> values);

}  // namespace evflow

#endif  // EVFLOW_EDGE_CAP_H_
