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

// JSON, DOT and MPS renderings. JSON objects have sorted keys; numbers are
// strings, exact ("21/2") by default or decimal ("10.5") with `decimal`.

#ifndef EVFLOW_EXPORT_H_
#define EVFLOW_EXPORT_H_

#include <string>

#include "evflow/charge_augment.h"
#include "evflow/flow_lp.h"
#include "evflow/lp.h"
#include "evflow/metric_closure.h"
#include "evflow/network.h"
#include "evflow/rational.h"
#include "evflow/single_router.h"
#include "json.hpp"

namespace evflow {

using Json = nlohmann::json;

Json NumberJson(const Rational& value, bool decimal);
Json CostJson(const ExtendedCost& value, bool decimal);  // "inf" when unset

Json AssumptionJson(const ChargingNetwork& network,
                    const MetricAgreementReport& report, bool decimal);

// Network-file schema over auxiliary nodes plus a "copies" annotation.
Json AuxiliaryNetworkJson(const ChargingNetwork& network,
                          const AuxiliaryNetwork& aux, bool decimal);
std::string AuxiliaryNetworkDot(const ChargingNetwork& network,
                                const AuxiliaryNetwork& aux);

Json AugmentedGraphJson(const ChargingNetwork& network,
                        const AuxiliaryNetwork& aux,
                        const AugmentedGraph& graph, bool decimal);
// Charge edges red, chain edges gray dashed, travel edges black.
std::string AugmentedGraphDot(const ChargingNetwork& network,
                              const AuxiliaryNetwork& aux,
                              const AugmentedGraph& graph);

// {path, charges, cost, charge_time, drive_time, money, ...}.
Json StrategyJson(const ChargingNetwork& network,
                  const ChargingStrategy& strategy, bool decimal);

Json FlowSolutionJson(const ChargingNetwork& network,
                      const FlowSolution& solution, bool decimal);

// Fixed-format MPS. Rows and columns get 8-character names (R0000001,
// C0000001); the original names are listed in leading comment lines.
// Coefficients are rounded to doubles that fit the 12-character field.
std::string WriteMps(const LpProblem& problem, const std::string& name);

}  // namespace evflow

#endif  // EVFLOW_EXPORT_H_
