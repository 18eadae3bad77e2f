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

// Small random charging networks for property and oracle tests.

#ifndef EVFLOW_TESTS_RANDOM_INSTANCES_H_
#define EVFLOW_TESTS_RANDOM_INSTANCES_H_

#include <cstdint>

#include "evflow/network.h"

namespace evflow::testing {

struct RandomOptions {
  int min_nodes = 4;
  int max_nodes = 7;
  int max_stations = 5;
  int max_intervals = 2;
  int max_value = 20;
  int max_od_pairs = 1;
  bool allow_zero_speed = true;
  bool allow_capacities = false;
};

// Integer data, travel time proportional to battery use (so shortest paths
// agree in both metrics), every s-t edge longer than L, and no origin that
// reaches its destination without charging. Deterministic in `seed`.
NetworkSpec RandomInstance(uint64_t seed, const RandomOptions& options = {});

}  // namespace evflow::testing

#endif  // EVFLOW_TESTS_RANDOM_INSTANCES_H_
