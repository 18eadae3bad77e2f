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


#include "evflow/charge_augment.h"

#include <functional>
#include <vector>

#include "evflow/flow_lp.h"
#include "evflow/single_router.h"
#include "gtest/gtest.h"
#include "random_instances.h"
#include "test_util.h"

namespace evflow {
namespace {

using ::evflow::testing::LoadTestNetwork;

TEST(LevelSetsTest, ExampleOne) {
  ChargingNetwork net = LoadTestNetwork("example1.json");
  FlowProblem fp = PrepareFlowProblem(net);
  int i1 = net.StationIndexAt(*net.FindNode("i1"));
  int i2 = net.StationIndexAt(*net.FindNode("i2"));
  int c11 = fp.aux.Copy(i1, 0), c12 = fp.aux.Copy(i1, 1);
  int c21 = fp.aux.Copy(i2, 0);
  using V = std::vector<Rational>;
  EXPECT_EQ(fp.sets.in[c11], (V{0, 4}));
  EXPECT_EQ(fp.sets.out[c11], (V{5}));
  EXPECT_EQ(fp.sets.in[c12], (V{5}));
  EXPECT_EQ(fp.sets.out[c12], (V{5, 6, 9}));
  EXPECT_EQ(fp.sets.in[c21], (V{0, 3, 5}));
  EXPECT_EQ(fp.sets.out[c21], (V{5}));
}

TEST(AugmentedGraphTest, ExampleOneCostsAndLookup) {
  ChargingNetwork net = LoadTestNetwork("example1.json");
  FlowProblem fp = PrepareFlowProblem(net);
  int i2 = net.StationIndexAt(*net.FindNode("i2"));
  std::optional<int> a = fp.graph.Find(fp.aux.Copy(i2, 1), Rational(5));
  std::optional<int> b = fp.graph.Find(fp.aux.Copy(i2, 1), Rational(6));
  ASSERT_TRUE(a && b);
  EXPECT_FALSE(fp.graph.Find(fp.aux.Copy(i2, 1), Rational(7)).has_value());
  bool found = false;
  for (int e : fp.graph.out_edges(*a)) {
    const AugEdge& edge = fp.graph.edges()[e];
    if (edge.head != *b) continue;
    found = true;
    EXPECT_EQ(edge.type, AugEdgeType::kCharge);
    EXPECT_EQ(edge.lambda, 1);
    EXPECT_EQ(*edge.cost, Rational(1, 2));  // 1 unit at speed 2
  }
  EXPECT_TRUE(found);
  EXPECT_TRUE(fp.graph.UnreachableOdPairs().empty());
  EXPECT_EQ(AugNodeLabel(net, fp.aux, fp.graph.node(*a)), "(i2,2,5)");
}

TEST(AugmentedGraphTest, ZeroSpeedChargeEdgesCostInfinity) {
  NetworkSpec spec = ToSpec(LoadTestNetwork("example1.json"));
  spec.stations[0].speeds[0] = 0;
  ChargingNetwork net = *BuildNetwork(spec);
  FlowProblem fp = PrepareFlowProblem(net);
  int copy = fp.aux.Copy(net.StationIndexAt(*net.FindNode("i1")), 0);
  for (const AugEdge& e : fp.graph.edges()) {
    if (e.type == AugEdgeType::kCharge && e.copy == copy) {
      EXPECT_FALSE(e.cost.has_value());
    }
  }
}

// Every finite-cost (s, L) -> (t, 0) path is a feasible strategy costing
// exactly the path cost.
TEST(AugmentedGraphTest, PathsAreFeasibleStrategies) {
  for (int seed = 1; seed <= 40; ++seed) {
    testing::RandomOptions options;
    options.max_od_pairs = 2;
    ChargingNetwork net = *BuildNetwork(testing::RandomInstance(seed, options));
    FlowProblem fp = PrepareFlowProblem(net);
    int checked = 0;
    for (int k = 0; k < fp.graph.num_od_pairs(); ++k) {
      std::vector<int> path;
      std::vector<bool> on(fp.graph.num_nodes(), false);
      std::function<void(int)> dfs = [&](int v) {
        if (checked > 500) return;
        if (v == fp.graph.Destination(k)) {
          ++checked;
          ChargingStrategy s = StrategyOfPath(fp.aux, fp.graph, k, path);
          absl::StatusOr<StrategyCost> cost = EvaluateStrategy(net, s);
          Rational total = 0;
          bool finite = true;
          for (int e : path) {
            const ExtendedCost& c = fp.graph.edges()[e].cost;
            if (!c) finite = false;
            else total += *c;
          }
          // Infinite cost means charging at zero speed.
          if (!finite) {
            EXPECT_FALSE(cost.ok()) << "seed " << seed;
            return;
          }
          ASSERT_TRUE(cost.ok()) << "seed " << seed << ": " << cost.status();
          EXPECT_EQ(cost->total, total) << "seed " << seed;
          EXPECT_EQ(cost->final_battery, 0);
          return;
        }
        for (int e : fp.graph.out_edges(v)) {
          int w = fp.graph.edges()[e].head;
          if (on[w]) continue;
          on[w] = true;
          path.push_back(e);
          dfs(w);
          path.pop_back();
          on[w] = false;
        }
      };
      on[fp.graph.Origin(k)] = true;
      dfs(fp.graph.Origin(k));
    }
  }
}

}  // namespace
}  // namespace evflow
