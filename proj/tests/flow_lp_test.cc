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

#include "evflow/oracle.h"
#include "gtest/gtest.h"
#include "random_instances.h"
#include "test_util.h"

namespace evflow {
namespace {

using ::evflow::testing::LoadTestNetwork;

ChargingNetwork WithDemand(const char* file, Rational demand,
                           int64_t chargers = -1) {
  NetworkSpec spec = ToSpec(LoadTestNetwork(file));
  for (OdSpec& od : spec.od_pairs) od.demand = demand;
  if (chargers >= 0) {
    for (StationSpec& st : spec.stations) st.chargers = chargers;
  }
  return *BuildNetwork(spec);
}

TEST(FlowLpTest, ExampleOneLayout) {
  ChargingNetwork net = LoadTestNetwork("example1.json");
  FlowProblem fp = PrepareFlowProblem(net);
  FlowLp lp = BuildMaxFlowLp(net, fp.aux, fp.graph);
  int alloc = 0, conservation = 0;
  for (int v : lp.layout.alloc_var) alloc += v >= 0;
  for (int r : lp.layout.conservation_row[0]) conservation += r >= 0;
  EXPECT_EQ(alloc, 4);
  EXPECT_EQ(lp.layout.capacity_row.size(), 4u);
  EXPECT_EQ(lp.layout.station_row.size(), 2u);
  EXPECT_EQ(conservation, 12);
  EXPECT_TRUE(lp.layout.demand_row.empty());
  EXPECT_EQ(BuildMinCostLp(net, fp.aux, fp.graph).layout.demand_row.size(), 1u);
}

TEST(FlowLpTest, MaxFlowDecomposesIntoFeasibleStrategies) {
  ChargingNetwork net = LoadTestNetwork("example1.json");
  FlowSolution sol = SolveMaxFlow(net, PrepareFlowProblem(net), {}, nullptr);
  ASSERT_EQ(sol.status, FlowStatus::kOptimal);
  EXPECT_EQ(sol.objective, 4);
  EXPECT_EQ(sol.dual_objective, 4);
  Rational total = 0;
  for (const StrategyFlow& f : sol.strategies) {
    EXPECT_TRUE(EvaluateStrategy(net, f.strategy).ok());
    total += f.value;
  }
  EXPECT_EQ(total, 4);
  FlowCheck check = VerifyFlow(net, sol.strategies);
  EXPECT_TRUE(check.feasible);
  for (const StationUsage& u : check.stations) EXPECT_GE(u.slack, 0);
  // Station duals price one charger at 2 units of flow each.
  EXPECT_EQ(sol.y, (std::vector<Rational>{2, 2}));
}

TEST(FlowLpTest, VerifyFlowRejectsOveruse) {
  ChargingNetwork net = LoadTestNetwork("example1.json");
  FlowSolution sol = SolveMaxFlow(net, PrepareFlowProblem(net), {}, nullptr);
  std::vector<StrategyFlow> doubled = sol.strategies;
  for (StrategyFlow& f : doubled) f.value *= 2;
  FlowCheck check = VerifyFlow(net, doubled);
  EXPECT_FALSE(check.feasible);
  bool named = false;
  for (const StationUsage& u : check.stations) named |= !u.violation.empty();
  EXPECT_TRUE(named);
}

TEST(FlowLpTest, SmallDemandCostsSingleOptimum) {
  ChargingNetwork net = WithDemand("example1.json", Rational(1, 1000));
  FlowSolution sol = SolveMinCost(net, PrepareFlowProblem(net), {}, nullptr);
  ASSERT_EQ(sol.status, FlowStatus::kOptimal);
  EXPECT_EQ(sol.objective, Rational(21, 2) / 1000);
  EXPECT_EQ(sol.dual_objective, sol.objective);
}

TEST(FlowLpTest, CongestionRaisesCost) {
  // Four units saturate both stations' cheapest strategies.
  ChargingNetwork net = WithDemand("example1.json", Rational(4));
  FlowSolution sol = SolveMinCost(net, PrepareFlowProblem(net), {}, nullptr);
  ASSERT_EQ(sol.status, FlowStatus::kOptimal);
  std::vector<StrategyUniverse> u = {*EnumerateStrategies(net, 0)};
  EXPECT_EQ(sol.objective,
            BruteFlow(net, u, BruteProblem::kMinCost, false).objective);
  EXPECT_GE(sol.objective, 4 * Rational(21, 2));
}

TEST(FlowLpTest, InfeasibleDemandHasFarkasCertificate) {
  ChargingNetwork net = WithDemand("example1.json", Rational(100));
  LpProblem lp;
  FlowSolution sol = SolveMinCost(net, PrepareFlowProblem(net), {}, &lp);
  ASSERT_EQ(sol.status, FlowStatus::kInfeasible);
  ASSERT_EQ(static_cast<int>(sol.farkas.size()), lp.num_rows());
  Rational ub = 0;
  std::vector<Rational> ua(lp.num_vars(), Rational(0));
  for (int r = 0; r < lp.num_rows(); ++r) {
    ub += sol.farkas[r] * lp.rows[r].rhs;
    for (const auto& [v, a] : lp.rows[r].coeffs) ua[v] += sol.farkas[r] * a;
  }
  EXPECT_GT(ub, 0);
  for (const Rational& v : ua) EXPECT_LE(v, 0);
}

TEST(FlowLpTest, GatesAndRefusals) {
  ChargingNetwork bad = LoadTestNetwork("mismatched_metrics.json");
  EXPECT_EQ(SolveMinCost(bad, PrepareFlowProblem(bad), {}, nullptr).status,
            FlowStatus::kAssumptionViolated);
  EXPECT_EQ(SolveMaxFlow(bad, PrepareFlowProblem(bad), {}, nullptr).status,
            FlowStatus::kOptimal);
  ChargingNetwork free = LoadTestNetwork("unbounded.json");
  FlowSolution u = SolveMinCost(free, PrepareFlowProblem(free), {}, nullptr);
  EXPECT_EQ(u.status, FlowStatus::kUnbounded);
  ASSERT_EQ(u.unbounded.size(), 1u);
  ChargingNetwork far = LoadTestNetwork("out_of_range.json");
  FlowSolution f = SolveMaxFlow(far, PrepareFlowProblem(far), {}, nullptr);
  EXPECT_EQ(f.status, FlowStatus::kInfeasible);
  EXPECT_EQ(f.objective, 0);
  EXPECT_EQ(f.infeasible_od, (std::vector<int>{0}));
}

TEST(FlowLpTest, FloatModeMatchesExact) {
  FlowOptions options;
  options.lp.exact = false;
  for (int seed = 1; seed <= 30; ++seed) {
    ChargingNetwork net = *BuildNetwork(testing::RandomInstance(seed));
    FlowProblem fp = PrepareFlowProblem(net);
    FlowSolution exact = SolveMaxFlow(net, fp, {}, nullptr);
    FlowSolution approx = SolveMaxFlow(net, fp, options, nullptr);
    ASSERT_EQ(exact.status, approx.status) << "seed " << seed;
    EXPECT_NEAR(ToDouble(exact.objective), ToDouble(approx.objective), 1e-7);
  }
}

TEST(FlowLpTest, MinCostMatchesEnumeration) {
  testing::RandomOptions options;
  options.max_od_pairs = 2;
  int optimal = 0;
  for (int seed = 600; seed < 640; ++seed) {
    ChargingNetwork net = *BuildNetwork(testing::RandomInstance(seed, options));
    FlowSolution sol = SolveMinCost(net, PrepareFlowProblem(net), {}, nullptr);
    std::vector<StrategyUniverse> universes;
    for (int k = 0; k < static_cast<int>(net.od_pairs().size()); ++k) {
      universes.push_back(*EnumerateStrategies(net, k));
    }
    BruteFlowResult brute =
        BruteFlow(net, universes, BruteProblem::kMinCost, false);
    if (brute.status == LpStatus::kInfeasible) {
      EXPECT_EQ(sol.status, FlowStatus::kInfeasible) << "seed " << seed;
      continue;
    }
    ASSERT_EQ(sol.status, FlowStatus::kOptimal) << "seed " << seed;
    EXPECT_EQ(sol.objective, brute.objective) << "seed " << seed;
    EXPECT_EQ(sol.dual_objective, sol.objective);
    ++optimal;
  }
  EXPECT_GT(optimal, 5);
}

}  // namespace
}  // namespace evflow
