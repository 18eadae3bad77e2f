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


#include "evflow/export.h"

#include <sstream>
#include <string>

#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "test_util.h"

namespace evflow {
namespace {

using ::evflow::testing::LoadTestNetwork;
using ::testing::HasSubstr;

int Count(const std::string& text, const std::string& needle) {
  int n = 0;
  for (size_t at = text.find(needle); at != std::string::npos;
       at = text.find(needle, at + 1)) {
    ++n;
  }
  return n;
}

TEST(ExportTest, AugmentedDotColoursByType) {
  ChargingNetwork net = LoadTestNetwork("example1.json");
  FlowProblem fp = PrepareFlowProblem(net);
  std::string dot = AugmentedGraphDot(net, fp.aux, fp.graph);
  EXPECT_EQ(Count(dot, "color=red"), 8);
  EXPECT_EQ(Count(dot, "color=gray, style=dashed"), 2);
  EXPECT_EQ(Count(dot, "color=black"), 8);
  EXPECT_THAT(dot, HasSubstr("label=\"(i1,2,9)\""));
  EXPECT_EQ(dot, AugmentedGraphDot(net, fp.aux, fp.graph));
}

TEST(ExportTest, AuxiliaryJsonCarriesCopies) {
  ChargingNetwork net = LoadTestNetwork("example1.json");
  FlowProblem fp = PrepareFlowProblem(net);
  Json j = AuxiliaryNetworkJson(net, fp.aux, false);
  ASSERT_EQ(j["copies"].size(), 4u);
  EXPECT_EQ(j["copies"][0]["label"], "(i1,1)");
  EXPECT_EQ(j["copies"][0]["unit_cost"], "1/2");
  EXPECT_EQ(j["L"], "9");
  EXPECT_THAT(AuxiliaryNetworkDot(net, fp.aux), HasSubstr("digraph"));
}

TEST(ExportTest, StrategyJsonIsSortedAndExact) {
  ChargingNetwork net = LoadTestNetwork("example1.json");
  FlowProblem fp = PrepareFlowProblem(net);
  Route route = *RouteSingle(net, fp.aux, 0);
  std::string text = StrategyJson(net, route.strategy, false).dump();
  EXPECT_THAT(text, HasSubstr("\"cost\":\"21/2\""));
  EXPECT_LT(text.find("\"charge_time\""), text.find("\"charges\""));
  EXPECT_LT(text.find("\"charges\""), text.find("\"cost\""));
  EXPECT_LT(text.find("\"money\""), text.find("\"path\""));
  EXPECT_THAT(StrategyJson(net, route.strategy, true).dump(),
              HasSubstr("\"cost\":\"10.5\""));
}

TEST(ExportTest, FlowSolutionJson) {
  ChargingNetwork net = LoadTestNetwork("example1.json");
  FlowSolution sol = SolveMaxFlow(net, PrepareFlowProblem(net), {}, nullptr);
  Json j = FlowSolutionJson(net, sol, false);
  EXPECT_EQ(j["status"], "optimal");
  EXPECT_EQ(j["objective"], "4");
  EXPECT_EQ(j["z"]["i1"].size(), 2u);
  EXPECT_EQ(j["duals"]["station"]["i2"], "2");
  EXPECT_EQ(j["strategies"].size(), 2u);

  ChargingNetwork free = LoadTestNetwork("unbounded.json");
  Json u = FlowSolutionJson(
      free, SolveMaxFlow(free, PrepareFlowProblem(free), {}, nullptr), false);
  EXPECT_EQ(u["status"], "unbounded");
  EXPECT_EQ(u["unbounded"][0]["path"], Json({"s", "t"}));
}

TEST(ExportTest, FixedFormatMps) {
  LpProblem p;
  int x = p.AddVariable("flow on (a,b)", 1);
  int y = p.AddVariable("z", Rational(1, 3));
  p.AddRow("cap a", {{x, 1}, {y, -2}}, RowType::kLessEqual, 0);
  p.AddRow("chargers", {{y, 1}}, RowType::kEqual, 3);
  p.AddRow("demand", {{x, 1}}, RowType::kGreaterEqual, Rational(1, 2));
  std::string mps = WriteMps(p, "TEST");
  EXPECT_THAT(mps, HasSubstr("* C0000001 flow on (a,b)\n"));
  EXPECT_THAT(mps, HasSubstr("OBJSENSE\n    MAX\n"));
  EXPECT_THAT(mps, HasSubstr(" L  R0000001\n"));
  EXPECT_THAT(mps, HasSubstr(" E  R0000002\n"));
  EXPECT_THAT(mps, HasSubstr(" G  R0000003\n"));
  EXPECT_THAT(mps, HasSubstr("    C0000001  R0000001  1\n"));
  EXPECT_THAT(mps, HasSubstr("    C0000002  OBJ       0.333333333"));
  EXPECT_THAT(mps, HasSubstr("    RHS       R0000003  0.5\n"));
  EXPECT_THAT(mps, HasSubstr("ENDATA\n"));
  // Numeric fields never exceed 12 characters.
  std::istringstream lines(mps);
  std::string line;
  while (std::getline(lines, line)) {
    if (line.size() > 24 && line[0] == ' ') EXPECT_LE(line.size() - 24, 12u);
  }
}

}  // namespace
}  // namespace evflow
