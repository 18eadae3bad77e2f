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


#include "evflow/lp.h"

#include <cmath>
#include <random>

#include "gtest/gtest.h"

namespace evflow {
namespace {

using Coeffs = std::vector<std::pair<int, Rational>>;

Rational RowActivity(const LpRow& row, const std::vector<Rational>& x) {
  Rational sum = 0;
  for (const auto& [v, a] : row.coeffs) sum += a * x[v];
  return sum;
}

void ExpectOptimalCertified(const LpProblem& p, const LpSolution& s) {
  ASSERT_EQ(s.status, LpStatus::kOptimal);
  LpResiduals r = ComputeResiduals(p, s);
  EXPECT_EQ(r.primal, 0);
  EXPECT_EQ(r.dual, 0);
  EXPECT_EQ(r.complementarity, 0);
  EXPECT_EQ(r.gap, 0);
}

TEST(LpTest, SmallMaximization) {
  LpProblem p;
  int x = p.AddVariable("x", 3), y = p.AddVariable("y", 2);
  p.AddRow("a", Coeffs{{x, 1}, {y, 1}}, RowType::kLessEqual, 4);
  p.AddRow("b", Coeffs{{x, 1}, {y, 3}}, RowType::kLessEqual, 6);
  p.AddRow("c", Coeffs{{x, 1}}, RowType::kLessEqual, 3);
  LpSolution s = SolveLp(p);
  EXPECT_EQ(s.objective, 11);
  EXPECT_EQ(s.x[x], 3);
  EXPECT_EQ(s.x[y], 1);
  EXPECT_EQ(s.duals[0], 2);  // d obj / d rhs of row a
  EXPECT_EQ(s.duals[1], 0);
  EXPECT_EQ(s.duals[2], 1);
  ExpectOptimalCertified(p, s);
}

TEST(LpTest, MinimizationWithEqualityAndSurplus) {
  LpProblem p;
  p.sense = Sense::kMinimize;
  int x = p.AddVariable("x", 1), y = p.AddVariable("y", 1);
  p.AddRow("cover", Coeffs{{x, 1}, {y, 2}}, RowType::kGreaterEqual, 4);
  p.AddRow("tie", Coeffs{{x, 1}, {y, -1}}, RowType::kEqual, 1);
  LpSolution s = SolveLp(p);
  EXPECT_EQ(s.objective, 3);
  EXPECT_EQ(s.x[x], 2);
  EXPECT_EQ(s.x[y], 1);
  ExpectOptimalCertified(p, s);
}

TEST(LpTest, NegativeRightHandSides) {
  LpProblem p;
  p.sense = Sense::kMinimize;
  int x = p.AddVariable("x", 1);
  p.AddRow("neg", Coeffs{{x, -1}}, RowType::kLessEqual, -2);
  LpSolution s = SolveLp(p);
  EXPECT_EQ(s.objective, 2);
  ExpectOptimalCertified(p, s);
}

TEST(LpTest, InfeasibleWithFarkasCertificate) {
  LpProblem p;
  int x = p.AddVariable("x", 1), y = p.AddVariable("y", 1);
  p.AddRow("le", Coeffs{{x, 1}, {y, 1}}, RowType::kLessEqual, 1);
  p.AddRow("ge", Coeffs{{x, 1}, {y, 1}}, RowType::kGreaterEqual, 2);
  LpSolution s = SolveLp(p);
  ASSERT_EQ(s.status, LpStatus::kInfeasible);
  ASSERT_EQ(s.farkas.size(), 2u);
  EXPECT_LE(s.farkas[0], 0);
  EXPECT_GE(s.farkas[1], 0);
  Rational ub = 0;
  std::vector<Rational> ua(p.num_vars(), Rational(0));
  for (int r = 0; r < p.num_rows(); ++r) {
    ub += s.farkas[r] * p.rows[r].rhs;
    for (const auto& [v, a] : p.rows[r].coeffs) ua[v] += s.farkas[r] * a;
  }
  EXPECT_GT(ub, 0);
  for (const Rational& v : ua) EXPECT_LE(v, 0);
}

TEST(LpTest, UnboundedWithRay) {
  LpProblem p;
  int x = p.AddVariable("x", 1), y = p.AddVariable("y", 0);
  p.AddRow("r", Coeffs{{x, 1}, {y, -1}}, RowType::kLessEqual, 1);
  LpSolution s = SolveLp(p);
  ASSERT_EQ(s.status, LpStatus::kUnbounded);
  ASSERT_EQ(s.ray.size(), 2u);
  EXPECT_GE(s.ray[x], 0);
  EXPECT_GE(s.ray[y], 0);
  EXPECT_LE(RowActivity(p.rows[0], s.ray), 0);
  EXPECT_GT(s.ray[x], 0);
}

TEST(LpTest, RedundantEqualitiesTerminate) {
  LpProblem p;
  int x = p.AddVariable("x", 1), y = p.AddVariable("y", 2);
  p.AddRow("e1", Coeffs{{x, 1}, {y, 1}}, RowType::kEqual, 1);
  p.AddRow("e2", Coeffs{{x, 1}, {y, 1}}, RowType::kEqual, 1);
  p.AddRow("e3", Coeffs{{x, 2}, {y, 2}}, RowType::kEqual, 2);
  LpSolution s = SolveLp(p);
  ASSERT_EQ(s.status, LpStatus::kOptimal);
  EXPECT_EQ(s.objective, 2);
  EXPECT_EQ(ComputeResiduals(p, s).gap, 0);
}

// Beale's example cycles under plain Dantzig pricing.
TEST(LpTest, BealeCyclingExample) {
  LpProblem p;
  p.sense = Sense::kMinimize;
  int x4 = p.AddVariable("x4", Rational(-3, 4));
  int x5 = p.AddVariable("x5", 20);
  int x6 = p.AddVariable("x6", Rational(-1, 2));
  int x7 = p.AddVariable("x7", 6);
  p.AddRow("r1", Coeffs{{x4, Rational(1, 4)}, {x5, -8}, {x6, -1}, {x7, 9}},
           RowType::kLessEqual, 0);
  p.AddRow("r2", Coeffs{{x4, Rational(1, 2)}, {x5, -12}, {x6, Rational(-1, 2)},
                        {x7, 3}},
           RowType::kLessEqual, 0);
  p.AddRow("r3", Coeffs{{x6, 1}}, RowType::kLessEqual, 1);
  LpSolution s = SolveLp(p);
  EXPECT_EQ(s.objective, Rational(-5, 4));
  ExpectOptimalCertified(p, s);
}

TEST(LpTest, IterationLimit) {
  LpProblem p;
  int x = p.AddVariable("x", 3), y = p.AddVariable("y", 2);
  p.AddRow("a", Coeffs{{x, 1}, {y, 1}}, RowType::kLessEqual, 4);
  p.AddRow("b", Coeffs{{x, 1}, {y, 3}}, RowType::kLessEqual, 6);
  LpOptions options;
  options.max_iterations = 1;
  EXPECT_EQ(SolveLp(p, options).status, LpStatus::kIterationLimit);
}

TEST(LpTest, FloatModeAgreesWithExact) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> coef(0, 9), rhs(5, 30), cost(-3, 9);
  for (int trial = 0; trial < 40; ++trial) {
    LpProblem p;
    p.sense = trial % 2 ? Sense::kMaximize : Sense::kMinimize;
    const int n = 6;
    for (int j = 0; j < n; ++j) {
      p.AddVariable("x" + std::to_string(j),
                    p.sense == Sense::kMaximize ? cost(rng) : -cost(rng));
    }
    for (int r = 0; r < 5; ++r) {
      Coeffs row;
      for (int j = 0; j < n; ++j) row.push_back({j, coef(rng) + 1});
      p.AddRow("r" + std::to_string(r), row,
               r == 4 ? RowType::kGreaterEqual : RowType::kLessEqual,
               r == 4 ? 1 : rhs(rng));
    }
    LpSolution exact = SolveLp(p);
    LpOptions options;
    options.exact = false;
    LpSolution approx = SolveLp(p, options);
    ASSERT_EQ(exact.status, approx.status) << "trial " << trial;
    if (exact.status != LpStatus::kOptimal) continue;
    ExpectOptimalCertified(p, exact);
    EXPECT_NEAR(ToDouble(approx.objective), ToDouble(exact.objective), 1e-7)
        << "trial " << trial;
  }
}

}  // namespace
}  // namespace evflow
