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

// A small dense two-phase primal simplex over nonnegative variables, in exact
// rational arithmetic or in double precision with a tolerance.

#ifndef EVFLOW_LP_H_
#define EVFLOW_LP_H_

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "evflow/rational.h"

namespace evflow {

enum class Sense { kMaximize, kMinimize };
enum class RowType { kLessEqual, kEqual, kGreaterEqual };

struct LpRow {
  std::string name;
  std::vector<std::pair<int, Rational>> coeffs;
  RowType type = RowType::kLessEqual;
  Rational rhs;
};

// All variables are >= 0.
struct LpProblem {
  Sense sense = Sense::kMaximize;
  std::vector<std::string> var_names;
  std::vector<Rational> objective;
  std::vector<LpRow> rows;

  int AddVariable(std::string name, Rational cost = Rational(0));
  int AddRow(std::string name, std::vector<std::pair<int, Rational>> coeffs,
             RowType type, Rational rhs);
  int num_vars() const { return static_cast<int>(var_names.size()); }
  int num_rows() const { return static_cast<int>(rows.size()); }
};

enum class LpStatus { kOptimal, kInfeasible, kUnbounded, kIterationLimit };

std::string LpStatusName(LpStatus status);

struct LpSolution {
  LpStatus status = LpStatus::kOptimal;
  Rational objective;
  std::vector<Rational> x;
  // Shadow price of each row: d(objective)/d(rhs). Nonnegative on binding
  // <= rows of a maximization and on >= rows of a minimization.
  std::vector<Rational> duals;
  // When infeasible: u with u'A <= 0, u <= 0 on <= rows, u >= 0 on >= rows
  // and u'b > 0.
  std::vector<Rational> farkas;
  // When unbounded: a direction r >= 0 with Ar feasible-preserving and
  // improving objective.
  std::vector<Rational> ray;
  int64_t iterations = 0;
};

struct LpOptions {
  bool exact = true;
  double tolerance = 1e-9;  // float mode only
  int64_t max_iterations = 1000000;
  // Consecutive degenerate pivots before switching from Dantzig to Bland
  // pricing.
  int degenerate_streak = 50;
};

LpSolution SolveLp(const LpProblem& problem, const LpOptions& options = {});

struct LpResiduals {
  Rational primal;             // largest row or bound violation
  Rational dual;               // largest dual sign or reduced cost violation
  Rational complementarity;    // largest |x_j * reduced cost_j| or |y_r * slack_r|
  Rational gap;                // |c'x - b'y|
};

// Optimality residuals of an optimal solution, evaluated exactly.
LpResiduals ComputeResiduals(const LpProblem& problem,
                             const LpSolution& solution);

}  // namespace evflow

#endif  // EVFLOW_LP_H_
