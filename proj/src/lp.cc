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

#include <algorithm>
#include <cmath>

namespace evflow {

int LpProblem::AddVariable(std::string name, Rational cost) {
  var_names.push_back(std::move(name));
  objective.push_back(std::move(cost));
  return num_vars() - 1;
}

int LpProblem::AddRow(std::string name,
                      std::vector<std::pair<int, Rational>> coeffs,
                      RowType type, Rational rhs) {
  rows.push_back({std::move(name), std::move(coeffs), type, std::move(rhs)});
  return num_rows() - 1;
}

std::string LpStatusName(LpStatus status) {
  switch (status) {
    case LpStatus::kOptimal:
      return "optimal";
    case LpStatus::kInfeasible:
      return "infeasible";
    case LpStatus::kUnbounded:
      return "unbounded";
    case LpStatus::kIterationLimit:
      return "iteration_limit";
  }
  return "unknown";
}

namespace {

template <typename T>
struct Arith;

template <>
struct Arith<Rational> {
  double tol = 0;
  Rational From(const Rational& v) const { return v; }
  Rational ToRational(const Rational& v) const { return v; }
  bool Pos(const Rational& v) const { return sgn(v) > 0; }
  bool Neg(const Rational& v) const { return sgn(v) < 0; }
  bool Zero(const Rational& v) const { return sgn(v) == 0; }
  void Clean(Rational&) const {}
};

template <>
struct Arith<double> {
  double tol = 1e-9;
  double From(const Rational& v) const { return v.get_d(); }
  Rational ToRational(double v) const {
    return std::fabs(v) <= tol ? Rational(0) : Rational(v);
  }
  bool Pos(double v) const { return v > tol; }
  bool Neg(double v) const { return v < -tol; }
  bool Zero(double v) const { return std::fabs(v) <= tol; }
  void Clean(double& v) const {
    if (std::fabs(v) < tol * 1e-3) v = 0;
  }
};

template <typename T>
class Simplex {
 public:
  Simplex(const LpProblem& problem, const LpOptions& options)
      : problem_(problem), options_(options) {
    arith_.tol = options.tolerance;
  }

  LpSolution Solve() {
    Setup();
    LpSolution sol;
    // Phase 1.
    std::vector<T> phase1(cols_, T(0));
    for (int c = artificial_begin_; c < cols_; ++c) phase1[c] = T(1);
    LoadObjective(phase1);
    std::vector<bool> all(cols_, true);
    int entering = -1;
    LpStatus status = Run(all, &entering, &sol.iterations);
    if (status == LpStatus::kIterationLimit) {
      sol.status = status;
      return sol;
    }
    if (arith_.Neg(obj_rhs_)) {  // phase-1 optimum -obj_rhs_ > 0
      sol.status = LpStatus::kInfeasible;
      sol.farkas.resize(problem_.num_rows());
      for (int r = 0; r < m_; ++r) {
        T y = phase1[id_col_[r]] - obj_[id_col_[r]];
        sol.farkas[r] = arith_.ToRational(y) * row_sign_[r];
      }
      return sol;
    }
    DriveOutArtificials();

    // Phase 2.
    std::vector<T> cost(cols_, T(0));
    for (int j = 0; j < n_; ++j) {
      cost[j] = arith_.From(problem_.objective[j]);
      if (problem_.sense == Sense::kMaximize) cost[j] = -cost[j];
    }
    LoadObjective(cost);
    std::vector<bool> allowed(cols_, true);
    for (int c = artificial_begin_; c < cols_; ++c) allowed[c] = false;
    status = Run(allowed, &entering, &sol.iterations);
    sol.status = status;
    if (status == LpStatus::kIterationLimit) return sol;

    sol.x.assign(n_, Rational(0));
    for (int r = 0; r < m_; ++r) {
      if (basis_[r] < n_) sol.x[basis_[r]] = arith_.ToRational(rhs_[r]);
    }
    if (status == LpStatus::kUnbounded) {
      sol.ray.assign(n_, Rational(0));
      sol.ray[entering] = 1;
      for (int r = 0; r < m_; ++r) {
        if (basis_[r] < n_) {
          sol.ray[basis_[r]] = -arith_.ToRational(a_[r][entering]);
        }
      }
      return sol;
    }
    const int obj_sign = problem_.sense == Sense::kMaximize ? -1 : 1;
    sol.objective = 0;
    for (int j = 0; j < n_; ++j) sol.objective += problem_.objective[j] * sol.x[j];
    sol.duals.resize(m_);
    for (int r = 0; r < m_; ++r) {
      T y = -obj_[id_col_[r]];
      sol.duals[r] = arith_.ToRational(y) * (row_sign_[r] * obj_sign);
    }
    return sol;
  }

 private:
  void Setup() {
    n_ = problem_.num_vars();
    m_ = problem_.num_rows();
    row_sign_.assign(m_, 1);
    std::vector<RowType> type(m_);
    int slacks = 0, artificials = 0;
    for (int r = 0; r < m_; ++r) {
      const LpRow& row = problem_.rows[r];
      type[r] = row.type;
      if (sgn(row.rhs) < 0) {
        row_sign_[r] = -1;
        if (row.type == RowType::kLessEqual) type[r] = RowType::kGreaterEqual;
        else if (row.type == RowType::kGreaterEqual) type[r] = RowType::kLessEqual;
      }
      if (type[r] != RowType::kEqual) ++slacks;
      if (type[r] != RowType::kLessEqual) ++artificials;
    }
    artificial_begin_ = n_ + slacks;
    cols_ = artificial_begin_ + artificials;
    a_.assign(m_, std::vector<T>(cols_, T(0)));
    rhs_.assign(m_, T(0));
    basis_.assign(m_, -1);
    id_col_.assign(m_, -1);
    int next_slack = n_, next_art = artificial_begin_;
    for (int r = 0; r < m_; ++r) {
      const LpRow& row = problem_.rows[r];
      for (const auto& [j, v] : row.coeffs) {
        a_[r][j] += arith_.From(v) * T(row_sign_[r]);
      }
      rhs_[r] = arith_.From(row.rhs) * T(row_sign_[r]);
      if (type[r] == RowType::kLessEqual) {
        a_[r][next_slack] = T(1);
        id_col_[r] = next_slack++;
      } else {
        if (type[r] == RowType::kGreaterEqual) a_[r][next_slack++] = T(-1);
        a_[r][next_art] = T(1);
        id_col_[r] = next_art++;
      }
      basis_[r] = id_col_[r];
    }
  }

  void LoadObjective(const std::vector<T>& cost) {
    obj_ = cost;
    obj_rhs_ = T(0);
    for (int r = 0; r < m_; ++r) {
      const T& cb = cost[basis_[r]];
      if (arith_.Zero(cb)) continue;
      for (int c = 0; c < cols_; ++c) {
        if (!arith_.Zero(a_[r][c])) obj_[c] -= cb * a_[r][c];
      }
      obj_rhs_ -= cb * rhs_[r];
    }
    for (int c = 0; c < cols_; ++c) arith_.Clean(obj_[c]);
  }

  void Pivot(int row, int col) {
    T inv = T(1) / a_[row][col];
    std::vector<int> nz;
    for (int c = 0; c < cols_; ++c) {
      if (arith_.Zero(a_[row][c])) continue;
      a_[row][c] *= inv;
      nz.push_back(c);
    }
    rhs_[row] *= inv;
    a_[row][col] = T(1);
    auto eliminate = [&](std::vector<T>& target, T& target_rhs) {
      T factor = target[col];
      if (arith_.Zero(factor)) return;
      for (int c : nz) {
        target[c] -= factor * a_[row][c];
        arith_.Clean(target[c]);
      }
      target[col] = T(0);
      target_rhs -= factor * rhs_[row];
      arith_.Clean(target_rhs);
    };
    for (int r = 0; r < m_; ++r) {
      if (r != row) eliminate(a_[r], rhs_[r]);
    }
    eliminate(obj_, obj_rhs_);
    basis_[row] = col;
  }

  LpStatus Run(const std::vector<bool>& allowed, int* entering,
               int64_t* iterations) {
    int streak = 0;
    while (true) {
      if (*iterations >= options_.max_iterations) {
        return LpStatus::kIterationLimit;
      }
      const bool bland = streak >= options_.degenerate_streak;
      int col = -1;
      for (int c = 0; c < cols_; ++c) {
        if (!allowed[c] || !arith_.Neg(obj_[c])) continue;
        if (col < 0) {
          col = c;
          if (bland) break;
        } else if (obj_[c] < obj_[col]) {
          col = c;
        }
      }
      if (col < 0) return LpStatus::kOptimal;
      int row = -1;
      T best_ratio = T(0);
      for (int r = 0; r < m_; ++r) {
        if (!arith_.Pos(a_[r][col])) continue;
        T ratio = rhs_[r] / a_[r][col];
        if (row < 0 || ratio < best_ratio ||
            (ratio == best_ratio && basis_[r] < basis_[row])) {
          row = r;
          best_ratio = ratio;
        }
      }
      if (row < 0) {
        *entering = col;
        return LpStatus::kUnbounded;
      }
      streak = arith_.Zero(best_ratio) ? streak + 1 : 0;
      Pivot(row, col);
      ++*iterations;
    }
  }

  void DriveOutArtificials() {
    for (int r = 0; r < m_; ++r) {
      if (basis_[r] < artificial_begin_) continue;
      for (int c = 0; c < artificial_begin_; ++c) {
        if (!arith_.Zero(a_[r][c])) {
          Pivot(r, c);
          break;
        }
      }
      // Otherwise the row is redundant; its artificial stays basic at zero.
    }
  }

  const LpProblem& problem_;
  LpOptions options_;
  Arith<T> arith_;
  int n_ = 0;
  int m_ = 0;
  int cols_ = 0;
  int artificial_begin_ = 0;
  std::vector<int> row_sign_;
  std::vector<std::vector<T>> a_;
  std::vector<T> rhs_;
  std::vector<T> obj_;
  T obj_rhs_ = T(0);
  std::vector<int> basis_;
  std::vector<int> id_col_;
};

}  // namespace

LpSolution SolveLp(const LpProblem& problem, const LpOptions& options) {
  if (options.exact) return Simplex<Rational>(problem, options).Solve();
  return Simplex<double>(problem, options).Solve();
}

LpResiduals ComputeResiduals(const LpProblem& problem,
                             const LpSolution& solution) {
  LpResiduals res;
  auto bump = [](Rational& slot, const Rational& v) {
    Rational a = abs(v);
    if (a > slot) slot = a;
  };
  const bool maximize = problem.sense == Sense::kMaximize;
  for (int j = 0; j < problem.num_vars(); ++j) {
    if (solution.x[j] < 0) bump(res.primal, solution.x[j]);
  }
  std::vector<Rational> reduced = problem.objective;
  Rational dual_objective = 0;
  for (int r = 0; r < problem.num_rows(); ++r) {
    const LpRow& row = problem.rows[r];
    const Rational& y = solution.duals[r];
    Rational activity = 0;
    for (const auto& [j, v] : row.coeffs) {
      activity += v * solution.x[j];
      reduced[j] -= v * y;
    }
    Rational slack = row.rhs - activity;
    if (row.type == RowType::kLessEqual && slack < 0) bump(res.primal, slack);
    if (row.type == RowType::kGreaterEqual && slack > 0) bump(res.primal, slack);
    if (row.type == RowType::kEqual) bump(res.primal, slack);
    // Shadow-price signs.
    bool y_nonneg = (row.type == RowType::kLessEqual) == maximize;
    if (row.type != RowType::kEqual) {
      if (y_nonneg && y < 0) bump(res.dual, y);
      if (!y_nonneg && y > 0) bump(res.dual, y);
    }
    bump(res.complementarity, y * slack);
    dual_objective += row.rhs * y;
  }
  Rational primal_objective = 0;
  for (int j = 0; j < problem.num_vars(); ++j) {
    primal_objective += problem.objective[j] * solution.x[j];
    if (maximize ? reduced[j] > 0 : reduced[j] < 0) bump(res.dual, reduced[j]);
    bump(res.complementarity, reduced[j] * solution.x[j]);
  }
  res.gap = abs(primal_objective - dual_objective);
  return res;
}

}  // namespace evflow
