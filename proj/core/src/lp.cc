// Copyright 2026 The MBCE Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "mbce/lp.h"

#include <algorithm>
#include <utility>

#include "mbce/errors.h"

namespace mbce {

namespace {

constexpr std::size_t kNoColumn = static_cast<std::size_t>(-1);

// Standard form: maximize c.x subject to A x = b, x >= 0, with b >= 0.
// rows_[i] holds the constraint row followed by its right-hand side.
// cost_ holds reduced costs in "z_j - c_j" form; the last cell carries the
// current objective value.
class Tableau {
 public:
  Tableau(Matrix rows, std::vector<std::size_t> basis)
      : rows_(std::move(rows)), basis_(std::move(basis)) {
    cols_ = rows_.empty() ? 0 : rows_.front().size() - 1;
  }

  std::size_t num_rows() const { return rows_.size(); }
  std::size_t num_cols() const { return cols_; }

  void SetObjective(const Vector& objective) {
    cost_.assign(cols_ + 1, Rational(0));
    for (std::size_t j = 0; j < objective.size(); ++j) cost_[j] = -objective[j];
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const Rational factor = cost_[basis_[i]];
      if (sgn(factor) == 0) continue;
      for (std::size_t j = 0; j <= cols_; ++j) cost_[j] -= factor * rows_[i][j];
    }
  }

  // Returns false when the objective is unbounded.
  bool Optimize(std::size_t eligible_cols) {
    for (;;) {
      std::size_t entering = kNoColumn;
      for (std::size_t j = 0; j < eligible_cols; ++j) {
        if (sgn(cost_[j]) < 0) {
          entering = j;
          break;
        }
      }
      if (entering == kNoColumn) return true;

      std::size_t leaving = kNoColumn;
      Rational best_ratio;
      for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (sgn(rows_[i][entering]) <= 0) continue;
        Rational ratio = rows_[i][cols_] / rows_[i][entering];
        if (leaving == kNoColumn || ratio < best_ratio ||
            (ratio == best_ratio && basis_[i] < basis_[leaving])) {
          leaving = i;
          best_ratio = std::move(ratio);
        }
      }
      if (leaving == kNoColumn) return false;
      Pivot(leaving, entering);
    }
  }

  void Pivot(std::size_t row, std::size_t col) {
    const Rational pivot = rows_[row][col];
    for (auto& v : rows_[row]) v /= pivot;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (i == row) continue;
      const Rational factor = rows_[i][col];
      if (sgn(factor) == 0) continue;
      for (std::size_t j = 0; j <= cols_; ++j) {
        rows_[i][j] -= factor * rows_[row][j];
      }
    }
    if (!cost_.empty()) {
      const Rational factor = cost_[col];
      if (sgn(factor) != 0) {
        for (std::size_t j = 0; j <= cols_; ++j) {
          cost_[j] -= factor * rows_[row][j];
        }
      }
    }
    basis_[row] = col;
  }

  // After phase one: pivots zero-level artificial columns (index >= first)
  // out of the basis, drops redundant rows, then removes the artificial
  // columns altogether.
  void DropArtificials(std::size_t first) {
    for (std::size_t i = 0; i < rows_.size();) {
      if (basis_[i] < first) {
        ++i;
        continue;
      }
      std::size_t col = kNoColumn;
      for (std::size_t j = 0; j < first; ++j) {
        if (sgn(rows_[i][j]) != 0) {
          col = j;
          break;
        }
      }
      if (col == kNoColumn) {
        rows_.erase(rows_.begin() + static_cast<std::ptrdiff_t>(i));
        basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(i));
        continue;
      }
      Pivot(i, col);
      ++i;
    }
    for (auto& row : rows_) {
      Rational rhs = row[cols_];
      row.resize(first + 1);
      row[first] = std::move(rhs);
    }
    cols_ = first;
    cost_.clear();
  }

  const Rational& value() const { return cost_[cols_]; }

  Vector Solution() const {
    Vector x(cols_, Rational(0));
    for (std::size_t i = 0; i < rows_.size(); ++i) x[basis_[i]] = rows_[i][cols_];
    return x;
  }

 private:
  Matrix rows_;
  std::vector<std::size_t> basis_;
  Vector cost_;
  std::size_t cols_ = 0;
};

// Column layout of the standard-form conversion: the structural variables
// (each free variable split into a positive and a negative part), then one
// slack per inequality, then one artificial per row.
struct StandardForm {
  Matrix rows;
  std::size_t structural = 0;
  std::size_t artificial_begin = 0;
};

StandardForm ToStandardForm(const LinearSystem& system) {
  const std::size_t n = system.num_vars;
  const bool split = !system.nonnegative_variables;
  const std::size_t structural = split ? 2 * n : n;
  std::size_t slacks = 0;
  for (const auto& c : system.constraints) {
    if (c.coeffs.size() != n) {
      throw Error(ErrorCode::kDimensionMismatch,
                  "constraint width differs from the variable count");
    }
    if (c.relation != Relation::kEqual) ++slacks;
  }
  const std::size_t m = system.constraints.size();
  const std::size_t cols = structural + slacks + m;

  StandardForm form;
  form.structural = structural;
  form.artificial_begin = structural + slacks;
  form.rows = ZeroMatrix(m, cols + 1);
  std::size_t slack = structural;
  for (std::size_t i = 0; i < m; ++i) {
    const auto& c = system.constraints[i];
    auto& row = form.rows[i];
    for (std::size_t j = 0; j < n; ++j) {
      row[j] = c.coeffs[j];
      if (split) row[n + j] = -c.coeffs[j];
    }
    if (c.relation == Relation::kLessEqual) row[slack++] = 1;
    if (c.relation == Relation::kGreaterEqual) row[slack++] = -1;
    row[cols] = c.rhs;
    if (sgn(row[cols]) < 0) {
      for (auto& v : row) v = -v;
    }
    row[form.artificial_begin + i] = 1;
  }
  return form;
}

Vector RecoverVariables(const LinearSystem& system, const Vector& x) {
  const std::size_t n = system.num_vars;
  Vector point(n);
  for (std::size_t j = 0; j < n; ++j) {
    point[j] = system.nonnegative_variables ? x[j] : x[j] - x[n + j];
  }
  return point;
}

// Runs phase one; returns the tableau restricted to feasible structure, or
// nullopt when the system is infeasible.
std::optional<Tableau> PhaseOne(const LinearSystem& system) {
  StandardForm form = ToStandardForm(system);
  const std::size_t m = form.rows.size();
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) basis[i] = form.artificial_begin + i;
  const std::size_t cols = form.rows.empty() ? form.artificial_begin
                                             : form.rows.front().size() - 1;
  Tableau tableau(std::move(form.rows), std::move(basis));
  if (m == 0) return tableau;

  Vector phase_one(cols, Rational(0));
  for (std::size_t j = form.artificial_begin; j < cols; ++j) phase_one[j] = -1;
  tableau.SetObjective(phase_one);
  // Phase one is bounded above by zero.
  tableau.Optimize(cols);
  if (sgn(tableau.value()) != 0) return std::nullopt;
  tableau.DropArtificials(form.artificial_begin);
  return tableau;
}

}  // namespace

void LinearSystem::Add(Vector coeffs, Relation relation, Rational rhs) {
  constraints.push_back({std::move(coeffs), relation, std::move(rhs)});
}

LpSolution Maximize(const LinearSystem& system, const Vector& objective) {
  if (objective.size() != system.num_vars) {
    throw Error(ErrorCode::kDimensionMismatch, "objective width");
  }
  LpSolution solution;
  auto tableau = PhaseOne(system);
  if (!tableau) {
    solution.status = LpStatus::kInfeasible;
    return solution;
  }
  if (system.constraints.empty()) {
    // Unconstrained: bounded only if no coordinate direction improves.
    const bool zero = std::all_of(objective.begin(), objective.end(),
                                  [](const Rational& v) { return sgn(v) == 0; });
    const bool bounded =
        zero || (system.nonnegative_variables &&
                 std::all_of(objective.begin(), objective.end(),
                             [](const Rational& v) { return sgn(v) <= 0; }));
    solution.status = bounded ? LpStatus::kOptimal : LpStatus::kUnbounded;
    solution.value = 0;
    solution.point.assign(system.num_vars, Rational(0));
    return solution;
  }
  Vector full(tableau->num_cols(), Rational(0));
  for (std::size_t j = 0; j < system.num_vars; ++j) {
    full[j] = objective[j];
    if (!system.nonnegative_variables) full[system.num_vars + j] = -objective[j];
  }
  tableau->SetObjective(full);
  if (!tableau->Optimize(tableau->num_cols())) {
    solution.status = LpStatus::kUnbounded;
    return solution;
  }
  solution.status = LpStatus::kOptimal;
  solution.value = tableau->value();
  solution.point = RecoverVariables(system, tableau->Solution());
  return solution;
}

FeasibilityResult LpFeasible(const LinearSystem& system) {
  auto tableau = PhaseOne(system);
  FeasibilityResult result;
  if (!tableau) return result;
  result.feasible = true;
  if (system.constraints.empty()) {
    result.witness = Vector(system.num_vars, Rational(0));
  } else {
    result.witness = RecoverVariables(system, tableau->Solution());
  }
  return result;
}

bool Satisfies(const LinearSystem& system, const Vector& point) {
  if (point.size() != system.num_vars) return false;
  if (system.nonnegative_variables) {
    for (const auto& v : point) {
      if (sgn(v) < 0) return false;
    }
  }
  for (const auto& c : system.constraints) {
    const Rational lhs = Dot(c.coeffs, point);
    switch (c.relation) {
      case Relation::kLessEqual:
        if (lhs > c.rhs) return false;
        break;
      case Relation::kGreaterEqual:
        if (lhs < c.rhs) return false;
        break;
      case Relation::kEqual:
        if (lhs != c.rhs) return false;
        break;
    }
  }
  return true;
}

std::optional<Vector> SolveSquare(Matrix lhs, Vector rhs) {
  const std::size_t n = lhs.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && sgn(lhs[pivot][col]) == 0) ++pivot;
    if (pivot == n) return std::nullopt;
    std::swap(lhs[pivot], lhs[col]);
    std::swap(rhs[pivot], rhs[col]);
    const Rational inv = 1 / lhs[col][col];
    for (std::size_t j = col; j < n; ++j) lhs[col][j] *= inv;
    rhs[col] *= inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || sgn(lhs[i][col]) == 0) continue;
      const Rational factor = lhs[i][col];
      for (std::size_t j = col; j < n; ++j) lhs[i][j] -= factor * lhs[col][j];
      rhs[i] -= factor * rhs[col];
    }
  }
  return rhs;
}

}  // namespace mbce
