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

#ifndef MBCE_LP_H_
#define MBCE_LP_H_

#include <cstddef>
#include <optional>
#include <vector>

#include "mbce/rational.h"

namespace mbce {

enum class Relation { kLessEqual, kGreaterEqual, kEqual };

struct LinearConstraint {
  Vector coeffs;
  Relation relation = Relation::kLessEqual;
  Rational rhs;
};

// A system of linear constraints over num_vars rational variables. Variables
// are free unless nonnegative_variables is set.
struct LinearSystem {
  std::size_t num_vars = 0;
  std::vector<LinearConstraint> constraints;
  bool nonnegative_variables = false;

  void Add(Vector coeffs, Relation relation, Rational rhs);
};

struct FeasibilityResult {
  bool feasible = false;
  std::optional<Vector> witness;
};

enum class LpStatus { kOptimal, kInfeasible, kUnbounded };

struct LpSolution {
  LpStatus status = LpStatus::kInfeasible;
  Rational value;
  Vector point;
};

// Two-phase primal simplex on an exact tableau. Pivoting follows Bland's
// smallest-index rule in both phases, so degenerate problems terminate.
LpSolution Maximize(const LinearSystem& system, const Vector& objective);

// Phase one only. The witness satisfies every constraint exactly.
FeasibilityResult LpFeasible(const LinearSystem& system);

bool Satisfies(const LinearSystem& system, const Vector& point);

// Solves a square system by Gauss-Jordan elimination. Returns nullopt when
// the matrix is singular.
std::optional<Vector> SolveSquare(Matrix lhs, Vector rhs);

}  // namespace mbce

#endif  // MBCE_LP_H_
