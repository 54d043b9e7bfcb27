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

#include "mbce/polytope.h"

#include <algorithm>

#include "combinations.h"
#include "mbce/errors.h"

namespace mbce {

bool BeliefPolytope::Contains(const Vector& belief) const {
  if (belief.size() != dimension || !IsProbabilityVector(belief)) return false;
  for (const auto& h : halfspaces) {
    if (Dot(h.normal, belief) > h.offset) return false;
  }
  return true;
}

LinearSystem BeliefPolytope::ToLinearSystem() const {
  LinearSystem system;
  system.num_vars = dimension;
  system.nonnegative_variables = true;
  for (const auto& h : halfspaces) {
    system.Add(h.normal, Relation::kLessEqual, h.offset);
  }
  system.Add(Vector(dimension, Rational(1)), Relation::kEqual, 1);
  return system;
}

Direction UtilityDifference(const BaseGame& game, std::size_t a,
                            std::size_t b) {
  Direction d(game.num_states());
  for (std::size_t s = 0; s < game.num_states(); ++s) {
    d[s] = game.utility[a][s] - game.utility[b][s];
  }
  return d;
}

Direction UnitDirection(std::size_t dimension, std::size_t index) {
  Direction d(dimension, Rational(0));
  d.at(index) = 1;
  return d;
}

BeliefPolytope OptBeliefPolytope(const BaseGame& game, std::size_t action) {
  if (action >= game.num_actions()) {
    throw Error(ErrorCode::kDimensionMismatch, "action index out of range");
  }
  BeliefPolytope poly;
  poly.dimension = game.num_states();
  for (std::size_t other = 0; other < game.num_actions(); ++other) {
    if (other == action) continue;
    poly.halfspaces.push_back({UtilityDifference(game, other, action), 0});
  }
  return poly;
}

BeliefPolytope FullSimplex(std::size_t dimension) {
  BeliefPolytope poly;
  poly.dimension = dimension;
  return poly;
}

bool IsEmpty(const BeliefPolytope& poly) {
  return !LpFeasible(poly.ToLinearSystem()).feasible;
}

VertexSet EnumerateVertices(const BeliefPolytope& poly) {
  const std::size_t n = poly.dimension;
  VertexSet vertices;
  if (n == 0) return vertices;

  // Constraint rows a.x <= b: the halfspaces, then -x_i <= 0.
  Matrix normals;
  Vector offsets;
  for (const auto& h : poly.halfspaces) {
    normals.push_back(h.normal);
    offsets.push_back(h.offset);
  }
  for (std::size_t i = 0; i < n; ++i) {
    Vector row(n, Rational(0));
    row[i] = -1;
    normals.push_back(std::move(row));
    offsets.push_back(0);
  }

  internal::ForEachCombination(normals.size(), n - 1,
                     [&](const std::vector<std::size_t>& tight) {
    Matrix lhs;
    Vector rhs;
    for (std::size_t idx : tight) {
      lhs.push_back(normals[idx]);
      rhs.push_back(offsets[idx]);
    }
    lhs.push_back(Vector(n, Rational(1)));
    rhs.push_back(1);
    auto point = SolveSquare(std::move(lhs), std::move(rhs));
    if (!point || !poly.Contains(*point)) return;
    if (std::find(vertices.begin(), vertices.end(), *point) == vertices.end()) {
      vertices.push_back(std::move(*point));
    }
  });
  std::sort(vertices.begin(), vertices.end());
  return vertices;
}

DirectionalMaximum MaximizeDirection(const BeliefPolytope& poly,
                                     const Direction& direction) {
  if (direction.size() != poly.dimension) {
    throw Error(ErrorCode::kDimensionMismatch, "direction dimension");
  }
  LpSolution solution = Maximize(poly.ToLinearSystem(), direction);
  if (solution.status == LpStatus::kInfeasible) {
    throw Error(ErrorCode::kEmptyPolytope, "belief polytope is empty");
  }
  if (solution.status != LpStatus::kOptimal) {
    // The simplex is compact, so this indicates a solver defect.
    throw Error(ErrorCode::kInternalDisagreement,
                "unbounded LP over a compact polytope");
  }
  return {std::move(solution.value), std::move(solution.point)};
}

DirectionalMaximum MaximizeOverVertices(const BeliefPolytope& poly,
                                        const Direction& direction) {
  const VertexSet vertices = EnumerateVertices(poly);
  if (vertices.empty()) {
    throw Error(ErrorCode::kEmptyPolytope, "belief polytope has no vertices");
  }
  std::size_t best = 0;
  Rational best_value = Dot(direction, vertices[0]);
  for (std::size_t i = 1; i < vertices.size(); ++i) {
    Rational value = Dot(direction, vertices[i]);
    if (value > best_value) {
      best = i;
      best_value = std::move(value);
    }
  }
  return {best_value, vertices[best]};
}

}  // namespace mbce
