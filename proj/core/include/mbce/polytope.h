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

#ifndef MBCE_POLYTOPE_H_
#define MBCE_POLYTOPE_H_

#include <cstddef>
#include <vector>

#include "mbce/game.h"
#include "mbce/lp.h"
#include "mbce/rational.h"

namespace mbce {

// Coefficients c over states; linear functional mu -> c.mu on beliefs.
using Direction = Vector;

struct Halfspace {
  Direction normal;
  Rational offset;  // normal . x <= offset
};

// Polytope inside the probability simplex over `dimension` states: the listed
// halfspaces together with x >= 0 and sum(x) = 1.
struct BeliefPolytope {
  std::size_t dimension = 0;
  std::vector<Halfspace> halfspaces;

  bool Contains(const Vector& belief) const;
  LinearSystem ToLinearSystem() const;
};

// Exact vertex list of a belief polytope (no duplicates).
using VertexSet = std::vector<Vector>;

struct DirectionalMaximum {
  Rational value;
  Vector witness;
};

// u(a,.) - u(b,.), the utility-difference direction d_{a,b}.
Direction UtilityDifference(const BaseGame& game, std::size_t a, std::size_t b);

Direction UnitDirection(std::size_t dimension, std::size_t index);

// Beliefs at which `action` is optimal: one halfspace (u(b)-u(a)).x <= 0 per
// competing action b.
BeliefPolytope OptBeliefPolytope(const BaseGame& game, std::size_t action);

BeliefPolytope FullSimplex(std::size_t dimension);

// Phase-one LP emptiness test.
bool IsEmpty(const BeliefPolytope& poly);

// Solves every (dimension-1)-subset of tight constraints together with the
// normalization, keeping feasible distinct solutions. Exponential in the
// number of constraints; intended for |states| <= 8.
VertexSet EnumerateVertices(const BeliefPolytope& poly);

// max c.x over the polytope with an attaining vertex. Throws kEmptyPolytope.
DirectionalMaximum MaximizeDirection(const BeliefPolytope& poly,
                                     const Direction& direction);

// Same optimum computed as the maximum over enumerated vertices. Throws
// kEmptyPolytope when no vertex exists.
DirectionalMaximum MaximizeOverVertices(const BeliefPolytope& poly,
                                        const Direction& direction);

}  // namespace mbce

#endif  // MBCE_POLYTOPE_H_
