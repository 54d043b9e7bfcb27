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

#ifndef MBCE_CONSISTENCY_H_
#define MBCE_CONSISTENCY_H_

#include <cstddef>
#include <optional>
#include <string>

#include "mbce/game.h"
#include "mbce/polytope.h"
#include "mbce/rational.h"

namespace mbce {

enum class ViolationKind { kStateCondition, kActionPairCondition,
                           kUnsupportableAction, kSeparatingDirection };

std::string_view ViolationKindName(ViolationKind kind);

// Why (prior, marginal) cannot be rationalized.
//
//  kStateCondition(first):           direction -e_theta.
//  kActionPairCondition(first, second): direction u(first,.) - u(second,.).
//  kUnsupportableAction(first):      a marginal-supported action that is
//                                    optimal at no belief. The support function
//                                    of its empty polytope is -infinity for
//                                    every direction, so no finite residual
//                                    exists; `residual` holds -marginal(first)
//                                    and `direction` is zero.
//
// For the first two kinds StrassenResidual(direction) == residual.
struct ViolationCertificate {
  ViolationKind kind = ViolationKind::kStateCondition;
  std::size_t first = 0;
  std::size_t second = 0;
  Rational residual;
  Direction direction;
};

struct ConsistencyVerdict {
  bool consistent = false;
  std::optional<Outcome> witness;
  std::optional<ViolationCertificate> violation;
};

struct ConsistencyOptions {
  // Re-evaluates every support-function value over enumerated vertices and
  // throws kInternalDisagreement on any mismatch.
  bool cross_check_vertices = false;
};

// mu0(theta) - sum_{a: nu0(a)>0} nu0(a) min_{mu in opt(a)} mu(theta).
Rational StateConditionResidual(const BaseGame& game,
                                const ActionMarginal& marginal,
                                std::size_t state,
                                const ConsistencyOptions& options = {});

// sum_a nu0(a) max_{mu in opt(a)} mu.d - mu0.d with d = u(first) - u(second).
Rational ActionPairResidual(const BaseGame& game,
                            const ActionMarginal& marginal, std::size_t first,
                            std::size_t second,
                            const ConsistencyOptions& options = {});

// sum_a nu0(a) max_{mu in opt(a)} c.mu - c.mu0, supported actions only.
Rational StrassenResidual(const BaseGame& game, const ActionMarginal& marginal,
                          const Direction& direction,
                          const ConsistencyOptions& options = {});

// The smaller-of-two-sides quantity mirrored from the pair condition:
// mu0.d - sum_a nu0(a) min_{mu in opt(a)} mu.d. Nonnegative whenever all
// state and pair conditions hold.
Rational ReversedPairResidual(const BaseGame& game,
                              const ActionMarginal& marginal,
                              std::size_t first, std::size_t second);

// First violated condition in the fixed order: unsupportable actions, state
// conditions by state, ordered action pairs lexicographically. nullopt means
// every condition holds.
std::optional<ViolationCertificate> FindViolation(
    const BaseGame& game, const ActionMarginal& marginal,
    const ConsistencyOptions& options = {});

// Searches all directions c in the box [-1, 1]^|states| for the most negative
// Strassen residual, by a linear program over the vertices of every opt(a)
// with positive mass. Returns a kSeparatingDirection certificate when that
// minimum is negative. With four or more states the state and pair
// directions checked by FindViolation can all pass while such a direction
// exists.
std::optional<ViolationCertificate> FindSeparatingDirection(
    const BaseGame& game, const ActionMarginal& marginal);

struct OracleResult {
  bool feasible = false;
  std::optional<Outcome> witness;
};

// Feasibility of the obedience-constrained transport polytope: pi >= 0 with
// obedience, state-marginal and action-marginal rows.
OracleResult OracleFeasibility(const BaseGame& game,
                               const ActionMarginal& marginal);

// Decides consistency from the state and pair conditions, then takes the
// witness outcome from the transport LP. When the conditions pass but the LP
// is infeasible, the verdict is inconsistent with a kSeparatingDirection
// certificate from FindSeparatingDirection. kInternalDisagreement is raised
// only if no such direction exists either.
ConsistencyVerdict CheckBceConsistent(const BaseGame& game,
                                      const ActionMarginal& marginal,
                                      const ConsistencyOptions& options = {});

}  // namespace mbce

#endif  // MBCE_CONSISTENCY_H_
