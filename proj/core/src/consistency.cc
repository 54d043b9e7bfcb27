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

#include "mbce/consistency.h"

#include <utility>
#include <vector>

#include "mbce/errors.h"
#include "mbce/lp.h"

namespace mbce {

namespace {

// Support function of opt(action) in `direction`.
Rational SupportValue(const BaseGame& game, std::size_t action,
                      const Direction& direction,
                      const ConsistencyOptions& options) {
  const BeliefPolytope poly = OptBeliefPolytope(game, action);
  DirectionalMaximum lp = MaximizeDirection(poly, direction);
  if (options.cross_check_vertices) {
    const DirectionalMaximum by_vertices = MaximizeOverVertices(poly, direction);
    if (by_vertices.value != lp.value) {
      throw Error(ErrorCode::kInternalDisagreement,
                  "LP and vertex support values differ for action " +
                      game.actions[action]);
    }
  }
  return std::move(lp.value);
}

void RequireSupportable(const BaseGame& game, const ActionMarginal& marginal) {
  for (std::size_t a = 0; a < game.num_actions(); ++a) {
    if (sgn(marginal.probs[a]) > 0 && IsEmpty(OptBeliefPolytope(game, a))) {
      throw Error(ErrorCode::kUnsupportableAction,
                  "action " + game.actions[a] +
                      " has positive mass but is optimal at no belief");
    }
  }
}

Direction Negated(Direction d) {
  for (auto& v : d) v = -v;
  return d;
}

// sum over supported actions of nu0(a) * max_{opt(a)} c.mu. Inputs are
// assumed validated and supportable.
Rational WeightedSupport(const BaseGame& game, const ActionMarginal& marginal,
                         const Direction& direction,
                         const ConsistencyOptions& options) {
  Rational total = 0;
  for (std::size_t a = 0; a < game.num_actions(); ++a) {
    if (sgn(marginal.probs[a]) == 0) continue;
    total += marginal.probs[a] * SupportValue(game, a, direction, options);
  }
  return total;
}

void RequireInputs(const BaseGame& game, const ActionMarginal& marginal) {
  ValidateMarginal(game, marginal);
  RequireSupportable(game, marginal);
}

Rational StateResidualUnchecked(const BaseGame& game,
                                const ActionMarginal& marginal,
                                std::size_t state,
                                const ConsistencyOptions& options) {
  // min mu(theta) = -max(-mu(theta)).
  const Direction down = Negated(UnitDirection(game.num_states(), state));
  return game.prior[state] + WeightedSupport(game, marginal, down, options);
}

Rational StrassenUnchecked(const BaseGame& game, const ActionMarginal& marginal,
                           const Direction& direction,
                           const ConsistencyOptions& options) {
  return WeightedSupport(game, marginal, direction, options) -
         Dot(direction, game.prior);
}

}  // namespace

std::string_view ViolationKindName(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::kStateCondition: return "StateCondition";
    case ViolationKind::kActionPairCondition: return "ActionPairCondition";
    case ViolationKind::kUnsupportableAction: return "UnsupportableAction";
    case ViolationKind::kSeparatingDirection: return "SeparatingDirection";
  }
  return "Unknown";
}

Rational StrassenResidual(const BaseGame& game, const ActionMarginal& marginal,
                          const Direction& direction,
                          const ConsistencyOptions& options) {
  if (direction.size() != game.num_states()) {
    throw Error(ErrorCode::kDimensionMismatch, "direction dimension");
  }
  RequireInputs(game, marginal);
  return StrassenUnchecked(game, marginal, direction, options);
}

Rational StateConditionResidual(const BaseGame& game,
                                const ActionMarginal& marginal,
                                std::size_t state,
                                const ConsistencyOptions& options) {
  if (state >= game.num_states()) {
    throw Error(ErrorCode::kDimensionMismatch, "state index out of range");
  }
  RequireInputs(game, marginal);
  return StateResidualUnchecked(game, marginal, state, options);
}

Rational ActionPairResidual(const BaseGame& game,
                            const ActionMarginal& marginal, std::size_t first,
                            std::size_t second,
                            const ConsistencyOptions& options) {
  return StrassenResidual(game, marginal,
                          UtilityDifference(game, first, second), options);
}

Rational ReversedPairResidual(const BaseGame& game,
                              const ActionMarginal& marginal,
                              std::size_t first, std::size_t second) {
  RequireInputs(game, marginal);
  const Direction d = UtilityDifference(game, first, second);
  // min_{opt(a)} mu.d = -max_{opt(a)} mu.(-d)
  return Dot(d, game.prior) +
         WeightedSupport(game, marginal, Negated(d), ConsistencyOptions{});
}

std::optional<ViolationCertificate> FindViolation(
    const BaseGame& game, const ActionMarginal& marginal,
    const ConsistencyOptions& options) {
  ValidateGame(game);
  ValidateMarginal(game, marginal);
  const std::size_t states = game.num_states();
  const std::size_t actions = game.num_actions();

  for (std::size_t a = 0; a < actions; ++a) {
    if (sgn(marginal.probs[a]) > 0 && IsEmpty(OptBeliefPolytope(game, a))) {
      ViolationCertificate cert;
      cert.kind = ViolationKind::kUnsupportableAction;
      cert.first = a;
      cert.residual = -marginal.probs[a];
      cert.direction.assign(states, Rational(0));
      return cert;
    }
  }
  for (std::size_t s = 0; s < states; ++s) {
    Rational residual = StateResidualUnchecked(game, marginal, s, options);
    if (sgn(residual) < 0) {
      ViolationCertificate cert;
      cert.kind = ViolationKind::kStateCondition;
      cert.first = s;
      cert.residual = std::move(residual);
      cert.direction = Negated(UnitDirection(states, s));
      return cert;
    }
  }
  for (std::size_t a = 0; a < actions; ++a) {
    for (std::size_t b = 0; b < actions; ++b) {
      if (a == b) continue;
      Rational residual = StrassenUnchecked(
          game, marginal, UtilityDifference(game, a, b), options);
      if (sgn(residual) < 0) {
        ViolationCertificate cert;
        cert.kind = ViolationKind::kActionPairCondition;
        cert.first = a;
        cert.second = b;
        cert.residual = std::move(residual);
        cert.direction = UtilityDifference(game, a, b);
        return cert;
      }
    }
  }
  return std::nullopt;
}

std::optional<ViolationCertificate> FindSeparatingDirection(
    const BaseGame& game, const ActionMarginal& marginal) {
  RequireInputs(game, marginal);
  const std::size_t states = game.num_states();
  std::vector<std::size_t> supported;
  for (std::size_t a = 0; a < game.num_actions(); ++a) {
    if (sgn(marginal.probs[a]) > 0) supported.push_back(a);
  }

  // Variables: c (states entries) then one epigraph variable t_a per
  // supported action, t_a >= c.v for every vertex v of opt(a).
  LinearSystem system;
  system.num_vars = states + supported.size();
  for (std::size_t s = 0; s < states; ++s) {
    Vector row(system.num_vars, Rational(0));
    row[s] = 1;
    system.Add(row, Relation::kLessEqual, 1);
    system.Add(std::move(row), Relation::kGreaterEqual, -1);
  }
  for (std::size_t k = 0; k < supported.size(); ++k) {
    for (const Vector& v :
         EnumerateVertices(OptBeliefPolytope(game, supported[k]))) {
      Vector row(system.num_vars, Rational(0));
      for (std::size_t s = 0; s < states; ++s) row[s] = -v[s];
      row[states + k] = 1;
      system.Add(std::move(row), Relation::kGreaterEqual, 0);
    }
  }
  // maximize c.mu0 - sum nu0(a) t_a, the negated residual.
  Vector objective(system.num_vars, Rational(0));
  for (std::size_t s = 0; s < states; ++s) objective[s] = game.prior[s];
  for (std::size_t k = 0; k < supported.size(); ++k) {
    objective[states + k] = -marginal.probs[supported[k]];
  }
  const LpSolution best = Maximize(system, objective);
  if (best.status != LpStatus::kOptimal) {
    throw Error(ErrorCode::kInternalDisagreement,
                "direction search LP did not reach an optimum");
  }
  if (sgn(best.value) <= 0) return std::nullopt;

  ViolationCertificate cert;
  cert.kind = ViolationKind::kSeparatingDirection;
  cert.direction.assign(best.point.begin(), best.point.begin() + states);
  cert.residual = StrassenUnchecked(game, marginal, cert.direction,
                                    ConsistencyOptions{});
  return cert;
}

OracleResult OracleFeasibility(const BaseGame& game,
                               const ActionMarginal& marginal) {
  ValidateGame(game);
  ValidateMarginal(game, marginal);
  const std::size_t states = game.num_states();
  const std::size_t actions = game.num_actions();
  const auto var = [states](std::size_t a, std::size_t s) {
    return a * states + s;
  };

  LinearSystem system;
  system.num_vars = actions * states;
  system.nonnegative_variables = true;
  for (std::size_t a = 0; a < actions; ++a) {
    for (std::size_t b = 0; b < actions; ++b) {
      if (a == b) continue;
      Vector row(system.num_vars, Rational(0));
      for (std::size_t s = 0; s < states; ++s) {
        row[var(a, s)] = game.utility[a][s] - game.utility[b][s];
      }
      system.Add(std::move(row), Relation::kGreaterEqual, 0);
    }
  }
  for (std::size_t s = 0; s < states; ++s) {
    Vector row(system.num_vars, Rational(0));
    for (std::size_t a = 0; a < actions; ++a) row[var(a, s)] = 1;
    system.Add(std::move(row), Relation::kEqual, game.prior[s]);
  }
  for (std::size_t a = 0; a < actions; ++a) {
    Vector row(system.num_vars, Rational(0));
    for (std::size_t s = 0; s < states; ++s) row[var(a, s)] = 1;
    system.Add(std::move(row), Relation::kEqual, marginal.probs[a]);
  }

  OracleResult result;
  const FeasibilityResult lp = LpFeasible(system);
  result.feasible = lp.feasible;
  if (lp.feasible) {
    Outcome outcome;
    outcome.probs = ZeroMatrix(actions, states);
    for (std::size_t a = 0; a < actions; ++a) {
      for (std::size_t s = 0; s < states; ++s) {
        outcome.probs[a][s] = (*lp.witness)[var(a, s)];
      }
    }
    result.witness = std::move(outcome);
  }
  return result;
}

ConsistencyVerdict CheckBceConsistent(const BaseGame& game,
                                      const ActionMarginal& marginal,
                                      const ConsistencyOptions& options) {
  ConsistencyVerdict verdict;
  verdict.violation = FindViolation(game, marginal, options);
  if (verdict.violation) return verdict;

  OracleResult oracle = OracleFeasibility(game, marginal);
  if (!oracle.feasible) {
    verdict.violation = FindSeparatingDirection(game, marginal);
    if (!verdict.violation) {
      throw Error(ErrorCode::kInternalDisagreement,
                  "the transport LP is infeasible but no direction separates "
                  "the prior");
    }
    return verdict;
  }
  verdict.consistent = true;
  verdict.witness = std::move(oracle.witness);
  return verdict;
}

}  // namespace mbce
