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

#include "mbce/game.h"

#include "mbce/errors.h"

namespace mbce {

namespace {

void CheckOutcomeShape(const Outcome& outcome, std::size_t actions,
                       std::size_t states) {
  if (outcome.probs.size() != actions) {
    throw Error(ErrorCode::kDimensionMismatch,
                "outcome has " + std::to_string(outcome.probs.size()) +
                    " action rows, expected " + std::to_string(actions));
  }
  for (const auto& row : outcome.probs) {
    if (row.size() != states) {
      throw Error(ErrorCode::kDimensionMismatch,
                  "outcome row has " + std::to_string(row.size()) +
                      " state entries, expected " + std::to_string(states));
    }
  }
}

}  // namespace

void ValidateGame(const BaseGame& game) {
  if (game.states.empty()) {
    throw Error(ErrorCode::kEmptySpace, "game has no states");
  }
  if (game.actions.empty()) {
    throw Error(ErrorCode::kEmptySpace, "game has no actions");
  }
  if (game.utility.size() != game.num_actions()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "utility table needs one row per action");
  }
  for (const auto& row : game.utility) {
    if (row.size() != game.num_states()) {
      throw Error(ErrorCode::kDimensionMismatch,
                  "utility row needs one entry per state");
    }
  }
  if (game.prior.size() != game.num_states()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "prior needs one entry per state");
  }
  for (std::size_t s = 0; s < game.prior.size(); ++s) {
    if (sgn(game.prior[s]) < 0) {
      throw Error(ErrorCode::kNotADistribution,
                  "negative prior at state " + game.states[s]);
    }
  }
  if (Sum(game.prior) != 1) {
    throw Error(ErrorCode::kNotADistribution,
                "prior sums to " + ToString(Sum(game.prior)));
  }
  for (std::size_t s = 0; s < game.prior.size(); ++s) {
    if (sgn(game.prior[s]) == 0) {
      throw Error(ErrorCode::kZeroPriorState,
                  "state " + game.states[s] + " has zero prior probability");
    }
  }
}

void ValidateMarginal(const BaseGame& game, const ActionMarginal& marginal) {
  if (marginal.probs.size() != game.num_actions()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "marginal has " + std::to_string(marginal.probs.size()) +
                    " entries, game has " +
                    std::to_string(game.num_actions()) + " actions");
  }
  if (!IsProbabilityVector(marginal.probs)) {
    throw Error(ErrorCode::kNotADistribution,
                "action marginal is not a probability vector");
  }
}

ObedienceVerdict CheckObedience(const Outcome& outcome, const Matrix& utility) {
  const std::size_t actions = utility.size();
  const std::size_t states = actions == 0 ? 0 : utility.front().size();
  CheckOutcomeShape(outcome, actions, states);
  ObedienceVerdict verdict;
  for (std::size_t a = 0; a < actions; ++a) {
    for (std::size_t b = 0; b < actions; ++b) {
      if (a == b) continue;
      Rational slack = 0;
      for (std::size_t s = 0; s < states; ++s) {
        slack += outcome.probs[a][s] * (utility[a][s] - utility[b][s]);
      }
      if (sgn(slack) < 0) {
        verdict.holds = false;
        verdict.violations.push_back({a, b, slack});
      }
    }
  }
  return verdict;
}

ObedienceVerdict CheckObedience(const Outcome& outcome, const BaseGame& game) {
  return CheckObedience(outcome, game.utility);
}

Vector StateMarginalOf(const Outcome& outcome) {
  Vector marginal(outcome.num_states(), Rational(0));
  for (const auto& row : outcome.probs) {
    for (std::size_t s = 0; s < row.size(); ++s) marginal[s] += row[s];
  }
  return marginal;
}

Vector ActionMarginalOf(const Outcome& outcome) {
  Vector marginal;
  marginal.reserve(outcome.num_actions());
  for (const auto& row : outcome.probs) marginal.push_back(Sum(row));
  return marginal;
}

bool CheckStateMarginal(const Outcome& outcome, const Vector& prior) {
  CheckOutcomeShape(outcome, outcome.num_actions(), prior.size());
  return StateMarginalOf(outcome) == prior;
}

bool CheckActionMarginal(const Outcome& outcome,
                         const ActionMarginal& marginal) {
  if (outcome.num_actions() != marginal.probs.size()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "outcome rows do not match the action marginal");
  }
  return ActionMarginalOf(outcome) == marginal.probs;
}

Rational ExpectedUtility(const BaseGame& game, std::size_t action,
                         const Vector& belief) {
  return Dot(game.utility.at(action), belief);
}

std::vector<std::size_t> BestResponseSet(const BaseGame& game,
                                         const Vector& belief) {
  if (belief.size() != game.num_states()) {
    throw Error(ErrorCode::kDimensionMismatch, "belief dimension");
  }
  std::vector<std::size_t> best;
  Rational best_value;
  for (std::size_t a = 0; a < game.num_actions(); ++a) {
    Rational value = ExpectedUtility(game, a, belief);
    if (best.empty() || value > best_value) {
      best.assign(1, a);
      best_value = std::move(value);
    } else if (value == best_value) {
      best.push_back(a);
    }
  }
  return best;
}

BeliefSystem BeliefSystemFromOutcome(const Outcome& outcome) {
  BeliefSystem system;
  system.beliefs.reserve(outcome.num_actions());
  for (const auto& row : outcome.probs) {
    const Rational mass = Sum(row);
    if (sgn(mass) == 0) {
      system.beliefs.emplace_back(std::nullopt);
      continue;
    }
    Vector belief;
    belief.reserve(row.size());
    for (const auto& p : row) belief.push_back(p / mass);
    system.beliefs.emplace_back(std::move(belief));
  }
  return system;
}

StochasticChoiceRule ChoiceRuleFromOutcome(const Outcome& outcome,
                                           const Vector& prior) {
  if (!CheckStateMarginal(outcome, prior)) {
    throw Error(ErrorCode::kStateMarginalMismatch,
                "outcome state marginal differs from the prior");
  }
  StochasticChoiceRule rule;
  rule.probs = ZeroMatrix(prior.size(), outcome.num_actions());
  for (std::size_t s = 0; s < prior.size(); ++s) {
    if (sgn(prior[s]) == 0) {
      throw Error(ErrorCode::kZeroPriorState,
                  "cannot condition on a zero-prior state");
    }
    for (std::size_t a = 0; a < outcome.num_actions(); ++a) {
      rule.probs[s][a] = outcome.probs[a][s] / prior[s];
    }
  }
  return rule;
}

Outcome ProductOutcome(const Vector& prior, const ActionMarginal& marginal) {
  Outcome outcome;
  outcome.probs = ZeroMatrix(marginal.probs.size(), prior.size());
  for (std::size_t a = 0; a < marginal.probs.size(); ++a) {
    for (std::size_t s = 0; s < prior.size(); ++s) {
      outcome.probs[a][s] = marginal.probs[a] * prior[s];
    }
  }
  return outcome;
}

BaseGame DropNullStates(const BaseGame& game) {
  BaseGame reduced;
  reduced.actions = game.actions;
  reduced.utility.resize(game.num_actions());
  for (std::size_t s = 0; s < game.num_states(); ++s) {
    if (s < game.prior.size() && sgn(game.prior[s]) == 0) continue;
    reduced.states.push_back(game.states[s]);
    if (s < game.prior.size()) reduced.prior.push_back(game.prior[s]);
    for (std::size_t a = 0; a < game.num_actions(); ++a) {
      if (s < game.utility[a].size()) {
        reduced.utility[a].push_back(game.utility[a][s]);
      }
    }
  }
  return reduced;
}

}  // namespace mbce
