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

#ifndef MBCE_GAME_H_
#define MBCE_GAME_H_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "mbce/rational.h"

namespace mbce {

// Single-agent base game: finite states and actions, a utility table
// utility[action][state] and a full-support prior over states.
struct BaseGame {
  std::vector<std::string> states;
  std::vector<std::string> actions;
  Matrix utility;
  Vector prior;

  std::size_t num_states() const { return states.size(); }
  std::size_t num_actions() const { return actions.size(); }
};

// Distribution over actions (nu_0).
struct ActionMarginal {
  Vector probs;
};

// Joint distribution over actions and states, probs[action][state].
struct Outcome {
  Matrix probs;

  std::size_t num_actions() const { return probs.size(); }
  std::size_t num_states() const {
    return probs.empty() ? 0 : probs.front().size();
  }
  friend bool operator==(const Outcome&, const Outcome&) = default;
};

// Conditional beliefs mu(.|a). Entry a is empty when the action has zero
// marginal mass.
struct BeliefSystem {
  std::vector<std::optional<Vector>> beliefs;
};

// sigma(.|theta) per state: probs[state][action].
struct StochasticChoiceRule {
  Matrix probs;

  const Rational& at(std::size_t action, std::size_t state) const {
    return probs[state][action];
  }
  friend bool operator==(const StochasticChoiceRule&,
                         const StochasticChoiceRule&) = default;
};

struct ObedienceViolation {
  std::size_t recommended;
  std::size_t deviation;
  Rational slack;  // strictly negative
};

struct ObedienceVerdict {
  bool holds = true;
  std::vector<ObedienceViolation> violations;
};

// Throws Error with kEmptySpace, kDimensionMismatch, kNotADistribution or
// kZeroPriorState.
void ValidateGame(const BaseGame& game);

// Throws kDimensionMismatch or kNotADistribution.
void ValidateMarginal(const BaseGame& game, const ActionMarginal& marginal);

// Obedience: sum_theta pi(a,theta) [u(a,theta) - u(a',theta)] >= 0 for all
// ordered pairs. The utility-table overload serves stage games whose prior
// may not have full support.
ObedienceVerdict CheckObedience(const Outcome& outcome, const BaseGame& game);
ObedienceVerdict CheckObedience(const Outcome& outcome, const Matrix& utility);

bool CheckStateMarginal(const Outcome& outcome, const Vector& prior);
bool CheckActionMarginal(const Outcome& outcome, const ActionMarginal& marginal);

Vector StateMarginalOf(const Outcome& outcome);
Vector ActionMarginalOf(const Outcome& outcome);

Rational ExpectedUtility(const BaseGame& game, std::size_t action,
                         const Vector& belief);

// All actions attaining the exact maximum expected utility, ascending.
std::vector<std::size_t> BestResponseSet(const BaseGame& game,
                                         const Vector& belief);

BeliefSystem BeliefSystemFromOutcome(const Outcome& outcome);

// Throws kStateMarginalMismatch when the column sums of the outcome differ
// from the prior.
StochasticChoiceRule ChoiceRuleFromOutcome(const Outcome& outcome,
                                           const Vector& prior);

// pi(a,theta) = nu0(a) mu0(theta).
Outcome ProductOutcome(const Vector& prior, const ActionMarginal& marginal);

// Removes zero-prior states together with their utility columns.
BaseGame DropNullStates(const BaseGame& game);

}  // namespace mbce

#endif  // MBCE_GAME_H_
