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

#include "mbce/implementation.h"

#include <algorithm>
#include <cstdint>
#include <string>

#include "combinations.h"
#include "mbce/errors.h"

namespace mbce {

namespace {

void RequireSubsetCheckSize(std::size_t actions) {
  if (actions > kMaxSubsetCheckActions) {
    throw Error(ErrorCode::kTooManyActionsForSubsetCheck,
                std::to_string(actions) + " actions exceed the limit of " +
                    std::to_string(kMaxSubsetCheckActions));
  }
}

std::uint32_t ToMask(const ActionSet& set) {
  std::uint32_t mask = 0;
  for (std::size_t a : set) mask |= std::uint32_t{1} << a;
  return mask;
}

// Evaluates lhs(B) >= rhs(B) over all nonempty subsets, size first, then
// lexicographic; stops at the first failure.
template <typename Lhs, typename Rhs>
SubsetVerdict CheckAllSubsets(std::size_t actions, Lhs&& lhs, Rhs&& rhs) {
  SubsetVerdict verdict;
  for (std::size_t k = 1; k <= actions && verdict.holds; ++k) {
    internal::ForEachCombination(actions, k, [&](const ActionSet& subset) {
      if (!verdict.holds) return;
      const std::uint32_t mask = ToMask(subset);
      Rational left = lhs(mask);
      Rational right = rhs(mask);
      if (left < right) {
        verdict.holds = false;
        verdict.violating = subset;
        verdict.lhs = std::move(left);
        verdict.rhs = std::move(right);
      }
    });
  }
  return verdict;
}

Rational MarginalMass(const ActionMarginal& marginal, std::uint32_t mask) {
  Rational total = 0;
  for (std::size_t a = 0; a < marginal.probs.size(); ++a) {
    if (mask & (std::uint32_t{1} << a)) total += marginal.probs[a];
  }
  return total;
}

void RequireBayesPlausible(const PosteriorDistribution& tau,
                           const BaseGame& game) {
  ValidatePosterior(tau, game.num_states());
  if (!IsBayesPlausible(tau, game.prior)) {
    throw Error(ErrorCode::kNotBayesPlausible,
                "posterior mean differs from the prior");
  }
}

}  // namespace

void ValidatePosterior(const PosteriorDistribution& tau, std::size_t states) {
  if (tau.support.empty()) {
    throw Error(ErrorCode::kEmptySpace, "posterior distribution is empty");
  }
  if (tau.weights.size() != tau.support.size()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "posterior weights and support differ in length");
  }
  for (std::size_t i = 0; i < tau.size(); ++i) {
    if (sgn(tau.weights[i]) <= 0) {
      throw Error(ErrorCode::kNotADistribution,
                  "posterior weight " + std::to_string(i) + " is not positive");
    }
    if (tau.support[i].size() != states) {
      throw Error(ErrorCode::kDimensionMismatch,
                  "posterior belief " + std::to_string(i) + " has wrong size");
    }
    if (!IsProbabilityVector(tau.support[i])) {
      throw Error(ErrorCode::kNotADistribution,
                  "posterior belief " + std::to_string(i) +
                      " is not a probability vector");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (tau.support[i] == tau.support[j]) {
        throw Error(ErrorCode::kValidationError,
                    "posterior support points " + std::to_string(j) + " and " +
                        std::to_string(i) + " coincide");
      }
    }
  }
  if (Sum(tau.weights) != 1) {
    throw Error(ErrorCode::kNotADistribution,
                "posterior weights sum to " + ToString(Sum(tau.weights)));
  }
}

bool IsBayesPlausible(const PosteriorDistribution& tau, const Vector& prior) {
  Vector mean(prior.size(), Rational(0));
  for (std::size_t i = 0; i < tau.size(); ++i) {
    if (tau.support[i].size() != prior.size()) return false;
    for (std::size_t s = 0; s < prior.size(); ++s) {
      mean[s] += tau.weights[i] * tau.support[i][s];
    }
  }
  return mean == prior;
}

MenuMeasure ComputeMenuMeasure(const PosteriorDistribution& tau,
                               const BaseGame& game) {
  MenuMeasure menus;
  for (std::size_t i = 0; i < tau.size(); ++i) {
    menus.mass[BestResponseSet(game, tau.support[i])] += tau.weights[i];
  }
  return menus;
}

SubsetVerdict CoreCheck(const ActionMarginal& marginal,
                        const MenuMeasure& menus) {
  const std::size_t actions = marginal.probs.size();
  RequireSubsetCheckSize(actions);
  std::vector<std::pair<std::uint32_t, Rational>> masks;
  for (const auto& [set, mass] : menus.mass) {
    for (std::size_t a : set) {
      if (a >= actions) {
        throw Error(ErrorCode::kDimensionMismatch, "menu action out of range");
      }
    }
    masks.emplace_back(ToMask(set), mass);
  }
  return CheckAllSubsets(
      actions, [&](std::uint32_t b) { return MarginalMass(marginal, b); },
      [&](std::uint32_t b) {
        Rational total = 0;
        for (const auto& [c, mass] : masks) {
          if ((c & ~b) == 0) total += mass;
        }
        return total;
      });
}

SubsetVerdict DemandCheck(const ActionMarginal& marginal,
                          const PosteriorDistribution& tau,
                          const BaseGame& game) {
  const std::size_t actions = game.num_actions();
  RequireSubsetCheckSize(actions);
  if (marginal.probs.size() != actions) {
    throw Error(ErrorCode::kDimensionMismatch, "marginal size");
  }
  std::vector<std::uint32_t> optimal;
  optimal.reserve(tau.size());
  for (const auto& belief : tau.support) {
    optimal.push_back(ToMask(BestResponseSet(game, belief)));
  }
  return CheckAllSubsets(
      actions,
      [&](std::uint32_t b) {
        Rational total = 0;
        for (std::size_t i = 0; i < tau.size(); ++i) {
          if (optimal[i] & b) total += tau.weights[i];
        }
        return total;
      },
      [&](std::uint32_t b) { return MarginalMass(marginal, b); });
}

GaleNetwork BuildGaleNetwork(const PosteriorDistribution& tau,
                             const ActionMarginal& marginal,
                             const BaseGame& game) {
  GaleNetwork gale;
  gale.num_beliefs = tau.size();
  gale.num_actions = game.num_actions();
  for (std::size_t i = 0; i < tau.size(); ++i) {
    gale.network.AddNode("mu" + std::to_string(i), -tau.weights[i]);
  }
  for (std::size_t a = 0; a < game.num_actions(); ++a) {
    gale.network.AddNode(game.actions[a], marginal.probs.at(a));
  }
  for (std::size_t i = 0; i < tau.size(); ++i) {
    for (std::size_t a : BestResponseSet(game, tau.support[i])) {
      gale.network.AddEdge(i, tau.size() + a);
      gale.edge_ends.emplace_back(i, a);
    }
  }
  return gale;
}

DecisionRule DecisionRuleFromFlow(const GaleNetwork& gale,
                                  const FlowResult& flow,
                                  const PosteriorDistribution& tau) {
  if (!flow.feasible || !flow.flow) {
    throw Error(ErrorCode::kInfeasibleFlow,
                "flow does not meet every action demand");
  }
  DecisionRule rule;
  rule.probs = ZeroMatrix(gale.num_beliefs, gale.num_actions);
  for (std::size_t e = 0; e < gale.edge_ends.size(); ++e) {
    const auto [belief, action] = gale.edge_ends[e];
    rule.probs[belief][action] = (*flow.flow)[e] / tau.weights[belief];
  }
  return rule;
}

MenuRule MenuRuleFromCore(const MenuMeasure& menus,
                          const ActionMarginal& marginal) {
  const SubsetVerdict core = CoreCheck(marginal, menus);
  if (!core.holds) {
    throw Error(ErrorCode::kCoreViolation,
                "marginal is not in the core of the menu game");
  }
  const std::size_t actions = marginal.probs.size();
  FlowNetwork network;
  for (std::size_t a = 0; a < actions; ++a) {
    network.AddNode("a" + std::to_string(a), -marginal.probs[a]);
  }
  std::vector<const ActionSet*> menu_of_node;
  std::vector<std::pair<std::size_t, std::size_t>> edge_ends;  // (action, menu)
  for (const auto& [set, mass] : menus.mass) {
    if (sgn(mass) <= 0) continue;
    const std::size_t node = network.AddNode("menu", mass);
    menu_of_node.push_back(&set);
    for (std::size_t a : set) {
      network.AddEdge(a, node, Rational(1));
      edge_ends.emplace_back(a, menu_of_node.size() - 1);
    }
  }
  const FlowResult flow = MaxFlowFeasible(network);
  if (!flow.feasible) {
    throw Error(ErrorCode::kInternalDisagreement,
                "core condition holds but the menu network has no feasible "
                "flow");
  }
  MenuRule rule;
  for (const ActionSet* set : menu_of_node) {
    rule.rule[*set] = Vector(actions, Rational(0));
  }
  for (std::size_t e = 0; e < edge_ends.size(); ++e) {
    const auto [action, menu] = edge_ends[e];
    const ActionSet& set = *menu_of_node[menu];
    rule.rule[set][action] = (*flow.flow)[e] / menus.mass.at(set);
  }
  return rule;
}

StochasticChoiceRule ChoiceRuleFromTau(const PosteriorDistribution& tau,
                                       const DecisionRule& alpha,
                                       const Vector& prior) {
  if (alpha.probs.size() != tau.size()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "decision rule needs one row per support point");
  }
  const std::size_t actions = alpha.probs.empty() ? 0 : alpha.probs[0].size();
  StochasticChoiceRule rule;
  rule.probs = ZeroMatrix(prior.size(), actions);
  for (std::size_t s = 0; s < prior.size(); ++s) {
    if (sgn(prior[s]) == 0) {
      throw Error(ErrorCode::kZeroPriorState,
                  "choice rule needs a full-support prior");
    }
    for (std::size_t i = 0; i < tau.size(); ++i) {
      const Rational likelihood = tau.weights[i] * tau.support[i][s] / prior[s];
      if (sgn(likelihood) == 0) continue;
      for (std::size_t a = 0; a < actions; ++a) {
        rule.probs[s][a] += likelihood * alpha.probs[i][a];
      }
    }
  }
  return rule;
}

Outcome OutcomeFromTau(const PosteriorDistribution& tau,
                       const DecisionRule& alpha, const Vector& prior) {
  const StochasticChoiceRule sigma = ChoiceRuleFromTau(tau, alpha, prior);
  const std::size_t actions = sigma.probs.empty() ? 0 : sigma.probs[0].size();
  Outcome outcome;
  outcome.probs = ZeroMatrix(actions, prior.size());
  for (std::size_t a = 0; a < actions; ++a) {
    for (std::size_t s = 0; s < prior.size(); ++s) {
      outcome.probs[a][s] = prior[s] * sigma.at(a, s);
    }
  }
  return outcome;
}

PosteriorSplit TauFromOutcome(const Outcome& outcome, const Vector& prior) {
  if (!CheckStateMarginal(outcome, prior)) {
    throw Error(ErrorCode::kStateMarginalMismatch,
                "outcome state marginal differs from the prior");
  }
  const std::size_t actions = outcome.num_actions();
  PosteriorSplit split;
  std::vector<Vector> action_mass;  // per support point, mass of each action
  for (std::size_t a = 0; a < actions; ++a) {
    const Rational mass = Sum(outcome.probs[a]);
    if (sgn(mass) == 0) continue;
    Vector belief;
    belief.reserve(prior.size());
    for (const auto& p : outcome.probs[a]) belief.push_back(p / mass);
    auto it = std::find(split.tau.support.begin(), split.tau.support.end(),
                        belief);
    std::size_t index;
    if (it == split.tau.support.end()) {
      index = split.tau.support.size();
      split.tau.support.push_back(std::move(belief));
      split.tau.weights.push_back(0);
      action_mass.emplace_back(actions, Rational(0));
    } else {
      index = static_cast<std::size_t>(it - split.tau.support.begin());
    }
    split.tau.weights[index] += mass;
    action_mass[index][a] += mass;
  }
  split.alpha.probs = ZeroMatrix(split.tau.size(), actions);
  for (std::size_t i = 0; i < split.tau.size(); ++i) {
    for (std::size_t a = 0; a < actions; ++a) {
      split.alpha.probs[i][a] = action_mass[i][a] / split.tau.weights[i];
    }
  }
  return split;
}

ImplementationResult ImplementMarginal(const BaseGame& game,
                                       const ActionMarginal& marginal,
                                       const PosteriorDistribution& tau) {
  ValidateGame(game);
  ValidateMarginal(game, marginal);
  RequireBayesPlausible(tau, game);
  const SubsetVerdict demand = DemandCheck(marginal, tau, game);
  if (!demand.holds) {
    // Report in core form: demand fails at B iff the core inequality fails
    // at the complement of B.
    const SubsetVerdict core =
        CoreCheck(marginal, ComputeMenuMeasure(tau, game));
    if (core.holds) {
      throw Error(ErrorCode::kInternalDisagreement,
                  "demand condition fails but the core condition holds");
    }
    throw ImplementationInfeasibleError(
        *core.violating, "actions in the subset carry mass " +
                             ToString(core.lhs) +
                             " but are the only optimal actions with mass " +
                             ToString(core.rhs));
  }
  const GaleNetwork gale = BuildGaleNetwork(tau, marginal, game);
  const FlowResult flow = MaxFlowFeasible(gale.network);
  if (!flow.feasible) {
    throw Error(ErrorCode::kInternalDisagreement,
                "demand condition holds but the Gale network is infeasible");
  }
  ImplementationResult result;
  result.decision_rule = DecisionRuleFromFlow(gale, flow, tau);
  result.choice_rule = ChoiceRuleFromTau(tau, result.decision_rule, game.prior);
  result.outcome = OutcomeFromTau(tau, result.decision_rule, game.prior);
  return result;
}

}  // namespace mbce
