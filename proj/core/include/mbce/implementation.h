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

#ifndef MBCE_IMPLEMENTATION_H_
#define MBCE_IMPLEMENTATION_H_

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "mbce/flow.h"
#include "mbce/game.h"
#include "mbce/rational.h"

namespace mbce {

// Largest action count accepted by the exhaustive subset checks.
inline constexpr std::size_t kMaxSubsetCheckActions = 12;

// Finitely supported distribution over posterior beliefs.
struct PosteriorDistribution {
  Matrix support;  // one belief vector per support point
  Vector weights;  // strictly positive, summing to one

  std::size_t size() const { return support.size(); }
};

// Sorted action indices.
using ActionSet = std::vector<std::size_t>;

// Mass of each exact best-response set under tau.
struct MenuMeasure {
  std::map<ActionSet, Rational> mass;
};

// alpha(.|mu) per support point: probs[support index][action].
struct DecisionRule {
  Matrix probs;
};

// alpha'(.|B) for each menu carrying positive mass, as a full action vector
// that vanishes outside B.
struct MenuRule {
  std::map<ActionSet, Vector> rule;
};

// Verdict of an exhaustive subset inequality check. When the check fails,
// `violating` is the first failing subset in size-then-lexicographic order
// and lhs/rhs the two sides of its inequality.
struct SubsetVerdict {
  bool holds = true;
  std::optional<ActionSet> violating;
  Rational lhs;
  Rational rhs;
};

// Bipartite network: support beliefs supply tau(mu), actions demand nu0(a),
// unbounded edges (mu, a) exactly when a is optimal at mu.
struct GaleNetwork {
  FlowNetwork network;
  std::size_t num_beliefs = 0;
  std::size_t num_actions = 0;
  // (support index, action) per network edge.
  std::vector<std::pair<std::size_t, std::size_t>> edge_ends;
};

struct ImplementationResult {
  Outcome outcome;
  DecisionRule decision_rule;
  StochasticChoiceRule choice_rule;
};

// Structural checks: positive weights summing to one, probability-vector
// beliefs of the right dimension, pairwise distinct support points.
void ValidatePosterior(const PosteriorDistribution& tau, std::size_t states);

bool IsBayesPlausible(const PosteriorDistribution& tau, const Vector& prior);

MenuMeasure ComputeMenuMeasure(const PosteriorDistribution& tau,
                               const BaseGame& game);

// sum_{a in B} nu0(a) >= sum_{C subset of B} tau_A(C) for every nonempty B.
SubsetVerdict CoreCheck(const ActionMarginal& marginal,
                        const MenuMeasure& menus);

// tau{mu : a*(mu) meets B} >= sum_{a in B} nu0(a) for every nonempty B.
SubsetVerdict DemandCheck(const ActionMarginal& marginal,
                          const PosteriorDistribution& tau,
                          const BaseGame& game);

GaleNetwork BuildGaleNetwork(const PosteriorDistribution& tau,
                             const ActionMarginal& marginal,
                             const BaseGame& game);

// alpha(a|mu) = f(mu,a) / tau(mu). Throws kInfeasibleFlow when the flow does
// not meet every demand.
DecisionRule DecisionRuleFromFlow(const GaleNetwork& gale,
                                  const FlowResult& flow,
                                  const PosteriorDistribution& tau);

// Conditional menu choice satisfying
// nu0(a) = sum_{B containing a} tau_A(B) alpha'(a|B), read off a maximum flow
// on the source -> actions -> menus -> sink network. Throws kCoreViolation.
MenuRule MenuRuleFromCore(const MenuMeasure& menus,
                          const ActionMarginal& marginal);

// sigma(a|theta) = sum_mu tau(mu) mu(theta) / mu0(theta) alpha(a|mu).
StochasticChoiceRule ChoiceRuleFromTau(const PosteriorDistribution& tau,
                                       const DecisionRule& alpha,
                                       const Vector& prior);

// pi(a,theta) = mu0(theta) sigma(a|theta).
Outcome OutcomeFromTau(const PosteriorDistribution& tau,
                       const DecisionRule& alpha, const Vector& prior);

struct PosteriorSplit {
  PosteriorDistribution tau;
  DecisionRule alpha;
};

// One posterior per action with positive mass, mu_a = pi(a,.) / nu(a);
// coincident posteriors are merged and alpha records how the merged mass
// splits across actions. Throws kStateMarginalMismatch.
PosteriorSplit TauFromOutcome(const Outcome& outcome, const Vector& prior);

// Demand check, then Gale flow, decision rule and outcome. Throws
// kNotBayesPlausible or ImplementationInfeasibleError.
ImplementationResult ImplementMarginal(const BaseGame& game,
                                       const ActionMarginal& marginal,
                                       const PosteriorDistribution& tau);

}  // namespace mbce

#endif  // MBCE_IMPLEMENTATION_H_
