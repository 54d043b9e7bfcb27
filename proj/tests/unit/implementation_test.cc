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

#include "doctest.h"
#include "mbce/consistency.h"
#include "mbce/errors.h"
#include "mbce/random.h"
#include "support/fixtures.h"

namespace mbce {
namespace {

using testing::FullInformation;
using testing::MatchingGame;
using testing::NoInformation;
using testing::Q;
using testing::V;

const Vector kUniform{Rational(1, 2), Rational(1, 2)};

ActionMarginal Nu(std::initializer_list<const char*> items) {
  return ActionMarginal{V(items)};
}

// Three posteriors over three states whose best-response sets are {a1,a2},
// {a2} and {a1,a2,a3}.
struct ThreeBeliefFixture {
  PosteriorDistribution tau{
      {V({"1/2", "1/2", "0"}), V({"0", "1", "0"}), V({"1/3", "1/3", "1/3"})},
      V({"1/3", "1/3", "1/3"})};
  BaseGame game = testing::ThreeCoordinateGame(V({"5/18", "11/18", "1/9"}));
};

TEST_CASE("IsBayesPlausible") {
  CHECK(IsBayesPlausible(NoInformation(kUniform), kUniform));
  CHECK(IsBayesPlausible(FullInformation(kUniform), kUniform));
  const PosteriorDistribution skewed{{{1, 0}, {0, 1}}, V({"3/4", "1/4"})};
  CHECK_FALSE(IsBayesPlausible(skewed, kUniform));
  CHECK(IsBayesPlausible(ThreeBeliefFixture{}.tau,
                         ThreeBeliefFixture{}.game.prior));
}

TEST_CASE("ComputeMenuMeasure") {
  const BaseGame g = MatchingGame(Q("1/2"));
  const MenuMeasure full = ComputeMenuMeasure(FullInformation(kUniform), g);
  CHECK(full.mass.size() == 2);
  CHECK(full.mass.at({0}) == Q("1/2"));
  CHECK(full.mass.at({1}) == Q("1/2"));

  const MenuMeasure none = ComputeMenuMeasure(NoInformation(kUniform), g);
  CHECK(none.mass.size() == 1);
  CHECK(none.mass.at({0, 1}) == 1);

  const BaseGame single = testing::SingleActionGame();
  const MenuMeasure one = ComputeMenuMeasure(FullInformation(single.prior),
                                             single);
  CHECK(one.mass.size() == 1);
  CHECK(one.mass.at({0}) == 1);
}

TEST_CASE("CoreCheck and DemandCheck agree on the matching fixtures") {
  const BaseGame g = MatchingGame(Q("1/2"));
  const PosteriorDistribution full = FullInformation(kUniform);
  const MenuMeasure menus = ComputeMenuMeasure(full, g);

  CHECK(CoreCheck(Nu({"1/2", "1/2"}), menus).holds);
  CHECK(DemandCheck(Nu({"1/2", "1/2"}), full, g).holds);

  const SubsetVerdict core = CoreCheck(Nu({"1/4", "3/4"}), menus);
  CHECK_FALSE(core.holds);
  CHECK(*core.violating == ActionSet{0});
  CHECK(core.lhs == Q("1/4"));
  CHECK(core.rhs == Q("1/2"));
  const SubsetVerdict demand = DemandCheck(Nu({"1/4", "3/4"}), full, g);
  CHECK_FALSE(demand.holds);
  CHECK(*demand.violating == ActionSet{1});

  const PosteriorDistribution none = NoInformation(kUniform);
  for (const auto& nu : {Nu({"0", "1"}), Nu({"1/5", "4/5"})}) {
    CHECK(CoreCheck(nu, ComputeMenuMeasure(none, g)).holds);
    CHECK(DemandCheck(nu, none, g).holds);
  }
}

TEST_CASE("subset checks refuse more than twelve actions") {
  const std::size_t n = kMaxSubsetCheckActions + 1;
  ActionMarginal nu{Vector(n, Rational(1) / static_cast<unsigned long>(n))};
  try {
    CoreCheck(nu, MenuMeasure{});
    FAIL("expected a guard error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kTooManyActionsForSubsetCheck);
  }
}

TEST_CASE("BuildGaleNetwork") {
  const ThreeBeliefFixture fx;
  const GaleNetwork three =
      BuildGaleNetwork(fx.tau, Nu({"1/3", "1/3", "1/3"}), fx.game);
  CHECK(three.network.edges().size() == 6);
  CHECK(three.num_beliefs == 3);
  CHECK(three.edge_ends ==
        std::vector<std::pair<std::size_t, std::size_t>>{
            {0, 0}, {0, 1}, {1, 1}, {2, 0}, {2, 1}, {2, 2}});

  const BaseGame g = MatchingGame(Q("1/2"));
  const GaleNetwork full =
      BuildGaleNetwork(FullInformation(kUniform), Nu({"1/2", "1/2"}), g);
  CHECK(full.edge_ends ==
        std::vector<std::pair<std::size_t, std::size_t>>{{0, 0}, {1, 1}});

  const GaleNetwork none =
      BuildGaleNetwork(NoInformation(kUniform), Nu({"1/2", "1/2"}), g);
  CHECK(none.network.nodes().size() == 3);
  CHECK(none.edge_ends ==
        std::vector<std::pair<std::size_t, std::size_t>>{{0, 0}, {0, 1}});
}

TEST_CASE("Gale network flows") {
  const BaseGame g = MatchingGame(Q("1/2"));
  const PosteriorDistribution full = FullInformation(kUniform);
  const GaleNetwork ok = BuildGaleNetwork(full, Nu({"1/2", "1/2"}), g);
  const FlowResult flow = MaxFlowFeasible(ok.network);
  REQUIRE(flow.feasible);
  CHECK(*flow.flow == kUniform);
  const DecisionRule alpha = DecisionRuleFromFlow(ok, flow, full);
  CHECK(alpha.probs == Matrix{{1, 0}, {0, 1}});

  const GaleNetwork bad = BuildGaleNetwork(full, Nu({"1/4", "3/4"}), g);
  const FlowResult none = MaxFlowFeasible(bad.network);
  CHECK_FALSE(none.feasible);
  CHECK(none.delivered == Q("3/4"));
  try {
    DecisionRuleFromFlow(bad, none, full);
    FAIL("expected kInfeasibleFlow");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kInfeasibleFlow);
  }
}

TEST_CASE("DecisionRuleFromFlow splits a single posterior by demand") {
  const BaseGame g = MatchingGame(Q("1/2"));
  const PosteriorDistribution none = NoInformation(kUniform);
  const GaleNetwork gale = BuildGaleNetwork(none, Nu({"1/3", "2/3"}), g);
  const DecisionRule alpha =
      DecisionRuleFromFlow(gale, MaxFlowFeasible(gale.network), none);
  CHECK(alpha.probs == Matrix{V({"1/3", "2/3"})});

  const BaseGame single = testing::SingleActionGame();
  const PosteriorDistribution point = NoInformation(single.prior);
  const GaleNetwork trivial = BuildGaleNetwork(point, Nu({"1"}), single);
  CHECK(DecisionRuleFromFlow(trivial, MaxFlowFeasible(trivial.network), point)
            .probs == Matrix{{1}});
}

TEST_CASE("MenuRuleFromCore") {
  MenuMeasure tie;
  tie.mass[{0, 1}] = 1;
  const MenuRule split = MenuRuleFromCore(tie, Nu({"1/3", "2/3"}));
  CHECK(split.rule.at({0, 1}) == V({"1/3", "2/3"}));

  MenuMeasure singles;
  singles.mass[{0}] = Q("1/2");
  singles.mass[{1}] = Q("1/2");
  const MenuRule id = MenuRuleFromCore(singles, Nu({"1/2", "1/2"}));
  CHECK(id.rule.at({0}) == Vector{1, 0});
  CHECK(id.rule.at({1}) == Vector{0, 1});

  MenuMeasure three;
  three.mass[{0}] = Q("1/6");
  three.mass[{1}] = Q("1/3");
  three.mass[{2}] = Q("1/2");
  const MenuRule diag = MenuRuleFromCore(three, Nu({"1/6", "1/3", "1/2"}));
  for (std::size_t a = 0; a < 3; ++a) {
    CHECK(diag.rule.at({a})[a] == 1);
  }

  try {
    MenuRuleFromCore(singles, Nu({"1/4", "3/4"}));
    FAIL("expected kCoreViolation");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kCoreViolation);
  }
}

TEST_CASE("ChoiceRuleFromTau and OutcomeFromTau") {
  const PosteriorDistribution full = FullInformation(kUniform);
  const DecisionRule identity{{{1, 0}, {0, 1}}};
  const StochasticChoiceRule sigma = ChoiceRuleFromTau(full, identity, kUniform);
  CHECK(sigma.probs == Matrix{{1, 0}, {0, 1}});
  CHECK(OutcomeFromTau(full, identity, kUniform) ==
        testing::Table({{"1/2", "0"}, {"0", "1/2"}}));

  const Vector prior = V({"3/4", "1/4"});
  const PosteriorDistribution none = NoInformation(prior);
  const DecisionRule flat{{V({"1/3", "2/3"})}};
  const StochasticChoiceRule by_state = ChoiceRuleFromTau(none, flat, prior);
  CHECK(by_state.probs[0] == V({"1/3", "2/3"}));
  CHECK(by_state.probs[1] == V({"1/3", "2/3"}));
  CHECK(OutcomeFromTau(none, flat, prior) ==
        ProductOutcome(prior, ActionMarginal{V({"1/3", "2/3"})}));

  const DecisionRule always{{{0, 1}, {0, 1}}};
  const StochasticChoiceRule constant = ChoiceRuleFromTau(full, always, kUniform);
  CHECK(constant.probs == Matrix{{0, 1}, {0, 1}});
  CHECK(OutcomeFromTau(full, always, kUniform) ==
        testing::Table({{"0", "0"}, {"1/2", "1/2"}}));
}

TEST_CASE("TauFromOutcome") {
  const PosteriorSplit diag = TauFromOutcome(
      testing::Table({{"1/2", "0"}, {"0", "1/2"}}), kUniform);
  CHECK(diag.tau.support == Matrix{{1, 0}, {0, 1}});
  CHECK(diag.tau.weights == kUniform);
  CHECK(diag.alpha.probs == Matrix{{1, 0}, {0, 1}});

  const Vector prior = V({"3/4", "1/4"});
  const ActionMarginal nu = Nu({"1/3", "2/3"});
  const PosteriorSplit product =
      TauFromOutcome(ProductOutcome(prior, nu), prior);
  CHECK(product.tau.support == Matrix{prior});
  CHECK(product.tau.weights == Vector{1});
  CHECK(product.alpha.probs == Matrix{nu.probs});

  const PosteriorSplit witness = TauFromOutcome(
      testing::Table({{"1/2", "0"}, {"1/4", "1/4"}}), prior);
  CHECK(witness.tau.support == Matrix{{1, 0}, kUniform});
  CHECK(witness.tau.weights == kUniform);
  CHECK(witness.alpha.probs == Matrix{{1, 0}, {0, 1}});
}

TEST_CASE("ImplementMarginal") {
  const BaseGame g = MatchingGame(Q("1/2"));
  const ImplementationResult flat =
      ImplementMarginal(g, Nu({"1/3", "2/3"}), NoInformation(kUniform));
  CHECK(flat.choice_rule.probs[0] == V({"1/3", "2/3"}));
  CHECK(flat.choice_rule.probs[1] == V({"1/3", "2/3"}));

  try {
    ImplementMarginal(g, Nu({"1/4", "3/4"}), FullInformation(kUniform));
    FAIL("expected ImplementationInfeasible");
  } catch (const ImplementationInfeasibleError& e) {
    CHECK(e.code() == ErrorCode::kImplementationInfeasible);
    CHECK(e.subset() == std::vector<std::size_t>{0});
  }

  const BaseGame single = testing::SingleActionGame();
  const ImplementationResult trivial = ImplementMarginal(
      single, Nu({"1"}), FullInformation(single.prior));
  CHECK(trivial.outcome == ProductOutcome(single.prior, Nu({"1"})));

  const PosteriorDistribution skewed{{{1, 0}, {0, 1}}, V({"3/4", "1/4"})};
  try {
    ImplementMarginal(g, Nu({"1/2", "1/2"}), skewed);
    FAIL("expected kNotBayesPlausible");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kNotBayesPlausible);
  }
}

TEST_CASE("random triples: subset checks, flows and constructions agree") {
  Xorshift64Star rng(61);
  int feasible = 0;
  int infeasible = 0;
  for (int trial = 0; trial < 150; ++trial) {
    const auto states = static_cast<std::size_t>(rng.Uniform(2, 4));
    const BaseGame g =
        RandomGame(rng, states, static_cast<std::size_t>(rng.Uniform(2, 4)));
    const PosteriorDistribution tau = RandomPosteriorSplit(rng, g.prior, 5);
    REQUIRE(IsBayesPlausible(tau, g.prior));
    ActionMarginal nu;
    if (trial % 2 == 0) {
      nu.probs = ActionMarginalOf(
          OutcomeFromTau(tau, RandomDecisionRule(rng, tau, g), g.prior));
    } else {
      nu.probs = RandomComposition(rng, g.num_actions(), true);
    }
    const MenuMeasure menus = ComputeMenuMeasure(tau, g);
    const bool core = CoreCheck(nu, menus).holds;
    CHECK(core == testing::CoreHoldsBruteForce(nu, menus));
    CHECK(core == DemandCheck(nu, tau, g).holds);
    CHECK(core == MaxFlowFeasible(BuildGaleNetwork(tau, nu, g).network).feasible);
    if (!core) {
      ++infeasible;
      CHECK_THROWS_AS(ImplementMarginal(g, nu, tau),
                      ImplementationInfeasibleError);
      continue;
    }
    ++feasible;
    const ImplementationResult r = ImplementMarginal(g, nu, tau);
    CHECK(CheckObedience(r.outcome, g).holds);
    CHECK(CheckStateMarginal(r.outcome, g.prior));
    CHECK(CheckActionMarginal(r.outcome, nu));
    const MenuRule menu_rule = MenuRuleFromCore(menus, nu);
    for (std::size_t a = 0; a < g.num_actions(); ++a) {
      Rational total = 0;
      for (const auto& [set, mass] : menus.mass) {
        if (std::count(set.begin(), set.end(), a) == 1) {
          total += mass * menu_rule.rule.at(set)[a];
        }
      }
      CHECK(total == nu.probs[a]);
    }
    const PosteriorSplit back = TauFromOutcome(r.outcome, g.prior);
    CHECK(OutcomeFromTau(back.tau, back.alpha, g.prior) == r.outcome);
  }
  CHECK(feasible > 40);
  CHECK(infeasible > 20);
}

TEST_CASE("consistency witnesses induce implementable posteriors") {
  Xorshift64Star rng(67);
  int checked = 0;
  for (int trial = 0; trial < 120; ++trial) {
    const RandomInstance inst = RandomConsistencyInstance(rng, RandomSizes{});
    const ConsistencyVerdict v = CheckBceConsistent(inst.game, inst.marginal);
    if (!v.consistent) continue;
    ++checked;
    const PosteriorSplit split = TauFromOutcome(*v.witness, inst.game.prior);
    const MenuMeasure menus = ComputeMenuMeasure(split.tau, inst.game);
    CHECK(CoreCheck(inst.marginal, menus).holds);
    CHECK(DemandCheck(inst.marginal, split.tau, inst.game).holds);
    CHECK(MaxFlowFeasible(
              BuildGaleNetwork(split.tau, inst.marginal, inst.game).network)
              .feasible);
  }
  CHECK(checked > 30);
}

}  // namespace
}  // namespace mbce
