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

#include "mbce/random.h"

#include <algorithm>
#include <string>

#include "mbce/errors.h"

namespace mbce {

Xorshift64Star::Xorshift64Star(std::uint64_t seed)
    : state_(seed == 0 ? 0x9E3779B97F4A7C15ULL : seed) {}

std::uint64_t Xorshift64Star::Next() {
  state_ ^= state_ >> 12;
  state_ ^= state_ << 25;
  state_ ^= state_ >> 27;
  return state_ * 0x2545F4914F6CDD1DULL;
}

std::int64_t Xorshift64Star::Uniform(std::int64_t lo, std::int64_t hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<std::int64_t>(Next() % span);
}

std::uint64_t InstanceSeed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + (index + 1) * 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

Vector RandomComposition(Xorshift64Star& rng, std::size_t n, bool allow_zero) {
  std::vector<long> weights(n);
  long total = 0;
  do {
    total = 0;
    for (auto& w : weights) {
      w = static_cast<long>(rng.Uniform(allow_zero ? 0 : 1, 10));
      total += w;
    }
  } while (total == 0);
  Vector probs;
  probs.reserve(n);
  for (long w : weights) probs.emplace_back(Rational(w) / total);
  return probs;
}

BaseGame RandomGame(Xorshift64Star& rng, std::size_t states,
                    std::size_t actions) {
  BaseGame game;
  for (std::size_t s = 0; s < states; ++s) {
    game.states.push_back("t" + std::to_string(s + 1));
  }
  for (std::size_t a = 0; a < actions; ++a) {
    game.actions.push_back("a" + std::to_string(a + 1));
  }
  game.utility = ZeroMatrix(actions, states);
  for (auto& row : game.utility) {
    for (auto& u : row) {
      const long num = static_cast<long>(rng.Uniform(-8, 8));
      const long den = static_cast<long>(rng.Uniform(1, 4));
      u = Rational(num) / den;
    }
  }
  game.prior = RandomComposition(rng, states, false);
  return game;
}

PosteriorDistribution RandomPosteriorSplit(Xorshift64Star& rng,
                                           const Vector& prior,
                                           std::size_t max_support) {
  const std::size_t states = prior.size();
  const auto k = static_cast<std::size_t>(
      rng.Uniform(1, static_cast<std::int64_t>(std::max<std::size_t>(1, max_support))));
  Matrix joint = ZeroMatrix(k, states);
  for (std::size_t s = 0; s < states; ++s) {
    const Vector column = RandomComposition(rng, k, true);
    for (std::size_t j = 0; j < k; ++j) joint[j][s] = prior[s] * column[j];
  }
  PosteriorDistribution tau;
  for (std::size_t j = 0; j < k; ++j) {
    const Rational weight = Sum(joint[j]);
    if (sgn(weight) == 0) continue;
    Vector belief;
    for (const auto& p : joint[j]) belief.push_back(p / weight);
    auto it = std::find(tau.support.begin(), tau.support.end(), belief);
    if (it != tau.support.end()) {
      tau.weights[static_cast<std::size_t>(it - tau.support.begin())] += weight;
    } else {
      tau.support.push_back(std::move(belief));
      tau.weights.push_back(weight);
    }
  }
  return tau;
}

DecisionRule RandomDecisionRule(Xorshift64Star& rng,
                                const PosteriorDistribution& tau,
                                const BaseGame& game) {
  DecisionRule rule;
  rule.probs = ZeroMatrix(tau.size(), game.num_actions());
  for (std::size_t i = 0; i < tau.size(); ++i) {
    const auto best = BestResponseSet(game, tau.support[i]);
    const Vector split = RandomComposition(rng, best.size(), true);
    for (std::size_t k = 0; k < best.size(); ++k) {
      rule.probs[i][best[k]] = split[k];
    }
  }
  return rule;
}

ActionMarginal RandomImplementableMarginal(Xorshift64Star& rng,
                                           const BaseGame& game) {
  const PosteriorDistribution tau = RandomPosteriorSplit(rng, game.prior, 5);
  const DecisionRule alpha = RandomDecisionRule(rng, tau, game);
  return ActionMarginal{ActionMarginalOf(OutcomeFromTau(tau, alpha, game.prior))};
}

RandomInstance RandomConsistencyInstance(Xorshift64Star& rng,
                                         const RandomSizes& sizes) {
  const auto states = static_cast<std::size_t>(
      rng.Uniform(static_cast<std::int64_t>(sizes.min_states),
                  static_cast<std::int64_t>(sizes.max_states)));
  const auto actions = static_cast<std::size_t>(
      rng.Uniform(static_cast<std::int64_t>(sizes.min_actions),
                  static_cast<std::int64_t>(sizes.max_actions)));
  RandomInstance instance;
  instance.game = RandomGame(rng, states, actions);
  if (rng.Uniform(0, 1) == 0) {
    instance.marginal.probs = RandomComposition(rng, actions, true);
  } else {
    instance.marginal = RandomImplementableMarginal(rng, instance.game);
  }
  return instance;
}

}  // namespace mbce
