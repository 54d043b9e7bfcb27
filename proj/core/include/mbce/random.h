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

#ifndef MBCE_RANDOM_H_
#define MBCE_RANDOM_H_

#include <cstddef>
#include <cstdint>

#include "mbce/applications.h"
#include "mbce/game.h"
#include "mbce/implementation.h"
#include "mbce/rational.h"

namespace mbce {

// xorshift64* (Vigna): x ^= x >> 12; x ^= x << 25; x ^= x >> 27;
// output x * 0x2545F4914F6CDD1D. A zero seed is replaced by
// 0x9E3779B97F4A7C15. Bounded draws use plain modulo reduction so that other
// implementations can reproduce instance streams bit for bit.
class Xorshift64Star {
 public:
  explicit Xorshift64Star(std::uint64_t seed);

  std::uint64_t Next();
  // Uniform integer in [lo, hi].
  std::int64_t Uniform(std::int64_t lo, std::int64_t hi);

 private:
  std::uint64_t state_;
};

// splitmix64 finalizer of seed + index * golden ratio; per-instance seeds.
std::uint64_t InstanceSeed(std::uint64_t seed, std::uint64_t index);

struct RandomSizes {
  std::size_t min_states = 2;
  std::size_t max_states = 4;
  std::size_t min_actions = 2;
  std::size_t max_actions = 4;
};

struct RandomInstance {
  BaseGame game;
  ActionMarginal marginal;
};

// Integers w_i in [1, 10] (or [0, 10] when zeros are allowed, redrawn if all
// zero), normalized.
Vector RandomComposition(Xorshift64Star& rng, std::size_t n, bool allow_zero);

// Utilities p/q with p uniform in [-8, 8] and q uniform in {1, 2, 3, 4};
// prior a positive composition.
BaseGame RandomGame(Xorshift64Star& rng, std::size_t states,
                    std::size_t actions);

// Splits the prior into at most max_support distinct posteriors: draws a
// nonnegative integer table w[j][theta], sets the joint
// rho(j, theta) = prior(theta) w[j][theta] / sum_k w[k][theta], and reads off
// weights and beliefs. Bayes plausible by construction.
PosteriorDistribution RandomPosteriorSplit(Xorshift64Star& rng,
                                           const Vector& prior,
                                           std::size_t max_support);

// Random decision rule supported on each posterior's best responses.
DecisionRule RandomDecisionRule(Xorshift64Star& rng,
                                const PosteriorDistribution& tau,
                                const BaseGame& game);

// Marginal induced by a random experiment and tie-breaking rule; consistent
// by construction.
ActionMarginal RandomImplementableMarginal(Xorshift64Star& rng,
                                           const BaseGame& game);

// Sizes uniform in the given ranges; the marginal is a random composition
// (zeros allowed) with probability 1/2 and a random implementable marginal
// otherwise.
RandomInstance RandomConsistencyInstance(Xorshift64Star& rng,
                                         const RandomSizes& sizes);

}  // namespace mbce

#endif  // MBCE_RANDOM_H_
