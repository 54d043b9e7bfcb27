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

#include <vector>

#include <benchmark/benchmark.h>

#include "mbce/consistency.h"
#include "mbce/implementation.h"
#include "mbce/polytope.h"
#include "mbce/random.h"

namespace mbce {
namespace {

std::vector<RandomInstance> Instances(std::size_t states, std::size_t actions) {
  RandomSizes sizes{states, states, actions, actions};
  std::vector<RandomInstance> out;
  for (std::uint64_t i = 0; i < 32; ++i) {
    Xorshift64Star rng(InstanceSeed(1, i));
    out.push_back(RandomConsistencyInstance(rng, sizes));
  }
  return out;
}

void BM_FindViolation(benchmark::State& state) {
  const auto instances = Instances(static_cast<std::size_t>(state.range(0)),
                                   static_cast<std::size_t>(state.range(1)));
  std::size_t i = 0;
  for (auto _ : state) {
    const auto& inst = instances[i++ % instances.size()];
    benchmark::DoNotOptimize(FindViolation(inst.game, inst.marginal));
  }
}
BENCHMARK(BM_FindViolation)->Args({2, 2})->Args({4, 4})->Args({6, 6});

void BM_OracleFeasibility(benchmark::State& state) {
  const auto instances = Instances(static_cast<std::size_t>(state.range(0)),
                                   static_cast<std::size_t>(state.range(1)));
  std::size_t i = 0;
  for (auto _ : state) {
    const auto& inst = instances[i++ % instances.size()];
    benchmark::DoNotOptimize(OracleFeasibility(inst.game, inst.marginal));
  }
}
BENCHMARK(BM_OracleFeasibility)->Args({2, 2})->Args({4, 4})->Args({6, 6});

void BM_EnumerateVertices(benchmark::State& state) {
  const auto states = static_cast<std::size_t>(state.range(0));
  Xorshift64Star rng(2);
  const BaseGame game = RandomGame(rng, states, 4);
  for (auto _ : state) {
    for (std::size_t a = 0; a < game.num_actions(); ++a) {
      benchmark::DoNotOptimize(EnumerateVertices(OptBeliefPolytope(game, a)));
    }
  }
}
BENCHMARK(BM_EnumerateVertices)->Arg(2)->Arg(4)->Arg(6);

void BM_GaleFlow(benchmark::State& state) {
  const auto actions = static_cast<std::size_t>(state.range(0));
  Xorshift64Star rng(3);
  const BaseGame game = RandomGame(rng, 4, actions);
  const PosteriorDistribution tau = RandomPosteriorSplit(rng, game.prior, 8);
  const ActionMarginal nu{ActionMarginalOf(
      OutcomeFromTau(tau, RandomDecisionRule(rng, tau, game), game.prior))};
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        MaxFlowFeasible(BuildGaleNetwork(tau, nu, game).network));
  }
}
BENCHMARK(BM_GaleFlow)->Arg(3)->Arg(6)->Arg(12);

void BM_DemandCheck(benchmark::State& state) {
  const auto actions = static_cast<std::size_t>(state.range(0));
  Xorshift64Star rng(4);
  const BaseGame game = RandomGame(rng, 4, actions);
  const PosteriorDistribution tau = RandomPosteriorSplit(rng, game.prior, 8);
  const ActionMarginal nu{RandomComposition(rng, actions, true)};
  for (auto _ : state) {
    benchmark::DoNotOptimize(DemandCheck(nu, tau, game));
  }
}
BENCHMARK(BM_DemandCheck)->Arg(3)->Arg(6)->Arg(12);

}  // namespace
}  // namespace mbce

BENCHMARK_MAIN();
