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

// Fixtures and test-only oracles shared by the unit and acceptance suites.
// The oracles here deliberately avoid the library's LP and flow code paths.

#ifndef MBCE_TESTS_SUPPORT_FIXTURES_H_
#define MBCE_TESTS_SUPPORT_FIXTURES_H_

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mbce/applications.h"
#include "mbce/consistency.h"
#include "mbce/game.h"
#include "mbce/implementation.h"
#include "mbce/random.h"
#include "mbce/rational.h"

namespace mbce::testing {

inline Rational Q(const char* text) { return ParseRational(text); }

inline Vector V(std::initializer_list<const char*> items) {
  Vector out;
  for (const char* t : items) out.push_back(ParseRational(t));
  return out;
}

// Two states, two actions, u(a_i, theta_j) = [i == j]; prior (p, 1 - p).
inline BaseGame MatchingGame(const Rational& p) {
  return BaseGame{{"t1", "t2"},
                  {"a1", "a2"},
                  {{1, 0}, {0, 1}},
                  {p, Rational(1) - p}};
}

inline BaseGame SingleActionGame() {
  return BaseGame{{"t1", "t2"}, {"only"}, {{3, -1}}, {Q("1/3"), Q("2/3")}};
}

// Unit-vector utilities over three states: a_i is optimal where theta_i is
// most likely.
inline BaseGame ThreeCoordinateGame(const Vector& prior) {
  return BaseGame{{"t1", "t2", "t3"},
                  {"a1", "a2", "a3"},
                  {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}},
                  prior};
}

inline PosteriorDistribution NoInformation(const Vector& prior) {
  return PosteriorDistribution{{prior}, {Rational(1)}};
}

inline PosteriorDistribution FullInformation(const Vector& prior) {
  PosteriorDistribution tau;
  for (std::size_t s = 0; s < prior.size(); ++s) {
    Vector e(prior.size(), Rational(0));
    e[s] = 1;
    tau.support.push_back(std::move(e));
    tau.weights.push_back(prior[s]);
  }
  return tau;
}

inline Outcome Table(std::initializer_list<std::initializer_list<const char*>> rows) {
  Outcome outcome;
  for (const auto& row : rows) outcome.probs.push_back(V(row));
  return outcome;
}

// Exact interval [lo, hi] of mu(theta_1) over opt(action) in a two-state
// game, by solving each pairwise inequality in closed form. nullopt when
// the interval is empty.
inline std::optional<std::pair<Rational, Rational>> TwoStateOptInterval(
    const BaseGame& game, std::size_t action) {
  Rational lo = 0;
  Rational hi = 1;
  for (std::size_t b = 0; b < game.num_actions(); ++b) {
    if (b == action) continue;
    // p d0 + (1 - p) d1 >= 0  <=>  p (d0 - d1) >= -d1
    const Rational d0 = game.utility[action][0] - game.utility[b][0];
    const Rational d1 = game.utility[action][1] - game.utility[b][1];
    const Rational slope = d0 - d1;
    if (sgn(slope) > 0) {
      lo = std::max(lo, Rational(-d1 / slope));
    } else if (sgn(slope) < 0) {
      hi = std::min(hi, Rational(-d1 / slope));
    } else if (sgn(d1) < 0) {
      return std::nullopt;
    }
  }
  if (lo > hi) return std::nullopt;
  return std::make_pair(lo, hi);
}

// Max of c.mu over opt(action) for two states: a linear function of p on the
// interval attains its max at an endpoint.
inline std::optional<Rational> TwoStateSupport(const BaseGame& game,
                                               std::size_t action,
                                               const Vector& c) {
  const auto interval = TwoStateOptInterval(game, action);
  if (!interval) return std::nullopt;
  const auto value = [&](const Rational& p) {
    return Rational(c[0] * p + c[1] * (1 - p));
  };
  return std::max(value(interval->first), value(interval->second));
}

// Brute-force subset verdict for Eq. core: sum_{a in B} nu0 >= mass of menus
// inside B, via explicit set containment on sorted vectors.
inline bool CoreHoldsBruteForce(const ActionMarginal& marginal,
                                const MenuMeasure& menus) {
  const std::size_t n = marginal.probs.size();
  for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
    Rational lhs = 0;
    for (std::size_t a = 0; a < n; ++a) {
      if (mask >> a & 1) lhs += marginal.probs[a];
    }
    Rational rhs = 0;
    for (const auto& [set, mass] : menus.mass) {
      if (std::all_of(set.begin(), set.end(),
                      [&](std::size_t a) { return (mask >> a & 1) != 0; })) {
        rhs += mass;
      }
    }
    if (lhs < rhs) return false;
  }
  return true;
}

struct RandomRing {
  RingGame ring;
  MarginalProfile profile;
};

inline Matrix RandomUtility(Xorshift64Star& rng, std::size_t rows,
                            std::size_t cols) {
  Matrix u = ZeroMatrix(rows, cols);
  for (auto& row : u) {
    for (auto& v : row) {
      v = Rational(rng.Uniform(-8, 8)) / static_cast<long>(rng.Uniform(1, 4));
    }
  }
  return u;
}

// Ring whose marginals come from random experiments stage by stage, so every
// stage is consistent by construction.
inline RandomRing RandomConsistentRing(Xorshift64Star& rng,
                                       std::size_t max_players,
                                       std::size_t max_actions) {
  RandomRing out;
  const auto players = static_cast<std::size_t>(
      rng.Uniform(1, static_cast<std::int64_t>(max_players)));
  const auto states = static_cast<std::size_t>(rng.Uniform(2, 3));
  for (std::size_t s = 0; s < states; ++s) {
    out.ring.states.push_back("t" + std::to_string(s + 1));
  }
  out.ring.prior = RandomComposition(rng, states, false);
  std::size_t previous = states;
  for (std::size_t i = 0; i < players; ++i) {
    PlayerSpec spec;
    const auto actions = static_cast<std::size_t>(
        rng.Uniform(2, static_cast<std::int64_t>(max_actions)));
    for (std::size_t a = 0; a < actions; ++a) {
      spec.actions.push_back("p" + std::to_string(i + 1) + "a" +
                             std::to_string(a + 1));
    }
    spec.utility = RandomUtility(rng, actions, previous);
    out.ring.players.push_back(std::move(spec));
    out.profile.marginals.emplace_back();
    const BaseGame stage = RingStageGame(out.ring, out.profile, i);
    out.profile.marginals[i] = RandomImplementableMarginal(rng, stage).probs;
    previous = actions;
  }
  return out;
}

}  // namespace mbce::testing

#endif  // MBCE_TESTS_SUPPORT_FIXTURES_H_
