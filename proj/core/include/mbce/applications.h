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

#ifndef MBCE_APPLICATIONS_H_
#define MBCE_APPLICATIONS_H_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "mbce/consistency.h"
#include "mbce/game.h"
#include "mbce/implementation.h"
#include "mbce/rational.h"

namespace mbce {

inline constexpr std::size_t kDefaultMaxProfiles = 4096;

// One player's own-action payoffs. For first-order games utility is
// [own action][state]; for ring stages i >= 2 it is
// [own action][previous player's action].
struct PlayerSpec {
  std::vector<std::string> actions;
  Matrix utility;
};

// Each player's payoff depends only on their own action and the state.
struct FirstOrderGame {
  std::vector<std::string> states;
  Vector prior;
  std::vector<PlayerSpec> players;
};

// Player 1 responds to the state; player i >= 2 responds to player i-1.
struct RingGame {
  std::vector<std::string> states;
  Vector prior;
  std::vector<PlayerSpec> players;
};

// Per-player action marginals.
struct MarginalProfile {
  std::vector<Vector> marginals;
};

// Action profiles are indexed in mixed radix with player 1 varying slowest.
std::size_t ProfileCount(const std::vector<std::size_t>& counts);
std::vector<std::size_t> DecodeProfile(std::size_t index,
                                       const std::vector<std::size_t>& counts);
std::size_t EncodeProfile(const std::vector<std::size_t>& profile,
                          const std::vector<std::size_t>& counts);

void ValidateFirstOrderGame(const FirstOrderGame& game);

// Player i's single-agent game <states, A_i, u_i, prior>.
BaseGame PlayerGame(const FirstOrderGame& game, std::size_t player);

// Single agent choosing a whole profile with summed utility. Profile labels
// are "(x,y,...)"; with one player the original game is returned unchanged.
// Throws kProductTooLarge above max_profiles.
BaseGame AuxiliarySingleAgent(const FirstOrderGame& game,
                              std::size_t max_profiles = kDefaultMaxProfiles);

// Public-signal consistency of a marginal over profiles: consistency in the
// auxiliary single-agent game.
ConsistencyVerdict CheckPublicBce(const FirstOrderGame& game,
                                  const ActionMarginal& profile_marginal,
                                  std::size_t max_profiles = kDefaultMaxProfiles);

// A posterior of the public experiment with the per-player optimal sets it
// induces and the profiles played there.
struct PublicPosterior {
  Vector belief;
  Rational weight;
  std::vector<ActionSet> player_optimal;
  std::vector<std::pair<std::size_t, Rational>> profiles;  // profile, prob
};

// Splits a witness outcome over (profiles x states) into posteriors. Each
// played profile is a product of per-player best responses.
std::vector<PublicPosterior> DecomposePublicWitness(const FirstOrderGame& game,
                                                    const Outcome& witness);

void ValidateRingGame(const RingGame& ring);
void ValidateMarginalProfile(const RingGame& ring,
                             const MarginalProfile& profile);

// Stage game of `player` (0-based). Stage 0 is <states, A_1, u_1, prior>;
// stage i >= 1 has the previous player's actions as states with prior
// marginals[i-1], restricted to its support. `kept_states` receives the
// original indices of the retained states.
BaseGame RingStageGame(const RingGame& ring, const MarginalProfile& profile,
                       std::size_t player,
                       std::vector<std::size_t>* kept_states = nullptr);

struct RingVerdict {
  bool consistent = false;
  // 0-based index of the first inconsistent stage.
  std::optional<std::size_t> failing_stage;
  // Certificate in the failing stage's restricted game, with state indices
  // mapped back to the full previous-action space.
  std::optional<ViolationCertificate> certificate;
  // Per-stage witnesses on the full stage space (zero columns for dropped
  // states); filled when consistent.
  std::vector<Outcome> stage_witnesses;
};

RingVerdict CheckRing(const RingGame& ring, const MarginalProfile& profile);

// Joint distribution over (profiles x states).
struct JointOutcome {
  std::vector<std::size_t> action_counts;
  Outcome table;
};

// pi(a, theta) = pi_1(a_1, theta) prod_i pi_i(a_i | a_{i-1}). Conditionals on
// zero-mass previous actions are uniform. Throws kStageMarginalMismatch when
// a stage's state marginal differs from the previous stage's action marginal.
JointOutcome ConstructRingOutcome(const std::vector<Outcome>& stage_witnesses);

// Marginal of the joint on the pair relevant to `player`: (a_1, theta) for
// player 0, (a_i, a_{i-1}) otherwise, as [own action][state or prev action].
Outcome RingStageMarginal(const JointOutcome& joint, std::size_t player);

std::vector<Vector> JointActionMarginals(const JointOutcome& joint);

struct RingObedienceVerdict {
  bool holds = true;
  std::optional<std::size_t> failing_player;
};

RingObedienceVerdict CheckRingObedience(const JointOutcome& joint,
                                        const RingGame& ring);

}  // namespace mbce

#endif  // MBCE_APPLICATIONS_H_
