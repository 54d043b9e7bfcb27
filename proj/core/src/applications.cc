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

#include "mbce/applications.h"

#include <string>
#include <utility>

#include "mbce/errors.h"

namespace mbce {

namespace {

std::vector<std::size_t> ActionCounts(const std::vector<PlayerSpec>& players) {
  std::vector<std::size_t> counts;
  counts.reserve(players.size());
  for (const auto& p : players) counts.push_back(p.actions.size());
  return counts;
}

void RequireTable(const Matrix& table, std::size_t rows, std::size_t cols,
                  const std::string& what) {
  if (table.size() != rows) {
    throw Error(ErrorCode::kDimensionMismatch, what + ": wrong row count");
  }
  for (const auto& row : table) {
    if (row.size() != cols) {
      throw Error(ErrorCode::kDimensionMismatch, what + ": wrong row width");
    }
  }
}

}  // namespace

std::size_t ProfileCount(const std::vector<std::size_t>& counts) {
  std::size_t total = 1;
  for (std::size_t c : counts) total *= c;
  return total;
}

std::vector<std::size_t> DecodeProfile(std::size_t index,
                                       const std::vector<std::size_t>& counts) {
  std::vector<std::size_t> profile(counts.size());
  for (std::size_t i = counts.size(); i-- > 0;) {
    profile[i] = index % counts[i];
    index /= counts[i];
  }
  return profile;
}

std::size_t EncodeProfile(const std::vector<std::size_t>& profile,
                          const std::vector<std::size_t>& counts) {
  std::size_t index = 0;
  for (std::size_t i = 0; i < counts.size(); ++i) {
    index = index * counts[i] + profile[i];
  }
  return index;
}

void ValidateFirstOrderGame(const FirstOrderGame& game) {
  if (game.players.empty()) {
    throw Error(ErrorCode::kEmptySpace, "first-order game has no players");
  }
  for (std::size_t i = 0; i < game.players.size(); ++i) {
    ValidateGame(PlayerGame(game, i));
  }
}

BaseGame PlayerGame(const FirstOrderGame& game, std::size_t player) {
  const PlayerSpec& spec = game.players.at(player);
  return BaseGame{game.states, spec.actions, spec.utility, game.prior};
}

BaseGame AuxiliarySingleAgent(const FirstOrderGame& game,
                              std::size_t max_profiles) {
  ValidateFirstOrderGame(game);
  if (game.players.size() == 1) return PlayerGame(game, 0);

  const std::vector<std::size_t> counts = ActionCounts(game.players);
  std::size_t total = 1;
  for (std::size_t c : counts) {
    if (total > max_profiles / c) {
      throw Error(ErrorCode::kProductTooLarge,
                  "action profiles exceed the cap of " +
                      std::to_string(max_profiles));
    }
    total *= c;
  }
  if (total > max_profiles) {
    throw Error(ErrorCode::kProductTooLarge,
                std::to_string(total) + " action profiles exceed the cap of " +
                    std::to_string(max_profiles));
  }

  BaseGame aux;
  aux.states = game.states;
  aux.prior = game.prior;
  aux.actions.reserve(total);
  aux.utility = ZeroMatrix(total, game.states.size());
  for (std::size_t index = 0; index < total; ++index) {
    const auto profile = DecodeProfile(index, counts);
    std::string label = "(";
    for (std::size_t i = 0; i < profile.size(); ++i) {
      if (i > 0) label += ",";
      label += game.players[i].actions[profile[i]];
      for (std::size_t s = 0; s < game.states.size(); ++s) {
        aux.utility[index][s] += game.players[i].utility[profile[i]][s];
      }
    }
    aux.actions.push_back(label + ")");
  }
  return aux;
}

ConsistencyVerdict CheckPublicBce(const FirstOrderGame& game,
                                  const ActionMarginal& profile_marginal,
                                  std::size_t max_profiles) {
  return CheckBceConsistent(AuxiliarySingleAgent(game, max_profiles),
                            profile_marginal);
}

std::vector<PublicPosterior> DecomposePublicWitness(const FirstOrderGame& game,
                                                    const Outcome& witness) {
  const PosteriorSplit split = TauFromOutcome(witness, game.prior);
  const std::vector<std::size_t> counts = ActionCounts(game.players);
  std::vector<PublicPosterior> posteriors;
  for (std::size_t i = 0; i < split.tau.size(); ++i) {
    PublicPosterior post;
    post.belief = split.tau.support[i];
    post.weight = split.tau.weights[i];
    for (std::size_t p = 0; p < game.players.size(); ++p) {
      post.player_optimal.push_back(
          BestResponseSet(PlayerGame(game, p), post.belief));
    }
    for (std::size_t a = 0; a < split.alpha.probs[i].size(); ++a) {
      if (sgn(split.alpha.probs[i][a]) > 0) {
        post.profiles.emplace_back(a, split.alpha.probs[i][a]);
      }
    }
    posteriors.push_back(std::move(post));
  }
  return posteriors;
}

void ValidateRingGame(const RingGame& ring) {
  if (ring.players.empty()) {
    throw Error(ErrorCode::kEmptySpace, "ring game has no players");
  }
  ValidateGame(BaseGame{ring.states, ring.players[0].actions,
                        ring.players[0].utility, ring.prior});
  for (std::size_t i = 1; i < ring.players.size(); ++i) {
    if (ring.players[i].actions.empty()) {
      throw Error(ErrorCode::kEmptySpace,
                  "player " + std::to_string(i + 1) + " has no actions");
    }
    RequireTable(ring.players[i].utility, ring.players[i].actions.size(),
                 ring.players[i - 1].actions.size(),
                 "utility of player " + std::to_string(i + 1));
  }
}

void ValidateMarginalProfile(const RingGame& ring,
                             const MarginalProfile& profile) {
  if (profile.marginals.size() != ring.players.size()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "marginal profile needs one marginal per player");
  }
  for (std::size_t i = 0; i < ring.players.size(); ++i) {
    if (profile.marginals[i].size() != ring.players[i].actions.size()) {
      throw Error(ErrorCode::kDimensionMismatch,
                  "marginal of player " + std::to_string(i + 1) +
                      " has the wrong length");
    }
    if (!IsProbabilityVector(profile.marginals[i])) {
      throw Error(ErrorCode::kNotADistribution,
                  "marginal of player " + std::to_string(i + 1) +
                      " is not a probability vector");
    }
  }
}

BaseGame RingStageGame(const RingGame& ring, const MarginalProfile& profile,
                       std::size_t player,
                       std::vector<std::size_t>* kept_states) {
  const PlayerSpec& spec = ring.players.at(player);
  BaseGame stage;
  stage.actions = spec.actions;
  std::vector<std::size_t> kept;
  if (player == 0) {
    stage.states = ring.states;
    stage.prior = ring.prior;
    stage.utility = spec.utility;
    for (std::size_t s = 0; s < ring.states.size(); ++s) kept.push_back(s);
  } else {
    const PlayerSpec& previous = ring.players[player - 1];
    const Vector& prior = profile.marginals.at(player - 1);
    stage.utility.assign(spec.actions.size(), Vector{});
    for (std::size_t s = 0; s < previous.actions.size(); ++s) {
      if (sgn(prior[s]) == 0) continue;
      kept.push_back(s);
      stage.states.push_back(previous.actions[s]);
      stage.prior.push_back(prior[s]);
      for (std::size_t a = 0; a < spec.actions.size(); ++a) {
        stage.utility[a].push_back(spec.utility[a][s]);
      }
    }
  }
  if (kept_states) *kept_states = std::move(kept);
  return stage;
}

RingVerdict CheckRing(const RingGame& ring, const MarginalProfile& profile) {
  ValidateRingGame(ring);
  ValidateMarginalProfile(ring, profile);
  RingVerdict verdict;
  for (std::size_t i = 0; i < ring.players.size(); ++i) {
    std::vector<std::size_t> kept;
    const BaseGame stage = RingStageGame(ring, profile, i, &kept);
    const std::size_t full_states =
        i == 0 ? ring.states.size() : ring.players[i - 1].actions.size();
    ConsistencyVerdict stage_verdict =
        CheckBceConsistent(stage, ActionMarginal{profile.marginals[i]});
    if (!stage_verdict.consistent) {
      ViolationCertificate cert = std::move(*stage_verdict.violation);
      if (cert.kind == ViolationKind::kStateCondition) {
        cert.first = kept[cert.first];
      }
      Direction full(full_states, Rational(0));
      for (std::size_t k = 0; k < kept.size(); ++k) {
        full[kept[k]] = cert.direction[k];
      }
      cert.direction = std::move(full);
      verdict.consistent = false;
      verdict.failing_stage = i;
      verdict.certificate = std::move(cert);
      verdict.stage_witnesses.clear();
      return verdict;
    }
    Outcome witness;
    witness.probs = ZeroMatrix(ring.players[i].actions.size(), full_states);
    for (std::size_t a = 0; a < witness.probs.size(); ++a) {
      for (std::size_t k = 0; k < kept.size(); ++k) {
        witness.probs[a][kept[k]] = stage_verdict.witness->probs[a][k];
      }
    }
    verdict.stage_witnesses.push_back(std::move(witness));
  }
  verdict.consistent = true;
  return verdict;
}

JointOutcome ConstructRingOutcome(const std::vector<Outcome>& stage_witnesses) {
  if (stage_witnesses.empty()) {
    throw Error(ErrorCode::kEmptySpace, "no stage witnesses");
  }
  JointOutcome joint;
  for (std::size_t i = 0; i < stage_witnesses.size(); ++i) {
    joint.action_counts.push_back(stage_witnesses[i].num_actions());
    if (i == 0) continue;
    const Vector previous_actions = ActionMarginalOf(stage_witnesses[i - 1]);
    if (stage_witnesses[i].num_states() != previous_actions.size() ||
        StateMarginalOf(stage_witnesses[i]) != previous_actions) {
      throw Error(ErrorCode::kStageMarginalMismatch,
                  "stage " + std::to_string(i + 1) +
                      " does not condition on stage " + std::to_string(i) +
                      "'s action marginal");
    }
  }

  // Conditionals pi_i(a_i | a_{i-1}), stored [prev][own].
  std::vector<Matrix> conditionals(stage_witnesses.size());
  for (std::size_t i = 1; i < stage_witnesses.size(); ++i) {
    const Outcome& w = stage_witnesses[i];
    const Vector column_mass = StateMarginalOf(w);
    conditionals[i] = ZeroMatrix(w.num_states(), w.num_actions());
    for (std::size_t prev = 0; prev < w.num_states(); ++prev) {
      for (std::size_t own = 0; own < w.num_actions(); ++own) {
        if (sgn(column_mass[prev]) == 0) {
          conditionals[i][prev][own] =
              Rational(1) / static_cast<unsigned long>(w.num_actions());
        } else {
          conditionals[i][prev][own] = w.probs[own][prev] / column_mass[prev];
        }
      }
    }
  }

  const std::size_t states = stage_witnesses[0].num_states();
  const std::size_t total = ProfileCount(joint.action_counts);
  joint.table.probs = ZeroMatrix(total, states);
  for (std::size_t index = 0; index < total; ++index) {
    const auto profile = DecodeProfile(index, joint.action_counts);
    Rational weight = 1;
    for (std::size_t i = 1; i < profile.size() && sgn(weight) != 0; ++i) {
      weight *= conditionals[i][profile[i - 1]][profile[i]];
    }
    if (sgn(weight) == 0) continue;
    for (std::size_t s = 0; s < states; ++s) {
      joint.table.probs[index][s] =
          stage_witnesses[0].probs[profile[0]][s] * weight;
    }
  }
  return joint;
}

Outcome RingStageMarginal(const JointOutcome& joint, std::size_t player) {
  const auto& counts = joint.action_counts;
  const std::size_t states = joint.table.num_states();
  Outcome marginal;
  if (player == 0) {
    marginal.probs = ZeroMatrix(counts[0], states);
  } else {
    marginal.probs = ZeroMatrix(counts.at(player), counts[player - 1]);
  }
  for (std::size_t index = 0; index < joint.table.num_actions(); ++index) {
    const auto profile = DecodeProfile(index, counts);
    const Rational mass = Sum(joint.table.probs[index]);
    if (player == 0) {
      for (std::size_t s = 0; s < states; ++s) {
        marginal.probs[profile[0]][s] += joint.table.probs[index][s];
      }
    } else {
      marginal.probs[profile[player]][profile[player - 1]] += mass;
    }
  }
  return marginal;
}

std::vector<Vector> JointActionMarginals(const JointOutcome& joint) {
  std::vector<Vector> marginals;
  for (std::size_t i = 0; i < joint.action_counts.size(); ++i) {
    marginals.push_back(ActionMarginalOf(RingStageMarginal(joint, i)));
  }
  return marginals;
}

RingObedienceVerdict CheckRingObedience(const JointOutcome& joint,
                                        const RingGame& ring) {
  if (joint.action_counts.size() != ring.players.size()) {
    throw Error(ErrorCode::kDimensionMismatch, "player count");
  }
  for (std::size_t i = 0; i < ring.players.size(); ++i) {
    if (joint.action_counts[i] != ring.players[i].actions.size()) {
      throw Error(ErrorCode::kDimensionMismatch,
                  "action count of player " + std::to_string(i + 1));
    }
  }
  if (joint.table.num_states() != ring.states.size()) {
    throw Error(ErrorCode::kDimensionMismatch, "state count");
  }
  RingObedienceVerdict verdict;
  for (std::size_t i = 0; i < ring.players.size(); ++i) {
    if (!CheckObedience(RingStageMarginal(joint, i), ring.players[i].utility)
             .holds) {
      verdict.holds = false;
      verdict.failing_player = i;
      return verdict;
    }
  }
  return verdict;
}

}  // namespace mbce
