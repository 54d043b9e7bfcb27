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

#include "mbce/commands.h"

#include <algorithm>
#include <chrono>
#include <utility>

#include "mbce/applications.h"
#include "mbce/consistency.h"
#include "mbce/errors.h"
#include "mbce/implementation.h"

namespace mbce {

using nlohmann::json;

namespace {

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double ElapsedMs() const {
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

GameFile ApplyOverrides(GameFile file, const CommandOptions& options) {
  if (options.marginal) {
    file.marginal = options.marginal;
    if (file.game) ValidateMarginal(*file.game, ActionMarginal{*file.marginal});
  }
  if (options.player_marginals) file.player_marginals = options.player_marginals;
  if (options.tau) file.tau = options.tau;
  return file;
}

const BaseGame& RequireGame(const GameFile& file, const char* command) {
  if (!file.game) {
    throw Error(ErrorCode::kValidationError,
                std::string(command) + " needs a single-agent game document");
  }
  return *file.game;
}

ActionMarginal RequireMarginal(const GameFile& file) {
  if (!file.marginal) {
    throw Error(ErrorCode::kValidationError,
                "no marginal given (document field \"marginal\" or "
                "--marginal)");
  }
  return ActionMarginal{*file.marginal};
}

json NewReport(const char* command, const GameFile& file) {
  json report;
  report["command"] = command;
  report["input_digest"] = Digest(GameFileToJson(file));
  return report;
}

void Finish(json& report, const Stopwatch& watch,
            const CommandOptions& options) {
  if (options.include_timing) report["timing_ms"] = watch.ElapsedMs();
}

json CertificateJson(const ViolationCertificate& cert,
                     const std::vector<std::string>& states,
                     const std::vector<std::string>& actions) {
  json out;
  out["kind"] = std::string(ViolationKindName(cert.kind));
  switch (cert.kind) {
    case ViolationKind::kStateCondition:
      out["state"] = states.at(cert.first);
      break;
    case ViolationKind::kActionPairCondition:
      out["actions"] = {actions.at(cert.first), actions.at(cert.second)};
      break;
    case ViolationKind::kUnsupportableAction:
      out["action"] = actions.at(cert.first);
      break;
    case ViolationKind::kSeparatingDirection:
      break;
  }
  out["residual"] = ToJson(cert.residual);
  out["direction"] = ToJson(cert.direction);
  return out;
}

json BeliefsJson(const BaseGame& game, const Outcome& outcome) {
  json beliefs = json::object();
  const BeliefSystem system = BeliefSystemFromOutcome(outcome);
  for (std::size_t a = 0; a < game.num_actions(); ++a) {
    if (system.beliefs[a]) beliefs[game.actions[a]] = ToJson(*system.beliefs[a]);
  }
  return beliefs;
}

json ConsistentWitnessJson(const BaseGame& game, const Outcome& outcome) {
  return {{"outcome", ToJson(outcome.probs)},
          {"beliefs", BeliefsJson(game, outcome)},
          {"choice_rule", ToJson(ChoiceRuleFromOutcome(outcome, game.prior).probs)}};
}

json LabelsOf(const ActionSet& set, const std::vector<std::string>& actions) {
  json labels = json::array();
  for (std::size_t a : set) labels.push_back(actions.at(a));
  return labels;
}

json VerdictJson(const ConsistencyVerdict& verdict, const BaseGame& game) {
  json out;
  out["verdict"] = verdict.consistent ? "consistent" : "inconsistent";
  if (verdict.consistent) {
    out["witness"] = ConsistentWitnessJson(game, *verdict.witness);
  } else {
    out["certificate"] =
        CertificateJson(*verdict.violation, game.states, game.actions);
  }
  return out;
}

bool OutcomeSound(const Outcome& outcome, const BaseGame& game,
                  const ActionMarginal& marginal, std::string* why) {
  if (!CheckObedience(outcome, game).holds) {
    *why = "witness violates obedience";
    return false;
  }
  if (!CheckStateMarginal(outcome, game.prior)) {
    *why = "witness state marginal differs from the prior";
    return false;
  }
  if (!CheckActionMarginal(outcome, marginal)) {
    *why = "witness action marginal differs from the marginal";
    return false;
  }
  for (const auto& row : outcome.probs) {
    for (const auto& p : row) {
      if (sgn(p) < 0) {
        *why = "witness has a negative entry";
        return false;
      }
    }
  }
  return true;
}

bool CertificateSound(const json& cert, const BaseGame& game,
                      const ActionMarginal& marginal, std::string* why) {
  const std::string kind = cert.at("kind").get<std::string>();
  const Rational residual = RationalFromJson(cert.at("residual"), "/certificate/residual");
  if (sgn(residual) >= 0) {
    *why = "certificate residual is not negative";
    return false;
  }
  if (kind == "UnsupportableAction") {
    const std::string label = cert.at("action").get<std::string>();
    for (std::size_t a = 0; a < game.num_actions(); ++a) {
      if (game.actions[a] == label) {
        if (sgn(marginal.probs[a]) > 0 && IsEmpty(OptBeliefPolytope(game, a))) {
          return true;
        }
      }
    }
    *why = "unsupportable-action certificate does not hold";
    return false;
  }
  const Direction direction =
      VectorFromJson(cert.at("direction"), "/certificate/direction");
  if (StrassenResidual(game, marginal, direction) != residual) {
    *why = "certificate direction does not reproduce its residual";
    return false;
  }
  return true;
}

}  // namespace

CommandResult RunCheck(const GameFile& input, const CommandOptions& options) {
  Stopwatch watch;
  const GameFile file = ApplyOverrides(input, options);
  const BaseGame& game = RequireGame(file, "check");
  const ActionMarginal marginal = RequireMarginal(file);
  const ConsistencyVerdict verdict = CheckBceConsistent(game, marginal);

  CommandResult result;
  result.report = NewReport("check", file);
  result.report.update(VerdictJson(verdict, game));
  result.exit_code = verdict.consistent ? kExitOk : kExitInconsistent;
  Finish(result.report, watch, options);
  return result;
}

CommandResult RunOracle(const GameFile& input, const CommandOptions& options) {
  Stopwatch watch;
  const GameFile file = ApplyOverrides(input, options);
  const BaseGame& game = RequireGame(file, "oracle");
  const ActionMarginal marginal = RequireMarginal(file);
  const OracleResult oracle = OracleFeasibility(game, marginal);

  CommandResult result;
  result.report = NewReport("oracle", file);
  result.report["verdict"] = oracle.feasible ? "feasible" : "infeasible";
  if (oracle.feasible) {
    result.report["witness"] = ConsistentWitnessJson(game, *oracle.witness);
  }
  result.exit_code = oracle.feasible ? kExitOk : kExitInconsistent;
  Finish(result.report, watch, options);
  return result;
}

CommandResult RunImplement(const GameFile& input,
                           const CommandOptions& options) {
  Stopwatch watch;
  const GameFile file = ApplyOverrides(input, options);
  const BaseGame& game = RequireGame(file, "implement");
  const ActionMarginal marginal = RequireMarginal(file);
  if (!file.tau) {
    throw Error(ErrorCode::kValidationError,
                "no posterior distribution given (document field \"tau\" or "
                "--tau)");
  }
  const PosteriorDistribution& tau = *file.tau;
  ValidatePosterior(tau, game.num_states());

  CommandResult result;
  json& report = result.report;
  report = NewReport("implement", file);

  const MenuMeasure menus = ComputeMenuMeasure(tau, game);
  json menu_json = json::array();
  for (const auto& [set, mass] : menus.mass) {
    menu_json.push_back({{"menu", LabelsOf(set, game.actions)},
                         {"mass", ToJson(mass)}});
  }
  report["menu_measure"] = menu_json;

  try {
    const ImplementationResult impl = ImplementMarginal(game, marginal, tau);
    report["verdict"] = "implementable";
    const MenuRule menu_rule = MenuRuleFromCore(menus, marginal);
    json rule_json = json::array();
    for (const auto& [set, probs] : menu_rule.rule) {
      rule_json.push_back({{"menu", LabelsOf(set, game.actions)},
                           {"rule", ToJson(probs)}});
    }
    report["witness"] = {{"decision_rule", ToJson(impl.decision_rule.probs)},
                         {"menu_rule", rule_json},
                         {"choice_rule", ToJson(impl.choice_rule.probs)},
                         {"outcome", ToJson(impl.outcome.probs)}};
    result.exit_code = kExitOk;
  } catch (const ImplementationInfeasibleError& e) {
    report["verdict"] = "not_implementable";
    const SubsetVerdict core = CoreCheck(marginal, menus);
    report["certificate"] = {{"violating_subset", LabelsOf(e.subset(), game.actions)},
                             {"marginal_mass", ToJson(core.lhs)},
                             {"menu_mass", ToJson(core.rhs)}};
    result.exit_code = kExitInconsistent;
  }
  Finish(report, watch, options);
  return result;
}

CommandResult RunRing(const GameFile& input, const CommandOptions& options) {
  Stopwatch watch;
  const GameFile file = ApplyOverrides(input, options);
  if (!file.ring) {
    throw Error(ErrorCode::kValidationError,
                "ring needs a document with a \"ring\" section");
  }
  if (!file.player_marginals) {
    throw Error(ErrorCode::kValidationError,
                "ring needs per-player marginals (document field "
                "\"marginal\" as an array of arrays)");
  }
  const RingGame& ring = *file.ring;
  const MarginalProfile profile{*file.player_marginals};
  const RingVerdict verdict = CheckRing(ring, profile);

  CommandResult result;
  json& report = result.report;
  report = NewReport("ring", file);
  report["verdict"] = verdict.consistent ? "consistent" : "inconsistent";
  if (!verdict.consistent) {
    const std::size_t stage = *verdict.failing_stage;
    report["failing_player"] = stage + 1;
    const auto& states =
        stage == 0 ? ring.states : ring.players[stage - 1].actions;
    report["certificate"] =
        CertificateJson(*verdict.certificate, states, ring.players[stage].actions);
    result.exit_code = kExitInconsistent;
    Finish(report, watch, options);
    return result;
  }

  json stages = json::array();
  for (const auto& w : verdict.stage_witnesses) stages.push_back(ToJson(w.probs));
  const JointOutcome joint = ConstructRingOutcome(verdict.stage_witnesses);
  const RingObedienceVerdict obedience = CheckRingObedience(joint, ring);
  const bool marginals_match =
      JointActionMarginals(joint) == profile.marginals &&
      StateMarginalOf(joint.table) == ring.prior;

  json profiles = json::array();
  for (std::size_t index = 0; index < joint.table.num_actions(); ++index) {
    const auto p = DecodeProfile(index, joint.action_counts);
    json labels = json::array();
    for (std::size_t i = 0; i < p.size(); ++i) {
      labels.push_back(ring.players[i].actions[p[i]]);
    }
    profiles.push_back(labels);
  }
  report["witness"] = {{"stage_outcomes", stages},
                       {"profiles", profiles},
                       {"joint_outcome", ToJson(joint.table.probs)}};
  report["joint_obedience"] = obedience.holds;
  report["marginals_reproduced"] = marginals_match;
  result.exit_code =
      obedience.holds && marginals_match ? kExitOk : kExitDisagreement;
  Finish(report, watch, options);
  return result;
}

CommandResult RunPublic(const GameFile& input, const CommandOptions& options) {
  Stopwatch watch;
  const GameFile file = ApplyOverrides(input, options);
  if (!file.first_order) {
    throw Error(ErrorCode::kValidationError,
                "public needs a document with a \"first_order\" section");
  }
  const FirstOrderGame& game = *file.first_order;
  const BaseGame aux = AuxiliarySingleAgent(game, options.max_profiles);
  const ActionMarginal marginal = RequireMarginal(file);
  ValidateMarginal(aux, marginal);
  const ConsistencyVerdict verdict = CheckPublicBce(game, marginal,
                                                    options.max_profiles);

  CommandResult result;
  json& report = result.report;
  report = NewReport("public", file);
  report["profiles"] = aux.actions;
  report.update(VerdictJson(verdict, aux));
  if (verdict.consistent) {
    json posteriors = json::array();
    for (const auto& post : DecomposePublicWitness(game, *verdict.witness)) {
      json optimal = json::array();
      for (std::size_t p = 0; p < game.players.size(); ++p) {
        optimal.push_back(LabelsOf(post.player_optimal[p], game.players[p].actions));
      }
      json played = json::array();
      for (const auto& [profile, prob] : post.profiles) {
        played.push_back({{"profile", aux.actions[profile]},
                          {"probability", ToJson(prob)}});
      }
      posteriors.push_back({{"belief", ToJson(post.belief)},
                            {"weight", ToJson(post.weight)},
                            {"player_optimal", optimal},
                            {"profiles", played}});
    }
    report["posteriors"] = posteriors;
  }
  result.exit_code = verdict.consistent ? kExitOk : kExitInconsistent;
  Finish(report, watch, options);
  return result;
}

CommandResult RunVerify(const VerifyOptions& options) {
  if (options.sizes.min_states < 1 || options.sizes.min_actions < 1 ||
      options.sizes.min_states > options.sizes.max_states ||
      options.sizes.min_actions > options.sizes.max_actions) {
    throw Error(ErrorCode::kValidationError, "invalid size range");
  }
  std::size_t consistent = 0;
  json disagreements = json::array();
  for (std::size_t i = 0; i < options.n; ++i) {
    Xorshift64Star rng(InstanceSeed(options.seed, i));
    const RandomInstance instance = RandomConsistencyInstance(rng, options.sizes);
    const auto violation = FindViolation(instance.game, instance.marginal);
    const OracleResult oracle = OracleFeasibility(instance.game, instance.marginal);
    std::string why;
    bool sound = true;
    json entry = {{"instance", i}};
    if (!violation.has_value() != oracle.feasible) {
      sound = false;
      why = "condition verdict differs from the transport LP";
      if (!violation && !oracle.feasible) {
        if (const auto separating =
                FindSeparatingDirection(instance.game, instance.marginal)) {
          why = "state and pair conditions hold but the transport LP is "
                "infeasible";
          entry["certificate"] = CertificateJson(
              *separating, instance.game.states, instance.game.actions);
        }
      }
    } else if (oracle.feasible) {
      sound = OutcomeSound(*oracle.witness, instance.game, instance.marginal, &why);
    } else if (violation->kind != ViolationKind::kUnsupportableAction &&
               StrassenResidual(instance.game, instance.marginal,
                                violation->direction) != violation->residual) {
      sound = false;
      why = "certificate does not reproduce its residual";
    }
    if (oracle.feasible) ++consistent;
    if (!sound) {
      entry["reason"] = why;
      disagreements.push_back(std::move(entry));
    }
  }
  CommandResult result;
  result.report = {
      {"command", "verify"},
      {"n", options.n},
      {"seed", options.seed},
      {"sizes",
       {{"min_states", options.sizes.min_states},
        {"max_states", options.sizes.max_states},
        {"min_actions", options.sizes.min_actions},
        {"max_actions", options.sizes.max_actions}}},
      {"consistent", consistent},
      {"inconsistent", options.n - consistent},
      {"disagreements", disagreements}};
  result.report["verdict"] = disagreements.empty() ? "agree" : "disagree";
  result.exit_code = disagreements.empty() ? kExitOk : kExitDisagreement;
  return result;
}

json RandomInstanceDocument(std::uint64_t seed, const RandomSizes& sizes) {
  Xorshift64Star rng(InstanceSeed(seed, 0));
  RandomInstance instance = RandomConsistencyInstance(rng, sizes);
  GameFile file;
  file.game = std::move(instance.game);
  file.marginal = std::move(instance.marginal.probs);
  return GameFileToJson(file);
}

bool RecheckReport(const json& report, const GameFile& input,
                   std::string* why) {
  std::string scratch;
  if (why == nullptr) why = &scratch;
  const std::string command = report.at("command").get<std::string>();
  const std::string verdict = report.value("verdict", "");

  if (command == "check" || command == "oracle" || command == "public") {
    BaseGame game = command == "public"
                        ? AuxiliarySingleAgent(*input.first_order)
                        : RequireGame(input, command.c_str());
    const ActionMarginal marginal = RequireMarginal(input);
    if (report.contains("witness")) {
      const Outcome outcome{
          MatrixFromJson(report["witness"].at("outcome"), "/witness/outcome")};
      return OutcomeSound(outcome, game, marginal, why);
    }
    if (report.contains("certificate")) {
      return CertificateSound(report["certificate"], game, marginal, why);
    }
    return verdict == "infeasible";
  }
  if (command == "implement") {
    if (!report.contains("witness")) return verdict == "not_implementable";
    const BaseGame& game = RequireGame(input, "implement");
    const Outcome outcome{
        MatrixFromJson(report["witness"].at("outcome"), "/witness/outcome")};
    if (!OutcomeSound(outcome, game, RequireMarginal(input), why)) return false;
    const Matrix alpha = MatrixFromJson(report["witness"].at("decision_rule"),
                                        "/witness/decision_rule");
    for (std::size_t i = 0; i < alpha.size(); ++i) {
      if (!IsProbabilityVector(alpha[i])) {
        *why = "decision rule row is not a distribution";
        return false;
      }
      const auto best = BestResponseSet(game, input.tau->support.at(i));
      for (std::size_t a = 0; a < alpha[i].size(); ++a) {
        if (sgn(alpha[i][a]) > 0 &&
            std::find(best.begin(), best.end(), a) == best.end()) {
          *why = "decision rule plays a non-optimal action";
          return false;
        }
      }
    }
    return true;
  }
  if (command == "ring") {
    if (!report.contains("witness")) return verdict == "inconsistent";
    const RingGame& ring = *input.ring;
    JointOutcome joint;
    for (const auto& p : ring.players) joint.action_counts.push_back(p.actions.size());
    joint.table.probs = MatrixFromJson(report["witness"].at("joint_outcome"),
                                       "/witness/joint_outcome");
    if (!CheckRingObedience(joint, ring).holds) {
      *why = "joint outcome violates ring obedience";
      return false;
    }
    if (JointActionMarginals(joint) != *input.player_marginals ||
        StateMarginalOf(joint.table) != ring.prior) {
      *why = "joint outcome marginals differ from the input";
      return false;
    }
    return true;
  }
  *why = "unknown command " + command;
  return false;
}

}  // namespace mbce
