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

#include "doctest.h"
#include "mbce/errors.h"
#include "mbce/io.h"
#include "support/fixtures.h"

namespace mbce {
namespace {

using nlohmann::json;
using testing::V;

GameFile Match34() {
  return GameFileFromJson(json::parse(R"({
    "states": ["t1", "t2"], "actions": ["a1", "a2"],
    "utility": [[1, 0], [0, 1]], "prior": ["3/4", "1/4"],
    "marginal": ["1/2", "1/2"]})"));
}

CommandOptions WithMarginal(std::initializer_list<const char*> m) {
  CommandOptions options;
  options.marginal = V(m);
  return options;
}

TEST_CASE("check reports a consistent witness") {
  const GameFile file = Match34();
  const CommandResult r = RunCheck(file, CommandOptions{});
  CHECK(r.exit_code == kExitOk);
  CHECK(r.report["command"] == "check");
  CHECK(r.report["verdict"] == "consistent");
  CHECK(r.report["witness"]["outcome"] ==
        json::parse(R"([["1/2", "0"], ["1/4", "1/4"]])"));
  CHECK_FALSE(r.report.contains("timing_ms"));
  std::string why;
  CHECK(RecheckReport(r.report, file, &why));
}

TEST_CASE("check reports a certificate for an inconsistent marginal") {
  const GameFile file = Match34();
  const CommandOptions options = WithMarginal({"1/4", "3/4"});
  const CommandResult r = RunCheck(file, options);
  CHECK(r.exit_code == kExitInconsistent);
  CHECK(r.report["verdict"] == "inconsistent");
  CHECK(r.report["certificate"]["kind"] == "StateCondition");
  CHECK(r.report["certificate"]["state"] == "t2");
  CHECK(r.report["certificate"]["residual"] == "-1/8");

  GameFile effective = file;
  effective.marginal = options.marginal;
  std::string why;
  CHECK(RecheckReport(r.report, effective, &why));

  // A tampered residual no longer reproduces.
  json tampered = r.report;
  tampered["certificate"]["residual"] = "-1/4";
  CHECK_FALSE(RecheckReport(tampered, effective, &why));
  CHECK_FALSE(why.empty());
}

TEST_CASE("reports are byte-identical across runs unless timing is requested") {
  const GameFile file = Match34();
  CHECK(DumpJson(RunCheck(file, CommandOptions{}).report) ==
        DumpJson(RunCheck(file, CommandOptions{}).report));
  CommandOptions timed;
  timed.include_timing = true;
  CHECK(RunCheck(file, timed).report.contains("timing_ms"));
}

TEST_CASE("oracle agrees with check") {
  const GameFile file = Match34();
  CHECK(RunOracle(file, CommandOptions{}).report["verdict"] == "feasible");
  const CommandResult no = RunOracle(file, WithMarginal({"1/4", "3/4"}));
  CHECK(no.exit_code == kExitInconsistent);
  CHECK(no.report["verdict"] == "infeasible");
}

TEST_CASE("implement") {
  GameFile file = Match34();
  file.game->prior = V({"1/2", "1/2"});
  CommandOptions options = WithMarginal({"1/4", "3/4"});
  options.tau = testing::FullInformation(file.game->prior);
  const CommandResult no = RunImplement(file, options);
  CHECK(no.exit_code == kExitInconsistent);
  CHECK(no.report["verdict"] == "not_implementable");
  CHECK(no.report["certificate"]["violating_subset"] == json::array({"a1"}));

  options.marginal = V({"1/2", "1/2"});
  const CommandResult yes = RunImplement(file, options);
  CHECK(yes.exit_code == kExitOk);
  CHECK(yes.report["verdict"] == "implementable");
  GameFile effective = file;
  effective.marginal = options.marginal;
  effective.tau = options.tau;
  std::string why;
  CHECK(RecheckReport(yes.report, effective, &why));

  CHECK_THROWS_AS(RunImplement(file, WithMarginal({"1/2", "1/2"})), Error);
}

TEST_CASE("ring") {
  const GameFile file = GameFileFromJson(json::parse(R"({
    "states": ["t1", "t2"], "prior": ["3/4", "1/4"],
    "ring": {"players": [
      {"actions": ["a1", "a2"], "utility": [[1, 0], [0, 1]]},
      {"actions": ["b1", "b2"], "utility": [[1, 0], [0, 1]]}]},
    "marginal": [["1/2", "1/2"], ["1/2", "1/2"]]})"));
  const CommandResult ok = RunRing(file, CommandOptions{});
  CHECK(ok.exit_code == kExitOk);
  CHECK(ok.report["joint_obedience"] == true);
  CHECK(ok.report["marginals_reproduced"] == true);
  std::string why;
  CHECK(RecheckReport(ok.report, file, &why));

  CommandOptions bad;
  bad.player_marginals = std::vector<Vector>{V({"1/4", "3/4"}), V({"1/2", "1/2"})};
  const CommandResult no = RunRing(file, bad);
  CHECK(no.exit_code == kExitInconsistent);
  CHECK(no.report["failing_player"] == 1);
}

TEST_CASE("public") {
  const GameFile file = GameFileFromJson(json::parse(R"({
    "states": ["t1", "t2"], "prior": ["3/4", "1/4"],
    "first_order": {"players": [
      {"actions": ["a1", "a2"], "utility": [[1, 0], [0, 1]]},
      {"actions": ["b1", "b2"], "utility": [[1, 0], [0, 1]]}]},
    "marginal": ["1/2", "0", "0", "1/2"]})"));
  const CommandResult ok = RunPublic(file, CommandOptions{});
  CHECK(ok.exit_code == kExitOk);
  CHECK(ok.report["profiles"].size() == 4);
  CHECK(ok.report.contains("posteriors"));

  const CommandResult no = RunPublic(file, WithMarginal({"0", "1/2", "1/2", "0"}));
  CHECK(no.exit_code == kExitInconsistent);

  CommandOptions capped;
  capped.max_profiles = 2;
  try {
    RunPublic(file, capped);
    FAIL("expected kProductTooLarge");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kProductTooLarge);
  }
}

TEST_CASE("check refuses documents of the wrong kind") {
  GameFile ring = Match34();
  ring.game.reset();
  CHECK_THROWS_AS(RunCheck(ring, CommandOptions{}), Error);
  GameFile no_marginal = Match34();
  no_marginal.marginal.reset();
  CHECK_THROWS_AS(RunCheck(no_marginal, CommandOptions{}), Error);
}

TEST_CASE("verify agrees on a small batch and is reproducible") {
  VerifyOptions options;
  options.n = 60;
  options.seed = 7;
  const CommandResult a = RunVerify(options);
  CHECK(a.exit_code == kExitOk);
  CHECK(a.report["verdict"] == "agree");
  CHECK(DumpJson(a.report) == DumpJson(RunVerify(options).report));
}

TEST_CASE("random instance documents are reproducible and loadable") {
  RandomSizes sizes;
  const json a = RandomInstanceDocument(5, sizes);
  CHECK(DumpJson(a) == DumpJson(RandomInstanceDocument(5, sizes)));
  CHECK(DumpJson(a) != DumpJson(RandomInstanceDocument(6, sizes)));
  const GameFile file = GameFileFromJson(a);
  const CommandResult r = RunCheck(file, CommandOptions{});
  std::string why;
  CHECK(RecheckReport(r.report, file, &why));
}

}  // namespace
}  // namespace mbce
