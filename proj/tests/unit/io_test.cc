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

#include "mbce/io.h"

#include <cstdio>
#include <filesystem>

#include "doctest.h"
#include "mbce/errors.h"
#include "mbce/random.h"
#include "support/fixtures.h"

namespace mbce {
namespace {

using nlohmann::json;
using testing::MatchingGame;
using testing::Q;

const char* kMatch = R"({
  "schema_version": 1,
  "states": ["t1", "t2"],
  "actions": ["a1", "a2"],
  "utility": [[1, 0], [0, 1]],
  "prior": ["3/4", "1/4"],
  "marginal": ["1/2", "1/2"]
})";

Error ErrorFrom(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e;
  }
  FAIL("no error thrown");
  return Error(ErrorCode::kInternalDisagreement, "");
}

TEST_CASE("a well-formed matching game loads") {
  const GameFile file = GameFileFromJson(json::parse(kMatch));
  REQUIRE(file.game.has_value());
  const BaseGame expected = MatchingGame(Q("3/4"));
  CHECK(file.game->states == expected.states);
  CHECK(file.game->actions == expected.actions);
  CHECK(file.game->utility == expected.utility);
  CHECK(file.game->prior == expected.prior);
  CHECK(*file.marginal == testing::V({"1/2", "1/2"}));
  CHECK_FALSE(file.tau.has_value());
}

TEST_CASE("a zero denominator is a parse error located in the document") {
  json doc = json::parse(kMatch);
  doc["utility"][1][0] = "1/0";
  const Error e = ErrorFrom([&] { GameFileFromJson(doc); });
  CHECK(e.code() == ErrorCode::kParseError);
  CHECK(std::string(e.what()).find("/utility/1/0") != std::string::npos);
}

TEST_CASE("floating-point numbers are rejected") {
  json doc = json::parse(kMatch);
  doc["prior"] = {0.749, 0.25};
  const Error e = ErrorFrom([&] { GameFileFromJson(doc); });
  CHECK(e.code() == ErrorCode::kValidationError);
  CHECK(std::string(e.what()).find("/prior/0") != std::string::npos);
}

TEST_CASE("structural problems are reported with paths") {
  json missing = json::parse(kMatch);
  missing.erase("states");
  CHECK(ErrorFrom([&] { GameFileFromJson(missing); }).code() ==
        ErrorCode::kParseError);

  json wrong_label = json::parse(kMatch);
  wrong_label["actions"][0] = 3;
  CHECK(std::string(ErrorFrom([&] { GameFileFromJson(wrong_label); }).what())
            .find("/actions/0") != std::string::npos);

  json version = json::parse(kMatch);
  version["schema_version"] = 2;
  CHECK(ErrorFrom([&] { GameFileFromJson(version); }).code() ==
        ErrorCode::kValidationError);
}

TEST_CASE("drop_null_states removes zero-prior states") {
  json doc = json::parse(kMatch);
  doc["states"] = {"t1", "t2", "t3"};
  doc["utility"] = {{1, 0, 5}, {0, 1, 5}};
  doc["prior"] = {"3/4", "1/4", "0"};
  const GameFile file = GameFileFromJson(doc, true);
  CHECK(file.game->states.size() == 2);
  CHECK(file.game->utility == MatchingGame(Q("3/4")).utility);
}

TEST_CASE("rationals round trip through JSON") {
  Xorshift64Star rng(83);
  for (int trial = 0; trial < 50; ++trial) {
    GameFile file;
    file.game = RandomGame(rng, 3, 3);
    file.marginal = RandomComposition(rng, 3, true);
    file.tau = RandomPosteriorSplit(rng, file.game->prior, 4);
    const std::string text = DumpJson(GameFileToJson(file));
    const GameFile back = GameFileFromJson(json::parse(text));
    CHECK(back.game->utility == file.game->utility);
    CHECK(back.game->prior == file.game->prior);
    CHECK(*back.marginal == *file.marginal);
    CHECK(back.tau->support == file.tau->support);
    CHECK(back.tau->weights == file.tau->weights);
    CHECK(DumpJson(GameFileToJson(back)) == text);
  }
}

TEST_CASE("ring and first-order sections round trip") {
  const json ring = json::parse(R"({
    "states": ["t1", "t2"],
    "prior": ["3/4", "1/4"],
    "ring": {"players": [
      {"actions": ["a1", "a2"], "utility": [[1, 0], [0, 1]]},
      {"actions": ["b1", "b2"], "utility": [[1, 0], [0, 1]]}]},
    "marginal": [["1/2", "1/2"], ["1/2", "1/2"]]
  })");
  const GameFile r = GameFileFromJson(ring);
  REQUIRE(r.ring.has_value());
  CHECK(r.ring->players.size() == 2);
  CHECK(r.player_marginals->size() == 2);
  CHECK(GameFileToJson(GameFileFromJson(GameFileToJson(r))) ==
        GameFileToJson(r));

  const json fo = json::parse(R"({
    "states": ["t1", "t2"],
    "prior": ["1/2", "1/2"],
    "first_order": {"players": [
      {"actions": ["a1", "a2"], "utility": [[1, 0], [0, 1]]},
      {"actions": ["b1", "b2"], "utility": [[1, 0], [0, 1]]}]},
    "marginal": ["1/2", "0", "0", "1/2"]
  })");
  const GameFile f = GameFileFromJson(fo);
  REQUIRE(f.first_order.has_value());
  CHECK(f.marginal->size() == 4);
  CHECK(GameFileToJson(GameFileFromJson(GameFileToJson(f))) ==
        GameFileToJson(f));
}

TEST_CASE("files save and load identically") {
  const auto path =
      std::filesystem::temp_directory_path() / "mbce_io_test_roundtrip.json";
  const GameFile file = GameFileFromJson(json::parse(kMatch));
  SaveJson(GameFileToJson(file), path.string());
  const GameFile back = LoadGameFile(path.string());
  CHECK(back.game->utility == file.game->utility);
  CHECK(Digest(GameFileToJson(back)) == Digest(GameFileToJson(file)));
  std::filesystem::remove(path);
  CHECK(ErrorFrom([&] { LoadGameFile(path.string()); }).code() ==
        ErrorCode::kParseError);
}

TEST_CASE("tau loads bare or wrapped") {
  const json bare = json::parse(
      R"({"support": [[1, 0], [0, 1]], "weights": ["1/2", "1/2"]})");
  const PosteriorDistribution tau = TauFromJson(bare, "");
  CHECK(tau.size() == 2);
  CHECK(tau.weights == testing::V({"1/2", "1/2"}));
  const PosteriorDistribution again = TauFromJson(ToJson(tau), "");
  CHECK(again.support == tau.support);
  CHECK(again.weights == tau.weights);

  const auto path =
      std::filesystem::temp_directory_path() / "mbce_io_test_tau.json";
  SaveJson(json{{"tau", bare}}, path.string());
  CHECK(LoadTau(path.string()).support == tau.support);
  SaveJson(bare, path.string());
  CHECK(LoadTau(path.string()).weights == tau.weights);
  std::filesystem::remove(path);
}

TEST_CASE("Digest is stable and sensitive") {
  const json a = json::parse(kMatch);
  json b = a;
  b["prior"] = {"2/3", "1/3"};
  CHECK(Digest(a) == Digest(json::parse(kMatch)));
  CHECK(Digest(a) != Digest(b));
  CHECK(Digest(a).size() == 16);
}

}  // namespace
}  // namespace mbce
