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

#ifndef MBCE_IO_H_
#define MBCE_IO_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "mbce/applications.h"
#include "mbce/game.h"
#include "mbce/implementation.h"
#include "mbce/rational.h"

namespace mbce {

inline constexpr int kSchemaVersion = 1;

// Parsed instance document. Exactly one of game / ring / first_order is set.
// `marginal` is a flat vector (over actions, or over profiles for
// first_order); `player_marginals` holds the per-player marginals of a ring.
struct GameFile {
  int schema_version = kSchemaVersion;
  std::optional<BaseGame> game;
  std::optional<RingGame> ring;
  std::optional<FirstOrderGame> first_order;
  std::optional<Vector> marginal;
  std::optional<std::vector<Vector>> player_marginals;
  std::optional<PosteriorDistribution> tau;
};

// Rationals are encoded as JSON strings "p/q" or JSON integers. Floats are
// rejected with kValidationError; other malformed values raise kParseError
// with the JSON-pointer path of the offending element.
Rational RationalFromJson(const nlohmann::json& value, const std::string& path);
Vector VectorFromJson(const nlohmann::json& value, const std::string& path);
Matrix MatrixFromJson(const nlohmann::json& value, const std::string& path);
PosteriorDistribution TauFromJson(const nlohmann::json& value,
                                  const std::string& path);

nlohmann::json ToJson(const Rational& value);
nlohmann::json ToJson(const Vector& values);
nlohmann::json ToJson(const Matrix& values);
nlohmann::json ToJson(const PosteriorDistribution& tau);

// Parses and validates. With drop_null_states, zero-prior states are removed
// first (together with the matching utility columns and tau coordinates).
GameFile GameFileFromJson(const nlohmann::json& document,
                          bool drop_null_states = false);
nlohmann::json GameFileToJson(const GameFile& file);

GameFile LoadGameFile(const std::string& path, bool drop_null_states = false);
nlohmann::json LoadJson(const std::string& path);
PosteriorDistribution LoadTau(const std::string& path);

// Two-space indented dump with a trailing newline; byte-stable for equal
// documents.
std::string DumpJson(const nlohmann::json& document);
void SaveJson(const nlohmann::json& document, const std::string& path);

// FNV-1a 64-bit digest of the canonical dump, as 16 hex digits.
std::string Digest(const nlohmann::json& document);

}  // namespace mbce

#endif  // MBCE_IO_H_
