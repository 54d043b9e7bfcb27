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
#include <fstream>
#include <sstream>

#include "mbce/errors.h"

namespace mbce {

using nlohmann::json;

namespace {

[[noreturn]] void ParseFail(const std::string& path, const std::string& what) {
  throw Error(ErrorCode::kParseError,
              (path.empty() ? std::string("/") : path) + ": " + what);
}

const json& Field(const json& object, const char* name,
                  const std::string& path) {
  if (!object.is_object()) ParseFail(path, "expected an object");
  auto it = object.find(name);
  if (it == object.end()) ParseFail(path + "/" + name, "missing field");
  return *it;
}

std::vector<std::string> LabelsFromJson(const json& value,
                                        const std::string& path) {
  if (!value.is_array()) ParseFail(path, "expected an array of labels");
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < value.size(); ++i) {
    if (!value[i].is_string()) {
      ParseFail(path + "/" + std::to_string(i), "expected a string label");
    }
    labels.push_back(value[i].get<std::string>());
  }
  return labels;
}

std::vector<PlayerSpec> PlayersFromJson(const json& section,
                                        const std::string& path) {
  const json& players = Field(section, "players", path);
  if (!players.is_array()) ParseFail(path + "/players", "expected an array");
  std::vector<PlayerSpec> specs;
  for (std::size_t i = 0; i < players.size(); ++i) {
    const std::string p = path + "/players/" + std::to_string(i);
    PlayerSpec spec;
    spec.actions = LabelsFromJson(Field(players[i], "actions", p), p + "/actions");
    spec.utility = MatrixFromJson(Field(players[i], "utility", p), p + "/utility");
    specs.push_back(std::move(spec));
  }
  return specs;
}

json PlayersToJson(const std::vector<PlayerSpec>& players) {
  json array = json::array();
  for (const auto& p : players) {
    array.push_back({{"actions", p.actions}, {"utility", ToJson(p.utility)}});
  }
  return array;
}

// Indices of states with positive prior.
std::vector<std::size_t> PositiveStates(const Vector& prior) {
  std::vector<std::size_t> kept;
  for (std::size_t s = 0; s < prior.size(); ++s) {
    if (sgn(prior[s]) != 0) kept.push_back(s);
  }
  return kept;
}

template <typename T>
std::vector<T> Select(const std::vector<T>& values,
                      const std::vector<std::size_t>& kept) {
  std::vector<T> out;
  for (std::size_t k : kept) {
    if (k < values.size()) out.push_back(values[k]);
  }
  return out;
}

Matrix SelectColumns(const Matrix& table, const std::vector<std::size_t>& kept) {
  Matrix out;
  for (const auto& row : table) out.push_back(Select(row, kept));
  return out;
}

}  // namespace

Rational RationalFromJson(const json& value, const std::string& path) {
  if (value.is_number_float()) {
    throw Error(ErrorCode::kValidationError,
                path + ": floating-point numbers are not accepted; encode "
                       "rationals as \"p/q\" strings");
  }
  if (value.is_number_integer()) {
    return value.is_number_unsigned() ? Rational(mpz_class(std::to_string(
                                            value.get<std::uint64_t>())))
                                      : Rational(mpz_class(std::to_string(
                                            value.get<std::int64_t>())));
  }
  if (!value.is_string()) ParseFail(path, "expected a rational");
  try {
    return ParseRational(value.get<std::string>());
  } catch (const Error& e) {
    ParseFail(path, e.what());
  }
}

Vector VectorFromJson(const json& value, const std::string& path) {
  if (!value.is_array()) ParseFail(path, "expected an array");
  Vector out;
  out.reserve(value.size());
  for (std::size_t i = 0; i < value.size(); ++i) {
    out.push_back(RationalFromJson(value[i], path + "/" + std::to_string(i)));
  }
  return out;
}

Matrix MatrixFromJson(const json& value, const std::string& path) {
  if (!value.is_array()) ParseFail(path, "expected an array of arrays");
  Matrix out;
  for (std::size_t i = 0; i < value.size(); ++i) {
    out.push_back(VectorFromJson(value[i], path + "/" + std::to_string(i)));
  }
  return out;
}

PosteriorDistribution TauFromJson(const json& value, const std::string& path) {
  PosteriorDistribution tau;
  tau.support = MatrixFromJson(Field(value, "support", path), path + "/support");
  tau.weights = VectorFromJson(Field(value, "weights", path), path + "/weights");
  return tau;
}

json ToJson(const Rational& value) { return ToString(value); }

json ToJson(const Vector& values) {
  json array = json::array();
  for (const auto& v : values) array.push_back(ToString(v));
  return array;
}

json ToJson(const Matrix& values) {
  json array = json::array();
  for (const auto& row : values) array.push_back(ToJson(row));
  return array;
}

json ToJson(const PosteriorDistribution& tau) {
  return {{"support", ToJson(tau.support)}, {"weights", ToJson(tau.weights)}};
}

GameFile GameFileFromJson(const json& document, bool drop_null_states) {
  if (!document.is_object()) ParseFail("", "expected a JSON object");
  GameFile file;
  if (auto it = document.find("schema_version"); it != document.end()) {
    if (!it->is_number_integer()) {
      ParseFail("/schema_version", "expected an integer");
    }
    file.schema_version = it->get<int>();
    if (file.schema_version != kSchemaVersion) {
      throw Error(ErrorCode::kValidationError,
                  "/schema_version: unsupported version " +
                      std::to_string(file.schema_version));
    }
  }

  const std::vector<std::string> states =
      LabelsFromJson(Field(document, "states", ""), "/states");
  Vector prior = VectorFromJson(Field(document, "prior", ""), "/prior");
  std::vector<std::size_t> kept;
  for (std::size_t s = 0; s < states.size(); ++s) kept.push_back(s);
  if (drop_null_states) kept = PositiveStates(prior);

  const bool has_ring = document.contains("ring");
  const bool has_first_order = document.contains("first_order");
  if (has_ring && has_first_order) {
    throw Error(ErrorCode::kValidationError,
                "a document holds either a ring or a first_order section");
  }

  if (has_ring) {
    RingGame ring;
    ring.states = Select(states, kept);
    ring.prior = Select(prior, kept);
    ring.players = PlayersFromJson(document["ring"], "/ring");
    if (!ring.players.empty()) {
      ring.players[0].utility = SelectColumns(ring.players[0].utility, kept);
    }
    ValidateRingGame(ring);
    file.ring = std::move(ring);
    if (auto it = document.find("marginal"); it != document.end()) {
      file.player_marginals = MatrixFromJson(*it, "/marginal");
      ValidateMarginalProfile(*file.ring, MarginalProfile{*file.player_marginals});
    }
  } else if (has_first_order) {
    FirstOrderGame game;
    game.states = Select(states, kept);
    game.prior = Select(prior, kept);
    game.players = PlayersFromJson(document["first_order"], "/first_order");
    for (auto& p : game.players) p.utility = SelectColumns(p.utility, kept);
    ValidateFirstOrderGame(game);
    file.first_order = std::move(game);
    if (auto it = document.find("marginal"); it != document.end()) {
      file.marginal = VectorFromJson(*it, "/marginal");
    }
  } else {
    BaseGame game;
    game.states = Select(states, kept);
    game.prior = Select(prior, kept);
    game.actions = LabelsFromJson(Field(document, "actions", ""), "/actions");
    game.utility = SelectColumns(
        MatrixFromJson(Field(document, "utility", ""), "/utility"), kept);
    ValidateGame(game);
    if (auto it = document.find("marginal"); it != document.end()) {
      file.marginal = VectorFromJson(*it, "/marginal");
      ValidateMarginal(game, ActionMarginal{*file.marginal});
    }
    file.game = std::move(game);
  }

  if (auto it = document.find("tau"); it != document.end()) {
    PosteriorDistribution tau = TauFromJson(*it, "/tau");
    if (drop_null_states) tau.support = SelectColumns(tau.support, kept);
    file.tau = std::move(tau);
  }
  return file;
}

json GameFileToJson(const GameFile& file) {
  json doc;
  doc["schema_version"] = file.schema_version;
  if (file.game) {
    doc["states"] = file.game->states;
    doc["actions"] = file.game->actions;
    doc["utility"] = ToJson(file.game->utility);
    doc["prior"] = ToJson(file.game->prior);
  } else if (file.ring) {
    doc["states"] = file.ring->states;
    doc["prior"] = ToJson(file.ring->prior);
    doc["ring"] = {{"players", PlayersToJson(file.ring->players)}};
  } else if (file.first_order) {
    doc["states"] = file.first_order->states;
    doc["prior"] = ToJson(file.first_order->prior);
    doc["first_order"] = {{"players", PlayersToJson(file.first_order->players)}};
  }
  if (file.marginal) doc["marginal"] = ToJson(*file.marginal);
  if (file.player_marginals) doc["marginal"] = ToJson(*file.player_marginals);
  if (file.tau) doc["tau"] = ToJson(*file.tau);
  return doc;
}

json LoadJson(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorCode::kParseError, path + ": cannot open file");
  }
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::kParseError, path + ": " + e.what());
  }
}

GameFile LoadGameFile(const std::string& path, bool drop_null_states) {
  return GameFileFromJson(LoadJson(path), drop_null_states);
}

PosteriorDistribution LoadTau(const std::string& path) {
  const json doc = LoadJson(path);
  // Accept either a bare {support, weights} object or a document with "tau".
  if (doc.is_object() && doc.contains("tau")) return TauFromJson(doc["tau"], "/tau");
  return TauFromJson(doc, "");
}

std::string DumpJson(const json& document) { return document.dump(2) + "\n"; }

void SaveJson(const json& document, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw Error(ErrorCode::kValidationError, path + ": cannot write file");
  }
  out << DumpJson(document);
}

std::string Digest(const json& document) {
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  for (unsigned char c : document.dump()) {
    hash ^= c;
    hash *= 0x100000001b3ULL;
  }
  char buffer[17];
  std::snprintf(buffer, sizeof(buffer), "%016llx",
                static_cast<unsigned long long>(hash));
  return buffer;
}

}  // namespace mbce
