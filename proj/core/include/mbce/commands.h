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

#ifndef MBCE_COMMANDS_H_
#define MBCE_COMMANDS_H_

#include <cstdint>
#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "mbce/io.h"
#include "mbce/random.h"

namespace mbce {

enum ExitCode : int {
  kExitOk = 0,
  kExitInconsistent = 2,
  kExitInputError = 3,
  kExitDisagreement = 4,
};

struct CommandOptions {
  // Overrides the document's marginal (or per-player marginals for rings).
  std::optional<Vector> marginal;
  std::optional<std::vector<Vector>> player_marginals;
  // Overrides the document's tau.
  std::optional<PosteriorDistribution> tau;
  std::size_t max_profiles = kDefaultMaxProfiles;
  // Wall-clock timing makes reports non-reproducible, so it is opt-in.
  bool include_timing = false;
};

struct CommandResult {
  int exit_code = kExitOk;
  nlohmann::json report;
};

// Consistency via the state and action-pair conditions; witness from the
// transport LP.
CommandResult RunCheck(const GameFile& file, const CommandOptions& options);
// The transport LP alone.
CommandResult RunOracle(const GameFile& file, const CommandOptions& options);
// Implementation of the marginal by the document's tau.
CommandResult RunImplement(const GameFile& file, const CommandOptions& options);
// Ring-network stage checks and the product joint outcome.
CommandResult RunRing(const GameFile& file, const CommandOptions& options);
// Public-signal consistency for a first-order game.
CommandResult RunPublic(const GameFile& file, const CommandOptions& options);

struct VerifyOptions {
  std::size_t n = 500;
  std::uint64_t seed = 7;
  RandomSizes sizes;
};

// Draws n seeded instances and compares the condition-based verdict with the
// transport LP on each; exit code kExitDisagreement on any mismatch or
// unsound certificate/witness.
CommandResult RunVerify(const VerifyOptions& options);

// A reproducible single-agent instance document (game plus marginal).
nlohmann::json RandomInstanceDocument(std::uint64_t seed,
                                      const RandomSizes& sizes);

// Re-validates every witness table embedded in a report against its input.
// Returns false and fills `why` on the first failure.
bool RecheckReport(const nlohmann::json& report, const GameFile& input,
                   std::string* why);

}  // namespace mbce

#endif  // MBCE_COMMANDS_H_
