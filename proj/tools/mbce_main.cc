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

// Command-line front end: mbce <check|oracle|implement|ring|public|verify|random>.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "mbce/commands.h"
#include "mbce/errors.h"
#include "mbce/io.h"

namespace {

struct InstanceArgs {
  std::string path;
  std::string marginal;
  std::string tau_path;
  bool drop_null_states = false;
};

struct OutputArgs {
  std::string out;
  bool timing = false;
};

void AddInstanceOptions(CLI::App* cmd, InstanceArgs& args, OutputArgs& output,
                        bool with_tau) {
  cmd->add_option("file", args.path, "Instance document (JSON)")
      ->required()
      ->check(CLI::ExistingFile);
  cmd->add_option("--marginal", args.marginal,
                  "Override the marginal: comma-separated rationals; for "
                  "rings, one list per player separated by ';'");
  if (with_tau) {
    cmd->add_option("--tau", args.tau_path,
                    "Posterior distribution document ({support, weights})")
        ->check(CLI::ExistingFile);
  }
  cmd->add_flag("--drop-null-states", args.drop_null_states,
                "Remove zero-prior states before validation");
  cmd->add_option("--out", output.out, "Write the report here instead of stdout");
  cmd->add_flag("--timing", output.timing, "Include wall-clock timing");
}

std::size_t MaxProfilesFromEnv() {
  if (const char* env = std::getenv("MBCE_MAX_PROFILES")) {
    try {
      const long long value = std::stoll(env);
      if (value > 0) return static_cast<std::size_t>(value);
    } catch (const std::exception&) {
    }
    throw mbce::Error(mbce::ErrorCode::kValidationError,
                      "MBCE_MAX_PROFILES must be a positive integer");
  }
  return mbce::kDefaultMaxProfiles;
}

mbce::CommandOptions BuildOptions(const InstanceArgs& args,
                                  const OutputArgs& output, bool ring) {
  mbce::CommandOptions options;
  options.include_timing = output.timing;
  options.max_profiles = MaxProfilesFromEnv();
  if (!args.marginal.empty()) {
    if (ring) {
      std::vector<mbce::Vector> marginals;
      std::size_t start = 0;
      for (;;) {
        const auto semi = args.marginal.find(';', start);
        marginals.push_back(mbce::ParseRationalList(
            std::string_view(args.marginal).substr(start, semi - start)));
        if (semi == std::string::npos) break;
        start = semi + 1;
      }
      options.player_marginals = std::move(marginals);
    } else {
      options.marginal = mbce::ParseRationalList(args.marginal);
    }
  }
  if (!args.tau_path.empty()) options.tau = mbce::LoadTau(args.tau_path);
  return options;
}

void Emit(const nlohmann::json& report, const OutputArgs& output) {
  if (output.out.empty()) {
    std::cout << mbce::DumpJson(report);
  } else {
    mbce::SaveJson(report, output.out);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bayes correlated equilibrium consistency of observed marginals"};
  app.require_subcommand(1);

  InstanceArgs instance;
  OutputArgs output;
  auto* check = app.add_subcommand("check", "Decide consistency of (prior, marginal)");
  AddInstanceOptions(check, instance, output, false);
  auto* oracle = app.add_subcommand("oracle", "Solve the obedience-constrained transport LP");
  AddInstanceOptions(oracle, instance, output, false);
  auto* implement = app.add_subcommand(
      "implement", "Construct an outcome implementing the marginal from tau");
  AddInstanceOptions(implement, instance, output, true);
  auto* ring = app.add_subcommand("ring", "Ring-network marginal consistency");
  AddInstanceOptions(ring, instance, output, false);
  auto* pub = app.add_subcommand("public", "Public-signal consistency of a first-order game");
  AddInstanceOptions(pub, instance, output, false);

  mbce::VerifyOptions verify_options;
  std::string verify_out;
  auto* verify = app.add_subcommand(
      "verify", "Compare the condition test with the transport LP on random instances");
  verify->add_option("--n", verify_options.n, "Number of instances");
  verify->add_option("--seed", verify_options.seed, "Generator seed");
  verify->add_option("--min-states", verify_options.sizes.min_states);
  verify->add_option("--max-states", verify_options.sizes.max_states);
  verify->add_option("--min-actions", verify_options.sizes.min_actions);
  verify->add_option("--max-actions", verify_options.sizes.max_actions);
  verify->add_option("--out", verify_out, "Write the report here instead of stdout");

  std::uint64_t random_seed = 1;
  mbce::RandomSizes random_sizes;
  std::string random_out;
  auto* random = app.add_subcommand("random", "Emit a reproducible random instance");
  random->add_option("--seed", random_seed, "Generator seed");
  random->add_option("--min-states", random_sizes.min_states);
  random->add_option("--max-states", random_sizes.max_states);
  random->add_option("--min-actions", random_sizes.min_actions);
  random->add_option("--max-actions", random_sizes.max_actions);
  random->add_option("--out", random_out, "Write the instance here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : mbce::kExitInputError;
  }

  try {
    mbce::CommandResult result;
    if (verify->parsed()) {
      result = mbce::RunVerify(verify_options);
      Emit(result.report, OutputArgs{verify_out, false});
      return result.exit_code;
    }
    if (random->parsed()) {
      if (random_sizes.min_states < 1 || random_sizes.min_actions < 1 ||
          random_sizes.min_states > random_sizes.max_states ||
          random_sizes.min_actions > random_sizes.max_actions) {
        throw mbce::Error(mbce::ErrorCode::kValidationError, "invalid size range");
      }
      Emit(mbce::RandomInstanceDocument(random_seed, random_sizes),
           OutputArgs{random_out, false});
      return mbce::kExitOk;
    }

    const mbce::GameFile file =
        mbce::LoadGameFile(instance.path, instance.drop_null_states);
    const mbce::CommandOptions options = BuildOptions(instance, output, ring->parsed());
    if (check->parsed()) result = mbce::RunCheck(file, options);
    if (oracle->parsed()) result = mbce::RunOracle(file, options);
    if (implement->parsed()) result = mbce::RunImplement(file, options);
    if (ring->parsed()) result = mbce::RunRing(file, options);
    if (pub->parsed()) result = mbce::RunPublic(file, options);
    Emit(result.report, output);
    return result.exit_code;
  } catch (const mbce::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code() == mbce::ErrorCode::kInternalDisagreement
               ? mbce::kExitDisagreement
               : mbce::kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return mbce::kExitInputError;
  }
}
