// Copyright 2026 The nmlln Authors. All rights reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "commands.hpp"
#include "nmlln/error.hpp"

namespace {

using namespace nmlln;
using namespace nmlln::cli;

int exit_code_for(const Error& e) {
  switch (e.code()) {
    case ErrorCode::kBudgetExceeded: return kExitBudgetExceeded;
    case ErrorCode::kHypothesisViolated: return kExitHypothesisViolated;
    default: return kExitConfigInvalid;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Inner/outer measures, measure extensions and nonmeasurable "
               "laws of large numbers on finite spaces"};
  std::string command;
  std::string config_path;
  std::optional<std::uint64_t> seed;
  std::optional<std::uint64_t> n_max;
  std::optional<std::uint64_t> trials;
  std::optional<std::uint64_t> budget;
  bool dump = false;
  std::string out_path;

  app.add_option("command", command, "analyze | simulate | weaklaw | certify")
      ->required()
      ->check(CLI::IsMember({"analyze", "simulate", "weaklaw", "certify"}));
  app.add_option("config", config_path, "scenario config (JSON)")->required();
  app.add_option("--seed", seed, "master seed");
  app.add_option("--n-max", n_max, "simulation horizon");
  app.add_option("--trials", trials, "trajectories per plan");
  app.add_option("--budget", budget, "product-point budget for exact ops");
  app.add_flag("--dump-config", dump,
               "print the validated config in canonical form and exit");
  app.add_option("--out", out_path, "write output here instead of stdout");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  std::ofstream file;
  if (!out_path.empty()) {
    file.open(out_path, std::ios::binary);
    if (!file) {
      std::cerr << "error: cannot write '" << out_path << "'\n";
      return kExitUsage;
    }
  }
  std::ostream& out = out_path.empty() ? std::cout : file;

  try {
    ScenarioConfig config = load_config(config_path);
    if (seed) config.run.seed = *seed;
    if (n_max) config.run.n_max = *n_max;
    if (trials) config.run.trials = *trials;
    if (budget) config.run.budget = *budget;
    for (auto n : config.run.checkpoints) {
      if (n > config.run.n_max) {
        throw ConfigError("/run/checkpoints", "checkpoint beyond --n-max");
      }
    }
    if (dump) {
      out << dump_config(config).dump(2) << "\n";
      return kExitOk;
    }
    if (command == "analyze") {
      cmd_analyze(config, out);
    } else if (command == "simulate") {
      cmd_simulate(config, out);
    } else if (command == "weaklaw") {
      cmd_weaklaw(config, out);
    } else {
      cmd_certify(config, out);
    }
  } catch (const ConfigError& e) {
    std::cerr << "config invalid at " << e.what() << "\n";
    return kExitConfigInvalid;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e);
  }
  return kExitOk;
}
