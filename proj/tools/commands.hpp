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

#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "config.hpp"

namespace nmlln::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitConfigInvalid = 2,
  kExitBudgetExceeded = 3,
  kExitHypothesisViolated = 4,
};

// Each command writes its report to `out`. Library errors propagate; map
// them with exit_code_for().
void cmd_analyze(const ScenarioConfig& config, std::ostream& out);
void cmd_simulate(const ScenarioConfig& config, std::ostream& out);
void cmd_weaklaw(const ScenarioConfig& config, std::ostream& out);
// Returns false when some event is not certified.
bool cmd_certify(const ScenarioConfig& config, std::ostream& out);

// Checkpoints used when the run spec lists none: block ends for
// block-alternating plans, powers of ten otherwise; n_max always included.
std::vector<std::uint64_t> default_checkpoints(const CoordinatePlan& plan,
                                               std::uint64_t n_max);

}  // namespace nmlln::cli
