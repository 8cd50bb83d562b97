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
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "nmlln/certify.hpp"
#include "nmlln/exact.hpp"
#include "nmlln/plan.hpp"
#include "nmlln/scenario.hpp"

namespace nmlln::cli {

// Invalid configuration; `path` is a JSON pointer to the offending value.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string path, const std::string& what)
      : std::runtime_error((path.empty() ? std::string("/") : path) + ": " + what),
        path_(std::move(path)) {}
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

struct PlanSpec {
  PlanKind variant = PlanKind::kConstantMixture;
  std::optional<Rational> weight;  // "a"
  std::optional<Rational> target;  // "target"; converted to a weight
  ScheduleKind schedule = ScheduleKind::kFactorial;

  friend bool operator==(const PlanSpec&, const PlanSpec&) = default;
};

struct RunSpec {
  std::uint64_t n_max = 10000;
  std::size_t trials = 100;
  std::vector<std::uint64_t> checkpoints;  // empty: defaults per plan
  std::uint64_t seed = 0;
  std::uint64_t budget = kDefaultBudget;

  friend bool operator==(const RunSpec&, const RunSpec&) = default;
};

struct WeakLawSpec {
  Rational a = Rational(1, 2);
  Rational epsilon = Rational(1, 4);
  std::uint64_t n_min = 1;
  std::uint64_t n_max = 12;

  friend bool operator==(const WeakLawSpec&, const WeakLawSpec&) = default;
};

struct CertifySpec {
  std::vector<Interval> target;
  std::vector<EventKind> events;  // empty: all five

  friend bool operator==(const CertifySpec&, const CertifySpec&) = default;
};

struct ScenarioConfig {
  Scenario scenario;
  std::optional<PlanSpec> plan;
  RunSpec run;
  std::optional<WeakLawSpec> weaklaw;
  std::optional<CertifySpec> certify;

  friend bool operator==(const ScenarioConfig&, const ScenarioConfig&) = default;
};

// Throws ConfigError.
ScenarioConfig parse_config(const nlohmann::json& doc);
ScenarioConfig load_config(const std::string& path);

// Canonical form; parse_config(dump_config(c)) == c.
nlohmann::json dump_config(const ScenarioConfig& config);

// Throws ConfigError("/plan", ...) when the config carries no plan.
CoordinatePlan build_plan(const ScenarioConfig& config);

}  // namespace nmlln::cli
