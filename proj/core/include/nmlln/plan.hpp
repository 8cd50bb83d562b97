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
#include <string>

#include "nmlln/extension.hpp"
#include "nmlln/scenario.hpp"
#include "nmlln/schedule.hpp"

namespace nmlln {

enum class PlanKind {
  // Product over coordinates of mix(extend_min, extend_max, a).
  kConstantMixture,
  // Product with extend_min on L = L_1 u L_3 u ... and extend_max elsewhere.
  kBlockAlternating,
  // (1-a) (product of extend_min) + a (product of extend_max): one draw
  // picks the regime for the whole sequence.
  kRegimeMixture,
};

const char* plan_kind_name(PlanKind kind);
// Throws Error(kInvalidArgument) for an unknown name.
PlanKind parse_plan_kind(const std::string& name);

// Selects an extension of P_1 for each coordinate, defining an extension of
// the product measure on Omega_1^N.
class CoordinatePlan {
 public:
  static CoordinatePlan constant_mixture(Scenario scenario, const Rational& a);
  static CoordinatePlan block_alternating(Scenario scenario,
                                          BlockSchedule schedule);
  static CoordinatePlan regime_mixture(Scenario scenario, const Rational& a);

  PlanKind kind() const { return kind_; }
  const Scenario& scenario() const { return scenario_; }
  // Mixture weight; 0 for block-alternating plans.
  const Rational& weight() const { return weight_; }
  const std::optional<BlockSchedule>& schedule() const { return schedule_; }

  // P_{1,n,0} and P_{1,n,1}; identical for every n since psi is simple.
  const ExtensionMeasure& min_measure() const { return min_; }
  const ExtensionMeasure& max_measure() const { return max_; }
  const ExtensionMeasure& mixed_measure() const { return mixed_; }

  // Marginal law of coordinate n >= 1. Coordinates are independent under
  // this law unless kind() == kRegimeMixture.
  const ExtensionMeasure& coordinate_measure(std::uint64_t n) const;
  bool is_product() const { return kind_ != PlanKind::kRegimeMixture; }

  std::string describe() const;

 private:
  CoordinatePlan(Scenario scenario, PlanKind kind, Rational weight,
                 std::optional<BlockSchedule> schedule);

  Scenario scenario_;
  PlanKind kind_;
  Rational weight_;
  std::optional<BlockSchedule> schedule_;
  ExtensionMeasure min_;
  ExtensionMeasure max_;
  ExtensionMeasure mixed_;
};

// a = (alpha - lower) / (upper - lower), 0 when lower == upper. Throws
// Error(kOutOfRange) unless lower <= alpha <= upper.
Rational target_mixture_weight(const Rational& alpha, const Rational& lower,
                               const Rational& upper);

}  // namespace nmlln
