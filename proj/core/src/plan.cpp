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

#include "nmlln/plan.hpp"

#include "nmlln/error.hpp"

namespace nmlln {

const char* plan_kind_name(PlanKind kind) {
  switch (kind) {
    case PlanKind::kConstantMixture: return "constant-mixture";
    case PlanKind::kBlockAlternating: return "block-alternating";
    case PlanKind::kRegimeMixture: return "regime-mixture";
  }
  return "unknown";
}

PlanKind parse_plan_kind(const std::string& name) {
  if (name == "constant-mixture") return PlanKind::kConstantMixture;
  if (name == "block-alternating") return PlanKind::kBlockAlternating;
  if (name == "regime-mixture") return PlanKind::kRegimeMixture;
  throw Error(ErrorCode::kInvalidArgument, "unknown plan variant '" + name + "'");
}

namespace {

Rational checked_weight(const Rational& a) {
  if (a < 0 || a > 1) {
    throw Error(ErrorCode::kOutOfRange,
                "mixture weight " + to_string(a) + " outside [0,1]");
  }
  return a;
}

}  // namespace

CoordinatePlan::CoordinatePlan(Scenario scenario, PlanKind kind,
                               Rational weight,
                               std::optional<BlockSchedule> schedule)
    : scenario_(std::move(scenario)),
      kind_(kind),
      weight_(std::move(weight)),
      schedule_(std::move(schedule)),
      min_(extend_min(scenario_.space(), scenario_.field(), scenario_.psi())),
      max_(extend_max(scenario_.space(), scenario_.field(), scenario_.psi())),
      mixed_(mix(min_, max_, kind_ == PlanKind::kBlockAlternating
                                 ? Rational(1, 2)
                                 : weight_)) {}

CoordinatePlan CoordinatePlan::constant_mixture(Scenario scenario,
                                                const Rational& a) {
  return CoordinatePlan(std::move(scenario), PlanKind::kConstantMixture,
                        checked_weight(a), std::nullopt);
}

CoordinatePlan CoordinatePlan::block_alternating(Scenario scenario,
                                                 BlockSchedule schedule) {
  return CoordinatePlan(std::move(scenario), PlanKind::kBlockAlternating,
                        Rational(0), std::move(schedule));
}

CoordinatePlan CoordinatePlan::regime_mixture(Scenario scenario,
                                              const Rational& a) {
  return CoordinatePlan(std::move(scenario), PlanKind::kRegimeMixture,
                        checked_weight(a), std::nullopt);
}

const ExtensionMeasure& CoordinatePlan::coordinate_measure(
    std::uint64_t n) const {
  if (n == 0) throw Error(ErrorCode::kOutOfRange, "coordinates start at 1");
  if (kind_ == PlanKind::kBlockAlternating) {
    return schedule_->in_min_blocks(n) ? min_ : max_;
  }
  return mixed_;
}

std::string CoordinatePlan::describe() const {
  switch (kind_) {
    case PlanKind::kConstantMixture:
      return "constant-mixture a=" + to_string(weight_);
    case PlanKind::kBlockAlternating:
      return "block-alternating " + schedule_->rule();
    case PlanKind::kRegimeMixture:
      return "regime-mixture a=" + to_string(weight_);
  }
  return "unknown";
}

Rational target_mixture_weight(const Rational& alpha, const Rational& lower,
                               const Rational& upper) {
  if (alpha < lower || alpha > upper) {
    throw Error(ErrorCode::kOutOfRange,
                "target " + to_string(alpha) + " outside [" + to_string(lower) +
                    ", " + to_string(upper) + "]");
  }
  if (lower == upper) return 0;
  return (alpha - lower) / (upper - lower);
}

}  // namespace nmlln
