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
#include <span>
#include <string>
#include <vector>

#include "nmlln/plan.hpp"
#include "nmlln/simulate.hpp"

namespace nmlln {

// Tail events on the limit points of S_n/n.
enum class EventKind {
  kLiminfInA,           // liminf S_n/n in A
  kLimsupInA,           // limsup S_n/n in A
  kLimExistsInA,        // lim S_n/n exists and is in A
  kLimExists,           // lim S_n/n exists
  kAllLimitPointsInA,   // every limit point of S_n/n is in A
};

inline constexpr EventKind kAllEventKinds[] = {
    EventKind::kLiminfInA, EventKind::kLimsupInA, EventKind::kLimExistsInA,
    EventKind::kLimExists, EventKind::kAllLimitPointsInA};

const char* event_kind_name(EventKind kind);
// Throws Error(kInvalidArgument) for an unknown name.
EventKind parse_event_kind(const std::string& name);

struct Interval {
  Rational lo;
  Rational hi;
  friend bool operator==(const Interval&, const Interval&) = default;
};

// Finite union of closed intervals; single points are degenerate intervals.
class TargetSet {
 public:
  // Throws Error(kInvalidArgument) when empty or some lo > hi. Overlapping
  // intervals are merged.
  explicit TargetSet(std::vector<Interval> intervals);

  const std::vector<Interval>& intervals() const { return intervals_; }
  bool contains(const Rational& x) const;
  double distance(double x) const;
  // True when the union covers [lo, hi].
  bool covers(const Rational& lo, const Rational& hi) const;
  bool within(const Rational& lo, const Rational& hi) const;
  std::string describe() const;

  friend bool operator==(const TargetSet&, const TargetSet&) = default;

 private:
  std::vector<Interval> intervals_;
};

// The three extensions a certificate compares.
struct CertificatePlans {
  Rational inside_target;   // a_1 in A
  Rational outside_target;  // a_2 in [E_*, E^*] \ A
  CoordinatePlan inside;    // S_n/n -> a_1
  CoordinatePlan outside;   // S_n/n -> a_2
  CoordinatePlan divergent; // block-alternating, S_n/n oscillates
};

// Throws Error(kHypothesisViolated) unless A is a nonempty proper subset of
// [E_*, E^*].
CertificatePlans make_certificate_plans(const Scenario& scenario,
                                        const TargetSet& target);

// Finite-horizon stand-ins for the tail events.
struct Surrogates {
  double membership_tol;        // 3 (max psi - min psi) / sqrt(n_max)
  double divergence_threshold;  // (E^* - E_*) / 2
  std::uint64_t divergence_from;  // only checkpoints n > a_2 count
};

Surrogates make_surrogates(const Scenario& scenario,
                           const BlockSchedule& schedule, std::uint64_t n_max);

// Checkpoints used by certificates: schedule block ends up to n_max, plus
// n_max.
std::vector<std::uint64_t> certificate_checkpoints(
    const BlockSchedule& schedule, std::uint64_t n_max);

bool surrogate_diverges(const Trajectory& t, const Surrogates& s);
bool evaluate_event(EventKind kind, const TargetSet& target,
                    const Trajectory& t, const Surrogates& s);

struct PlanFrequency {
  std::string role;  // "P'", "P'''", "P''"
  std::string description;
  std::size_t hits;
  std::size_t trials;
  double frequency() const {
    return trials ? static_cast<double>(hits) / static_cast<double>(trials)
                  : 0.0;
  }
};

struct EventCertificate {
  EventKind kind;
  std::vector<PlanFrequency> plans;  // P', P''', P''
  std::size_t high_plan;  // index expected near 1
  std::size_t low_plan;   // index expected near 0
  bool certified;         // high >= 0.95 and low <= 0.05
};

struct CertificateReport {
  Rational lower;
  Rational upper;
  TargetSet target;
  Rational inside_target;
  Rational outside_target;
  std::uint64_t n_max;
  std::size_t trials;
  std::uint64_t master_seed;
  Surrogates surrogates;
  std::vector<EventCertificate> events;

  bool all_certified() const;
  std::string render() const;
};

inline constexpr double kCertifyHigh = 0.95;
inline constexpr double kCertifyLow = 0.05;

CertificateReport certify_nonmeasurable(const Scenario& scenario,
                                        std::span<const EventKind> kinds,
                                        const TargetSet& target,
                                        const CertificatePlans& plans,
                                        std::uint64_t n_max,
                                        std::size_t trials,
                                        std::uint64_t master_seed);

}  // namespace nmlln
