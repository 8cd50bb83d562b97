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

#include "nmlln/certify.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "nmlln/error.hpp"

namespace nmlln {

const char* event_kind_name(EventKind kind) {
  switch (kind) {
    case EventKind::kLiminfInA: return "liminf-in-A";
    case EventKind::kLimsupInA: return "limsup-in-A";
    case EventKind::kLimExistsInA: return "lim-exists-in-A";
    case EventKind::kLimExists: return "lim-exists";
    case EventKind::kAllLimitPointsInA: return "all-limit-points-in-A";
  }
  return "unknown";
}

EventKind parse_event_kind(const std::string& name) {
  for (EventKind k : kAllEventKinds) {
    if (name == event_kind_name(k)) return k;
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown event kind '" + name + "'");
}

// ---------------------------------------------------------------- TargetSet

TargetSet::TargetSet(std::vector<Interval> intervals) {
  if (intervals.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "target set is empty");
  }
  for (const auto& iv : intervals) {
    if (iv.lo > iv.hi) {
      throw Error(ErrorCode::kInvalidArgument,
                  "interval [" + to_string(iv.lo) + ", " + to_string(iv.hi) +
                      "] is empty");
    }
  }
  std::sort(intervals.begin(), intervals.end(),
            [](const Interval& x, const Interval& y) { return x.lo < y.lo; });
  for (auto& iv : intervals) {
    if (!intervals_.empty() && iv.lo <= intervals_.back().hi) {
      intervals_.back().hi = std::max(intervals_.back().hi, iv.hi);
    } else {
      intervals_.push_back(std::move(iv));
    }
  }
}

bool TargetSet::contains(const Rational& x) const {
  return std::any_of(intervals_.begin(), intervals_.end(),
                     [&](const Interval& iv) { return iv.lo <= x && x <= iv.hi; });
}

double TargetSet::distance(double x) const {
  double best = INFINITY;
  for (const auto& iv : intervals_) {
    const double lo = to_double(iv.lo);
    const double hi = to_double(iv.hi);
    const double d = x < lo ? lo - x : (x > hi ? x - hi : 0.0);
    best = std::min(best, d);
  }
  return best;
}

bool TargetSet::covers(const Rational& lo, const Rational& hi) const {
  return std::any_of(intervals_.begin(), intervals_.end(),
                     [&](const Interval& iv) { return iv.lo <= lo && hi <= iv.hi; });
}

bool TargetSet::within(const Rational& lo, const Rational& hi) const {
  return intervals_.front().lo >= lo && intervals_.back().hi <= hi;
}

std::string TargetSet::describe() const {
  std::string out;
  for (const auto& iv : intervals_) {
    if (!out.empty()) out += " u ";
    if (iv.lo == iv.hi) {
      out += "{" + to_string(iv.lo) + "}";
    } else {
      out += "[" + to_string(iv.lo) + ", " + to_string(iv.hi) + "]";
    }
  }
  return out;
}

// -------------------------------------------------------------- plans

CertificatePlans make_certificate_plans(const Scenario& scenario,
                                        const TargetSet& target) {
  const Rational& lo = scenario.lower();
  const Rational& hi = scenario.upper();
  if (!target.within(lo, hi)) {
    throw Error(ErrorCode::kHypothesisViolated,
                "A = " + target.describe() + " is not a subset of [" +
                    to_string(lo) + ", " + to_string(hi) + "]");
  }
  if (target.covers(lo, hi)) {
    throw Error(ErrorCode::kHypothesisViolated,
                "A = " + target.describe() + " is not a proper subset of [" +
                    to_string(lo) + ", " + to_string(hi) + "]");
  }
  const auto& first = target.intervals().front();
  Rational inside = (first.lo + first.hi) / 2;

  // Farthest uncovered candidate: the endpoints, then gap midpoints.
  std::vector<Rational> candidates{hi, lo};
  const auto& ivs = target.intervals();
  for (std::size_t i = 0; i + 1 < ivs.size(); ++i) {
    candidates.push_back((ivs[i].hi + ivs[i + 1].lo) / 2);
  }
  if (ivs.front().lo > lo) candidates.push_back((lo + ivs.front().lo) / 2);
  if (ivs.back().hi < hi) candidates.push_back((ivs.back().hi + hi) / 2);
  std::optional<Rational> outside;
  double best = -1.0;
  for (const auto& c : candidates) {
    if (target.contains(c)) continue;
    const double d = target.distance(to_double(c));
    if (d > best) {
      best = d;
      outside = c;
    }
  }
  if (!outside) {
    throw Error(ErrorCode::kHypothesisViolated,
                "no point of [E_*, E^*] outside A found");
  }
  return CertificatePlans{
      inside,
      *outside,
      CoordinatePlan::constant_mixture(scenario,
                                       target_mixture_weight(inside, lo, hi)),
      CoordinatePlan::constant_mixture(
          scenario, target_mixture_weight(*outside, lo, hi)),
      CoordinatePlan::block_alternating(
          scenario, make_schedule(ScheduleKind::kFactorial, scenario.psi())),
  };
}

// ----------------------------------------------------------- surrogates

Surrogates make_surrogates(const Scenario& scenario,
                           const BlockSchedule& schedule, std::uint64_t n_max) {
  const double range =
      to_double(scenario.psi().max()) - to_double(scenario.psi().min());
  return Surrogates{
      3.0 * range / std::sqrt(static_cast<double>(n_max)),
      to_double(scenario.upper() - scenario.lower()) / 2.0,
      schedule.end(2),
  };
}

std::vector<std::uint64_t> certificate_checkpoints(
    const BlockSchedule& schedule, std::uint64_t n_max) {
  auto marks = schedule.ends_up_to(n_max);
  if (marks.empty() || marks.back() != n_max) marks.push_back(n_max);
  return marks;
}

bool surrogate_diverges(const Trajectory& t, const Surrogates& s) {
  double lo = INFINITY;
  double hi = -INFINITY;
  for (const auto& c : t.checkpoints) {
    if (c.n <= s.divergence_from) continue;
    lo = std::min(lo, c.mean);
    hi = std::max(hi, c.mean);
  }
  return hi - lo > s.divergence_threshold;
}

bool evaluate_event(EventKind kind, const TargetSet& target,
                    const Trajectory& t, const Surrogates& s) {
  if (t.checkpoints.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "trajectory has no checkpoints");
  }
  const bool near = target.distance(t.checkpoints.back().mean) <= s.membership_tol;
  switch (kind) {
    case EventKind::kLiminfInA:
    case EventKind::kLimsupInA:
    case EventKind::kAllLimitPointsInA:
      return near;
    case EventKind::kLimExistsInA:
      return near && !surrogate_diverges(t, s);
    case EventKind::kLimExists:
      return !surrogate_diverges(t, s);
  }
  return false;
}

// --------------------------------------------------------------- report

CertificateReport certify_nonmeasurable(const Scenario& scenario,
                                        std::span<const EventKind> kinds,
                                        const TargetSet& target,
                                        const CertificatePlans& plans,
                                        std::uint64_t n_max,
                                        std::size_t trials,
                                        std::uint64_t master_seed) {
  if (!target.within(scenario.lower(), scenario.upper()) ||
      target.covers(scenario.lower(), scenario.upper())) {
    throw Error(ErrorCode::kHypothesisViolated,
                "A = " + target.describe() +
                    " is not a nonempty proper subset of [E_*, E^*]");
  }
  const BlockSchedule& schedule = *plans.divergent.schedule();
  const Surrogates surrogates = make_surrogates(scenario, schedule, n_max);
  const auto marks = certificate_checkpoints(schedule, n_max);

  struct Run {
    const char* role;
    const CoordinatePlan* plan;
    std::vector<Trajectory> trajectories;
  };
  std::vector<Run> runs{{"P'", &plans.inside, {}},
                        {"P'''", &plans.outside, {}},
                        {"P''", &plans.divergent, {}}};
  for (std::size_t r = 0; r < runs.size(); ++r) {
    // Distinct streams per plan.
    runs[r].trajectories = simulate(*runs[r].plan, n_max, marks,
                                    trajectory_seed(master_seed, ~r), trials);
  }

  CertificateReport report{scenario.lower(), scenario.upper(), target,
                           plans.inside_target, plans.outside_target, n_max,
                           trials, master_seed, surrogates, {}};
  for (EventKind kind : kinds) {
    EventCertificate ec{kind, {}, 0, 1, false};
    for (const auto& run : runs) {
      std::size_t hits = 0;
      for (const auto& t : run.trajectories) {
        if (evaluate_event(kind, target, t, surrogates)) ++hits;
      }
      ec.plans.push_back({run.role, run.plan->describe(), hits, trials});
    }
    ec.high_plan = 0;
    ec.low_plan = kind == EventKind::kLimExists ? 2 : 1;
    ec.certified = ec.plans[ec.high_plan].frequency() >= kCertifyHigh &&
                   ec.plans[ec.low_plan].frequency() <= kCertifyLow;
    report.events.push_back(std::move(ec));
  }
  return report;
}

bool CertificateReport::all_certified() const {
  return std::all_of(events.begin(), events.end(),
                     [](const EventCertificate& e) { return e.certified; });
}

std::string CertificateReport::render() const {
  std::string out;
  out += fmt::format("E_* = {} ({:.6f}), E^* = {} ({:.6f})\n", to_string(lower),
                     to_double(lower), to_string(upper), to_double(upper));
  out += fmt::format("A = {}\n", target.describe());
  out += fmt::format("P'   : constant mixture steering S_n/n to a_1 = {}\n",
                     to_string(inside_target));
  out += fmt::format("P''' : constant mixture steering S_n/n to a_2 = {}\n",
                     to_string(outside_target));
  out += "P''  : block-alternating product of min/max extensions\n";
  out += fmt::format("horizon n_max = {}, trials per plan = {}, master seed = {}\n",
                     n_max, trials, master_seed);
  out += "surrogates:\n";
  out += fmt::format(
      "  membership: |S_n/n - A| <= {:.6f} at n = n_max (3 (max psi - min "
      "psi) / sqrt(n_max))\n",
      surrogates.membership_tol);
  out += fmt::format(
      "  divergence: max - min of S_n/n over checkpoints n > {} exceeds {:.6f} "
      "((E^* - E_*) / 2)\n",
      surrogates.divergence_from, surrogates.divergence_threshold);
  for (const auto& e : events) {
    out += fmt::format("event {}:\n", event_kind_name(e.kind));
    for (const auto& p : e.plans) {
      out += fmt::format("  {:<5} freq {:.4f} ({}/{})  {}\n", p.role,
                         p.frequency(), p.hits, p.trials, p.description);
    }
    const auto& hi = e.plans[e.high_plan];
    const auto& lo = e.plans[e.low_plan];
    out += fmt::format(
        "  {}: measure ~1 under extension {} ({:.4f}), ~0 under extension {} "
        "({:.4f}) => inner measure <= {:.4f}, outer measure >= {:.4f}\n",
        e.certified ? "CERTIFIED" : "NOT CERTIFIED", hi.role, hi.frequency(),
        lo.role, lo.frequency(), lo.frequency(), hi.frequency());
  }
  out += all_certified()
             ? "conclusion: every event has empirical measure ~1 under one "
               "extension of P and ~0 under another; each is maximally "
               "nonmeasurable at this horizon\n"
             : "conclusion: at least one event lacks a two-extension "
               "witness at this horizon\n";
  return out;
}

}  // namespace nmlln
