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

#include "commands.hpp"

#include <algorithm>
#include <ostream>

#include <fmt/format.h>
#include <fmt/ostream.h>

#include "nmlln/error.hpp"
#include "nmlln/exact.hpp"
#include "nmlln/simulate.hpp"

namespace nmlln::cli {

namespace {

std::string exact_and_decimal(const Rational& r) {
  return fmt::format("{} ({:.6f})", to_string(r), to_double(r));
}

}  // namespace

void cmd_analyze(const ScenarioConfig& config, std::ostream& out) {
  const Scenario& s = config.scenario;
  const auto lower_fn = minorant(s.field(), s.psi());
  const auto upper_fn = majorant(s.field(), s.psi());
  const auto masses = block_masses(s.space(), s.field());

  fmt::print(out, "atoms: {}\n", s.field().num_blocks());
  fmt::print(out, "{:<6} {:<12} {:<20} {:<10} {:<10}\n", "atom", "mass",
             "points (psi)", "psi_*", "psi^*");
  for (std::size_t b = 0; b < s.field().num_blocks(); ++b) {
    std::string pts;
    for (PointIndex p : s.field().block(b)) {
      if (!pts.empty()) pts += " ";
      pts += s.space().label(p) + "(" + to_string(s.psi()[p]) + ")";
    }
    const PointIndex first = s.field().block(b).front();
    fmt::print(out, "{:<6} {:<12} {:<20} {:<10} {:<10}\n", b,
               to_string(masses[b]), pts, to_string(lower_fn[first]),
               to_string(upper_fn[first]));
  }
  fmt::print(out, "E_*[psi] = {}\n", exact_and_decimal(s.lower()));
  fmt::print(out, "E^*[psi] = {}\n", exact_and_decimal(s.upper()));
  if (s.psi_measurable()) {
    fmt::print(out,
               "psi is measurable (completion): E[psi] = {}; the strong law "
               "holds\n",
               exact_and_decimal(s.lower()));
  } else {
    fmt::print(out,
               "psi is nonmeasurable: limit points of S_n/n can be steered "
               "anywhere in [E_*, E^*]\n");
  }
}

std::vector<std::uint64_t> default_checkpoints(const CoordinatePlan& plan,
                                               std::uint64_t n_max) {
  std::vector<std::uint64_t> marks;
  if (plan.kind() == PlanKind::kBlockAlternating) {
    marks = plan.schedule()->ends_up_to(n_max);
  } else {
    for (std::uint64_t n = 1; n <= n_max; n *= 10) {
      marks.push_back(n);
      if (n > n_max / 10) break;
    }
  }
  if (marks.empty() || marks.back() != n_max) marks.push_back(n_max);
  return marks;
}

void cmd_simulate(const ScenarioConfig& config, std::ostream& out) {
  const CoordinatePlan plan = build_plan(config);
  const auto marks = config.run.checkpoints.empty()
                         ? default_checkpoints(plan, config.run.n_max)
                         : config.run.checkpoints;
  const auto trajectories = simulate(plan, config.run.n_max, marks,
                                     config.run.seed, config.run.trials);
  out << "trajectory_id,seed,n,mean\n";
  for (std::size_t i = 0; i < trajectories.size(); ++i) {
    for (const auto& c : trajectories[i].checkpoints) {
      fmt::print(out, "{},{},{},{}\n", i, trajectories[i].seed, c.n, c.mean);
    }
  }
}

void cmd_weaklaw(const ScenarioConfig& config, std::ostream& out) {
  const WeakLawSpec spec = config.weaklaw.value_or(WeakLawSpec{});
  std::optional<CoordinatePlan> plan;
  if (config.plan) plan = build_plan(config);
  // Surface the budget failure before printing any rows.
  const std::uint64_t required =
      product_size(config.scenario.space().size(), spec.n_max);
  if (required > config.run.budget) {
    throw BudgetExceeded(required, config.run.budget);
  }

  fmt::print(out, "# event |S_n/n - {}| > {}\n", to_string(spec.a),
             to_string(spec.epsilon));
  out << "n,inner,inner_decimal,outer,outer_decimal";
  if (plan) out << ",plan,plan_decimal";
  out << "\n";
  for (std::uint64_t n = spec.n_min; n <= spec.n_max; ++n) {
    const EventBounds b = exact_event_bounds(config.scenario, n, spec.a,
                                             spec.epsilon, config.run.budget);
    fmt::print(out, "{},{},{:.6f},{},{:.6f}", n, to_string(b.inner),
               to_double(b.inner), to_string(b.outer), to_double(b.outer));
    if (plan) {
      const Rational p = exact_plan_event_prob(*plan, n, spec.a, spec.epsilon,
                                               config.run.budget);
      fmt::print(out, ",{},{:.6f}", to_string(p), to_double(p));
    }
    out << "\n";
  }
}

bool cmd_certify(const ScenarioConfig& config, std::ostream& out) {
  if (!config.certify) throw ConfigError("/certify", "missing");
  std::vector<Interval> intervals = config.certify->target;
  const TargetSet target(std::move(intervals));
  const CertificatePlans plans =
      make_certificate_plans(config.scenario, target);
  std::vector<EventKind> kinds = config.certify->events;
  if (kinds.empty()) kinds.assign(std::begin(kAllEventKinds), std::end(kAllEventKinds));
  const CertificateReport report =
      certify_nonmeasurable(config.scenario, kinds, target, plans,
                            config.run.n_max, config.run.trials,
                            config.run.seed);
  out << report.render();
  return report.all_certified();
}

}  // namespace nmlln::cli
