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
#include <map>
#include <span>
#include <vector>

#include "nmlln/plan.hpp"

namespace nmlln {

inline constexpr std::uint64_t kDefaultBudget = std::uint64_t{1} << 24;

// |Omega_1|^n, saturating at UINT64_MAX.
std::uint64_t product_size(std::size_t base_size, std::uint64_t n);

struct EventBounds {
  Rational inner;
  Rational outer;
};

// Inner and outer measure, under the n-fold product of P_1 on the product of
// the base blocks, of E = {|S_n/n - a| > eps} as a subset of Omega_1^n.
// Throws BudgetExceeded when |Omega_1|^n > budget.
EventBounds exact_event_bounds(const Scenario& scenario, std::uint64_t n,
                               const Rational& a, const Rational& eps,
                               std::uint64_t budget = kDefaultBudget);

// Exact law of S_n under the plan: value -> probability.
std::map<Rational, Rational> exact_sum_distribution(
    const CoordinatePlan& plan, std::uint64_t n,
    std::uint64_t budget = kDefaultBudget);

// Probability of {|S_n/n - a| > eps} under the plan.
Rational exact_plan_event_prob(const CoordinatePlan& plan, std::uint64_t n,
                               const Rational& a, const Rational& eps,
                               std::uint64_t budget = kDefaultBudget);

struct ProfilePoint {
  std::uint64_t n;
  Rational mean;  // beta_n / n
};

// beta_n = sum of the coordinate expectations of psi for k <= n. Reports
// every n in [1, n_max] when `checkpoints` is empty.
std::vector<ProfilePoint> expected_mean_profile(
    const CoordinatePlan& plan, std::uint64_t n_max,
    std::span<const std::uint64_t> checkpoints = {});

struct VarianceTerm {
  std::uint64_t n;
  Rational variance;   // Var[Y_n] under coordinate n's law
  double partial_sum;  // sum_{k<=n} Var[Y_k] / k^2
};

std::vector<VarianceTerm> variance_sum_diagnostic(const CoordinatePlan& plan,
                                                  std::uint64_t n_terms);

// Finite-horizon product (Omega_1^n, F_1^n, P_1^n). Point index encodes
// (omega_1, ..., omega_n) in base |Omega_1| with omega_1 most significant;
// labels are comma-joined.
FiniteSpace product_space(const FiniteSpace& base, std::size_t n);
FieldPartition product_field(const FieldPartition& base, std::size_t n);
// (omega_1, ..., omega_n) -> f(omega_k), k in [1, n].
RandomQuantity coordinate_quantity(const RandomQuantity& f, std::size_t n,
                                   std::size_t k);

}  // namespace nmlln
