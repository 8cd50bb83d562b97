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

#include "nmlln/exact.hpp"

#include <algorithm>
#include <limits>
#include <set>

#include "nmlln/error.hpp"

namespace nmlln {

namespace {

using Distribution = std::map<Rational, Rational>;

void check_budget(std::size_t base_size, std::uint64_t n,
                  std::uint64_t budget) {
  const std::uint64_t required = product_size(base_size, n);
  if (required > budget) throw BudgetExceeded(required, budget);
}

// |s/n - a| > eps  <=>  |s - n a| > n eps
bool in_event(const Rational& sum, std::uint64_t n, const Rational& a,
              const Rational& eps) {
  const Rational scale(n);
  return abs(sum - scale * a) > scale * eps;
}

Distribution value_law(const ExtensionMeasure& q, const RandomQuantity& psi) {
  Distribution law;
  const auto masses = q.point_masses();
  for (PointIndex p = 0; p < masses.size(); ++p) {
    if (masses[p] != 0) law[psi[p]] += masses[p];
  }
  return law;
}

Distribution convolve(const Distribution& acc, const Distribution& step) {
  Distribution next;
  for (const auto& [s, ps] : acc) {
    for (const auto& [v, pv] : step) next[s + v] += ps * pv;
  }
  return next;
}

Distribution product_law(const CoordinatePlan& plan,
                         const ExtensionMeasure* fixed, std::uint64_t n) {
  const auto& psi = plan.scenario().psi();
  Distribution acc{{Rational(0), Rational(1)}};
  // Cache laws by the identity of the coordinate measure.
  std::map<const ExtensionMeasure*, Distribution> laws;
  for (std::uint64_t k = 1; k <= n; ++k) {
    const ExtensionMeasure* q = fixed ? fixed : &plan.coordinate_measure(k);
    auto it = laws.find(q);
    if (it == laws.end()) it = laws.emplace(q, value_law(*q, psi)).first;
    acc = convolve(acc, it->second);
  }
  return acc;
}

Rational event_probability(const Distribution& law, std::uint64_t n,
                           const Rational& a, const Rational& eps) {
  Rational p = 0;
  for (const auto& [s, ps] : law) {
    if (in_event(s, n, a, eps)) p += ps;
  }
  return p;
}

std::set<Rational> minkowski(const std::set<Rational>& x,
                             const std::set<Rational>& y) {
  std::set<Rational> out;
  for (const auto& u : x) {
    for (const auto& v : y) out.insert(u + v);
  }
  return out;
}

}  // namespace

std::uint64_t product_size(std::size_t base_size, std::uint64_t n) {
  constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t total = 1;
  for (std::uint64_t i = 0; i < n; ++i) {
    if (base_size != 0 && total > kMax / base_size) return kMax;
    total *= base_size;
  }
  return total;
}

EventBounds exact_event_bounds(const Scenario& scenario, std::uint64_t n,
                               const Rational& a, const Rational& eps,
                               std::uint64_t budget) {
  if (n < 1) throw Error(ErrorCode::kOutOfRange, "n must be >= 1");
  if (eps < 0) throw Error(ErrorCode::kOutOfRange, "eps must be >= 0");
  check_budget(scenario.space().size(), n, budget);

  const auto& field = scenario.field();
  const auto masses = block_masses(scenario.space(), field);
  const std::size_t k = field.num_blocks();

  // An atom of the product field is a sequence of base blocks; whether it
  // lies inside / meets E depends only on how often each block occurs, so
  // atoms are grouped by their count vector (c_1, ..., c_k). The sums
  // attainable on such an atom are the Minkowski sum of c_j copies of each
  // block's psi values.
  std::vector<std::set<Rational>> values(k);
  for (std::size_t b = 0; b < k; ++b) {
    for (PointIndex p : field.block(b)) values[b].insert(scenario.psi()[p]);
  }
  // powers[b][c] = c-fold sumset of block b.
  std::vector<std::vector<std::set<Rational>>> powers(k);
  for (std::size_t b = 0; b < k; ++b) {
    powers[b].push_back({Rational(0)});
    for (std::uint64_t c = 1; c <= n; ++c) {
      powers[b].push_back(minkowski(powers[b].back(), values[b]));
    }
  }
  std::vector<Integer> factorial(n + 1, Integer(1));
  for (std::uint64_t i = 1; i <= n; ++i) factorial[i] = factorial[i - 1] * i;

  EventBounds bounds{0, 0};
  std::vector<std::uint64_t> counts(k, 0);
  // Depth-first enumeration of compositions of n into k parts.
  auto visit = [&](auto&& self, std::size_t b, std::uint64_t left) -> void {
    if (b + 1 == k) {
      counts[b] = left;
      Integer ways = factorial[n];
      Rational weight = 1;
      std::set<Rational> sums{Rational(0)};
      for (std::size_t j = 0; j < k; ++j) {
        ways /= factorial[counts[j]];
        for (std::uint64_t c = 0; c < counts[j]; ++c) weight *= masses[j];
        sums = minkowski(sums, powers[j][counts[j]]);
      }
      const Rational mass = weight * Rational(ways);
      bool all = true;
      bool any = false;
      for (const auto& s : sums) {
        const bool hit = in_event(s, n, a, eps);
        all = all && hit;
        any = any || hit;
      }
      if (all) bounds.inner += mass;
      if (any) bounds.outer += mass;
      return;
    }
    for (std::uint64_t c = 0; c <= left; ++c) {
      counts[b] = c;
      self(self, b + 1, left - c);
    }
  };
  visit(visit, 0, n);
  return bounds;
}

std::map<Rational, Rational> exact_sum_distribution(const CoordinatePlan& plan,
                                                    std::uint64_t n,
                                                    std::uint64_t budget) {
  if (n < 1) throw Error(ErrorCode::kOutOfRange, "n must be >= 1");
  check_budget(plan.scenario().space().size(), n, budget);
  if (plan.is_product()) return product_law(plan, nullptr, n);
  const Distribution lo = product_law(plan, &plan.min_measure(), n);
  const Distribution hi = product_law(plan, &plan.max_measure(), n);
  const Rational a = plan.weight();
  Distribution out;
  for (const auto& [s, p] : lo) out[s] += (1 - a) * p;
  for (const auto& [s, p] : hi) out[s] += a * p;
  return out;
}

Rational exact_plan_event_prob(const CoordinatePlan& plan, std::uint64_t n,
                               const Rational& a, const Rational& eps,
                               std::uint64_t budget) {
  if (eps < 0) throw Error(ErrorCode::kOutOfRange, "eps must be >= 0");
  return event_probability(exact_sum_distribution(plan, n, budget), n, a, eps);
}

std::vector<ProfilePoint> expected_mean_profile(
    const CoordinatePlan& plan, std::uint64_t n_max,
    std::span<const std::uint64_t> checkpoints) {
  if (n_max < 1) throw Error(ErrorCode::kOutOfRange, "n_max must be >= 1");
  const auto& psi = plan.scenario().psi();
  const Rational e_min = plan.min_measure().expectation(psi);
  const Rational e_max = plan.max_measure().expectation(psi);
  const Rational e_mixed = plan.mixed_measure().expectation(psi);

  std::vector<std::uint64_t> marks(checkpoints.begin(), checkpoints.end());
  std::sort(marks.begin(), marks.end());
  marks.erase(std::unique(marks.begin(), marks.end()), marks.end());
  if (!marks.empty() && (marks.front() < 1 || marks.back() > n_max)) {
    throw Error(ErrorCode::kOutOfRange, "checkpoint outside [1, n_max]");
  }
  const bool every = marks.empty();

  std::vector<ProfilePoint> out;
  out.reserve(every ? n_max : marks.size());
  if (plan.kind() != PlanKind::kBlockAlternating) {
    // Every coordinate has the same marginal mean.
    if (every) {
      for (std::uint64_t n = 1; n <= n_max; ++n) out.push_back({n, e_mixed});
    } else {
      for (std::uint64_t n : marks) out.push_back({n, e_mixed});
    }
    return out;
  }
  const auto& schedule = *plan.schedule();
  std::uint64_t count_min = 0;
  std::size_t next_mark = 0;
  for (std::uint64_t n = 1; n <= n_max; ++n) {
    if (schedule.in_min_blocks(n)) ++count_min;
    if (every || (next_mark < marks.size() && marks[next_mark] == n)) {
      const Rational beta =
          e_min * Rational(count_min) + e_max * Rational(n - count_min);
      out.push_back({n, beta / Rational(n)});
      ++next_mark;
    }
  }
  return out;
}

std::vector<VarianceTerm> variance_sum_diagnostic(const CoordinatePlan& plan,
                                                  std::uint64_t n_terms) {
  if (n_terms < 1) throw Error(ErrorCode::kOutOfRange, "N must be >= 1");
  const auto& psi = plan.scenario().psi();
  auto variance = [&](const ExtensionMeasure& q) {
    const Distribution law = value_law(q, psi);
    Rational mean = 0;
    Rational second = 0;
    for (const auto& [v, p] : law) {
      mean += p * v;
      second += p * v * v;
    }
    return Rational(second - mean * mean);
  };
  const Rational var_min = variance(plan.min_measure());
  const Rational var_max = variance(plan.max_measure());
  const Rational var_mixed = variance(plan.mixed_measure());

  std::vector<VarianceTerm> out;
  out.reserve(n_terms);
  double partial = 0.0;
  for (std::uint64_t n = 1; n <= n_terms; ++n) {
    const Rational* v = &var_mixed;
    if (plan.kind() == PlanKind::kBlockAlternating) {
      v = plan.schedule()->in_min_blocks(n) ? &var_min : &var_max;
    }
    const double nn = static_cast<double>(n);
    partial += to_double(*v) / (nn * nn);
    out.push_back({n, *v, partial});
  }
  return out;
}

FiniteSpace product_space(const FiniteSpace& base, std::size_t n) {
  if (n < 1) throw Error(ErrorCode::kOutOfRange, "n must be >= 1");
  const std::size_t m = base.size();
  const std::uint64_t total = product_size(m, n);
  if (total > kDefaultBudget) throw BudgetExceeded(total, kDefaultBudget);
  std::vector<std::string> labels(total);
  std::vector<Rational> weights(total);
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    std::uint64_t rest = idx;
    std::vector<PointIndex> coords(n);
    for (std::size_t i = n; i-- > 0;) {
      coords[i] = rest % m;
      rest /= m;
    }
    Rational w = 1;
    std::string label;
    for (std::size_t i = 0; i < n; ++i) {
      if (i) label += ',';
      label += base.label(coords[i]);
      w *= base.weight(coords[i]);
    }
    labels[idx] = std::move(label);
    weights[idx] = std::move(w);
  }
  return FiniteSpace(std::move(labels), std::move(weights));
}

FieldPartition product_field(const FieldPartition& base, std::size_t n) {
  const std::size_t m = base.universe();
  const std::size_t k = base.num_blocks();
  const std::uint64_t total = product_size(m, n);
  if (total > kDefaultBudget) throw BudgetExceeded(total, kDefaultBudget);
  // Atom id = base-k digits of the blocks of each coordinate.
  std::map<std::uint64_t, std::vector<PointIndex>> atoms;
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    std::uint64_t rest = idx;
    std::uint64_t atom = 0;
    std::uint64_t scale = 1;
    for (std::size_t i = 0; i < n; ++i) {
      atom += base.block_of(rest % m) * scale;
      scale *= k;
      rest /= m;
    }
    atoms[atom].push_back(idx);
  }
  std::vector<std::vector<PointIndex>> blocks;
  blocks.reserve(atoms.size());
  for (auto& [id, pts] : atoms) blocks.push_back(std::move(pts));
  return FieldPartition(total, std::move(blocks));
}

RandomQuantity coordinate_quantity(const RandomQuantity& f, std::size_t n,
                                   std::size_t k) {
  if (k < 1 || k > n) {
    throw Error(ErrorCode::kOutOfRange, "coordinate index outside [1, n]");
  }
  const std::size_t m = f.size();
  const std::uint64_t total = product_size(m, n);
  if (total > kDefaultBudget) throw BudgetExceeded(total, kDefaultBudget);
  std::uint64_t stride = 1;
  for (std::size_t i = k; i < n; ++i) stride *= m;
  std::vector<Rational> v(total);
  for (std::uint64_t idx = 0; idx < total; ++idx) v[idx] = f[(idx / stride) % m];
  return RandomQuantity(std::move(v));
}

}  // namespace nmlln
