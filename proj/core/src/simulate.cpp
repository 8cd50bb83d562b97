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

#include "nmlln/simulate.hpp"

#include <algorithm>
#include <limits>
#include <random>
#include <thread>

#include "nmlln/error.hpp"

namespace nmlln {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

// Inverse-CDF sampler over the points carrying positive mass.
class PointSampler {
 public:
  PointSampler(const ExtensionMeasure& q, const RandomQuantity& psi) {
    const auto masses = q.point_masses();
    Rational running = 0;
    for (PointIndex p = 0; p < masses.size(); ++p) {
      if (masses[p] == 0) continue;
      running += masses[p];
      cumulative_.push_back(to_double(running));
      values_.push_back(to_double(psi[p]));
    }
    cumulative_.back() = std::numeric_limits<double>::infinity();
  }

  double draw(std::mt19937_64& rng) const {
    const double u = uniform(rng);
    std::size_t i = 0;
    while (cumulative_[i] <= u) ++i;
    return values_[i];
  }

  static double uniform(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
  }

 private:
  std::vector<double> cumulative_;
  std::vector<double> values_;
};

}  // namespace

std::uint64_t trajectory_seed(std::uint64_t master, std::uint64_t index) {
  return splitmix64(master ^ splitmix64(index));
}

std::vector<std::uint64_t> normalize_checkpoints(
    std::span<const std::uint64_t> checkpoints, std::uint64_t n_max) {
  std::vector<std::uint64_t> out(checkpoints.begin(), checkpoints.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  if (!out.empty() && (out.front() < 1 || out.back() > n_max)) {
    throw Error(ErrorCode::kOutOfRange,
                "checkpoints must lie in [1, " + std::to_string(n_max) + "]");
  }
  return out;
}

Trajectory sample_trajectory(const CoordinatePlan& plan, std::uint64_t n_max,
                             std::uint64_t seed,
                             std::span<const std::uint64_t> checkpoints) {
  if (n_max < 1) throw Error(ErrorCode::kOutOfRange, "n_max must be >= 1");
  const auto marks = normalize_checkpoints(checkpoints, n_max);
  const auto& psi = plan.scenario().psi();
  const PointSampler lo(plan.min_measure(), psi);
  const PointSampler hi(plan.max_measure(), psi);
  const PointSampler mixed(plan.mixed_measure(), psi);

  std::mt19937_64 rng(seed);
  Trajectory out{seed, {}};
  out.checkpoints.reserve(marks.size());

  const PointSampler* fixed = &mixed;
  if (plan.kind() == PlanKind::kRegimeMixture) {
    const double w = to_double(plan.weight());
    fixed = PointSampler::uniform(rng) < w ? &hi : &lo;
  }

  double sum = 0.0;
  std::size_t next_mark = 0;
  // Coordinates are processed in runs that share one sampler: one run for
  // mixture plans, one per schedule block otherwise.
  std::uint64_t n = 1;
  while (n <= n_max) {
    const PointSampler* sampler = fixed;
    std::uint64_t run_end = n_max;
    if (plan.kind() == PlanKind::kBlockAlternating) {
      const auto& schedule = *plan.schedule();
      const std::size_t block = schedule.block_index(n);
      sampler = block % 2 == 1 ? &lo : &hi;
      run_end = std::min(n_max, schedule.end(block));
    }
    for (; n <= run_end; ++n) {
      sum += sampler->draw(rng);
      if (next_mark < marks.size() && marks[next_mark] == n) {
        out.checkpoints.push_back({n, sum / static_cast<double>(n)});
        ++next_mark;
      }
    }
  }
  return out;
}

std::vector<Trajectory> simulate(const CoordinatePlan& plan,
                                 std::uint64_t n_max,
                                 std::span<const std::uint64_t> checkpoints,
                                 std::uint64_t master_seed, std::size_t trials,
                                 unsigned workers) {
  const auto marks = normalize_checkpoints(checkpoints, n_max);
  std::vector<Trajectory> out(trials);
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(
      std::min<std::size_t>(workers, std::max<std::size_t>(trials, 1)));

  auto run = [&](unsigned worker) {
    for (std::size_t i = worker; i < trials; i += workers) {
      out[i] = sample_trajectory(plan, n_max, trajectory_seed(master_seed, i),
                                 marks);
    }
  };
  if (workers == 1) {
    run(0);
    return out;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run, w);
  for (auto& t : pool) t.join();
  return out;
}

}  // namespace nmlln
