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
#include <vector>

#include "nmlln/plan.hpp"

namespace nmlln {

struct Checkpoint {
  std::uint64_t n;
  double mean;  // S_n / n
};

struct Trajectory {
  std::uint64_t seed;
  std::vector<Checkpoint> checkpoints;
};

// Stream seed for trajectory `index` of a run with master seed `master`.
std::uint64_t trajectory_seed(std::uint64_t master, std::uint64_t index);

// Sorted, deduplicated copy; throws Error(kOutOfRange) for entries outside
// [1, n_max].
std::vector<std::uint64_t> normalize_checkpoints(
    std::span<const std::uint64_t> checkpoints, std::uint64_t n_max);

// Draws omega_1, ..., omega_{n_max} from the plan and records S_n/n at each
// checkpoint. S_n is accumulated in double precision. Deterministic in
// (plan, n_max, seed, checkpoints).
Trajectory sample_trajectory(const CoordinatePlan& plan, std::uint64_t n_max,
                             std::uint64_t seed,
                             std::span<const std::uint64_t> checkpoints);

// `trials` trajectories seeded by trajectory_seed(master_seed, i), returned
// in index order. `workers` == 0 picks the hardware concurrency.
std::vector<Trajectory> simulate(const CoordinatePlan& plan,
                                 std::uint64_t n_max,
                                 std::span<const std::uint64_t> checkpoints,
                                 std::uint64_t master_seed, std::size_t trials,
                                 unsigned workers = 0);

}  // namespace nmlln
