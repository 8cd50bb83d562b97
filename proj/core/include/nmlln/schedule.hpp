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
#include <string>
#include <vector>

#include "nmlln/measure.hpp"

namespace nmlln {

// X'_n = X_n 1{|X_n| <= n}.
RandomQuantity truncate(const RandomQuantity& f, std::uint64_t n);

// f rounded down to the 1/n grid and clamped to [-n, n], so that
// |result - f| <= 1/n and |result| <= n. Requires |f| <= n pointwise
// (apply to the output of truncate).
RandomQuantity simple_approx(const RandomQuantity& f, std::uint64_t n);

// Smallest integer strictly above max|psi|. From there on truncation is the
// identity and, for integer-valued psi, so is the grid approximation.
std::uint64_t exactness_threshold(const RandomQuantity& psi);

// simple_approx(truncate(psi, k), k) == psi.
bool approximation_is_exact(const RandomQuantity& psi, std::uint64_t k);

enum class ScheduleKind { kFactorial, kGeometricEscalating };

const char* schedule_kind_name(ScheduleKind kind);
// Throws Error(kInvalidArgument) for an unknown name.
ScheduleKind parse_schedule_kind(const std::string& name);

// Block ends a_0 = 1 < a_1 < a_2 < ... with a_{n+1}/a_n -> infinity. Block
// L_n is {a_{n-1}+1, ..., a_n}; the odd blocks L_1, L_3, ... make up L.
//
//   factorial:            a_n = (n+s)!/s!         ratio n+s+1
//   geometric-escalating: a_n = 2^(T(n+s)-T(s))   ratio 2^(n+s+1)
//
// with T(m) = m(m+1)/2 and shift s chosen by make_schedule. Only ends that
// fit in 63 bits are materialized.
class BlockSchedule {
 public:
  BlockSchedule(ScheduleKind kind, unsigned shift);

  ScheduleKind kind() const { return kind_; }
  unsigned shift() const { return shift_; }
  std::string rule() const;

  // a_n. Throws Error(kOutOfRange) past the representable range.
  std::uint64_t end(std::size_t n) const;
  std::size_t num_ends() const { return ends_.size(); }
  // a_1, a_2, ... not exceeding `limit`.
  std::vector<std::uint64_t> ends_up_to(std::uint64_t limit) const;

  // n such that k is in L_n; 0 for k <= a_0.
  std::size_t block_index(std::uint64_t k) const;
  // k in L_1 u L_3 u L_5 u ...
  bool in_min_blocks(std::uint64_t k) const;

  friend bool operator==(const BlockSchedule& a, const BlockSchedule& b) {
    return a.kind_ == b.kind_ && a.shift_ == b.shift_;
  }

 private:
  ScheduleKind kind_;
  unsigned shift_;
  std::vector<std::uint64_t> ends_;
};

// Picks the smallest shift with a_1 >= exactness_threshold(psi) and checks
// that the truncation/approximation pipeline reproduces psi there (for
// integer-valued psi; otherwise the 1/k approximation bound applies).
BlockSchedule make_schedule(ScheduleKind kind, const RandomQuantity& psi);

}  // namespace nmlln
