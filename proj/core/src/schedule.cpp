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

#include "nmlln/schedule.hpp"

#include <algorithm>
#include <limits>

#include "nmlln/error.hpp"

namespace nmlln {

RandomQuantity truncate(const RandomQuantity& f, std::uint64_t n) {
  if (n == 0) throw Error(ErrorCode::kOutOfRange, "truncation level must be >= 1");
  const Rational bound(n);
  std::vector<Rational> v(f.size());
  for (PointIndex p = 0; p < f.size(); ++p) {
    v[p] = abs(f[p]) <= bound ? f[p] : Rational(0);
  }
  return RandomQuantity(std::move(v));
}

RandomQuantity simple_approx(const RandomQuantity& f, std::uint64_t n) {
  if (n == 0) throw Error(ErrorCode::kOutOfRange, "grid level must be >= 1");
  const Rational bound(n);
  std::vector<Rational> v(f.size());
  for (PointIndex p = 0; p < f.size(); ++p) {
    if (abs(f[p]) > bound) {
      throw Error(ErrorCode::kOutOfRange,
                  "|f| = " + to_string(Rational(abs(f[p]))) + " exceeds " +
                      std::to_string(n) + "; truncate first");
    }
    Rational q(floor_integer(f[p] * bound), Integer(n));
    v[p] = std::clamp(q, Rational(-bound), bound);
  }
  return RandomQuantity(std::move(v));
}

std::uint64_t exactness_threshold(const RandomQuantity& psi) {
  return floor_integer(psi.sup_norm()).convert_to<std::uint64_t>() + 1;
}

bool approximation_is_exact(const RandomQuantity& psi, std::uint64_t k) {
  if (Rational(k) < psi.sup_norm()) return false;
  return simple_approx(truncate(psi, k), k) == psi;
}

const char* schedule_kind_name(ScheduleKind kind) {
  switch (kind) {
    case ScheduleKind::kFactorial: return "factorial";
    case ScheduleKind::kGeometricEscalating: return "geometric-escalating";
  }
  return "unknown";
}

ScheduleKind parse_schedule_kind(const std::string& name) {
  if (name == "factorial") return ScheduleKind::kFactorial;
  if (name == "geometric-escalating") return ScheduleKind::kGeometricEscalating;
  throw Error(ErrorCode::kInvalidArgument, "unknown schedule kind '" + name + "'");
}

BlockSchedule::BlockSchedule(ScheduleKind kind, unsigned shift)
    : kind_(kind), shift_(shift) {
  constexpr std::uint64_t kLimit = std::uint64_t{1} << 63;
  std::uint64_t a = 1;
  for (std::uint64_t n = 1;; ++n) {
    std::uint64_t ratio = 0;
    if (kind_ == ScheduleKind::kFactorial) {
      ratio = n + shift_;
    } else {
      const std::uint64_t exponent = n + shift_;
      if (exponent >= 63) break;
      ratio = std::uint64_t{1} << exponent;
    }
    if (ratio < 2 || a > kLimit / ratio) break;
    a *= ratio;
    ends_.push_back(a);
  }
  if (ends_.empty()) {
    throw Error(ErrorCode::kInvalidArgument,
                "schedule shift " + std::to_string(shift) + " is degenerate");
  }
}

std::string BlockSchedule::rule() const {
  const std::string s = std::to_string(shift_);
  if (kind_ == ScheduleKind::kFactorial) {
    return "factorial: a_n = (n+" + s + ")!/" + s + "!";
  }
  return "geometric-escalating: a_n = 2^(T(n+" + s + ")-T(" + s +
         ")), T(m) = m(m+1)/2";
}

std::uint64_t BlockSchedule::end(std::size_t n) const {
  if (n == 0) return 1;
  if (n > ends_.size()) {
    throw Error(ErrorCode::kOutOfRange,
                "block end a_" + std::to_string(n) + " exceeds 63 bits");
  }
  return ends_[n - 1];
}

std::vector<std::uint64_t> BlockSchedule::ends_up_to(std::uint64_t limit) const {
  std::vector<std::uint64_t> out;
  for (std::uint64_t a : ends_) {
    if (a > limit) break;
    out.push_back(a);
  }
  return out;
}

std::size_t BlockSchedule::block_index(std::uint64_t k) const {
  if (k <= 1) return 0;
  auto it = std::lower_bound(ends_.begin(), ends_.end(), k);
  if (it == ends_.end()) {
    throw Error(ErrorCode::kOutOfRange,
                "coordinate " + std::to_string(k) + " beyond the schedule");
  }
  return static_cast<std::size_t>(it - ends_.begin()) + 1;
}

bool BlockSchedule::in_min_blocks(std::uint64_t k) const {
  return block_index(k) % 2 == 1;
}

BlockSchedule make_schedule(ScheduleKind kind, const RandomQuantity& psi) {
  const std::uint64_t threshold = exactness_threshold(psi);
  unsigned shift = kind == ScheduleKind::kFactorial ? 1 : 0;
  for (;; ++shift) {
    BlockSchedule schedule(kind, shift);
    if (schedule.end(1) < threshold) continue;
    bool integer_valued = std::all_of(
        psi.values().begin(), psi.values().end(),
        [](const Rational& v) { return denominator(v) == 1; });
    if (integer_valued && !approximation_is_exact(psi, schedule.end(1))) {
      throw Error(ErrorCode::kInvalidArgument,
                  "approximation not exact at a_1 = " +
                      std::to_string(schedule.end(1)));
    }
    return schedule;
  }
}

}  // namespace nmlln
