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

// Hand-rolled generators and brute-force oracles shared by the test suites.
// The oracles enumerate instead of calling the library routine they check.

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "nmlln/measure.hpp"
#include "nmlln/rational.hpp"

namespace nmlln::testing {

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  std::uint64_t uniform(std::uint64_t lo, std::uint64_t hi) {
    return std::uniform_int_distribution<std::uint64_t>(lo, hi)(rng_);
  }
  bool coin() { return uniform(0, 1) == 1; }

  Rational rational(std::int64_t lo, std::int64_t hi, std::int64_t max_den) {
    const std::int64_t den = static_cast<std::int64_t>(uniform(1, max_den));
    const std::int64_t num = lo * den + static_cast<std::int64_t>(
                                            uniform(0, (hi - lo) * den));
    return Rational(num, den);
  }

  // Positive weights summing to one.
  FiniteSpace space(std::size_t points) {
    std::vector<std::uint64_t> raw(points);
    std::uint64_t total = 0;
    for (auto& r : raw) total += (r = uniform(1, 9));
    std::vector<std::string> labels;
    std::vector<Rational> weights;
    for (std::size_t i = 0; i < points; ++i) {
      labels.push_back("p" + std::to_string(i));
      weights.emplace_back(Integer(raw[i]), Integer(total));
    }
    return FiniteSpace(std::move(labels), std::move(weights));
  }

  // Random partition into at most `max_blocks` blocks.
  FieldPartition field(std::size_t points, std::size_t max_blocks) {
    const std::size_t k = uniform(1, std::min(points, max_blocks));
    std::vector<std::vector<PointIndex>> blocks(k);
    // Seed each block with one point so none is empty.
    std::vector<PointIndex> order(points);
    for (std::size_t i = 0; i < points; ++i) order[i] = i;
    std::shuffle(order.begin(), order.end(), rng_);
    for (std::size_t i = 0; i < points; ++i) {
      blocks[i < k ? i : uniform(0, k - 1)].push_back(order[i]);
    }
    return FieldPartition(points, std::move(blocks));
  }

  PointSet subset(std::size_t points) {
    PointSet s(points);
    for (PointIndex p = 0; p < points; ++p) {
      if (coin()) s.insert(p);
    }
    return s;
  }

  RandomQuantity quantity(std::size_t points, std::int64_t lo = -3,
                          std::int64_t hi = 3, std::int64_t max_den = 4) {
    std::vector<Rational> v;
    for (std::size_t i = 0; i < points; ++i) v.push_back(rational(lo, hi, max_den));
    return RandomQuantity(std::move(v));
  }

  // A field-measurable quantity: one random value per block.
  RandomQuantity measurable_quantity(const FieldPartition& field) {
    std::vector<Rational> v(field.universe());
    for (const auto& b : field.blocks()) {
      const Rational c = rational(-3, 3, 4);
      for (PointIndex p : b) v[p] = c;
    }
    return RandomQuantity(std::move(v));
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

// Max / min of P over all 2^k unions of blocks that lie inside / contain H.
inline Rational brute_inner(const FiniteSpace& space,
                            const FieldPartition& field, const PointSet& h) {
  const std::size_t k = field.num_blocks();
  Rational best = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
    PointSet u(space.size());
    for (std::size_t b = 0; b < k; ++b) {
      if (mask >> b & 1) {
        for (PointIndex p : field.block(b)) u.insert(p);
      }
    }
    bool inside = true;
    Rational m = 0;
    for (PointIndex p = 0; p < space.size(); ++p) {
      if (u.contains(p)) {
        inside = inside && h.contains(p);
        m += space.weight(p);
      }
    }
    if (inside && m > best) best = m;
  }
  return best;
}

inline Rational brute_outer(const FiniteSpace& space,
                            const FieldPartition& field, const PointSet& h) {
  const std::size_t k = field.num_blocks();
  Rational best = 1;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
    bool contains = true;
    Rational m = 0;
    for (std::size_t b = 0; b < k; ++b) {
      const bool in_union = mask >> b & 1;
      for (PointIndex p : field.block(b)) {
        if (in_union) m += space.weight(p);
        if (!in_union && h.contains(p)) contains = false;
      }
    }
    if (contains && m < best) best = m;
  }
  return best;
}

inline FiniteSpace reference_space() {
  return FiniteSpace({"a", "b", "c", "d"}, {Rational(1, 4), Rational(1, 4),
                                            Rational(1, 4), Rational(1, 4)});
}

inline RandomQuantity quantity_of(std::initializer_list<int> values) {
  std::vector<Rational> v;
  for (int x : values) v.emplace_back(x);
  return RandomQuantity(std::move(v));
}

}  // namespace nmlln::testing
