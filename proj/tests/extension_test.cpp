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

#include <gtest/gtest.h>

#include "nmlln/error.hpp"
#include "nmlln/extension.hpp"
#include "support/generators.hpp"

namespace nmlln {
namespace {

using testing::Gen;
using testing::quantity_of;
using testing::reference_space;

FieldPartition halves(const FiniteSpace& s) {
  return FieldPartition::from_labels(s, {{"a", "b"}, {"c", "d"}});
}

std::vector<Rational> fractions(std::initializer_list<std::pair<int, int>> xs) {
  std::vector<Rational> v;
  for (auto [n, d] : xs) v.emplace_back(n, d);
  return v;
}

TEST(RefinedField, Examples) {
  const auto s = reference_space();
  EXPECT_EQ(refined_field(halves(s), quantity_of({0, 1, 1, 2})),
            FieldPartition::discrete(4));
  EXPECT_EQ(refined_field(halves(s), quantity_of({3, 3, 1, 1})), halves(s));
  EXPECT_EQ(refined_field(FieldPartition::trivial(4), quantity_of({2, 2, 2, 2})),
            FieldPartition::trivial(4));
}

TEST(ExtendMinMax, ReferenceScenario) {
  const auto s = reference_space();
  const auto f = quantity_of({0, 1, 1, 2});
  const auto lo = extend_min(s, halves(s), f);
  const auto hi = extend_max(s, halves(s), f);
  // Discrete refined field: block r is point r.
  EXPECT_EQ(lo.masses(), fractions({{1, 2}, {0, 1}, {1, 2}, {0, 1}}));
  EXPECT_EQ(hi.masses(), fractions({{0, 1}, {1, 2}, {0, 1}, {1, 2}}));
  EXPECT_EQ(lo.expectation(f), Rational(1, 2));
  EXPECT_EQ(hi.expectation(f), Rational(3, 2));
}

TEST(ExtendMinMax, MeasurableQuantityReproducesBase) {
  const auto s = reference_space();
  const auto f = quantity_of({4, 4, 7, 7});
  const auto q = extend_min(s, halves(s), f);
  EXPECT_EQ(q.field(), halves(s));
  EXPECT_EQ(q.masses(), block_masses(s, halves(s)));
}

TEST(ExtendBySet, Examples) {
  const auto s = reference_space();
  const std::vector<std::string> ac{"a", "c"};
  const PointSet a_set = s.subset(ac);
  const auto q = extend_by_set(s, halves(s), a_set, Rational(1, 2));
  EXPECT_EQ(q.masses(), fractions({{1, 4}, {1, 4}, {1, 4}, {1, 4}}));
  EXPECT_EQ(q.measure(a_set), Rational(1, 2));

  const auto at_inner = extend_by_set(s, halves(s), a_set, Rational(0));
  EXPECT_EQ(at_inner, extend_min(s, halves(s), RandomQuantity::indicator(a_set)));

  const std::vector<std::string> ab{"a", "b"};
  const PointSet measurable = s.subset(ab);
  const auto same = extend_by_set(s, halves(s), measurable, Rational(1, 2));
  EXPECT_EQ(same.field(), halves(s));
  EXPECT_EQ(same.masses(), block_masses(s, halves(s)));
}

TEST(ExtendBySet, RejectsAlphaOutsideInnerOuter) {
  const auto s = reference_space();
  const std::vector<std::string> acd{"a", "c", "d"};
  const PointSet h = s.subset(acd);  // inner 1/2, outer 1
  try {
    extend_by_set(s, halves(s), h, Rational(1, 3));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kOutOfRange);
    EXPECT_NE(std::string(e.what()).find("below inner measure 1/2"), std::string::npos);
  }
}

TEST(Mix, LawsAndErrors) {
  const auto s = reference_space();
  const auto f = quantity_of({0, 1, 1, 2});
  const auto lo = extend_min(s, halves(s), f);
  const auto hi = extend_max(s, halves(s), f);
  EXPECT_EQ(mix(lo, lo, Rational(1, 3)), lo);
  EXPECT_EQ(mix(lo, hi, 0), lo);
  EXPECT_EQ(mix(lo, hi, 1), hi);
  const Rational a(2, 7);
  EXPECT_EQ(mix(lo, hi, a).expectation(f),
            (1 - a) * lo.expectation(f) + a * hi.expectation(f));
  EXPECT_TRUE(is_extension(mix(lo, hi, a), s, halves(s)));

  const auto other = extend_min(s, halves(s), quantity_of({1, 1, 2, 3}));
  try {
    mix(lo, other, a);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kFieldMismatch);
  }
}

TEST(IsExtension, DetectsMassMovedAcrossBaseBlocks) {
  const auto s = reference_space();
  const auto f = quantity_of({0, 1, 1, 2});
  const auto lo = extend_min(s, halves(s), f);
  EXPECT_TRUE(is_extension(lo, s, halves(s)));
  const ExtensionMeasure shifted(s, lo.field(), halves(s),
                                 fractions({{3, 4}, {0, 1}, {1, 4}, {0, 1}}));
  EXPECT_FALSE(is_extension(shifted, s, halves(s)));
}

TEST(ExtensionMeasure, MeasureRequiresMeasurableSet) {
  const auto s = reference_space();
  const auto q = extend_min(s, halves(s), quantity_of({3, 3, 1, 1}));
  const std::vector<std::string> ac{"a", "c"};
  EXPECT_THROW(q.measure(s.subset(ac)), Error);
}

TEST(ExtensionMeasure, PointLiftExtendsQ) {
  Gen gen(21);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = gen.uniform(1, 7);
    const auto s = gen.space(n);
    const auto field = gen.field(n, 4);
    const auto f = gen.quantity(n, -2, 2, 1);
    const auto q = extend_max(s, field, f);
    const auto lifted = q.point_masses();
    for (std::size_t r = 0; r < q.field().num_blocks(); ++r) {
      Rational m = 0;
      for (PointIndex p : q.field().block(r)) m += lifted[p];
      EXPECT_EQ(m, q.mass(r));
    }
  }
}

// ------------------------------------------------------------ properties

TEST(ExtensionProperties, CornerExpectationsMatchLowerUpper) {
  Gen gen(22);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = gen.uniform(1, 8);
    const auto s = gen.space(n);
    const auto field = gen.field(n, 6);
    const auto f = gen.quantity(n);
    const auto lo = extend_min(s, field, f);
    const auto hi = extend_max(s, field, f);
    EXPECT_TRUE(is_extension(lo, s, field));
    EXPECT_TRUE(is_extension(hi, s, field));
    EXPECT_EQ(lo.expectation(f), lower_expectation(s, field, f));
    EXPECT_EQ(hi.expectation(f), upper_expectation(s, field, f));
  }
}

TEST(ExtensionProperties, ExtendBySetHitsAlphaExactly) {
  Gen gen(23);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = gen.uniform(1, 8);
    const auto s = gen.space(n);
    const auto field = gen.field(n, 6);
    const auto a_set = gen.subset(n);
    const Rational lo = inner_measure(s, field, a_set);
    const Rational hi = outer_measure(s, field, a_set);
    const Rational t = gen.rational(0, 1, 12);
    const Rational alpha = lo + t * (hi - lo);
    const auto q = extend_by_set(s, field, a_set, alpha);
    EXPECT_EQ(q.measure(a_set), alpha);
    EXPECT_TRUE(is_extension(q, s, field));
  }
}

// Two extensions bracketing an event bound its inner and outer measure.
TEST(ExtensionProperties, TwoExtensionSandwich) {
  Gen gen(24);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = gen.uniform(1, 8);
    const auto s = gen.space(n);
    const auto field = gen.field(n, 6);
    const auto e = gen.subset(n);
    const auto ind = RandomQuantity::indicator(e);
    const auto q1 = extend_min(s, field, ind);
    const auto q2 = extend_max(s, field, ind);
    const auto qm = mix(q1, q2, gen.rational(0, 1, 6));
    for (const auto* q : {&q1, &q2, &qm}) {
      const Rational x = q->measure(e);
      EXPECT_LE(inner_measure(s, field, e), x);
      EXPECT_GE(outer_measure(s, field, e), x);
    }
  }
}

}  // namespace
}  // namespace nmlln
