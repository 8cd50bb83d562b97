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

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "nmlln/rational.hpp"

namespace nmlln {

using PointIndex = std::size_t;

// A subset of the points of a FiniteSpace, stored as a membership mask.
class PointSet {
 public:
  PointSet() = default;
  explicit PointSet(std::size_t universe) : members_(universe, false) {}
  PointSet(std::size_t universe, std::span<const PointIndex> points);

  static PointSet full(std::size_t universe);

  std::size_t universe() const { return members_.size(); }
  bool contains(PointIndex p) const { return members_.at(p); }
  void insert(PointIndex p) { members_.at(p) = true; }
  std::size_t count() const;
  bool empty() const { return count() == 0; }
  std::vector<PointIndex> points() const;
  PointSet complement() const;

  friend bool operator==(const PointSet&, const PointSet&) = default;

 private:
  std::vector<bool> members_;
};

// Labeled points with exact positive weights summing to one.
class FiniteSpace {
 public:
  // Throws on duplicate labels, nonpositive weights or a total != 1.
  FiniteSpace(std::vector<std::string> labels, std::vector<Rational> weights);

  std::size_t size() const { return labels_.size(); }
  const std::string& label(PointIndex p) const { return labels_.at(p); }
  const Rational& weight(PointIndex p) const { return weights_.at(p); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<Rational>& weights() const { return weights_; }

  // Throws Error(kUnknownLabel).
  PointIndex index_of(const std::string& label) const;
  std::optional<PointIndex> find(const std::string& label) const;
  PointSet subset(std::span<const std::string> labels) const;

  Rational measure(const PointSet& set) const;

  friend bool operator==(const FiniteSpace& a, const FiniteSpace& b) {
    return a.labels_ == b.labels_ && a.weights_ == b.weights_;
  }

 private:
  std::vector<std::string> labels_;
  std::vector<Rational> weights_;
  std::unordered_map<std::string, PointIndex> index_;
};

FiniteSpace build_space(std::vector<std::string> labels,
                        std::vector<Rational> weights);

// A sub-sigma-field represented by its atoms. Blocks are kept in canonical
// order: points ascending inside a block, blocks ordered by first point.
class FieldPartition {
 public:
  // Throws Error(kInvalidPartition) unless `blocks` is a partition of
  // {0, ..., universe-1} into nonempty sets.
  FieldPartition(std::size_t universe,
                 std::vector<std::vector<PointIndex>> blocks);

  static FieldPartition trivial(std::size_t universe);
  static FieldPartition discrete(std::size_t universe);
  static FieldPartition from_labels(
      const FiniteSpace& space,
      const std::vector<std::vector<std::string>>& blocks);

  std::size_t universe() const { return block_of_.size(); }
  std::size_t num_blocks() const { return blocks_.size(); }
  const std::vector<PointIndex>& block(std::size_t b) const {
    return blocks_.at(b);
  }
  const std::vector<std::vector<PointIndex>>& blocks() const {
    return blocks_;
  }
  std::size_t block_of(PointIndex p) const { return block_of_.at(p); }

  // True when every block of *this lies inside a block of `coarser`.
  bool refines(const FieldPartition& coarser) const;

  friend bool operator==(const FieldPartition& a, const FieldPartition& b) {
    return a.blocks_ == b.blocks_;
  }

 private:
  std::vector<std::vector<PointIndex>> blocks_;
  std::vector<std::size_t> block_of_;
};

// Exact-rational function on the points of a space.
class RandomQuantity {
 public:
  RandomQuantity() = default;
  explicit RandomQuantity(std::vector<Rational> values)
      : values_(std::move(values)) {}

  static RandomQuantity constant(std::size_t universe, const Rational& c);
  static RandomQuantity indicator(const PointSet& set);

  std::size_t size() const { return values_.size(); }
  const Rational& operator[](PointIndex p) const { return values_.at(p); }
  const std::vector<Rational>& values() const { return values_; }

  Rational min() const;
  Rational max() const;
  // max |f|
  Rational sup_norm() const;
  RandomQuantity negated() const;

  friend bool operator==(const RandomQuantity&,
                         const RandomQuantity&) = default;

 private:
  std::vector<Rational> values_;
};

// Finest partition whose unions contain every generating set (and refining
// `base` when given): points share a block iff they agree on membership in
// every generating set and lie in the same base block.
FieldPartition generate_field(const FiniteSpace& space,
                              std::span<const PointSet> generating_sets,
                              const FieldPartition* base = nullptr);

// P restricted to the field: mass of each block.
std::vector<Rational> block_masses(const FiniteSpace& space,
                                   const FieldPartition& field);

// H_* (union of blocks inside H) and H^* (union of blocks meeting H).
PointSet measurable_kernel(const FieldPartition& field, const PointSet& set);
PointSet measurable_hull(const FieldPartition& field, const PointSet& set);

Rational inner_measure(const FiniteSpace& space, const FieldPartition& field,
                       const PointSet& set);
Rational outer_measure(const FiniteSpace& space, const FieldPartition& field,
                       const PointSet& set);

// Maximal measurable minorant / minimal measurable majorant: blockwise
// minimum / maximum. Exact pointwise because every point has positive mass.
RandomQuantity minorant(const FieldPartition& field, const RandomQuantity& f);
RandomQuantity majorant(const FieldPartition& field, const RandomQuantity& f);

Rational expectation(const FiniteSpace& space, const RandomQuantity& f);
Rational lower_expectation(const FiniteSpace& space,
                           const FieldPartition& field,
                           const RandomQuantity& f);
Rational upper_expectation(const FiniteSpace& space,
                           const FieldPartition& field,
                           const RandomQuantity& f);

bool is_measurable(const FieldPartition& field, const PointSet& set);
bool is_measurable(const FieldPartition& field, const RandomQuantity& f);

}  // namespace nmlln
