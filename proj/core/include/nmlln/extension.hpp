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

#include <vector>

#include "nmlln/measure.hpp"
#include "nmlln/rational.hpp"

namespace nmlln {

// A probability measure on a refinement of `base_field`, given by its mass on
// each refined block. Refined blocks may carry zero mass.
class ExtensionMeasure {
 public:
  // Throws unless masses are nonnegative, sum to one, `field` refines
  // `base_field`, and both live on `space`.
  ExtensionMeasure(FiniteSpace space, FieldPartition field,
                   FieldPartition base_field, std::vector<Rational> masses);

  const FiniteSpace& space() const { return space_; }
  const FieldPartition& field() const { return field_; }
  const FieldPartition& base_field() const { return base_field_; }
  const std::vector<Rational>& masses() const { return masses_; }
  const Rational& mass(std::size_t block) const { return masses_.at(block); }

  // Q(set); throws Error(kNotMeasurable) unless `set` is a union of blocks.
  Rational measure(const PointSet& set) const;
  // E_Q[f]; throws Error(kNotMeasurable) unless f is constant on blocks.
  Rational expectation(const RandomQuantity& f) const;

  // Extension of Q to the discrete field: each block's mass spread over its
  // points in proportion to the base weights.
  std::vector<Rational> point_masses() const;

  friend bool operator==(const ExtensionMeasure&,
                         const ExtensionMeasure&) = default;

 private:
  FiniteSpace space_;
  FieldPartition field_;
  FieldPartition base_field_;
  std::vector<Rational> masses_;
};

// Finest refinement of `field` on whose blocks f is constant.
FieldPartition refined_field(const FieldPartition& field,
                             const RandomQuantity& f);

// Extensions of P (the space's weights on `field`) to refined_field(field, f)
// under which f = f_* (resp. f = f^*) almost surely. Each base block's mass
// goes to the refined sub-blocks attaining the block minimum (maximum), split
// uniformly among ties.
ExtensionMeasure extend_min(const FiniteSpace& space,
                            const FieldPartition& field,
                            const RandomQuantity& f);
ExtensionMeasure extend_max(const FiniteSpace& space,
                            const FieldPartition& field,
                            const RandomQuantity& f);

// Extension to sigma(field, {A}) with Q(A) = alpha, realized as the mixture
// (1-u) extend_min(1_A) + u extend_max(1_A). Throws Error(kOutOfRange) when
// alpha is outside [P_*(A), P^*(A)].
ExtensionMeasure extend_by_set(const FiniteSpace& space,
                               const FieldPartition& field,
                               const PointSet& set, const Rational& alpha);

// (1-a) q0 + a q1. Throws Error(kFieldMismatch) when the two measures do not
// share field and base, Error(kOutOfRange) unless 0 <= a <= 1.
ExtensionMeasure mix(const ExtensionMeasure& q0, const ExtensionMeasure& q1,
                     const Rational& a);

// True iff q lives on a refinement of `base_field` and its mass aggregated
// over every base block equals the space's mass of that block.
bool is_extension(const ExtensionMeasure& q, const FiniteSpace& space,
                  const FieldPartition& base_field);

}  // namespace nmlln
