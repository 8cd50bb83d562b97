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

#include "nmlln/extension.hpp"

#include <map>

#include "nmlln/error.hpp"

namespace nmlln {

ExtensionMeasure::ExtensionMeasure(FiniteSpace space, FieldPartition field,
                                   FieldPartition base_field,
                                   std::vector<Rational> masses)
    : space_(std::move(space)),
      field_(std::move(field)),
      base_field_(std::move(base_field)),
      masses_(std::move(masses)) {
  if (field_.universe() != space_.size() ||
      base_field_.universe() != space_.size()) {
    throw Error(ErrorCode::kDomainMismatch, "field not defined on the space");
  }
  if (masses_.size() != field_.num_blocks()) {
    throw Error(ErrorCode::kDomainMismatch,
                std::to_string(masses_.size()) + " masses for " +
                    std::to_string(field_.num_blocks()) + " blocks");
  }
  if (!field_.refines(base_field_)) {
    throw Error(ErrorCode::kFieldMismatch,
                "extension field does not refine its base field");
  }
  Rational total = 0;
  for (const auto& m : masses_) {
    if (m < 0) {
      throw Error(ErrorCode::kNegativeWeight, "block mass " + to_string(m));
    }
    total += m;
  }
  if (total != 1) {
    throw Error(ErrorCode::kNotNormalized, "masses sum to " + to_string(total));
  }
}

Rational ExtensionMeasure::measure(const PointSet& set) const {
  if (!is_measurable(field_, set)) {
    throw Error(ErrorCode::kNotMeasurable,
                "set is not a union of extension blocks");
  }
  Rational m = 0;
  for (std::size_t b = 0; b < field_.num_blocks(); ++b) {
    if (set.contains(field_.block(b).front())) m += masses_[b];
  }
  return m;
}

Rational ExtensionMeasure::expectation(const RandomQuantity& f) const {
  if (!is_measurable(field_, f)) {
    throw Error(ErrorCode::kNotMeasurable,
                "quantity is not constant on extension blocks");
  }
  Rational e = 0;
  for (std::size_t b = 0; b < field_.num_blocks(); ++b) {
    e += masses_[b] * f[field_.block(b).front()];
  }
  return e;
}

std::vector<Rational> ExtensionMeasure::point_masses() const {
  std::vector<Rational> out(space_.size());
  const auto base = block_masses(space_, field_);
  for (std::size_t b = 0; b < field_.num_blocks(); ++b) {
    for (PointIndex p : field_.block(b)) {
      out[p] = masses_[b] * space_.weight(p) / base[b];
    }
  }
  return out;
}

FieldPartition refined_field(const FieldPartition& field,
                             const RandomQuantity& f) {
  if (f.size() != field.universe()) {
    throw Error(ErrorCode::kDomainMismatch, "quantity/field size mismatch");
  }
  std::vector<std::vector<PointIndex>> blocks;
  for (const auto& b : field.blocks()) {
    std::map<Rational, std::vector<PointIndex>> level_sets;
    for (PointIndex p : b) level_sets[f[p]].push_back(p);
    for (auto& [value, pts] : level_sets) blocks.push_back(std::move(pts));
  }
  return FieldPartition(field.universe(), std::move(blocks));
}

namespace {

ExtensionMeasure concentrate(const FiniteSpace& space,
                             const FieldPartition& field,
                             const RandomQuantity& f, bool maximize) {
  FieldPartition refined = refined_field(field, f);
  const auto base_mass = block_masses(space, field);
  std::vector<std::vector<std::size_t>> children(field.num_blocks());
  for (std::size_t r = 0; r < refined.num_blocks(); ++r) {
    children[field.block_of(refined.block(r).front())].push_back(r);
  }
  std::vector<Rational> masses(refined.num_blocks());
  for (std::size_t b = 0; b < field.num_blocks(); ++b) {
    auto value = [&](std::size_t r) { return f[refined.block(r).front()]; };
    Rational target = value(children[b].front());
    for (std::size_t r : children[b]) {
      const Rational v = value(r);
      if (maximize ? target < v : v < target) target = v;
    }
    std::vector<std::size_t> winners;
    for (std::size_t r : children[b]) {
      if (value(r) == target) winners.push_back(r);
    }
    const Rational share = base_mass[b] / Rational(winners.size());
    for (std::size_t r : winners) masses[r] = share;
  }
  return ExtensionMeasure(space, std::move(refined), field, std::move(masses));
}

}  // namespace

ExtensionMeasure extend_min(const FiniteSpace& space,
                            const FieldPartition& field,
                            const RandomQuantity& f) {
  return concentrate(space, field, f, false);
}

ExtensionMeasure extend_max(const FiniteSpace& space,
                            const FieldPartition& field,
                            const RandomQuantity& f) {
  return concentrate(space, field, f, true);
}

ExtensionMeasure extend_by_set(const FiniteSpace& space,
                               const FieldPartition& field,
                               const PointSet& set, const Rational& alpha) {
  const Rational lo = inner_measure(space, field, set);
  const Rational hi = outer_measure(space, field, set);
  if (alpha < lo) {
    throw Error(ErrorCode::kOutOfRange, "alpha " + to_string(alpha) +
                                            " below inner measure " +
                                            to_string(lo));
  }
  if (alpha > hi) {
    throw Error(ErrorCode::kOutOfRange, "alpha " + to_string(alpha) +
                                            " above outer measure " +
                                            to_string(hi));
  }
  const auto indicator = RandomQuantity::indicator(set);
  const Rational u = (hi == lo) ? Rational(0) : Rational((alpha - lo) / (hi - lo));
  return mix(extend_min(space, field, indicator),
             extend_max(space, field, indicator), u);
}

ExtensionMeasure mix(const ExtensionMeasure& q0, const ExtensionMeasure& q1,
                     const Rational& a) {
  if (!(q0.field() == q1.field()) || !(q0.base_field() == q1.base_field()) ||
      !(q0.space() == q1.space())) {
    throw Error(ErrorCode::kFieldMismatch,
                "mixture components live on different fields");
  }
  if (a < 0 || a > 1) {
    throw Error(ErrorCode::kOutOfRange,
                "mixture weight " + to_string(a) + " outside [0,1]");
  }
  std::vector<Rational> masses(q0.masses().size());
  for (std::size_t b = 0; b < masses.size(); ++b) {
    masses[b] = (1 - a) * q0.mass(b) + a * q1.mass(b);
  }
  return ExtensionMeasure(q0.space(), q0.field(), q0.base_field(),
                          std::move(masses));
}

bool is_extension(const ExtensionMeasure& q, const FiniteSpace& space,
                  const FieldPartition& base_field) {
  if (base_field.universe() != space.size() || !(q.space() == space)) {
    return false;
  }
  if (!q.field().refines(base_field)) return false;
  std::vector<Rational> aggregated(base_field.num_blocks());
  for (std::size_t r = 0; r < q.field().num_blocks(); ++r) {
    aggregated[base_field.block_of(q.field().block(r).front())] += q.mass(r);
  }
  return aggregated == block_masses(space, base_field);
}

}  // namespace nmlln
