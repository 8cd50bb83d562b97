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

#include "nmlln/measure.hpp"

#include <algorithm>
#include <map>

#include "nmlln/error.hpp"

namespace nmlln {

namespace {

void require_universe(std::size_t expected, std::size_t actual,
                      const char* what) {
  if (expected != actual) {
    throw Error(ErrorCode::kDomainMismatch,
                std::string(what) + " is defined on " + std::to_string(actual) +
                    " points, expected " + std::to_string(expected));
  }
}

}  // namespace

// ---------------------------------------------------------------- PointSet

PointSet::PointSet(std::size_t universe, std::span<const PointIndex> points)
    : members_(universe, false) {
  for (PointIndex p : points) {
    if (p >= universe) {
      throw Error(ErrorCode::kOutOfRange,
                  "point index " + std::to_string(p) + " outside universe");
    }
    members_[p] = true;
  }
}

PointSet PointSet::full(std::size_t universe) {
  PointSet s(universe);
  s.members_.assign(universe, true);
  return s;
}

std::size_t PointSet::count() const {
  return static_cast<std::size_t>(
      std::count(members_.begin(), members_.end(), true));
}

std::vector<PointIndex> PointSet::points() const {
  std::vector<PointIndex> out;
  for (PointIndex p = 0; p < members_.size(); ++p) {
    if (members_[p]) out.push_back(p);
  }
  return out;
}

PointSet PointSet::complement() const {
  PointSet c(*this);
  c.members_.flip();
  return c;
}

// ------------------------------------------------------------- FiniteSpace

FiniteSpace::FiniteSpace(std::vector<std::string> labels,
                         std::vector<Rational> weights)
    : labels_(std::move(labels)), weights_(std::move(weights)) {
  if (labels_.size() != weights_.size()) {
    throw Error(ErrorCode::kDomainMismatch,
                std::to_string(labels_.size()) + " labels but " +
                    std::to_string(weights_.size()) + " weights");
  }
  if (labels_.empty()) {
    throw Error(ErrorCode::kNotNormalized, "space has no points");
  }
  Rational total = 0;
  for (PointIndex p = 0; p < labels_.size(); ++p) {
    if (weights_[p] == 0) {
      throw Error(ErrorCode::kZeroWeight, "point '" + labels_[p] + "'");
    }
    if (weights_[p] < 0) {
      throw Error(ErrorCode::kNegativeWeight,
                  "point '" + labels_[p] + "' has weight " +
                      to_string(weights_[p]));
    }
    if (!index_.emplace(labels_[p], p).second) {
      throw Error(ErrorCode::kDuplicateLabel, "'" + labels_[p] + "'");
    }
    total += weights_[p];
  }
  if (total != 1) {
    throw Error(ErrorCode::kNotNormalized,
                "weights sum to " + to_string(total));
  }
}

std::optional<PointIndex> FiniteSpace::find(const std::string& label) const {
  auto it = index_.find(label);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

PointIndex FiniteSpace::index_of(const std::string& label) const {
  if (auto p = find(label)) return *p;
  throw Error(ErrorCode::kUnknownLabel, "'" + label + "'");
}

PointSet FiniteSpace::subset(std::span<const std::string> labels) const {
  PointSet s(size());
  for (const auto& l : labels) s.insert(index_of(l));
  return s;
}

Rational FiniteSpace::measure(const PointSet& set) const {
  require_universe(size(), set.universe(), "set");
  Rational m = 0;
  for (PointIndex p = 0; p < size(); ++p) {
    if (set.contains(p)) m += weights_[p];
  }
  return m;
}

FiniteSpace build_space(std::vector<std::string> labels,
                        std::vector<Rational> weights) {
  return FiniteSpace(std::move(labels), std::move(weights));
}

// ---------------------------------------------------------- FieldPartition

FieldPartition::FieldPartition(std::size_t universe,
                               std::vector<std::vector<PointIndex>> blocks)
    : blocks_(std::move(blocks)), block_of_(universe, universe) {
  for (auto& b : blocks_) {
    if (b.empty()) {
      throw Error(ErrorCode::kInvalidPartition, "empty block");
    }
    std::sort(b.begin(), b.end());
  }
  std::sort(blocks_.begin(), blocks_.end(),
            [](const auto& x, const auto& y) { return x.front() < y.front(); });
  for (std::size_t b = 0; b < blocks_.size(); ++b) {
    for (PointIndex p : blocks_[b]) {
      if (p >= universe) {
        throw Error(ErrorCode::kInvalidPartition,
                    "point index " + std::to_string(p) + " outside universe");
      }
      if (block_of_[p] != universe) {
        throw Error(ErrorCode::kInvalidPartition,
                    "point " + std::to_string(p) + " lies in two blocks");
      }
      block_of_[p] = b;
    }
  }
  for (PointIndex p = 0; p < universe; ++p) {
    if (block_of_[p] == universe) {
      throw Error(ErrorCode::kInvalidPartition,
                  "point " + std::to_string(p) + " is not covered");
    }
  }
}

FieldPartition FieldPartition::trivial(std::size_t universe) {
  std::vector<PointIndex> all(universe);
  for (PointIndex p = 0; p < universe; ++p) all[p] = p;
  return FieldPartition(universe, {std::move(all)});
}

FieldPartition FieldPartition::discrete(std::size_t universe) {
  std::vector<std::vector<PointIndex>> blocks;
  for (PointIndex p = 0; p < universe; ++p) blocks.push_back({p});
  return FieldPartition(universe, std::move(blocks));
}

FieldPartition FieldPartition::from_labels(
    const FiniteSpace& space,
    const std::vector<std::vector<std::string>>& blocks) {
  std::vector<std::vector<PointIndex>> idx;
  idx.reserve(blocks.size());
  for (const auto& b : blocks) {
    std::vector<PointIndex> block;
    for (const auto& l : b) block.push_back(space.index_of(l));
    idx.push_back(std::move(block));
  }
  return FieldPartition(space.size(), std::move(idx));
}

bool FieldPartition::refines(const FieldPartition& coarser) const {
  if (coarser.universe() != universe()) return false;
  for (const auto& b : blocks_) {
    const std::size_t target = coarser.block_of(b.front());
    for (PointIndex p : b) {
      if (coarser.block_of(p) != target) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------- RandomQuantity

RandomQuantity RandomQuantity::constant(std::size_t universe,
                                        const Rational& c) {
  return RandomQuantity(std::vector<Rational>(universe, c));
}

RandomQuantity RandomQuantity::indicator(const PointSet& set) {
  std::vector<Rational> v(set.universe());
  for (PointIndex p = 0; p < set.universe(); ++p) v[p] = set.contains(p) ? 1 : 0;
  return RandomQuantity(std::move(v));
}

Rational RandomQuantity::min() const {
  if (values_.empty()) throw Error(ErrorCode::kDomainMismatch, "empty quantity");
  return *std::min_element(values_.begin(), values_.end());
}

Rational RandomQuantity::max() const {
  if (values_.empty()) throw Error(ErrorCode::kDomainMismatch, "empty quantity");
  return *std::max_element(values_.begin(), values_.end());
}

Rational RandomQuantity::sup_norm() const {
  Rational m = 0;
  for (const auto& v : values_) m = std::max(m, Rational(abs(v)));
  return m;
}

RandomQuantity RandomQuantity::negated() const {
  std::vector<Rational> v;
  v.reserve(values_.size());
  for (const auto& x : values_) v.emplace_back(-x);
  return RandomQuantity(std::move(v));
}

// ------------------------------------------------------------- operations

FieldPartition generate_field(const FiniteSpace& space,
                              std::span<const PointSet> generating_sets,
                              const FieldPartition* base) {
  if (base) require_universe(space.size(), base->universe(), "base field");
  for (const auto& s : generating_sets) {
    require_universe(space.size(), s.universe(), "generating set");
  }
  // Membership signature: base block, then one bit per generating set.
  std::map<std::vector<std::size_t>, std::vector<PointIndex>> by_signature;
  for (PointIndex p = 0; p < space.size(); ++p) {
    std::vector<std::size_t> sig;
    sig.reserve(generating_sets.size() + 1);
    sig.push_back(base ? base->block_of(p) : 0);
    for (const auto& s : generating_sets) sig.push_back(s.contains(p) ? 1 : 0);
    by_signature[sig].push_back(p);
  }
  std::vector<std::vector<PointIndex>> blocks;
  blocks.reserve(by_signature.size());
  for (auto& [sig, pts] : by_signature) blocks.push_back(std::move(pts));
  return FieldPartition(space.size(), std::move(blocks));
}

std::vector<Rational> block_masses(const FiniteSpace& space,
                                   const FieldPartition& field) {
  require_universe(space.size(), field.universe(), "field");
  std::vector<Rational> m(field.num_blocks());
  for (std::size_t b = 0; b < field.num_blocks(); ++b) {
    for (PointIndex p : field.block(b)) m[b] += space.weight(p);
  }
  return m;
}

PointSet measurable_kernel(const FieldPartition& field, const PointSet& set) {
  require_universe(field.universe(), set.universe(), "set");
  PointSet kernel(field.universe());
  for (const auto& b : field.blocks()) {
    if (std::all_of(b.begin(), b.end(),
                    [&](PointIndex p) { return set.contains(p); })) {
      for (PointIndex p : b) kernel.insert(p);
    }
  }
  return kernel;
}

PointSet measurable_hull(const FieldPartition& field, const PointSet& set) {
  require_universe(field.universe(), set.universe(), "set");
  PointSet hull(field.universe());
  for (const auto& b : field.blocks()) {
    if (std::any_of(b.begin(), b.end(),
                    [&](PointIndex p) { return set.contains(p); })) {
      for (PointIndex p : b) hull.insert(p);
    }
  }
  return hull;
}

Rational inner_measure(const FiniteSpace& space, const FieldPartition& field,
                       const PointSet& set) {
  require_universe(space.size(), field.universe(), "field");
  return space.measure(measurable_kernel(field, set));
}

Rational outer_measure(const FiniteSpace& space, const FieldPartition& field,
                       const PointSet& set) {
  require_universe(space.size(), field.universe(), "field");
  return space.measure(measurable_hull(field, set));
}

namespace {

template <typename Pick>
RandomQuantity blockwise_extremum(const FieldPartition& field,
                                  const RandomQuantity& f, Pick pick) {
  require_universe(field.universe(), f.size(), "quantity");
  std::vector<Rational> out(f.size());
  for (const auto& b : field.blocks()) {
    Rational best = f[b.front()];
    for (PointIndex p : b) best = pick(best, f[p]);
    for (PointIndex p : b) out[p] = best;
  }
  return RandomQuantity(std::move(out));
}

}  // namespace

RandomQuantity minorant(const FieldPartition& field, const RandomQuantity& f) {
  return blockwise_extremum(field, f, [](const Rational& a, const Rational& b) {
    return b < a ? b : a;
  });
}

RandomQuantity majorant(const FieldPartition& field, const RandomQuantity& f) {
  return blockwise_extremum(field, f, [](const Rational& a, const Rational& b) {
    return a < b ? b : a;
  });
}

Rational expectation(const FiniteSpace& space, const RandomQuantity& f) {
  require_universe(space.size(), f.size(), "quantity");
  Rational e = 0;
  for (PointIndex p = 0; p < space.size(); ++p) e += space.weight(p) * f[p];
  return e;
}

Rational lower_expectation(const FiniteSpace& space,
                           const FieldPartition& field,
                           const RandomQuantity& f) {
  return expectation(space, minorant(field, f));
}

Rational upper_expectation(const FiniteSpace& space,
                           const FieldPartition& field,
                           const RandomQuantity& f) {
  return expectation(space, majorant(field, f));
}

bool is_measurable(const FieldPartition& field, const PointSet& set) {
  require_universe(field.universe(), set.universe(), "set");
  for (const auto& b : field.blocks()) {
    const bool first = set.contains(b.front());
    for (PointIndex p : b) {
      if (set.contains(p) != first) return false;
    }
  }
  return true;
}

bool is_measurable(const FieldPartition& field, const RandomQuantity& f) {
  require_universe(field.universe(), f.size(), "quantity");
  for (const auto& b : field.blocks()) {
    for (PointIndex p : b) {
      if (f[p] != f[b.front()]) return false;
    }
  }
  return true;
}

}  // namespace nmlln
