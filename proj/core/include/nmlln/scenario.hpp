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

#include "nmlln/measure.hpp"

namespace nmlln {

// A coordinate space (Omega_1, F_1, P_1) together with the possibly
// nonmeasurable function Psi that every coordinate variable applies.
class Scenario {
 public:
  Scenario(FiniteSpace space, FieldPartition field, RandomQuantity psi);

  const FiniteSpace& space() const { return space_; }
  const FieldPartition& field() const { return field_; }
  const RandomQuantity& psi() const { return psi_; }

  // E_*[X_1] and E^*[X_1].
  const Rational& lower() const { return lower_; }
  const Rational& upper() const { return upper_; }
  bool psi_measurable() const { return lower_ == upper_; }

  friend bool operator==(const Scenario& a, const Scenario& b) {
    return a.space_ == b.space_ && a.field_ == b.field_ && a.psi_ == b.psi_;
  }

 private:
  FiniteSpace space_;
  FieldPartition field_;
  RandomQuantity psi_;
  Rational lower_;
  Rational upper_;
};

}  // namespace nmlln
