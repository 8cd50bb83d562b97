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

#include "nmlln/scenario.hpp"

#include "nmlln/error.hpp"

namespace nmlln {

Scenario::Scenario(FiniteSpace space, FieldPartition field, RandomQuantity psi)
    : space_(std::move(space)), field_(std::move(field)), psi_(std::move(psi)) {
  if (field_.universe() != space_.size()) {
    throw Error(ErrorCode::kDomainMismatch, "field does not cover the space");
  }
  if (psi_.size() != space_.size()) {
    throw Error(ErrorCode::kDomainMismatch,
                "psi has " + std::to_string(psi_.size()) + " values for " +
                    std::to_string(space_.size()) + " points");
  }
  lower_ = lower_expectation(space_, field_, psi_);
  upper_ = upper_expectation(space_, field_, psi_);
}

}  // namespace nmlln
