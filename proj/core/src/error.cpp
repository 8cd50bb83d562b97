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

#include "nmlln/error.hpp"

namespace nmlln {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kZeroWeight: return "ZeroWeight";
    case ErrorCode::kNegativeWeight: return "NegativeWeight";
    case ErrorCode::kNotNormalized: return "NotNormalized";
    case ErrorCode::kDuplicateLabel: return "DuplicateLabel";
    case ErrorCode::kUnknownLabel: return "UnknownLabel";
    case ErrorCode::kInvalidPartition: return "InvalidPartition";
    case ErrorCode::kDomainMismatch: return "DomainMismatch";
    case ErrorCode::kFieldMismatch: return "FieldMismatch";
    case ErrorCode::kNotMeasurable: return "NotMeasurable";
    case ErrorCode::kOutOfRange: return "OutOfRange";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kBudgetExceeded: return "BudgetExceeded";
    case ErrorCode::kHypothesisViolated: return "HypothesisViolated";
    case ErrorCode::kParse: return "Parse";
  }
  return "Unknown";
}

BudgetExceeded::BudgetExceeded(std::uint64_t required, std::uint64_t budget)
    : Error(ErrorCode::kBudgetExceeded,
            "enumeration needs " + std::to_string(required) +
                " product points, budget is " + std::to_string(budget)),
      required_(required),
      budget_(budget) {}

}  // namespace nmlln
