// Copyright 2026 The divknap Authors
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

#include "divknap/error.hpp"

namespace divknap {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonDivisibleChain: return "NonDivisibleChain";
    case ErrorCode::DuplicateWeight: return "DuplicateWeight";
    case ErrorCode::WeightTooSmall: return "WeightTooSmall";
    case ErrorCode::NonPositiveData: return "NonPositiveData";
    case ErrorCode::PointNotInRelaxation: return "PointNotInRelaxation";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::PartitionCapacityMismatch:
      return "PartitionCapacityMismatch";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::NonPositiveResidualCapacity:
      return "NonPositiveResidualCapacity";
    case ErrorCode::CoefficientExceedsWeight:
      return "CoefficientExceedsWeight";
    case ErrorCode::InvalidPartitionSpec: return "InvalidPartitionSpec";
    case ErrorCode::MismatchedGenerators: return "MismatchedGenerators";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InternalError: return "InternalError";
  }
  return "UnknownError";
}

}  // namespace divknap
