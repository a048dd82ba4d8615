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

#ifndef DIVKNAP_ERROR_HPP
#define DIVKNAP_ERROR_HPP

#include <stdexcept>
#include <string>

namespace divknap {

enum class ErrorCode {
  NonDivisibleChain,
  DuplicateWeight,
  WeightTooSmall,
  NonPositiveData,
  PointNotInRelaxation,
  ShapeMismatch,
  PartitionCapacityMismatch,
  PreconditionViolated,
  NonPositiveResidualCapacity,
  CoefficientExceedsWeight,
  InvalidPartitionSpec,
  MismatchedGenerators,
  BudgetExceeded,
  ParseError,
  InternalError,
};

const char* error_code_name(ErrorCode code);

/// All library failures surface as this exception. For
/// PointNotInRelaxation the message names the violated constraint, which
/// is itself a separating hyperplane for the caller.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& msg)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + msg),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

inline void require(bool cond, ErrorCode code, const std::string& msg) {
  if (!cond) throw Error(code, msg);
}

// Invariant checks that must hold for any input accepted by the public
// preconditions; a failure is a library bug, not a usage error.
inline void internal_check(bool cond, const char* what) {
  if (!cond) throw Error(ErrorCode::InternalError, what);
}

}  // namespace divknap

#endif  // DIVKNAP_ERROR_HPP
