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

#include "divknap/instance.hpp"

#include "divknap/error.hpp"

namespace divknap {

namespace {
const Int kOne = 1;
}

const Int& Instance::weight(int i) const {
  if (i == 0) return kOne;
  return a[static_cast<std::size_t>(i) - 1];
}

Int Instance::u_total() const {
  Int total = 0;
  for (const Int& uj : u) total += uj;
  return total;
}

Int Instance::u_sum(const std::vector<int>& subset) const {
  Int total = 0;
  for (int j : subset) total += u[static_cast<std::size_t>(j) - 1];
  return total;
}

void validate_instance(const Instance& inst) {
  require(!inst.a.empty(), ErrorCode::NonPositiveData,
          "instance needs at least one integer variable");
  require(sgn(inst.b) > 0, ErrorCode::NonPositiveData, "capacity b must be >= 1");
  for (int i = 1; i <= inst.n(); ++i) {
    require(sgn(inst.weight(i)) > 0, ErrorCode::NonPositiveData,
            "weight a_" + std::to_string(i) + " must be positive");
  }
  for (int j = 1; j <= inst.m(); ++j) {
    require(inst.u[static_cast<std::size_t>(j) - 1] >= 1,
            ErrorCode::NonPositiveData,
            "bound u_" + std::to_string(j) + " must be >= 1");
  }
  require(inst.a[0] >= 2, ErrorCode::WeightTooSmall,
          "a_1 must be >= 2, got " + to_string(inst.a[0]));
  for (int i = 1; i < inst.n(); ++i) {
    const Int& lo = inst.weight(i);
    const Int& hi = inst.weight(i + 1);
    require(lo != hi, ErrorCode::DuplicateWeight,
            "weights a_" + std::to_string(i) + " and a_" +
                std::to_string(i + 1) + " coincide");
    require(divides(lo, hi), ErrorCode::NonDivisibleChain,
            "a_" + std::to_string(i) + " = " + to_string(lo) +
                " does not divide a_" + std::to_string(i + 1) + " = " +
                to_string(hi));
    // Divisible and distinct means strictly increasing, so a later
    // duplicate among non-adjacent weights cannot occur.
    require(lo < hi, ErrorCode::DuplicateWeight, "weights must increase");
  }
}

}  // namespace divknap
