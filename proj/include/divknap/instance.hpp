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

#ifndef DIVKNAP_INSTANCE_HPP
#define DIVKNAP_INSTANCE_HPP

#include <cstddef>
#include <vector>

#include "divknap/types.hpp"

namespace divknap {

/// One knapsack instance shared by the three sets handled here:
///
///   Z(b): x0 + sum a_i x_i >= b,                x integer
///   X(b): s0 + s(M) + sum a_i x_i >= b,         0 <= s_j <= u_j
///   Y(b): sum a_i x_i <= b + y0 + y(M),         0 <= y_j <= u_j
///
/// The integer weights form a divisibility chain 1 | a_1 | ... | a_n with
/// a_1 >= 2 and all weights distinct. Conceptually a_0 = 1 and
/// a_{n+1} = +infinity; neither sentinel is stored.
struct Instance {
  std::vector<Int> a;  // weights a_1..a_n, a[i-1] holds a_i
  std::vector<Int> u;  // bounds u_1..u_m on the bounded continuous variables
  Int b;               // capacity

  int n() const { return static_cast<int>(a.size()); }
  int m() const { return static_cast<int>(u.size()); }

  /// Weight a_i for i in [0, n]; a_0 is the implicit 1.
  const Int& weight(int i) const;

  /// Sum of u_j over all of M.
  Int u_total() const;

  /// Sum of u_j over a subset of M (1-based indices).
  Int u_sum(const std::vector<int>& subset) const;
};

/// Checks every instance invariant: positive data, a_1 >= 2, distinct
/// weights, and the divisibility chain. Throws Error on the first failure
/// (NonPositiveData, WeightTooSmall, DuplicateWeight, NonDivisibleChain).
void validate_instance(const Instance& inst);

}  // namespace divknap

#endif  // DIVKNAP_INSTANCE_HPP
