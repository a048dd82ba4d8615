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

#ifndef DIVKNAP_OPCOUNT_HPP
#define DIVKNAP_OPCOUNT_HPP

#include <cstdint>

namespace divknap {

/// Counter for the arithmetic-operation cost model used by the complexity
/// tests and the bench command. One unit is one arbitrary-precision
/// add/sub/mul/div/comparison issued by a separation routine; the counts
/// are deterministic for a given input regardless of threading, because
/// each independent subproblem accumulates locally and totals are summed
/// in index order.
struct OpCounter {
  std::uint64_t ops = 0;

  void add(std::uint64_t k) { ops += k; }
  void reset() { ops = 0; }
};

}  // namespace divknap

#endif  // DIVKNAP_OPCOUNT_HPP
