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

#ifndef DIVKNAP_PARTITION_HPP
#define DIVKNAP_PARTITION_HPP

#include <vector>

namespace divknap {

/// Ordered partition of {0, 1, ..., n} into consecutive blocks, stored as
/// the strictly increasing list of block start indices. breaks[0] is
/// always 0; block t (1-based) runs from breaks[t-1] to breaks[t]-1, the
/// last block ends at n. Breakpoint storage keeps splitting a block O(1)
/// and the whole object O(p).
struct IntervalPartition {
  std::vector<int> breaks;

  int p() const { return static_cast<int>(breaks.size()); }

  /// Start index i_t of block t, t in [1, p].
  int block_start(int t) const { return breaks[t - 1]; }

  /// End index j_t of block t given the total variable count n.
  int block_end(int t, int n) const {
    return t == p() ? n : breaks[t] - 1;
  }

  /// i_p, the start of the last block. Partition inequalities require the
  /// weight at this index not to exceed the capacity.
  int last_start() const { return breaks.back(); }

  bool operator==(const IntervalPartition& other) const = default;

  static IntervalPartition single_block() { return IntervalPartition{{0}}; }
};

/// Structural check: nonempty, breaks[0] == 0, strictly increasing, all
/// breaks within [0, n]. Throws InvalidPartitionSpec otherwise.
void validate_partition(const IntervalPartition& part, int n);

}  // namespace divknap

#endif  // DIVKNAP_PARTITION_HPP
