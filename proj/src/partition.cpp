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

#include "divknap/partition.hpp"

#include "divknap/error.hpp"

namespace divknap {

void validate_partition(const IntervalPartition& part, int n) {
  require(!part.breaks.empty() && part.breaks.front() == 0,
          ErrorCode::InvalidPartitionSpec, "first block must start at 0");
  for (std::size_t t = 1; t < part.breaks.size(); ++t) {
    require(part.breaks[t] > part.breaks[t - 1],
            ErrorCode::InvalidPartitionSpec,
            "block starts must strictly increase");
  }
  require(part.breaks.back() <= n, ErrorCode::InvalidPartitionSpec,
          "block start beyond last variable");
}

}  // namespace divknap
