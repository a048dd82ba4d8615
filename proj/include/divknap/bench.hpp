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

#ifndef DIVKNAP_BENCH_HPP
#define DIVKNAP_BENCH_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "divknap/instance.hpp"
#include "divknap/point.hpp"

namespace divknap {

/// One bench measurement. Rows with m > 0 time the continuous separator
/// serially and with the OpenMP prefix loop; rows with m == 0 time the
/// integer separator alone (serial by nature, so no parallel figure).
/// The primary metric is the arithmetic-operation count against the
/// model mn + m log m (just n when m == 0); wall time is secondary, since
/// word lengths grow with the divisibility chain and would pollute the
/// operation-count claim.
struct BenchRow {
  int n = 0;
  int m = 0;
  double serial_ms = 0.0;
  std::optional<double> parallel_ms;
  std::uint64_t opcount = 0;
  double model = 0.0;
  double ratio = 0.0;  // opcount / model
  bool violated = false;
};

/// Deterministic bench inputs: multiplier-2 weight chain (a_i = 2^i, kept
/// in full precision), u_j in 1..10, capacity u(M) plus a random value
/// below 2^(n+1), and a point with small-denominator coordinates repaired
/// into the relaxation.
Instance gen_bench_instance(std::uint64_t seed, int n, int m);
GeqPoint gen_bench_point(std::uint64_t seed, const Instance& inst);

BenchRow run_bench_row(std::uint64_t seed, int n, int m);

std::vector<BenchRow> run_bench(std::uint64_t seed,
                                const std::vector<std::pair<int, int>>& grid);

/// The default grid: square continuous rows 250..2000 plus integer-only
/// rows n = 10^3, 10^4, 10^5.
std::vector<std::pair<int, int>> default_bench_grid();

}  // namespace divknap

#endif  // DIVKNAP_BENCH_HPP
