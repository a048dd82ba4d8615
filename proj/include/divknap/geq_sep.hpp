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

#ifndef DIVKNAP_GEQ_SEP_HPP
#define DIVKNAP_GEQ_SEP_HPP

#include <utility>
#include <vector>

#include "divknap/cut.hpp"
#include "divknap/instance.hpp"
#include "divknap/integer_sep.hpp"
#include "divknap/opcount.hpp"
#include "divknap/partition.hpp"
#include "divknap/point.hpp"
#include "divknap/types.hpp"

namespace divknap {

/// Whether the independent per-prefix subproblems run on one thread or
/// across OpenMP threads. Results (and operation counts) are identical:
/// candidates are collected per index and reduced deterministically after
/// the loop.
enum class ExecMode { Serial, Parallel };

/// Prefix machinery for the continuous >=-knapsack: order is the stable
/// permutation of M sorting s_j / u_j nondecreasing, and for the prefix
/// subsets T_j = {order[1..j]}:
///   ST[j] = s0 + s(T_j)           (nondecreasing),
///   BT[j] = b - u(M \ T_j)        (strictly increasing, BT[m] = b).
struct PrefixTables {
  std::vector<int> order;  // order[j-1] is the original index of rank j
  std::vector<Rat> ST;     // ST[0..m]
  std::vector<Int> BT;     // BT[0..m]
};

PrefixTables build_prefix_tables(const Instance& inst, const GeqPoint& pt,
                                 OpCounter* ops = nullptr);

/// Residual capacity for keeping subset C: b(C) = b - u(M \ C).
Int residual_capacity(const Instance& inst, const std::vector<int>& C);

/// Folds the kept continuous mass into the integer slack: returns
/// (b(C), x̂) with x̂0 = s0 + s(C) and x̂_i = x_i. A cut over the subset C
/// is violated at the original point exactly as much as the corresponding
/// integer-knapsack cut for capacity b(C) is violated at x̂. Requires
/// b(C) > 0 (NonPositiveResidualCapacity).
std::pair<Int, IntPoint> reduce_to_integer(const Instance& inst,
                                           const GeqPoint& pt,
                                           const std::vector<int>& C);

/// Partition inequality for X(b) keeping subset C:
///   s0 + s(C) + sum coeff_i x_i >= prod kappa_t,
/// with the coefficient recursion run at capacity b(C). The x coefficients
/// equal those of build_partition_cut(inst, b(C), part).
PartitionCut build_geq_cut(const Instance& inst, const std::vector<int>& C,
                           const IntervalPartition& part);

/// Most-violated partition inequality over the given subset only (all
/// partitions, C fixed), or Inside. Support routine for the exchange and
/// prefix-sufficiency tests; the full separation does not enumerate
/// subsets this way.
SeparationResult separate_geq_fixed_subset(const Instance& inst,
                                           const GeqPoint& pt,
                                           const std::vector<int>& C,
                                           OpCounter* ops = nullptr);

/// Separation over conv(X(b)): sorts M by s_j / u_j (stable, compared by
/// cross-multiplication), runs the integer separation once per prefix
/// subset with positive residual capacity, and returns the strictly most
/// violated candidate (ties broken toward the smallest prefix, which
/// gives the sparsest cut) or Inside. O(mn + m log m) arithmetic
/// operations.
SeparationResult separate_geq(const Instance& inst, const GeqPoint& pt,
                              OpCounter* ops = nullptr,
                              ExecMode mode = ExecMode::Serial);

/// Which side of the exchange argument produced the dominating cut.
enum class SwapBranch { AddedPlus, RemovedMinus };

struct SwapCheckResult {
  SwapBranch branch;
  PartitionCut cut;
  Rat violation;
};

/// Exchange check: given j+ not in C and j- in C with
/// s_{j+}/u_{j+} <= s_{j-}/u_{j-} and a violated cut over C with violation
/// eps > 0, re-separates over C + {j+} and C - {j-} and returns a cut with
/// violation >= eps from one of them. Test-support surface, not on the
/// separation hot path.
SwapCheckResult select_swap_check(const Instance& inst, const GeqPoint& pt,
                                  const std::vector<int>& C, int j_plus,
                                  int j_minus);

}  // namespace divknap

#endif  // DIVKNAP_GEQ_SEP_HPP
