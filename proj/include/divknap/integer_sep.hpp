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

#ifndef DIVKNAP_INTEGER_SEP_HPP
#define DIVKNAP_INTEGER_SEP_HPP

#include <vector>

#include "divknap/cut.hpp"
#include "divknap/instance.hpp"
#include "divknap/opcount.hpp"
#include "divknap/partition.hpp"
#include "divknap/point.hpp"
#include "divknap/types.hpp"

namespace divknap {

/// The capacity recursion behind every partition inequality. Seeded with
/// beta_p = capacity, it walks the blocks from last to first:
///
///   kappa_t = ceil(beta_t / a_{i_t}),  mu_t = (kappa_t - 1) a_{i_t},
///   beta_{t-1} = beta_t - mu_t.
///
/// All beta_t stay >= 1, and kappa_1 = beta_1 because a_{i_1} = a_0 = 1.
/// Vectors are indexed by block number t; index 0 of kappa and mu is
/// unused padding so that kappa[t] is the value for block t.
struct CoeffRecursion {
  std::vector<Int> beta;   // beta[0..p]
  std::vector<Int> kappa;  // kappa[1..p]
  std::vector<Int> mu;     // mu[1..p]
};

CoeffRecursion compute_coeff_recursion(const Instance& inst,
                                       const Int& capacity,
                                       const IntervalPartition& part);

/// Materializes the partition inequality for the integer >=-knapsack with
/// the given capacity: coefficient of x_i in block t is
/// prod_{l<t} kappa_l * min(a_i / a_{i_t}, kappa_t), the x0 coefficient is
/// one, and the right-hand side is prod_t kappa_t. Requires
/// a_{i_p} <= capacity (PartitionCapacityMismatch otherwise).
PartitionCut build_partition_cut(const Instance& inst, const Int& capacity,
                                 const IntervalPartition& part);

/// Single-iteration quantities for a point against a capacity:
/// r is the unique index with a_r <= capacity < a_{r+1},
/// delta = sum_{i>r} x_i, kappa = floor(capacity / a_r) + 1, and
/// omega = (kappa - 1) a_r.
struct N0Params {
  int r = 0;
  Rat delta;
  Int kappa;
  Int omega;
};

N0Params n0_params(const Instance& inst, const Int& capacity,
                   const IntPoint& pt);

/// The split index v <= r with
///   sum_{i=v+1..r} a_i x_i < omega (1 - delta) <= sum_{i=v..r} a_i x_i,
/// where the i = 0 term is x0 itself (a_0 = 1). Unique because the partial
/// sums are monotone. Callable only in the non-trivial case: a_r does not
/// divide the capacity, delta < 1, and x0 + sum_{i<=r} a_i x_i >=
/// omega (1 - delta); throws PreconditionViolated otherwise.
int split_index(const Instance& inst, const Int& capacity, int r,
                const Int& omega, const Rat& delta, const IntPoint& pt);

/// alpha/gamma decomposition at the split index. alpha carries exactly
/// omega worth of weight (checked exactly); gamma = pt - alpha on indices
/// <= r and equals pt above r. Index 0 of each vector is the x0 slot.
struct Decomposition {
  std::vector<Rat> alpha;
  std::vector<Rat> gamma;
};

Decomposition decompose(const Instance& inst, const Int& capacity, int r,
                        int v, const Int& omega, const Rat& delta,
                        const IntPoint& pt);

/// Per-iteration scalars recorded while the separation loop runs; used by
/// the property tests (residual telescoping, monotone descent, iteration
/// bound) and by the continuous separator's diagnostics.
struct IntSepIter {
  Int b;      // residual capacity at this iteration
  int r = 0;
  Rat delta;
  Int kappa;  // meaningful only when the divisibility stop did not fire
  Int omega;
  int v = -1;         // -1 when the iteration stopped before computing v
  bool split = false;  // whether this iteration split the leading block
};

enum class IntSepStop {
  DivisibleViolated,   // a_r | b and the single-block inequality fails
  DivisibleInside,     // a_r | b and it holds
  DeltaInside,         // delta >= 1
  ThresholdViolated,   // x0 + sum_{i<=r} a_i x_i < omega (1 - delta)
  SplitZeroViolated,   // v = 0 and the single-block inequality fails
  SplitZeroInside,     // v = 0 and it holds
};

struct IntSepTrace {
  std::vector<IntSepIter> iters;
  IntSepStop stop = IntSepStop::DivisibleInside;
  Rat eps;  // violation found at the stopping level (0 when inside)
  IntervalPartition partition;  // partition at the stop
};

/// Separation over the integer >=-knapsack with the given capacity:
/// returns a most-violated partition inequality with its exact violation,
/// or Inside when the point lies in the convex hull. Runs in O(n)
/// arithmetic operations total; pass an OpCounter to observe the count.
/// The returned cut is rebuilt from the original capacity and re-evaluated
/// at the input point as an internal consistency check.
SeparationResult separate_integer(const Instance& inst, const Int& capacity,
                                  const IntPoint& pt,
                                  OpCounter* ops = nullptr,
                                  IntSepTrace* trace = nullptr);

namespace detail {

/// Same as separate_integer but skips relaxation-membership validation;
/// the caller guarantees x0 + sum a_i x_i >= capacity and nonnegativity.
SeparationResult separate_integer_nocheck(const Instance& inst,
                                          const Int& capacity, const Rat& x0,
                                          const std::vector<Rat>& x,
                                          OpCounter* ops,
                                          IntSepTrace* trace);

}  // namespace detail

}  // namespace divknap

#endif  // DIVKNAP_INTEGER_SEP_HPP
