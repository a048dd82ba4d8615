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

#ifndef DIVKNAP_ORACLE_HPP
#define DIVKNAP_ORACLE_HPP

#include <cstdint>
#include <variant>
#include <vector>

#include "divknap/cut.hpp"
#include "divknap/instance.hpp"
#include "divknap/partition.hpp"
#include "divknap/point.hpp"
#include "divknap/types.hpp"

namespace divknap {

// Brute-force ground truth at desk scale. Everything here enumerates the
// complete inequality family instead of running the combinatorial
// algorithms, and deliberately re-transcribes the coefficient recursion
// in its own code so that a bug in the fast path cannot hide in the
// reference path.

enum class SetKind { Z, Geq, Leq };

/// Caps that keep exhaustive enumeration tractable: at most 2^max_n
/// interval partitions and 2^max_m continuous subsets, so no more than
/// 2^(n+m) cuts per query.
struct EnumerationBudget {
  int max_n = 6;
  int max_m = 3;
  std::uint64_t max_partitions = std::uint64_t{1} << 6;
  std::uint64_t max_subsets = std::uint64_t{1} << 3;

  /// Defaults per set: n <= 6 for the integer set, n <= 4 with m <= 3 for
  /// the continuous ones.
  static EnumerationBudget defaults_for(SetKind kind);

  /// User-supplied limits; throws BudgetExceeded beyond the hard ceiling
  /// (n <= 10, m <= 6).
  static EnumerationBudget custom(int max_n, int max_m);
};

/// All interval partitions of {0..n} whose last block start carries
/// weight at most the capacity. Deterministic order (breakpoint bitmask
/// ascending). Throws BudgetExceeded when n exceeds the budget.
std::vector<IntervalPartition> enumerate_partitions(
    const Instance& inst, const Int& capacity,
    const EnumerationBudget& budget = {});

/// Exhaustive separation: evaluates every cut in the family — every
/// partition for Z, every (partition, subset) pair with positive residual
/// capacity for X, and the complemented family for Y — and returns the
/// exact maximum violation with one argmax cut, or Inside. Tie-breaking
/// among equally violated cuts: fewest blocks, then lexicographically
/// smallest subset, then lexicographically smallest break list; tests
/// compare violations, never argmax identity.
SeparationResult brute_force_separate(const Instance& inst,
                                      const IntPoint& pt,
                                      const EnumerationBudget& budget =
                                          EnumerationBudget::defaults_for(
                                              SetKind::Z));
SeparationResult brute_force_separate(const Instance& inst,
                                      const GeqPoint& pt,
                                      const EnumerationBudget& budget =
                                          EnumerationBudget::defaults_for(
                                              SetKind::Geq));
SeparationResult brute_force_separate(const Instance& inst,
                                      const LeqPoint& pt,
                                      const EnumerationBudget& budget =
                                          EnumerationBudget::defaults_for(
                                              SetKind::Leq));

/// Outcome of a validity check: valid, or a witness point of the set that
/// violates the cut (already re-validated internally).
struct ValidityOutcome {
  bool valid = true;
  std::variant<std::monostate, IntPoint, GeqPoint, LeqPoint> witness;
  Rat witness_violation;  // > 0 when invalid
};

/// Ground-truth validity of a cut for its set. Integer coordinates are
/// enumerated over the box 0 <= x_i <= ceil(cap/a_i) and the continuous
/// ones are minimized greedily and exactly per integer assignment.
///
/// The box is sufficient: if a point of the set violates the cut and has
/// x_i > ceil(cap/a_i), lowering x_i to that bound keeps a_i x_i >= cap,
/// so the point stays in the set (the single term already covers the
/// capacity side that matters), while the cut's left-hand side does not
/// move against us because every x coefficient is nonnegative (>= form)
/// respectively at most a_i (<= form). Repeating per coordinate maps any
/// violating point into the box without losing the violation.
ValidityOutcome validity_oracle(const Instance& inst, const PartitionCut& cut,
                                const EnumerationBudget& budget = {});

/// Deterministic small random instances: a_1 in {2..5}, successive
/// multipliers in {2..4} (hence distinct and divisible), u_j in {1..10},
/// b in {1..200}. Always passes validate_instance.
Instance gen_instance(std::uint64_t seed, const EnumerationBudget& budget);

/// Deterministic points of the LP relaxation: small-denominator rational
/// coordinates (denominators <= 12), with feasibility repaired by raising
/// the unbounded slack minimally. At least one deliberately fractional
/// x_i appears with probability 1/2 per coordinate.
IntPoint gen_int_point(std::uint64_t seed, const Instance& inst);
GeqPoint gen_geq_point(std::uint64_t seed, const Instance& inst);
LeqPoint gen_leq_point(std::uint64_t seed, const Instance& inst);

}  // namespace divknap

#endif  // DIVKNAP_ORACLE_HPP
