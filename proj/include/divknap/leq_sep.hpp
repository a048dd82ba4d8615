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

#ifndef DIVKNAP_LEQ_SEP_HPP
#define DIVKNAP_LEQ_SEP_HPP

#include <vector>

#include "divknap/cut.hpp"
#include "divknap/geq_sep.hpp"
#include "divknap/instance.hpp"
#include "divknap/opcount.hpp"
#include "divknap/partition.hpp"
#include "divknap/point.hpp"
#include "divknap/types.hpp"

namespace divknap {

/// The >=-knapsack instance isomorphic to Y(b): same weights and bounds,
/// capacity b + u(M). Complementing y_j = u_j - s_j maps one set onto the
/// other.
Instance complement_instance(const Instance& inst);

/// B(C) = b + u(M \ C), the capacity seen by cuts over Y(b) keeping
/// subset C.
Int leq_capacity(const Instance& inst, const std::vector<int>& C);

/// Maps a point of Y_L(b) to the corresponding point of X_L(b + u(M)):
/// s0 = b + y0 + y(M) - a.x and s_j = u_j - y_j.
GeqPoint complement_point(const Instance& inst, const LeqPoint& pt);

/// Inverse map; uncomplement_point(complement_point(pt)) == pt exactly.
LeqPoint uncomplement_point(const Instance& inst, const GeqPoint& pt);

/// Turns a partition inequality for X(b + u(M)) keeping subset C' into
/// the complemented inequality for Y(b) keeping C = M \ C':
///   sum (a_i - alpha_i) x_i <= B(C) - prod kappa + y0 + y(C).
/// Violations match exactly under the point complementation. Throws
/// CoefficientExceedsWeight if some alpha_i > a_i (an invalid input cut).
PartitionCut complement_cut(const Instance& inst,
                            const PartitionCut& geq_cut);

/// Complemented partition inequality for Y(b) straight from its
/// generators (Y-side subset C and a partition).
PartitionCut build_complemented_cut(const Instance& inst,
                                    const std::vector<int>& C,
                                    const IntervalPartition& part);

/// Separation over conv(Y(b)): complement the point, separate over
/// X(b + u(M)), and complement the winning cut back. The violation is
/// preserved exactly, and Inside certifies hull membership.
SeparationResult separate_leq(const Instance& inst, const LeqPoint& pt,
                              OpCounter* ops = nullptr,
                              ExecMode mode = ExecMode::Serial);

/// Generators of a <=-partition inequality: the partition (whose second
/// block must start at q), the smallest index g whose weight does not
/// divide B(C), the chosen q in {g, ..., n}, and the lambda/pi recursion
///   lambda_t = a_{i_t} - beta_{t-1}            (t = p..2),
///   pi_2 = lambda_2,
///   pi_t = kappa_{t-1} pi_{t-1} + lambda_t - lambda_{t-1},
///   pi_0 = kappa_p pi_p - lambda_p.
/// The closed form pi_t = a_{i_t} - prod_{l<t} kappa_l and
/// pi_0 = B(C) - prod kappa_t is checked on construction. lambda_1 is
/// never defined and never stored; slot 1 of both vectors is padding.
struct LeqPartitionSpec {
  IntervalPartition part;
  int g = 0;
  int q = 0;
  std::vector<Int> lambda;  // lambda[2..p]
  std::vector<Int> pi;      // pi[0], pi[2..p]
};

LeqPartitionSpec make_leq_partition_spec(const Instance& inst,
                                         const std::vector<int>& C,
                                         const IntervalPartition& part);

/// The <=-partition inequality
///   sum_{t>=2} pi_t sum_{i in block t} (a_i / a_{i_t}) x_i
///     <= pi_0 + y0 + y(C).
/// Test surface only: the separator always emits complemented cuts, which
/// dominate these for matching generators.
PartitionCut build_leq_partition_cut(const Instance& inst,
                                     const std::vector<int>& C,
                                     const LeqPartitionSpec& spec);

PartitionCut build_leq_partition_cut(const Instance& inst,
                                     const std::vector<int>& C,
                                     const IntervalPartition& part);

enum class Dominance { StrictlyStronger, Equivalent };

/// Compares a complemented cut against the <=-partition cut with the same
/// generators: right-hand sides always agree, every complemented
/// coefficient is at least the corresponding <=-partition coefficient,
/// and the cuts coincide exactly when every block's weight ratios stay
/// below its kappa. Throws MismatchedGenerators when the two cuts were
/// not built from the same partition and subset.
Dominance dominance_check(const PartitionCut& comp, const PartitionCut& leq);

/// Repeatedly splits off the top index of any block whose largest weight
/// ratio exceeds its kappa. The complemented cut is unchanged by every
/// split, and the result generates a <=-partition cut equal to it.
IntervalPartition normalize_by_splitting(const Instance& inst,
                                         const std::vector<int>& C,
                                         const IntervalPartition& part);

}  // namespace divknap

#endif  // DIVKNAP_LEQ_SEP_HPP
