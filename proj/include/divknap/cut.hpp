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

#ifndef DIVKNAP_CUT_HPP
#define DIVKNAP_CUT_HPP

#include <optional>
#include <vector>

#include "divknap/partition.hpp"
#include "divknap/point.hpp"
#include "divknap/types.hpp"

namespace divknap {

enum class Orientation { Geq, Leq };

/// Which set (and hence which point type) a cut applies to.
enum class CutShape { IntKnapsack, GeqKnapsack, LeqKnapsack };

/// A fully materialized partition inequality.
///
///   IntKnapsack:  x0 + sum c_i x_i >= rhs
///   GeqKnapsack:  s0 + s(C) + sum c_i x_i >= rhs
///   LeqKnapsack:  sum c_i x_i <= rhs + y0 + y(C)
///
/// The unbounded variable (x0, s0, or y0) always carries coefficient one
/// in this family, so only the x coefficients, the right-hand side, and
/// the continuous subset C are stored. Each cut keeps the interval
/// partition and residual capacity it was generated from, so tests can
/// compare structures rather than just values.
struct PartitionCut {
  CutShape shape = CutShape::IntKnapsack;
  std::vector<int> cont_subset;  // C as sorted 1-based indices into M
  std::vector<Int> x_coeffs;     // coefficients of x_1..x_n, all >= 0
  Int rhs;                       // product of kappa_t (>= form), or the
                                 // complemented constant (<= form)
  IntervalPartition source_partition;
  Int capacity;                  // the beta_p seed the recursion ran with

  Orientation orientation() const {
    return shape == CutShape::LeqKnapsack ? Orientation::Leq
                                          : Orientation::Geq;
  }

  bool operator==(const PartitionCut& other) const = default;
};

/// Signed slack of a cut at a point of matching shape:
/// LHS - RHS for >= cuts and RHS - LHS for <= cuts, so a negative value
/// always means the point violates the cut by exactly that amount.
/// Throws ShapeMismatch when point and cut shapes or dimensions differ.
Rat eval_cut(const PartitionCut& cut, const IntPoint& pt);
Rat eval_cut(const PartitionCut& cut, const GeqPoint& pt);
Rat eval_cut(const PartitionCut& cut, const LeqPoint& pt);

/// Outcome of a separation query: either a most-violated cut with its
/// exact positive violation, or the certificate that the point lies in
/// the convex hull of the queried set.
struct SeparationResult {
  std::optional<PartitionCut> cut;
  Rat violation;  // > 0 exactly when a cut is present

  bool violated() const { return cut.has_value(); }

  static SeparationResult inside() { return {}; }
  static SeparationResult make_violated(PartitionCut c, Rat eps) {
    SeparationResult r;
    r.cut = std::move(c);
    r.violation = std::move(eps);
    return r;
  }
};

}  // namespace divknap

#endif  // DIVKNAP_CUT_HPP
