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

#include "divknap/cut.hpp"

#include "divknap/error.hpp"

namespace divknap {

namespace {

Rat coeff_dot(const PartitionCut& cut, const std::vector<Rat>& x) {
  require(cut.x_coeffs.size() == x.size(), ErrorCode::ShapeMismatch,
          "cut and point disagree on the number of integer variables");
  Rat acc = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (sgn(cut.x_coeffs[i]) != 0 && sgn(x[i]) != 0) {
      acc += Rat(cut.x_coeffs[i]) * x[i];
    }
  }
  return acc;
}

Rat subset_sum(const PartitionCut& cut, const std::vector<Rat>& vals) {
  Rat acc = 0;
  for (int j : cut.cont_subset) {
    require(j >= 1 && j <= static_cast<int>(vals.size()),
            ErrorCode::ShapeMismatch, "cut subset index out of range");
    acc += vals[static_cast<std::size_t>(j) - 1];
  }
  return acc;
}

}  // namespace

Rat eval_cut(const PartitionCut& cut, const IntPoint& pt) {
  require(cut.shape == CutShape::IntKnapsack, ErrorCode::ShapeMismatch,
          "cut does not apply to integer-knapsack points");
  return pt.x0 + coeff_dot(cut, pt.x) - Rat(cut.rhs);
}

Rat eval_cut(const PartitionCut& cut, const GeqPoint& pt) {
  require(cut.shape == CutShape::GeqKnapsack, ErrorCode::ShapeMismatch,
          "cut does not apply to >=-knapsack points");
  return pt.s0 + subset_sum(cut, pt.s) + coeff_dot(cut, pt.x) - Rat(cut.rhs);
}

Rat eval_cut(const PartitionCut& cut, const LeqPoint& pt) {
  require(cut.shape == CutShape::LeqKnapsack, ErrorCode::ShapeMismatch,
          "cut does not apply to <=-knapsack points");
  return Rat(cut.rhs) + pt.y0 + subset_sum(cut, pt.y) - coeff_dot(cut, pt.x);
}

}  // namespace divknap
