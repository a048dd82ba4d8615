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

#ifndef DIVKNAP_POINT_HPP
#define DIVKNAP_POINT_HPP

#include <vector>

#include "divknap/instance.hpp"
#include "divknap/types.hpp"

namespace divknap {

/// Candidate point for the integer set Z: (x0, x_1..x_n), all rational and
/// nonnegative, satisfying x0 + sum a_i x_i >= capacity.
struct IntPoint {
  Rat x0;
  std::vector<Rat> x;  // x[i-1] holds x_i
};

/// Candidate point for X(b): s0 + s(M) + sum a_i x_i >= b, 0 <= s_j <= u_j.
struct GeqPoint {
  std::vector<Rat> x;
  Rat s0;
  std::vector<Rat> s;
};

/// Candidate point for Y(b): sum a_i x_i <= b + y0 + y(M), 0 <= y_j <= u_j.
struct LeqPoint {
  std::vector<Rat> x;
  Rat y0;
  std::vector<Rat> y;
};

// Relaxation-membership checks. The separation routines presuppose their
// input lies in the LP relaxation of the respective set; a point failing
// one of these trivial or linear constraints is rejected with
// PointNotInRelaxation naming the constraint, since the caller then
// already holds a separating hyperplane.
void validate_point(const Instance& inst, const IntPoint& pt);
void validate_point(const Instance& inst, const GeqPoint& pt);
void validate_point(const Instance& inst, const LeqPoint& pt);

/// Same as validate_point(inst, IntPoint) but against an explicit
/// capacity instead of inst.b.
void validate_int_point(const Instance& inst, const Int& capacity,
                        const IntPoint& pt);

}  // namespace divknap

#endif  // DIVKNAP_POINT_HPP
