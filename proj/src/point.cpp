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

#include "divknap/point.hpp"

#include <string>

#include "divknap/error.hpp"

namespace divknap {

namespace {

void check_dim(bool ok, const char* what) {
  require(ok, ErrorCode::ShapeMismatch, what);
}

void check_nonneg(const Rat& v, const std::string& name) {
  require(sgn(v) >= 0, ErrorCode::PointNotInRelaxation,
          "violated constraint " + name + " >= 0");
}

Rat weighted_sum(const Instance& inst, const std::vector<Rat>& x) {
  Rat acc = 0;
  for (int i = 1; i <= inst.n(); ++i) {
    acc += Rat(inst.weight(i)) * x[static_cast<std::size_t>(i) - 1];
  }
  return acc;
}

}  // namespace

void validate_int_point(const Instance& inst, const Int& capacity,
                        const IntPoint& pt) {
  check_dim(static_cast<int>(pt.x.size()) == inst.n(),
            "IntPoint dimension does not match instance");
  check_nonneg(pt.x0, "x0");
  for (int i = 1; i <= inst.n(); ++i) {
    check_nonneg(pt.x[static_cast<std::size_t>(i) - 1],
                 "x" + std::to_string(i));
  }
  const Rat lhs = pt.x0 + weighted_sum(inst, pt.x);
  require(lhs >= Rat(capacity), ErrorCode::PointNotInRelaxation,
          "violated constraint x0 + a.x >= " + to_string(capacity) +
              " (lhs = " + to_string(lhs) + ")");
}

void validate_point(const Instance& inst, const IntPoint& pt) {
  validate_int_point(inst, inst.b, pt);
}

void validate_point(const Instance& inst, const GeqPoint& pt) {
  check_dim(static_cast<int>(pt.x.size()) == inst.n() &&
                static_cast<int>(pt.s.size()) == inst.m(),
            "GeqPoint dimension does not match instance");
  check_nonneg(pt.s0, "s0");
  for (int i = 1; i <= inst.n(); ++i) {
    check_nonneg(pt.x[static_cast<std::size_t>(i) - 1],
                 "x" + std::to_string(i));
  }
  Rat s_sum = pt.s0;
  for (int j = 1; j <= inst.m(); ++j) {
    const Rat& sj = pt.s[static_cast<std::size_t>(j) - 1];
    check_nonneg(sj, "s" + std::to_string(j));
    require(sj <= Rat(inst.u[static_cast<std::size_t>(j) - 1]),
            ErrorCode::PointNotInRelaxation,
            "violated constraint s" + std::to_string(j) +
                " <= u" + std::to_string(j));
    s_sum += sj;
  }
  const Rat lhs = s_sum + weighted_sum(inst, pt.x);
  require(lhs >= Rat(inst.b), ErrorCode::PointNotInRelaxation,
          "violated constraint s0 + s(M) + a.x >= b (lhs = " +
              to_string(lhs) + ")");
}

void validate_point(const Instance& inst, const LeqPoint& pt) {
  check_dim(static_cast<int>(pt.x.size()) == inst.n() &&
                static_cast<int>(pt.y.size()) == inst.m(),
            "LeqPoint dimension does not match instance");
  check_nonneg(pt.y0, "y0");
  for (int i = 1; i <= inst.n(); ++i) {
    check_nonneg(pt.x[static_cast<std::size_t>(i) - 1],
                 "x" + std::to_string(i));
  }
  Rat y_sum = pt.y0;
  for (int j = 1; j <= inst.m(); ++j) {
    const Rat& yj = pt.y[static_cast<std::size_t>(j) - 1];
    check_nonneg(yj, "y" + std::to_string(j));
    require(yj <= Rat(inst.u[static_cast<std::size_t>(j) - 1]),
            ErrorCode::PointNotInRelaxation,
            "violated constraint y" + std::to_string(j) +
                " <= u" + std::to_string(j));
    y_sum += yj;
  }
  const Rat lhs = weighted_sum(inst, pt.x);
  require(lhs <= Rat(inst.b) + y_sum, ErrorCode::PointNotInRelaxation,
          "violated constraint a.x <= b + y0 + y(M) (lhs = " +
              to_string(lhs) + ")");
}

}  // namespace divknap
