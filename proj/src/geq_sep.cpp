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

#include "divknap/geq_sep.hpp"

#include <algorithm>
#include <numeric>
#include <optional>

#include "divknap/error.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace divknap {

namespace {

// s_j / u_j <= s_k / u_k decided by cross-multiplication on exact values.
bool ratio_less(const Rat& sj, const Int& uj, const Rat& sk, const Int& uk) {
  return sj * Rat(uk) < sk * Rat(uj);
}

std::vector<int> complement_subset(int m, const std::vector<int>& C) {
  std::vector<bool> in(static_cast<std::size_t>(m) + 1, false);
  for (int j : C) in[static_cast<std::size_t>(j)] = true;
  std::vector<int> out;
  for (int j = 1; j <= m; ++j) {
    if (!in[static_cast<std::size_t>(j)]) out.push_back(j);
  }
  return out;
}

struct Candidate {
  Rat eps;
  IntervalPartition partition;
};

}  // namespace

PrefixTables build_prefix_tables(const Instance& inst, const GeqPoint& pt,
                                 OpCounter* ops) {
  const int m = inst.m();
  std::uint64_t w = 0;

  PrefixTables tables;
  tables.order.resize(static_cast<std::size_t>(m));
  std::iota(tables.order.begin(), tables.order.end(), 1);
  std::stable_sort(tables.order.begin(), tables.order.end(),
                   [&](int j, int k) {
                     ++w;
                     return ratio_less(pt.s[static_cast<std::size_t>(j) - 1],
                                       inst.u[static_cast<std::size_t>(j) - 1],
                                       pt.s[static_cast<std::size_t>(k) - 1],
                                       inst.u[static_cast<std::size_t>(k) - 1]);
                   });

  tables.ST.resize(static_cast<std::size_t>(m) + 1);
  tables.BT.resize(static_cast<std::size_t>(m) + 1);
  tables.ST[0] = pt.s0;
  tables.BT[0] = inst.b - inst.u_total();
  w += static_cast<std::uint64_t>(m);
  for (int j = 1; j <= m; ++j) {
    const int orig = tables.order[static_cast<std::size_t>(j) - 1];
    tables.ST[static_cast<std::size_t>(j)] =
        tables.ST[static_cast<std::size_t>(j) - 1] +
        pt.s[static_cast<std::size_t>(orig) - 1];
    tables.BT[static_cast<std::size_t>(j)] =
        tables.BT[static_cast<std::size_t>(j) - 1] +
        inst.u[static_cast<std::size_t>(orig) - 1];
    w += 2;
  }
  internal_check(tables.BT[static_cast<std::size_t>(m)] == inst.b,
                 "prefix capacities must telescope back to b");
  if (ops) ops->add(w);
  return tables;
}

Int residual_capacity(const Instance& inst, const std::vector<int>& C) {
  return inst.b - inst.u_sum(complement_subset(inst.m(), C));
}

std::pair<Int, IntPoint> reduce_to_integer(const Instance& inst,
                                           const GeqPoint& pt,
                                           const std::vector<int>& C) {
  Int cap = residual_capacity(inst, C);
  require(sgn(cap) > 0, ErrorCode::NonPositiveResidualCapacity,
          "b(C) must be positive, got " + to_string(cap));
  IntPoint hat;
  hat.x0 = pt.s0;
  for (int j : C) hat.x0 += pt.s[static_cast<std::size_t>(j) - 1];
  hat.x = pt.x;
  return {std::move(cap), std::move(hat)};
}

PartitionCut build_geq_cut(const Instance& inst, const std::vector<int>& C,
                           const IntervalPartition& part) {
  Int cap = residual_capacity(inst, C);
  require(sgn(cap) > 0, ErrorCode::NonPositiveResidualCapacity,
          "b(C) must be positive, got " + to_string(cap));
  PartitionCut cut = build_partition_cut(inst, cap, part);
  cut.shape = CutShape::GeqKnapsack;
  cut.cont_subset = C;
  std::sort(cut.cont_subset.begin(), cut.cont_subset.end());
  return cut;
}

SeparationResult separate_geq_fixed_subset(const Instance& inst,
                                           const GeqPoint& pt,
                                           const std::vector<int>& C,
                                           OpCounter* ops) {
  auto [cap, hat] = reduce_to_integer(inst, pt, C);
  SeparationResult inner =
      detail::separate_integer_nocheck(inst, cap, hat.x0, hat.x, ops, nullptr);
  if (!inner.violated()) return SeparationResult::inside();
  PartitionCut cut = build_geq_cut(inst, C, inner.cut->source_partition);
  const Rat eps = -eval_cut(cut, pt);
  internal_check(eps == inner.violation,
                 "subset reduction must preserve the violation exactly");
  return SeparationResult::make_violated(std::move(cut), eps);
}

SeparationResult separate_geq(const Instance& inst, const GeqPoint& pt,
                              OpCounter* ops, ExecMode mode) {
  validate_point(inst, pt);
  const int m = inst.m();
  PrefixTables tables = build_prefix_tables(inst, pt, ops);

  // One integer separation per prefix with positive residual capacity.
  // The subproblems are independent; candidates land in per-index slots
  // and the reduction below is deterministic either way.
  std::vector<std::optional<Candidate>> candidates(
      static_cast<std::size_t>(m) + 1);
  std::vector<std::uint64_t> sub_ops(static_cast<std::size_t>(m) + 1, 0);
  std::vector<std::optional<Error>> failures(static_cast<std::size_t>(m) + 1);

  const auto run_prefix = [&](int j) {
    if (sgn(tables.BT[static_cast<std::size_t>(j)]) <= 0) return;
    try {
      OpCounter local;
      IntSepTrace trace;
      SeparationResult res = detail::separate_integer_nocheck(
          inst, tables.BT[static_cast<std::size_t>(j)],
          tables.ST[static_cast<std::size_t>(j)], pt.x, &local, &trace);
      sub_ops[static_cast<std::size_t>(j)] = local.ops;
      if (res.violated()) {
        candidates[static_cast<std::size_t>(j)] =
            Candidate{res.violation, res.cut->source_partition};
      }
    } catch (const Error& e) {
      failures[static_cast<std::size_t>(j)] = e;
    }
  };

#ifdef _OPENMP
  if (mode == ExecMode::Parallel) {
#pragma omp parallel for schedule(dynamic)
    for (int j = 0; j <= m; ++j) run_prefix(j);
  } else {
    for (int j = 0; j <= m; ++j) run_prefix(j);
  }
#else
  (void)mode;
  for (int j = 0; j <= m; ++j) run_prefix(j);
#endif

  std::uint64_t w = 0;
  int best_j = -1;
  for (int j = 0; j <= m; ++j) {
    if (failures[static_cast<std::size_t>(j)]) {
      throw *failures[static_cast<std::size_t>(j)];
    }
    w += sub_ops[static_cast<std::size_t>(j)];
    const auto& cand = candidates[static_cast<std::size_t>(j)];
    if (!cand) continue;
    ++w;
    if (best_j < 0 ||
        cand->eps > candidates[static_cast<std::size_t>(best_j)]->eps) {
      best_j = j;
    }
  }
  if (ops) ops->add(w);

  if (best_j < 0) return SeparationResult::inside();

  // Report the winning prefix in original variable indices.
  std::vector<int> C(tables.order.begin(), tables.order.begin() + best_j);
  std::sort(C.begin(), C.end());
  internal_check(residual_capacity(inst, C) ==
                     tables.BT[static_cast<std::size_t>(best_j)],
                 "prefix capacity must match b(C)");

  const Candidate& best = *candidates[static_cast<std::size_t>(best_j)];
  PartitionCut cut = build_geq_cut(inst, C, best.partition);
  const Rat eps = -eval_cut(cut, pt);
  internal_check(eps == best.eps,
                 "winning violation must transfer to the reported cut");
  if (ops) ops->add(6 * static_cast<std::uint64_t>(inst.n()) + 8);
  return SeparationResult::make_violated(std::move(cut), eps);
}

SwapCheckResult select_swap_check(const Instance& inst, const GeqPoint& pt,
                                  const std::vector<int>& C, int j_plus,
                                  int j_minus) {
  validate_point(inst, pt);
  const int m = inst.m();
  require(j_plus >= 1 && j_plus <= m && j_minus >= 1 && j_minus <= m,
          ErrorCode::PreconditionViolated, "swap indices out of range");
  require(std::find(C.begin(), C.end(), j_minus) != C.end(),
          ErrorCode::PreconditionViolated, "j- must be in C");
  require(std::find(C.begin(), C.end(), j_plus) == C.end(),
          ErrorCode::PreconditionViolated, "j+ must not be in C");
  require(!ratio_less(pt.s[static_cast<std::size_t>(j_minus) - 1],
                      inst.u[static_cast<std::size_t>(j_minus) - 1],
                      pt.s[static_cast<std::size_t>(j_plus) - 1],
                      inst.u[static_cast<std::size_t>(j_plus) - 1]),
          ErrorCode::PreconditionViolated,
          "requires s_{j+}/u_{j+} <= s_{j-}/u_{j-}");

  SeparationResult base = separate_geq_fixed_subset(inst, pt, C);
  require(base.violated(), ErrorCode::PreconditionViolated,
          "no violated inequality over the base subset");
  const Rat& eps = base.violation;

  std::vector<int> with_plus = C;
  with_plus.push_back(j_plus);
  std::sort(with_plus.begin(), with_plus.end());
  std::vector<int> without_minus;
  for (int j : C) {
    if (j != j_minus) without_minus.push_back(j);
  }

  SeparationResult add_res = separate_geq_fixed_subset(inst, pt, with_plus);
  std::optional<SeparationResult> drop_res;
  if (sgn(residual_capacity(inst, without_minus)) > 0) {
    drop_res = separate_geq_fixed_subset(inst, pt, without_minus);
  }

  const bool add_ok = add_res.violated() && add_res.violation >= eps;
  const bool drop_ok =
      drop_res && drop_res->violated() && drop_res->violation >= eps;
  internal_check(add_ok || drop_ok,
                 "one exchange branch must reach the base violation");

  // Prefer the stronger branch; ties go to the added-variable side.
  if (add_ok && (!drop_ok || add_res.violation >= drop_res->violation)) {
    return SwapCheckResult{SwapBranch::AddedPlus, std::move(*add_res.cut),
                           add_res.violation};
  }
  return SwapCheckResult{SwapBranch::RemovedMinus, std::move(*drop_res->cut),
                         drop_res->violation};
}

}  // namespace divknap
