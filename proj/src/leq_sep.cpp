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

#include "divknap/leq_sep.hpp"

#include <algorithm>
#include <utility>

#include "divknap/error.hpp"
#include "divknap/integer_sep.hpp"

namespace divknap {

namespace {

std::vector<int> complement_subset(int m, const std::vector<int>& C) {
  std::vector<bool> in(static_cast<std::size_t>(m) + 1, false);
  for (int j : C) in[static_cast<std::size_t>(j)] = true;
  std::vector<int> out;
  for (int j = 1; j <= m; ++j) {
    if (!in[static_cast<std::size_t>(j)]) out.push_back(j);
  }
  return out;
}

bool same_linear_form(const PartitionCut& lhs, const PartitionCut& rhs) {
  return lhs.x_coeffs == rhs.x_coeffs && lhs.rhs == rhs.rhs &&
         lhs.cont_subset == rhs.cont_subset;
}

}  // namespace

Instance complement_instance(const Instance& inst) {
  Instance comp = inst;
  comp.b = inst.b + inst.u_total();
  return comp;
}

Int leq_capacity(const Instance& inst, const std::vector<int>& C) {
  return inst.b + inst.u_sum(complement_subset(inst.m(), C));
}

GeqPoint complement_point(const Instance& inst, const LeqPoint& pt) {
  validate_point(inst, pt);
  GeqPoint out;
  out.x = pt.x;
  out.s.resize(pt.y.size());
  Rat weight = 0;
  for (int i = 1; i <= inst.n(); ++i) {
    const Rat& xi = pt.x[static_cast<std::size_t>(i) - 1];
    if (sgn(xi) != 0) weight += Rat(inst.weight(i)) * xi;
  }
  Rat y_sum = pt.y0;
  for (int j = 1; j <= inst.m(); ++j) {
    const Rat& yj = pt.y[static_cast<std::size_t>(j) - 1];
    y_sum += yj;
    out.s[static_cast<std::size_t>(j) - 1] =
        Rat(inst.u[static_cast<std::size_t>(j) - 1]) - yj;
  }
  out.s0 = Rat(inst.b) + y_sum - weight;
  internal_check(sgn(out.s0) >= 0,
                 "complemented slack must be nonnegative for relaxed points");
  return out;
}

LeqPoint uncomplement_point(const Instance& inst, const GeqPoint& pt) {
  const Instance comp = complement_instance(inst);
  validate_point(comp, pt);
  LeqPoint out;
  out.x = pt.x;
  out.y.resize(pt.s.size());
  Rat total = pt.s0;
  for (int j = 1; j <= inst.m(); ++j) {
    const Rat& sj = pt.s[static_cast<std::size_t>(j) - 1];
    total += sj;
    out.y[static_cast<std::size_t>(j) - 1] =
        Rat(inst.u[static_cast<std::size_t>(j) - 1]) - sj;
  }
  for (int i = 1; i <= inst.n(); ++i) {
    const Rat& xi = pt.x[static_cast<std::size_t>(i) - 1];
    if (sgn(xi) != 0) total += Rat(inst.weight(i)) * xi;
  }
  out.y0 = total - Rat(comp.b);
  internal_check(sgn(out.y0) >= 0, "uncomplemented y0 must be nonnegative");
  return out;
}

PartitionCut complement_cut(const Instance& inst,
                            const PartitionCut& geq_cut) {
  require(geq_cut.shape == CutShape::GeqKnapsack, ErrorCode::ShapeMismatch,
          "complement_cut expects a >=-knapsack cut");
  require(static_cast<int>(geq_cut.x_coeffs.size()) == inst.n(),
          ErrorCode::ShapeMismatch, "cut dimension mismatch");
  const std::vector<int> C = complement_subset(inst.m(), geq_cut.cont_subset);
  const Int big_b = inst.b + inst.u_sum(geq_cut.cont_subset);
  require(big_b == geq_cut.capacity, ErrorCode::PreconditionViolated,
          "input cut capacity is not b + u(kept subset)");

  PartitionCut out;
  out.shape = CutShape::LeqKnapsack;
  out.cont_subset = C;
  out.capacity = big_b;
  out.source_partition = geq_cut.source_partition;
  out.x_coeffs.resize(geq_cut.x_coeffs.size());
  for (int i = 1; i <= inst.n(); ++i) {
    const Int& alpha = geq_cut.x_coeffs[static_cast<std::size_t>(i) - 1];
    require(alpha <= inst.weight(i), ErrorCode::CoefficientExceedsWeight,
            "coefficient of x" + std::to_string(i) + " exceeds its weight");
    out.x_coeffs[static_cast<std::size_t>(i) - 1] = inst.weight(i) - alpha;
  }
  out.rhs = big_b - geq_cut.rhs;
  return out;
}

PartitionCut build_complemented_cut(const Instance& inst,
                                    const std::vector<int>& C,
                                    const IntervalPartition& part) {
  const Instance comp = complement_instance(inst);
  PartitionCut geq =
      build_geq_cut(comp, complement_subset(inst.m(), C), part);
  return complement_cut(inst, geq);
}

SeparationResult separate_leq(const Instance& inst, const LeqPoint& pt,
                              OpCounter* ops, ExecMode mode) {
  const GeqPoint comp_pt = complement_point(inst, pt);
  const Instance comp = complement_instance(inst);
  SeparationResult res = separate_geq(comp, comp_pt, ops, mode);
  if (!res.violated()) return SeparationResult::inside();
  PartitionCut cut = complement_cut(inst, *res.cut);
  const Rat eps = -eval_cut(cut, pt);
  internal_check(eps == res.violation,
                 "complementation must preserve the violation exactly");
  return SeparationResult::make_violated(std::move(cut), eps);
}

LeqPartitionSpec make_leq_partition_spec(const Instance& inst,
                                         const std::vector<int>& C,
                                         const IntervalPartition& part) {
  validate_partition(part, inst.n());
  const Int big_b = leq_capacity(inst, C);
  int g = 0;
  for (int i = 1; i <= inst.n(); ++i) {
    if (!divides(inst.weight(i), big_b)) {
      g = i;
      break;
    }
  }
  require(g >= 1, ErrorCode::InvalidPartitionSpec,
          "every weight divides B(C); no valid second block start exists");
  require(part.p() >= 2, ErrorCode::InvalidPartitionSpec,
          "a <=-partition inequality needs at least two blocks");
  const int q = part.block_start(2);
  require(q >= g, ErrorCode::InvalidPartitionSpec,
          "second block must start at or after index " + std::to_string(g));

  const CoeffRecursion rec = compute_coeff_recursion(inst, big_b, part);
  const int p = part.p();

  LeqPartitionSpec spec;
  spec.part = part;
  spec.g = g;
  spec.q = q;
  spec.lambda.assign(static_cast<std::size_t>(p) + 1, Int(0));
  spec.pi.assign(static_cast<std::size_t>(p) + 1, Int(0));
  for (int t = p; t >= 2; --t) {
    spec.lambda[static_cast<std::size_t>(t)] =
        inst.weight(part.block_start(t)) - rec.beta[static_cast<std::size_t>(t) - 1];
  }
  spec.pi[2] = spec.lambda[2];
  for (int t = 3; t <= p; ++t) {
    spec.pi[static_cast<std::size_t>(t)] =
        rec.kappa[static_cast<std::size_t>(t) - 1] *
            spec.pi[static_cast<std::size_t>(t) - 1] +
        (spec.lambda[static_cast<std::size_t>(t)] -
         spec.lambda[static_cast<std::size_t>(t) - 1]);
  }
  spec.pi[0] = rec.kappa[static_cast<std::size_t>(p)] *
                   spec.pi[static_cast<std::size_t>(p)] -
               spec.lambda[static_cast<std::size_t>(p)];

  // Closed form of the recursion, checked exactly on every construction.
  Int prefix = 1;
  for (int t = 2; t <= p; ++t) {
    prefix *= rec.kappa[static_cast<std::size_t>(t) - 1];
    internal_check(spec.pi[static_cast<std::size_t>(t)] ==
                       inst.weight(part.block_start(t)) - prefix,
                   "pi_t must equal a_{i_t} minus the kappa prefix product");
  }
  prefix *= rec.kappa[static_cast<std::size_t>(p)];
  internal_check(spec.pi[0] == big_b - prefix,
                 "pi_0 must equal B(C) minus the full kappa product");
  return spec;
}

PartitionCut build_leq_partition_cut(const Instance& inst,
                                     const std::vector<int>& C,
                                     const LeqPartitionSpec& spec) {
  require(spec.part.p() >= 2 && spec.part.block_start(2) == spec.q,
          ErrorCode::InvalidPartitionSpec,
          "partition does not match the chosen q");
  const int n = inst.n();
  const int p = spec.part.p();
  PartitionCut cut;
  cut.shape = CutShape::LeqKnapsack;
  cut.cont_subset = C;
  std::sort(cut.cont_subset.begin(), cut.cont_subset.end());
  cut.capacity = leq_capacity(inst, C);
  cut.source_partition = spec.part;
  cut.x_coeffs.assign(static_cast<std::size_t>(n), Int(0));
  for (int t = 2; t <= p; ++t) {
    const int i_t = spec.part.block_start(t);
    const Int& a_it = inst.weight(i_t);
    for (int i = i_t; i <= spec.part.block_end(t, n); ++i) {
      cut.x_coeffs[static_cast<std::size_t>(i) - 1] =
          spec.pi[static_cast<std::size_t>(t)] *
          exact_div(inst.weight(i), a_it);
    }
  }
  cut.rhs = spec.pi[0];
  return cut;
}

PartitionCut build_leq_partition_cut(const Instance& inst,
                                     const std::vector<int>& C,
                                     const IntervalPartition& part) {
  return build_leq_partition_cut(inst, C,
                                 make_leq_partition_spec(inst, C, part));
}

Dominance dominance_check(const PartitionCut& comp, const PartitionCut& leq) {
  require(comp.shape == CutShape::LeqKnapsack &&
              leq.shape == CutShape::LeqKnapsack,
          ErrorCode::ShapeMismatch, "dominance compares <=-form cuts");
  require(comp.source_partition == leq.source_partition &&
              comp.cont_subset == leq.cont_subset &&
              comp.capacity == leq.capacity &&
              comp.x_coeffs.size() == leq.x_coeffs.size(),
          ErrorCode::MismatchedGenerators,
          "cuts were not built from the same partition and subset");
  internal_check(comp.rhs == leq.rhs,
                 "same-generator cuts must share their right-hand side");
  bool equal = true;
  for (std::size_t i = 0; i < comp.x_coeffs.size(); ++i) {
    internal_check(comp.x_coeffs[i] >= leq.x_coeffs[i],
                   "complemented coefficients must dominate componentwise");
    if (comp.x_coeffs[i] != leq.x_coeffs[i]) equal = false;
  }
  return equal ? Dominance::Equivalent : Dominance::StrictlyStronger;
}

IntervalPartition normalize_by_splitting(const Instance& inst,
                                         const std::vector<int>& C,
                                         const IntervalPartition& part) {
  const Int big_b = leq_capacity(inst, C);
  const PartitionCut reference = build_complemented_cut(inst, C, part);
  IntervalPartition cur = part;

  for (int round = 0; round <= inst.n(); ++round) {
    const CoeffRecursion rec = compute_coeff_recursion(inst, big_b, cur);
    int split_at = -1;
    for (int t = 1; t <= cur.p(); ++t) {
      const int j_t = cur.block_end(t, inst.n());
      const Int ratio =
          exact_div(inst.weight(j_t), inst.weight(cur.block_start(t)));
      if (ratio > rec.kappa[static_cast<std::size_t>(t)]) {
        split_at = j_t;
        break;
      }
    }
    if (split_at < 0) return cur;
    // Peel the top index of the offending block into its own block.
    auto pos = std::upper_bound(cur.breaks.begin(), cur.breaks.end(),
                                split_at);
    cur.breaks.insert(pos, split_at);
    const PartitionCut after = build_complemented_cut(inst, C, cur);
    internal_check(same_linear_form(reference, after),
                   "splitting must leave the complemented cut unchanged");
  }
  throw Error(ErrorCode::InternalError,
              "block splitting failed to reach a fixed point");
}

}  // namespace divknap
