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

#include "divknap/integer_sep.hpp"

#include <algorithm>
#include <utility>

#include "divknap/error.hpp"

namespace divknap {

namespace {

// Accumulates the arithmetic-op count locally and flushes on scope exit,
// so every early return stays covered.
struct OpsFlush {
  OpCounter* ops;
  std::uint64_t w = 0;
  explicit OpsFlush(OpCounter* o) : ops(o) {}
  ~OpsFlush() {
    if (ops) ops->add(w);
  }
};

// Largest r in [0, n] with a_r <= capacity. a_0 = 1 <= capacity always.
int top_index(const Instance& inst, const Int& capacity, std::uint64_t& w) {
  int r = inst.n();
  while (r >= 1 && inst.weight(r) > capacity) {
    --r;
    ++w;
  }
  return r;
}

}  // namespace

CoeffRecursion compute_coeff_recursion(const Instance& inst,
                                       const Int& capacity,
                                       const IntervalPartition& part) {
  validate_partition(part, inst.n());
  require(sgn(capacity) > 0, ErrorCode::PreconditionViolated,
          "capacity must be positive");
  require(inst.weight(part.last_start()) <= capacity,
          ErrorCode::PartitionCapacityMismatch,
          "last block start weight exceeds the capacity");
  const int p = part.p();
  CoeffRecursion rec;
  rec.beta.assign(static_cast<std::size_t>(p) + 1, Int(0));
  rec.kappa.assign(static_cast<std::size_t>(p) + 1, Int(0));
  rec.mu.assign(static_cast<std::size_t>(p) + 1, Int(0));
  rec.beta[static_cast<std::size_t>(p)] = capacity;
  for (int t = p; t >= 1; --t) {
    const Int& a_it = inst.weight(part.block_start(t));
    rec.kappa[t] = ceil_div(rec.beta[t], a_it);
    rec.mu[t] = (rec.kappa[t] - 1) * a_it;
    rec.beta[t - 1] = rec.beta[t] - rec.mu[t];
    internal_check(rec.beta[t - 1] >= 1, "beta must stay positive");
  }
  internal_check(rec.kappa[1] == rec.beta[1], "kappa_1 must equal beta_1");
  return rec;
}

PartitionCut build_partition_cut(const Instance& inst, const Int& capacity,
                                 const IntervalPartition& part) {
  const CoeffRecursion rec = compute_coeff_recursion(inst, capacity, part);
  const int n = inst.n();
  const int p = part.p();

  PartitionCut cut;
  cut.shape = CutShape::IntKnapsack;
  cut.capacity = capacity;
  cut.source_partition = part;
  cut.x_coeffs.assign(static_cast<std::size_t>(n), Int(0));

  Int prefix = 1;  // product of kappa_l over blocks before t
  for (int t = 1; t <= p; ++t) {
    const int i_t = part.block_start(t);
    const Int& a_it = inst.weight(i_t);
    const Int& kt = rec.kappa[t];
    const int end = part.block_end(t, n);
    // Within a block the weight ratio doubles at least every step, so the
    // min caps at kappa_t after a few indices; reuse the capped value.
    bool capped = false;
    Int capped_coeff;
    for (int i = std::max(i_t, 1); i <= end; ++i) {
      if (!capped) {
        Int ratio = exact_div(inst.weight(i), a_it);
        if (ratio >= kt) {
          capped = true;
          capped_coeff = prefix * kt;
        } else {
          cut.x_coeffs[static_cast<std::size_t>(i) - 1] = prefix * ratio;
        }
      }
      if (capped) cut.x_coeffs[static_cast<std::size_t>(i) - 1] = capped_coeff;
    }
    prefix *= kt;
  }
  cut.rhs = prefix;
  return cut;
}

N0Params n0_params(const Instance& inst, const Int& capacity,
                   const IntPoint& pt) {
  require(sgn(capacity) > 0, ErrorCode::PreconditionViolated,
          "capacity must be positive");
  require(static_cast<int>(pt.x.size()) == inst.n(),
          ErrorCode::ShapeMismatch, "point dimension mismatch");
  std::uint64_t w = 0;
  N0Params out;
  out.r = top_index(inst, capacity, w);
  out.delta = 0;
  for (int i = out.r + 1; i <= inst.n(); ++i) {
    out.delta += pt.x[static_cast<std::size_t>(i) - 1];
  }
  out.kappa = floor_div(capacity, inst.weight(out.r)) + 1;
  out.omega = (out.kappa - 1) * inst.weight(out.r);
  return out;
}

int split_index(const Instance& inst, const Int& capacity, int r,
                const Int& omega, const Rat& delta, const IntPoint& pt) {
  require(r >= 0 && r <= inst.n(), ErrorCode::PreconditionViolated,
          "r out of range");
  require(!divides(inst.weight(r), capacity),
          ErrorCode::PreconditionViolated,
          "split index undefined when a_r divides the capacity");
  require(delta < 1, ErrorCode::PreconditionViolated,
          "split index undefined when delta >= 1");
  const Rat theta = Rat(omega) * (1 - delta);
  Rat s = 0;  // sum_{i=j..r} a_i x_i, extended with x0 at j = 0
  for (int j = r; j >= 1; --j) {
    s += Rat(inst.weight(j)) * pt.x[static_cast<std::size_t>(j) - 1];
    if (s >= theta) return j;
  }
  require(pt.x0 + s >= theta, ErrorCode::PreconditionViolated,
          "x0 + sum_{i<=r} a_i x_i below omega (1 - delta)");
  return 0;
}

Decomposition decompose(const Instance& inst, const Int& capacity, int r,
                        int v, const Int& omega, const Rat& delta,
                        const IntPoint& pt) {
  require(v >= 0 && v <= r, ErrorCode::PreconditionViolated,
          "v out of range");
  // Recompute the split index; the decomposition is only defined at it.
  require(v == split_index(inst, capacity, r, omega, delta, pt),
          ErrorCode::PreconditionViolated, "v is not the split index");
  const int n = inst.n();
  const Rat theta = Rat(omega) * (1 - delta);
  auto at = [&pt](int i) -> const Rat& {
    return i == 0 ? pt.x0 : pt.x[static_cast<std::size_t>(i) - 1];
  };

  Rat tail = 0;  // sum_{i=v+1..r} a_i x_i
  for (int i = v + 1; i <= r; ++i) tail += Rat(inst.weight(i)) * at(i);

  Decomposition d;
  d.alpha.assign(static_cast<std::size_t>(n) + 1, Rat(0));
  d.gamma.assign(static_cast<std::size_t>(n) + 1, Rat(0));
  for (int i = 0; i <= n; ++i) {
    if (i < v) {
      d.alpha[static_cast<std::size_t>(i)] = 0;
    } else if (i == v) {
      d.alpha[static_cast<std::size_t>(i)] =
          (theta - tail) / Rat(inst.weight(v));
    } else {
      d.alpha[static_cast<std::size_t>(i)] = at(i);
    }
    d.gamma[static_cast<std::size_t>(i)] =
        i <= r ? at(i) - d.alpha[static_cast<std::size_t>(i)] : at(i);
  }

  Rat conservation = 0;
  for (int i = v; i <= r; ++i) {
    conservation +=
        Rat(inst.weight(i)) * d.alpha[static_cast<std::size_t>(i)];
  }
  for (int i = r + 1; i <= n; ++i) {
    conservation += Rat(omega) * d.alpha[static_cast<std::size_t>(i)];
  }
  internal_check(conservation == Rat(omega),
                 "alpha must carry exactly omega worth of weight");
  for (int i = 0; i <= n; ++i) {
    internal_check(sgn(d.alpha[static_cast<std::size_t>(i)]) >= 0,
                   "alpha components must be nonnegative");
    internal_check(sgn(d.gamma[static_cast<std::size_t>(i)]) >= 0,
                   "gamma components must be nonnegative");
  }
  return d;
}

namespace detail {

SeparationResult separate_integer_nocheck(const Instance& inst,
                                          const Int& capacity, const Rat& x0,
                                          const std::vector<Rat>& x_in,
                                          OpCounter* ops,
                                          IntSepTrace* trace) {
  require(sgn(capacity) > 0, ErrorCode::PreconditionViolated,
          "capacity must be positive");
  const int n = inst.n();
  OpsFlush w(ops);
  if (trace) {
    trace->iters.clear();
    trace->eps = 0;
  }

  // Working copy; entries shrink toward zero as weight is peeled off, so
  // each index is written O(1) times over the whole run.
  std::vector<Rat> x = x_in;
  Int b = capacity;

  int r = top_index(inst, capacity, w.w);
  Rat sum_ar = 0;  // sum_{1<=i<=r} a_i x_i at the current point
  for (int i = 1; i <= r; ++i) {
    const Rat& xi = x[static_cast<std::size_t>(i) - 1];
    if (sgn(xi) != 0) sum_ar += Rat(inst.weight(i)) * xi;
    w.w += 2;
  }
  Rat delta = 0;  // sum_{i>r} x_i
  for (int i = r + 1; i <= n; ++i) {
    const Rat& xi = x[static_cast<std::size_t>(i) - 1];
    if (sgn(xi) != 0) delta += xi;
    ++w.w;
  }

  // Indices in (prev_v, r] are known to be zero in the working point;
  // the threshold scan jumps over them so that together the scans touch
  // each index O(1) times, which is what keeps the whole loop O(n).
  int prev_v = n + 1;
  std::vector<int> splits;  // block-split positions, strictly decreasing

  const auto finish_violated = [&](Rat eps, IntSepStop stop) {
    internal_check(sgn(eps) > 0, "violated stop needs positive violation");
    IntervalPartition part;
    part.breaks.reserve(splits.size() + 1);
    part.breaks.push_back(0);
    for (auto it = splits.rbegin(); it != splits.rend(); ++it) {
      part.breaks.push_back(*it);
    }
    PartitionCut cut = build_partition_cut(inst, capacity, part);
    w.w += 4 * static_cast<std::uint64_t>(n) + 4;
    // The violation found at the stopping level must transfer exactly to
    // the rebuilt inequality at the original point; anything else is a
    // bookkeeping bug.
    Rat lhs = x0;
    for (int i = 1; i <= n; ++i) {
      const Rat& xi = x_in[static_cast<std::size_t>(i) - 1];
      if (sgn(xi) != 0) {
        lhs += Rat(cut.x_coeffs[static_cast<std::size_t>(i) - 1]) * xi;
      }
    }
    internal_check(Rat(cut.rhs) - lhs == eps,
                   "violation did not transfer to the rebuilt inequality");
    if (trace) {
      trace->stop = stop;
      trace->eps = eps;
      trace->partition = part;
    }
    return SeparationResult::make_violated(std::move(cut), std::move(eps));
  };

  const auto finish_inside = [&](IntSepStop stop) {
    if (trace) {
      trace->stop = stop;
      trace->eps = 0;
      IntervalPartition part;
      part.breaks.push_back(0);
      for (auto it = splits.rbegin(); it != splits.rend(); ++it) {
        part.breaks.push_back(*it);
      }
      trace->partition = part;
    }
    return SeparationResult::inside();
  };

  int iterations = 0;
  while (true) {
    ++iterations;
    internal_check(iterations <= n + 1, "iteration bound n + 1 exceeded");
    IntSepIter rec;
    rec.b = b;
    rec.r = r;
    rec.delta = delta;

    const Int& a_r = inst.weight(r);

    if (divides(a_r, b)) {
      ++w.w;
      const Rat lhs_b = x0 + sum_ar + Rat(b) * delta;
      w.w += 3;
      if (trace) trace->iters.push_back(rec);
      if (lhs_b < Rat(b)) {
        return finish_violated(Rat(b) - lhs_b, IntSepStop::DivisibleViolated);
      }
      return finish_inside(IntSepStop::DivisibleInside);
    }
    ++w.w;

    if (delta >= 1) {
      ++w.w;
      if (trace) trace->iters.push_back(rec);
      return finish_inside(IntSepStop::DeltaInside);
    }

    const Int kappa = floor_div(b, a_r) + 1;
    const Int omega = (kappa - 1) * a_r;
    rec.kappa = kappa;
    rec.omega = omega;
    w.w += 4;

    const Rat lhs_omega = x0 + sum_ar + Rat(omega) * delta;
    w.w += 3;
    if (lhs_omega < Rat(omega)) {
      // The single-block inequality at this level is most violated; its
      // violation is measured against the residual capacity, not omega.
      const Rat lhs_b = x0 + sum_ar + Rat(b) * delta;
      w.w += 4;
      internal_check(lhs_b < Rat(b), "threshold stop implies violation");
      if (trace) trace->iters.push_back(rec);
      return finish_violated(Rat(b) - lhs_b, IntSepStop::ThresholdViolated);
    }

    // Scan downward for the split index v. Indices above prev_v are zero
    // in the working point and contribute nothing, so start below them.
    const Rat theta = Rat(omega) * (1 - delta);
    w.w += 2;
    int j = std::min(r, prev_v);
    Rat scan = 0;  // sum_{i=j..r} a_i x_i
    int v = -1;
    while (j >= 1) {
      const Rat& xj = x[static_cast<std::size_t>(j) - 1];
      w.w += 3;
      if (sgn(xj) != 0) {
        scan += Rat(inst.weight(j)) * xj;
        if (scan >= theta) {
          v = j;
          break;
        }
      }
      --j;
    }

    if (v == -1) {
      internal_check(x0 + scan >= theta,
                     "the split index must exist in the nontrivial case");
      rec.v = 0;
      const Rat lhs_b = x0 + sum_ar + Rat(b) * delta;
      w.w += 4;
      if (trace) trace->iters.push_back(rec);
      if (lhs_b < Rat(b)) {
        return finish_violated(Rat(b) - lhs_b, IntSepStop::SplitZeroViolated);
      }
      return finish_inside(IntSepStop::SplitZeroInside);
    }
    rec.v = v;

    // Peel alpha off the working point: everything in (v, r] moves out,
    // index v keeps gamma_v, indices below v are untouched.
    const Int& a_v = inst.weight(v);
    const Rat tail = scan - Rat(a_v) * x[static_cast<std::size_t>(v) - 1];
    const Rat alpha_v = (theta - tail) / Rat(a_v);
    const Rat gamma_v = x[static_cast<std::size_t>(v) - 1] - alpha_v;
    w.w += 6;
    internal_check(sgn(alpha_v) > 0, "alpha_v must be positive");
    internal_check(sgn(gamma_v) >= 0, "gamma_v must be nonnegative");
    internal_check(Rat(a_v) * alpha_v + tail + Rat(omega) * delta ==
                       Rat(omega),
                   "peeled weight must equal omega exactly");

    const Int b_next = b - omega;
    ++w.w;
    internal_check(sgn(b_next) > 0 && b_next < b,
                   "residual capacity must strictly decrease and stay >= 1");

    const int fresh_hi = std::min(prev_v, r);
    for (int i = v + 1; i <= fresh_hi; ++i) {
      x[static_cast<std::size_t>(i) - 1] = 0;
    }
    x[static_cast<std::size_t>(v) - 1] = gamma_v;

    if (a_v > b_next) {
      // The surviving leading block splits at v; later iterations only
      // ever split strictly below, so the collected positions decrease.
      internal_check(splits.empty() || v < splits.back(),
                     "split positions must strictly decrease");
      rec.split = true;
      splits.push_back(v);
    }
    ++w.w;

    sum_ar = (sum_ar - scan) + Rat(a_v) * gamma_v;
    w.w += 3;

    int r_new = r;
    while (r_new >= 1 && inst.weight(r_new) > b_next) {
      const Rat& xi = x[static_cast<std::size_t>(r_new) - 1];
      if (sgn(xi) != 0) {
        delta += xi;
        sum_ar -= Rat(inst.weight(r_new)) * xi;
        w.w += 3;
      }
      --r_new;
      ++w.w;
    }
    internal_check(r_new < r, "r must strictly decrease every iteration");

    if (trace) trace->iters.push_back(rec);
    prev_v = v;
    r = r_new;
    b = b_next;
  }
}

}  // namespace detail

SeparationResult separate_integer(const Instance& inst, const Int& capacity,
                                  const IntPoint& pt, OpCounter* ops,
                                  IntSepTrace* trace) {
  validate_int_point(inst, capacity, pt);
  return detail::separate_integer_nocheck(inst, capacity, pt.x0, pt.x, ops,
                                          trace);
}

}  // namespace divknap
