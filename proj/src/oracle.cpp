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

#include "divknap/oracle.hpp"

#include <algorithm>
#include <optional>
#include <random>
#include <utility>

#include "divknap/error.hpp"

namespace divknap {

namespace {

std::vector<int> mask_to_subset(int m, std::uint64_t mask) {
  std::vector<int> out;
  for (int j = 1; j <= m; ++j) {
    if (mask & (std::uint64_t{1} << (j - 1))) out.push_back(j);
  }
  return out;
}

std::vector<int> subset_complement(int m, const std::vector<int>& C) {
  std::vector<bool> in(static_cast<std::size_t>(m) + 1, false);
  for (int j : C) in[static_cast<std::size_t>(j)] = true;
  std::vector<int> out;
  for (int j = 1; j <= m; ++j) {
    if (!in[static_cast<std::size_t>(j)]) out.push_back(j);
  }
  return out;
}

// Reference transcription of the partition inequality, kept separate from
// the production builder on purpose: the two are compared in tests, and a
// bug in one cannot mask the same bug in the other.
PartitionCut oracle_int_cut(const Instance& inst, const Int& capacity,
                            const IntervalPartition& part) {
  const int n = inst.n();
  const int p = part.p();
  internal_check(inst.weight(part.last_start()) <= capacity,
                 "oracle cut: last block start must fit the capacity");
  std::vector<Int> beta(static_cast<std::size_t>(p) + 1);
  std::vector<Int> kappa(static_cast<std::size_t>(p) + 1);
  beta[static_cast<std::size_t>(p)] = capacity;
  for (int t = p; t >= 1; --t) {
    const Int& w = inst.weight(part.block_start(t));
    kappa[static_cast<std::size_t>(t)] =
        ceil_div(beta[static_cast<std::size_t>(t)], w);
    beta[static_cast<std::size_t>(t) - 1] =
        beta[static_cast<std::size_t>(t)] -
        (kappa[static_cast<std::size_t>(t)] - 1) * w;
  }
  PartitionCut cut;
  cut.shape = CutShape::IntKnapsack;
  cut.capacity = capacity;
  cut.source_partition = part;
  cut.x_coeffs.assign(static_cast<std::size_t>(n), Int(0));
  Int prefix = 1;
  for (int t = 1; t <= p; ++t) {
    const Int& w = inst.weight(part.block_start(t));
    for (int i = std::max(part.block_start(t), 1);
         i <= part.block_end(t, n); ++i) {
      const Int ratio = exact_div(inst.weight(i), w);
      cut.x_coeffs[static_cast<std::size_t>(i) - 1] =
          prefix * std::min(ratio, kappa[static_cast<std::size_t>(t)]);
    }
    prefix *= kappa[static_cast<std::size_t>(t)];
  }
  cut.rhs = prefix;
  return cut;
}

// Argmax bookkeeping with the documented tie order: larger violation,
// then fewer blocks, then lexicographically smaller subset, then
// lexicographically smaller break list.
struct BestTracker {
  std::optional<PartitionCut> cut;
  Rat eps;

  void offer(PartitionCut candidate, const Rat& violation) {
    if (sgn(violation) <= 0) return;
    if (!cut || violation > eps) {
      cut = std::move(candidate);
      eps = violation;
      return;
    }
    if (violation < eps) return;
    const bool better =
        candidate.source_partition.p() < cut->source_partition.p() ||
        (candidate.source_partition.p() == cut->source_partition.p() &&
         (std::lexicographical_compare(candidate.cont_subset.begin(),
                                       candidate.cont_subset.end(),
                                       cut->cont_subset.begin(),
                                       cut->cont_subset.end()) ||
          (candidate.cont_subset == cut->cont_subset &&
           std::lexicographical_compare(
               candidate.source_partition.breaks.begin(),
               candidate.source_partition.breaks.end(),
               cut->source_partition.breaks.begin(),
               cut->source_partition.breaks.end()))));
    if (better) {
      cut = std::move(candidate);
      eps = violation;
    }
  }

  SeparationResult result() const {
    if (!cut) return SeparationResult::inside();
    return SeparationResult::make_violated(*cut, eps);
  }
};

}  // namespace

EnumerationBudget EnumerationBudget::defaults_for(SetKind kind) {
  EnumerationBudget b;
  if (kind != SetKind::Z) {
    b.max_n = 4;
    b.max_partitions = std::uint64_t{1} << 4;
  }
  return b;
}

EnumerationBudget EnumerationBudget::custom(int max_n, int max_m) {
  require(max_n >= 1 && max_n <= 10 && max_m >= 0 && max_m <= 6,
          ErrorCode::BudgetExceeded,
          "enumeration is capped at n <= 10, m <= 6");
  EnumerationBudget b;
  b.max_n = max_n;
  b.max_m = max_m;
  b.max_partitions = std::uint64_t{1} << max_n;
  b.max_subsets = std::uint64_t{1} << max_m;
  return b;
}

std::vector<IntervalPartition> enumerate_partitions(
    const Instance& inst, const Int& capacity,
    const EnumerationBudget& budget) {
  const int n = inst.n();
  require(n <= budget.max_n, ErrorCode::BudgetExceeded,
          "instance has more integer variables than the budget allows");
  require((std::uint64_t{1} << n) <= budget.max_partitions ||
              budget.max_partitions == 0,
          ErrorCode::BudgetExceeded, "partition count above budget");
  std::vector<IntervalPartition> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    IntervalPartition part;
    part.breaks.push_back(0);
    for (int i = 1; i <= n; ++i) {
      if (mask & (std::uint64_t{1} << (i - 1))) part.breaks.push_back(i);
    }
    if (inst.weight(part.last_start()) <= capacity) out.push_back(part);
  }
  return out;
}

SeparationResult brute_force_separate(const Instance& inst,
                                      const IntPoint& pt,
                                      const EnumerationBudget& budget) {
  validate_point(inst, pt);
  BestTracker best;
  for (const IntervalPartition& part :
       enumerate_partitions(inst, inst.b, budget)) {
    PartitionCut cut = oracle_int_cut(inst, inst.b, part);
    const Rat violation = -eval_cut(cut, pt);
    best.offer(std::move(cut), violation);
  }
  return best.result();
}

SeparationResult brute_force_separate(const Instance& inst,
                                      const GeqPoint& pt,
                                      const EnumerationBudget& budget) {
  validate_point(inst, pt);
  const int m = inst.m();
  require(m <= budget.max_m, ErrorCode::BudgetExceeded,
          "instance has more continuous variables than the budget allows");
  BestTracker best;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    const std::vector<int> C = mask_to_subset(m, mask);
    const Int cap = inst.b - inst.u_sum(subset_complement(m, C));
    if (sgn(cap) <= 0) continue;
    Rat folded = pt.s0;  // s0 + s(C), the integer-side slack
    for (int j : C) folded += pt.s[static_cast<std::size_t>(j) - 1];
    for (const IntervalPartition& part :
         enumerate_partitions(inst, cap, budget)) {
      PartitionCut cut = oracle_int_cut(inst, cap, part);
      cut.shape = CutShape::GeqKnapsack;
      cut.cont_subset = C;
      const Rat violation = -eval_cut(cut, pt);
      // Folding the kept continuous mass into the slack must give the
      // same violation; the two evaluations are independent routes.
      Rat lhs_folded = folded;
      for (int i = 1; i <= inst.n(); ++i) {
        lhs_folded += Rat(cut.x_coeffs[static_cast<std::size_t>(i) - 1]) *
                      pt.x[static_cast<std::size_t>(i) - 1];
      }
      internal_check(Rat(cut.rhs) - lhs_folded == violation,
                     "folded and direct violations must agree");
      best.offer(std::move(cut), violation);
    }
  }
  return best.result();
}

SeparationResult brute_force_separate(const Instance& inst,
                                      const LeqPoint& pt,
                                      const EnumerationBudget& budget) {
  validate_point(inst, pt);
  const int n = inst.n();
  const int m = inst.m();
  require(m <= budget.max_m, ErrorCode::BudgetExceeded,
          "instance has more continuous variables than the budget allows");

  // Complemented comparison point, written out directly.
  GeqPoint comp;
  comp.x = pt.x;
  comp.s.resize(static_cast<std::size_t>(m));
  Rat weight = 0;
  for (int i = 1; i <= n; ++i) {
    weight += Rat(inst.weight(i)) * pt.x[static_cast<std::size_t>(i) - 1];
  }
  Rat y_sum = pt.y0;
  for (int j = 1; j <= m; ++j) {
    y_sum += pt.y[static_cast<std::size_t>(j) - 1];
    comp.s[static_cast<std::size_t>(j) - 1] =
        Rat(inst.u[static_cast<std::size_t>(j) - 1]) -
        pt.y[static_cast<std::size_t>(j) - 1];
  }
  comp.s0 = Rat(inst.b) + y_sum - weight;

  BestTracker best;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    const std::vector<int> C = mask_to_subset(m, mask);  // kept y subset
    const std::vector<int> kept_s = subset_complement(m, C);
    const Int big_b = inst.b + inst.u_sum(kept_s);  // B(C) > 0 always
    for (const IntervalPartition& part :
         enumerate_partitions(inst, big_b, budget)) {
      PartitionCut geq = oracle_int_cut(inst, big_b, part);
      geq.shape = CutShape::GeqKnapsack;
      geq.cont_subset = kept_s;
      const Rat geq_violation = Rat(geq.rhs) - [&] {
        Rat lhs = comp.s0;
        for (int j : kept_s) lhs += comp.s[static_cast<std::size_t>(j) - 1];
        for (int i = 1; i <= n; ++i) {
          lhs += Rat(geq.x_coeffs[static_cast<std::size_t>(i) - 1]) *
                 comp.x[static_cast<std::size_t>(i) - 1];
        }
        return lhs;
      }();

      PartitionCut cut;
      cut.shape = CutShape::LeqKnapsack;
      cut.cont_subset = C;
      cut.capacity = big_b;
      cut.source_partition = part;
      cut.x_coeffs.resize(static_cast<std::size_t>(n));
      for (int i = 1; i <= n; ++i) {
        const Int& alpha = geq.x_coeffs[static_cast<std::size_t>(i) - 1];
        internal_check(alpha <= inst.weight(i),
                       "partition coefficients never exceed the weights");
        cut.x_coeffs[static_cast<std::size_t>(i) - 1] =
            inst.weight(i) - alpha;
      }
      cut.rhs = big_b - geq.rhs;
      const Rat violation = -eval_cut(cut, pt);
      internal_check(violation == geq_violation,
                     "complementation must preserve the violation");
      best.offer(std::move(cut), violation);
    }
  }
  return best.result();
}

namespace {

// Shared exact DFS behind validity_oracle. Integer coordinates are
// explored heaviest-first so that the capacity prunes below fire early;
// both prunes evaluate the all-zeros completion of the pruned subtree,
// which is its extreme representative.
struct ValidityDfs {
  const Instance& inst;
  const PartitionCut& cut;
  bool leq = false;
  Int geq_cap;        // >= form: uncovered mass threshold
  Int leq_cap;        // <= form: B(C), overflow threshold
  Int spill;          // u(M \ C), absorbed outside the cut
  std::vector<Int> bounds;
  std::vector<Int> x;
  std::optional<std::pair<std::vector<Int>, Int>> counterexample;

  bool geq_descend(int i, const Int& ax, const Int& cx) {
    if (cx >= cut.rhs) return false;  // whole subtree satisfies the cut
    if (ax >= geq_cap) {
      // Zero completion: no uncovered mass remains, LHS is cx < rhs.
      counterexample = {zero_completed(i), cut.rhs - cx};
      return true;
    }
    if (i == 0) {
      Int uncovered = geq_cap - ax - spill;
      if (sgn(uncovered) < 0) uncovered = 0;
      if (cx + uncovered < cut.rhs) {
        counterexample = {x, cut.rhs - cx - uncovered};
        return true;
      }
      return false;
    }
    return branch(i, ax, cx);
  }

  bool leq_descend(int i, const Int& ax, const Int& cx) {
    if (ax >= leq_cap) {
      // Beyond the threshold every extra unit of x_i moves the slack by
      // a_i and the cut side by c_i <= a_i, so the zero completion is the
      // most violated point of this subtree.
      const Int violation = cx - cut.rhs - (ax - leq_cap);
      if (sgn(violation) > 0) {
        counterexample = {zero_completed(i), violation};
        return true;
      }
      return false;
    }
    if (i == 0) {
      const Int violation = cx - cut.rhs;  // overflow is zero here
      if (sgn(violation) > 0) {
        counterexample = {x, violation};
        return true;
      }
      return false;
    }
    return branch(i, ax, cx);
  }

  bool branch(int i, const Int& ax, const Int& cx) {
    const Int& a_i = inst.weight(i);
    const Int& c_i = cut.x_coeffs[static_cast<std::size_t>(i) - 1];
    Int ax_next = ax;
    Int cx_next = cx;
    for (Int v = 0; v <= bounds[static_cast<std::size_t>(i) - 1]; ++v) {
      x[static_cast<std::size_t>(i) - 1] = v;
      const bool found = leq ? leq_descend(i - 1, ax_next, cx_next)
                             : geq_descend(i - 1, ax_next, cx_next);
      if (found) return true;
      ax_next += a_i;
      cx_next += c_i;
    }
    x[static_cast<std::size_t>(i) - 1] = 0;
    return false;
  }

  std::vector<Int> zero_completed(int i) const {
    std::vector<Int> out = x;
    for (int k = 1; k <= i; ++k) out[static_cast<std::size_t>(k) - 1] = 0;
    return out;
  }
};

// Distributes the required slack mass over the continuous variables,
// spending on variables outside the cut first so the cut LHS stays
// minimal. Returns (per-variable values, unbounded-slack value).
std::pair<std::vector<Rat>, Rat> greedy_slack(const Instance& inst,
                                              const std::vector<int>& in_cut,
                                              Int needed) {
  const int m = inst.m();
  std::vector<Rat> vals(static_cast<std::size_t>(m), Rat(0));
  std::vector<bool> kept(static_cast<std::size_t>(m) + 1, false);
  for (int j : in_cut) kept[static_cast<std::size_t>(j)] = true;
  if (sgn(needed) < 0) needed = 0;
  for (int pass = 0; pass < 2; ++pass) {
    for (int j = 1; j <= m && sgn(needed) > 0; ++j) {
      if (kept[static_cast<std::size_t>(j)] != (pass == 1)) continue;
      const Int take =
          std::min(inst.u[static_cast<std::size_t>(j) - 1], needed);
      vals[static_cast<std::size_t>(j) - 1] = Rat(take);
      needed -= take;
    }
  }
  return {std::move(vals), Rat(needed)};
}

}  // namespace

ValidityOutcome validity_oracle(const Instance& inst, const PartitionCut& cut,
                                const EnumerationBudget& budget) {
  const int n = inst.n();
  const int m = inst.m();
  require(static_cast<int>(cut.x_coeffs.size()) == n,
          ErrorCode::ShapeMismatch, "cut dimension mismatch");
  require(n <= budget.max_n && m <= budget.max_m, ErrorCode::BudgetExceeded,
          "validity enumeration above budget");

  ValidityDfs dfs{inst, cut};
  dfs.x.assign(static_cast<std::size_t>(n), Int(0));
  const std::vector<int> complement =
      subset_complement(m, cut.cont_subset);

  Int box_cap;
  switch (cut.shape) {
    case CutShape::IntKnapsack:
      for (const Int& c : cut.x_coeffs) {
        internal_check(sgn(c) >= 0, ">=-form coefficients are nonnegative");
      }
      dfs.geq_cap = cut.capacity;
      dfs.spill = 0;
      box_cap = cut.capacity;
      break;
    case CutShape::GeqKnapsack: {
      for (const Int& c : cut.x_coeffs) {
        internal_check(sgn(c) >= 0, ">=-form coefficients are nonnegative");
      }
      dfs.geq_cap = inst.b;
      dfs.spill = inst.u_sum(complement);
      internal_check(inst.b - dfs.spill == cut.capacity,
                     "stored capacity must equal b(C)");
      box_cap = inst.b;
      break;
    }
    case CutShape::LeqKnapsack: {
      dfs.leq = true;
      dfs.spill = inst.u_sum(complement);
      dfs.leq_cap = inst.b + dfs.spill;
      internal_check(dfs.leq_cap == cut.capacity,
                     "stored capacity must equal B(C)");
      box_cap = dfs.leq_cap;
      for (int i = 1; i <= n; ++i) {
        // A coefficient above its weight is unboundedly violated; the
        // sweep below assumes c_i <= a_i.
        if (cut.x_coeffs[static_cast<std::size_t>(i) - 1] > inst.weight(i)) {
          const Int t = std::max(ceil_div(dfs.leq_cap, inst.weight(i)),
                                 abs(cut.rhs) + dfs.leq_cap + 1);
          std::vector<Int> wx(static_cast<std::size_t>(n), Int(0));
          wx[static_cast<std::size_t>(i) - 1] = t;
          ValidityOutcome out;
          out.valid = false;
          Int ax = t * inst.weight(i);
          Int viol = t * cut.x_coeffs[static_cast<std::size_t>(i) - 1] -
                     cut.rhs - (ax - dfs.leq_cap);
          internal_check(sgn(viol) > 0, "runaway coefficient must violate");
          LeqPoint witness;
          witness.x.assign(static_cast<std::size_t>(n), Rat(0));
          witness.x[static_cast<std::size_t>(i) - 1] = Rat(t);
          auto [vals, y0] = greedy_slack(inst, cut.cont_subset,
                                         ax - inst.b);
          witness.y = std::move(vals);
          witness.y0 = y0;
          validate_point(inst, witness);
          out.witness_violation = -eval_cut(cut, witness);
          internal_check(sgn(out.witness_violation) > 0,
                         "witness must violate the cut");
          out.witness = std::move(witness);
          return out;
        }
      }
      break;
    }
  }

  dfs.bounds.resize(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) {
    dfs.bounds[static_cast<std::size_t>(i) - 1] =
        ceil_div(box_cap, inst.weight(i));
  }

  const bool found = dfs.leq ? dfs.leq_descend(n, Int(0), Int(0))
                             : dfs.geq_descend(n, Int(0), Int(0));
  ValidityOutcome out;
  if (!found) return out;

  out.valid = false;
  const std::vector<Int>& wx = dfs.counterexample->first;
  Int ax = 0;
  for (int i = 1; i <= n; ++i) {
    ax += inst.weight(i) * wx[static_cast<std::size_t>(i) - 1];
  }

  switch (cut.shape) {
    case CutShape::IntKnapsack: {
      IntPoint witness;
      witness.x.reserve(wx.size());
      for (const Int& v : wx) witness.x.emplace_back(v);
      Int x0 = cut.capacity - ax;
      if (sgn(x0) < 0) x0 = 0;
      witness.x0 = Rat(x0);
      validate_int_point(inst, cut.capacity, witness);
      out.witness_violation = -eval_cut(cut, witness);
      internal_check(sgn(out.witness_violation) > 0,
                     "witness must violate the cut");
      out.witness = std::move(witness);
      break;
    }
    case CutShape::GeqKnapsack: {
      GeqPoint witness;
      witness.x.reserve(wx.size());
      for (const Int& v : wx) witness.x.emplace_back(v);
      auto [vals, s0] = greedy_slack(inst, cut.cont_subset, inst.b - ax);
      witness.s = std::move(vals);
      witness.s0 = s0;
      validate_point(inst, witness);
      out.witness_violation = -eval_cut(cut, witness);
      internal_check(sgn(out.witness_violation) > 0,
                     "witness must violate the cut");
      out.witness = std::move(witness);
      break;
    }
    case CutShape::LeqKnapsack: {
      LeqPoint witness;
      witness.x.reserve(wx.size());
      for (const Int& v : wx) witness.x.emplace_back(v);
      auto [vals, y0] = greedy_slack(inst, cut.cont_subset, ax - inst.b);
      witness.y = std::move(vals);
      witness.y0 = y0;
      validate_point(inst, witness);
      out.witness_violation = -eval_cut(cut, witness);
      internal_check(sgn(out.witness_violation) > 0,
                     "witness must violate the cut");
      out.witness = std::move(witness);
      break;
    }
  }
  return out;
}

namespace {

std::uint64_t draw(std::mt19937_64& rng, std::uint64_t bound_incl) {
  return bound_incl == 0 ? 0 : rng() % (bound_incl + 1);
}

unsigned long small_cap(const Int& v, unsigned long cap) {
  if (!v.fits_ulong_p()) return cap;
  return std::min(v.get_ui(), cap);
}

// One rational coordinate in [0, units]. When forced fractional the value
// lands strictly between two integers (denominator 2..12).
Rat draw_coord(std::mt19937_64& rng, unsigned long units, bool fractional) {
  if (!fractional) return Rat(draw(rng, units));
  const unsigned long den = 2 + rng() % 11;
  const unsigned long whole = draw(rng, units);
  const unsigned long num = whole * den + 1 + rng() % (den - 1);
  return make_rat(Int(num), Int(den));
}

}  // namespace

Instance gen_instance(std::uint64_t seed, const EnumerationBudget& budget) {
  std::mt19937_64 rng(seed);
  Instance inst;
  const int n = 1 + static_cast<int>(rng() % budget.max_n);
  const int m = static_cast<int>(rng() % (budget.max_m + 1));
  inst.a.reserve(static_cast<std::size_t>(n));
  Int cur = 2 + static_cast<long>(rng() % 4);  // a_1 in {2..5}
  inst.a.push_back(cur);
  for (int i = 1; i < n; ++i) {
    cur *= 2 + static_cast<long>(rng() % 3);  // multipliers in {2..4}
    inst.a.push_back(cur);
  }
  for (int j = 0; j < m; ++j) {
    inst.u.emplace_back(1 + static_cast<long>(rng() % 10));
  }
  inst.b = 1 + static_cast<long>(rng() % 200);
  validate_instance(inst);
  return inst;
}

IntPoint gen_int_point(std::uint64_t seed, const Instance& inst) {
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  IntPoint pt;
  pt.x.resize(static_cast<std::size_t>(inst.n()));
  Rat weight = 0;
  for (int i = 1; i <= inst.n(); ++i) {
    const unsigned long units =
        small_cap(floor_div(inst.b, inst.weight(i)) + 1, 1000);
    const bool fractional = (rng() & 1) != 0;
    pt.x[static_cast<std::size_t>(i) - 1] = draw_coord(rng, units, fractional);
    weight += Rat(inst.weight(i)) * pt.x[static_cast<std::size_t>(i) - 1];
  }
  const unsigned long b_cap = small_cap(inst.b, 100000);
  pt.x0 = (rng() & 1) ? Rat(draw(rng, b_cap)) : Rat(draw(rng, b_cap / 4));
  const Rat deficit = Rat(inst.b) - pt.x0 - weight;
  if (sgn(deficit) > 0) pt.x0 += deficit;  // minimal repair
  validate_point(inst, pt);
  return pt;
}

GeqPoint gen_geq_point(std::uint64_t seed, const Instance& inst) {
  std::mt19937_64 rng(seed ^ 0xc2b2ae3d27d4eb4fULL);
  GeqPoint pt;
  pt.x.resize(static_cast<std::size_t>(inst.n()));
  pt.s.resize(static_cast<std::size_t>(inst.m()));
  Rat total = 0;
  for (int i = 1; i <= inst.n(); ++i) {
    const unsigned long units =
        small_cap(floor_div(inst.b, inst.weight(i)) + 1, 1000);
    pt.x[static_cast<std::size_t>(i) - 1] =
        draw_coord(rng, units, (rng() & 1) != 0);
    total += Rat(inst.weight(i)) * pt.x[static_cast<std::size_t>(i) - 1];
  }
  for (int j = 1; j <= inst.m(); ++j) {
    const unsigned long uj =
        small_cap(inst.u[static_cast<std::size_t>(j) - 1], 1000);
    Rat sj = draw_coord(rng, uj, (rng() & 1) != 0);
    if (sj > Rat(inst.u[static_cast<std::size_t>(j) - 1])) {
      sj = Rat(inst.u[static_cast<std::size_t>(j) - 1]);
    }
    pt.s[static_cast<std::size_t>(j) - 1] = sj;
    total += sj;
  }
  const unsigned long b_cap = small_cap(inst.b, 100000);
  pt.s0 = (rng() & 1) ? Rat(draw(rng, b_cap / 2)) : Rat(0);
  total += pt.s0;
  const Rat deficit = Rat(inst.b) - total;
  if (sgn(deficit) > 0) pt.s0 += deficit;  // minimal repair
  validate_point(inst, pt);
  return pt;
}

LeqPoint gen_leq_point(std::uint64_t seed, const Instance& inst) {
  std::mt19937_64 rng(seed ^ 0x165667b19e3779f9ULL);
  LeqPoint pt;
  pt.x.resize(static_cast<std::size_t>(inst.n()));
  pt.y.resize(static_cast<std::size_t>(inst.m()));
  const Int reach = inst.b + inst.u_total();
  Rat total = 0;
  for (int i = 1; i <= inst.n(); ++i) {
    const unsigned long units =
        small_cap(floor_div(reach, inst.weight(i)) + 1, 1000);
    pt.x[static_cast<std::size_t>(i) - 1] =
        draw_coord(rng, units, (rng() & 1) != 0);
    total += Rat(inst.weight(i)) * pt.x[static_cast<std::size_t>(i) - 1];
  }
  Rat cover = Rat(inst.b);
  for (int j = 1; j <= inst.m(); ++j) {
    const unsigned long uj =
        small_cap(inst.u[static_cast<std::size_t>(j) - 1], 1000);
    Rat yj = draw_coord(rng, uj, (rng() & 1) != 0);
    if (yj > Rat(inst.u[static_cast<std::size_t>(j) - 1])) {
      yj = Rat(inst.u[static_cast<std::size_t>(j) - 1]);
    }
    pt.y[static_cast<std::size_t>(j) - 1] = yj;
    cover += yj;
  }
  pt.y0 = (rng() & 1) ? Rat(draw(rng, small_cap(inst.b, 100000) / 2))
                      : Rat(0);
  cover += pt.y0;
  const Rat excess = total - cover;
  if (sgn(excess) > 0) pt.y0 += excess;  // minimal repair
  validate_point(inst, pt);
  return pt;
}

}  // namespace divknap
