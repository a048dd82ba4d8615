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

#include "divknap/bench.hpp"

#include <chrono>
#include <cmath>
#include <random>

#include "divknap/error.hpp"
#include "divknap/geq_sep.hpp"
#include "divknap/integer_sep.hpp"

namespace divknap {

namespace {

Int random_below_pow2(std::mt19937_64& rng, int bits) {
  Int v = 0;
  int remaining = bits;
  while (remaining > 0) {
    const int take = remaining < 64 ? remaining : 64;
    std::uint64_t word = rng();
    if (take < 64) word >>= (64 - take);
    v <<= take;
    v += Int(static_cast<unsigned long>(word));
    remaining -= take;
  }
  return v;
}

double elapsed_ms(const std::chrono::steady_clock::time_point& from) {
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now() - from)
      .count();
}

}  // namespace

Instance gen_bench_instance(std::uint64_t seed, int n, int m) {
  require(n >= 1 && m >= 0, ErrorCode::PreconditionViolated,
          "bench sizes must have n >= 1, m >= 0");
  std::mt19937_64 rng(seed ^ (static_cast<std::uint64_t>(n) << 32) ^
                      static_cast<std::uint64_t>(m));
  Instance inst;
  inst.a.reserve(static_cast<std::size_t>(n));
  Int cur = 1;
  for (int i = 1; i <= n; ++i) {
    cur <<= 1;  // a_i = 2^i
    inst.a.push_back(cur);
  }
  for (int j = 0; j < m; ++j) {
    inst.u.emplace_back(1 + static_cast<long>(rng() % 10));
  }
  // Capacity reaches across the whole chain so the recursion depth scales
  // with n; adding u(M) keeps every prefix capacity positive.
  inst.b = inst.u_total() + 1 + random_below_pow2(rng, n + 1);
  return inst;
}

GeqPoint gen_bench_point(std::uint64_t seed, const Instance& inst) {
  std::mt19937_64 rng(seed ^ 0x5851f42d4c957f2dULL);
  GeqPoint pt;
  pt.x.resize(static_cast<std::size_t>(inst.n()));
  pt.s.resize(static_cast<std::size_t>(inst.m()));
  Rat total = 0;
  for (int i = 1; i <= inst.n(); ++i) {
    const unsigned long units = rng() % 4;
    Rat xi;
    if (rng() & 1) {
      const unsigned long den = 2 + rng() % 4;
      xi = make_rat(Int(units * den + 1 + rng() % (den - 1)), Int(den));
    } else {
      xi = Rat(units);
    }
    pt.x[static_cast<std::size_t>(i) - 1] = xi;
    if (sgn(xi) != 0) total += Rat(inst.weight(i)) * xi;
  }
  for (int j = 1; j <= inst.m(); ++j) {
    const unsigned long uj = inst.u[static_cast<std::size_t>(j) - 1].get_ui();
    const unsigned long den = 2 + rng() % 4;
    pt.s[static_cast<std::size_t>(j) - 1] =
        make_rat(Int(rng() % (uj * den + 1)), Int(den));
    total += pt.s[static_cast<std::size_t>(j) - 1];
  }
  pt.s0 = 0;
  const Rat deficit = Rat(inst.b) - total;
  if (sgn(deficit) > 0) pt.s0 = deficit;
  validate_point(inst, pt);
  return pt;
}

BenchRow run_bench_row(std::uint64_t seed, int n, int m) {
  BenchRow row;
  row.n = n;
  row.m = m;
  const Instance inst = gen_bench_instance(seed, n, m);

  if (m == 0) {
    const GeqPoint gpt = gen_bench_point(seed, inst);
    IntPoint pt;
    pt.x0 = gpt.s0;
    pt.x = gpt.x;
    OpCounter ops;
    auto t0 = std::chrono::steady_clock::now();
    const SeparationResult res = separate_integer(inst, inst.b, pt, &ops);
    row.serial_ms = elapsed_ms(t0);
    row.opcount = ops.ops;
    row.violated = res.violated();
    row.model = static_cast<double>(n);
  } else {
    const GeqPoint pt = gen_bench_point(seed, inst);
    OpCounter serial_ops;
    auto t0 = std::chrono::steady_clock::now();
    const SeparationResult serial_res =
        separate_geq(inst, pt, &serial_ops, ExecMode::Serial);
    row.serial_ms = elapsed_ms(t0);

    OpCounter parallel_ops;
    t0 = std::chrono::steady_clock::now();
    const SeparationResult parallel_res =
        separate_geq(inst, pt, &parallel_ops, ExecMode::Parallel);
    row.parallel_ms = elapsed_ms(t0);

    internal_check(serial_ops.ops == parallel_ops.ops,
                   "serial and parallel op counts must agree");
    internal_check(serial_res.violated() == parallel_res.violated() &&
                       (!serial_res.violated() ||
                        serial_res.violation == parallel_res.violation),
                   "serial and parallel results must agree");
    row.opcount = serial_ops.ops;
    row.violated = serial_res.violated();
    row.model = static_cast<double>(m) * static_cast<double>(n) +
                static_cast<double>(m) * std::log2(static_cast<double>(m));
  }
  row.ratio = static_cast<double>(row.opcount) / row.model;
  return row;
}

std::vector<BenchRow> run_bench(
    std::uint64_t seed, const std::vector<std::pair<int, int>>& grid) {
  std::vector<BenchRow> rows;
  rows.reserve(grid.size());
  for (const auto& [n, m] : grid) {
    rows.push_back(run_bench_row(seed, n, m));
  }
  return rows;
}

std::vector<std::pair<int, int>> default_bench_grid() {
  return {{250, 250},   {500, 500},   {1000, 1000}, {2000, 2000},
          {1000, 0},    {10000, 0},   {100000, 0}};
}

}  // namespace divknap
