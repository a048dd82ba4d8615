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

#include "divknap/verify.hpp"

#include <chrono>

#include "divknap/error.hpp"
#include "divknap/integer_sep.hpp"
#include "divknap/leq_sep.hpp"

namespace divknap {

namespace {

struct TrialOutcome {
  bool violated = false;
  bool mismatch = false;
  bool validity_failure = false;
  std::string note;
};

TrialOutcome run_trial(const VerifyOptions& options, std::uint64_t seed) {
  TrialOutcome out;
  const Instance inst = gen_instance(seed, options.budget);

  SeparationResult algo;
  SeparationResult oracle;
  switch (options.set) {
    case SetKind::Z: {
      const IntPoint pt = gen_int_point(seed, inst);
      algo = separate_integer(inst, inst.b, pt);
      oracle = brute_force_separate(inst, pt, options.budget);
      break;
    }
    case SetKind::Geq: {
      const GeqPoint pt = gen_geq_point(seed, inst);
      algo = separate_geq(inst, pt);
      oracle = brute_force_separate(inst, pt, options.budget);
      break;
    }
    case SetKind::Leq: {
      const LeqPoint pt = gen_leq_point(seed, inst);
      algo = separate_leq(inst, pt);
      oracle = brute_force_separate(inst, pt, options.budget);
      break;
    }
  }

  out.violated = algo.violated();
  if (algo.violated() != oracle.violated() ||
      (algo.violated() && algo.violation != oracle.violation)) {
    out.mismatch = true;
    out.note = "seed " + std::to_string(seed) + ": algorithm " +
               (algo.violated() ? to_string(algo.violation) : "inside") +
               " vs oracle " +
               (oracle.violated() ? to_string(oracle.violation) : "inside");
    return out;
  }
  if (algo.violated() && options.check_validity) {
    const ValidityOutcome validity =
        validity_oracle(inst, *algo.cut, options.budget);
    if (!validity.valid) {
      out.validity_failure = true;
      out.note = "seed " + std::to_string(seed) +
                 ": emitted cut fails the validity oracle by " +
                 to_string(validity.witness_violation);
    }
  }
  return out;
}

}  // namespace

VerifyReport run_verify(const VerifyOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  VerifyReport report;
  report.trials = options.count;
  std::vector<TrialOutcome> outcomes(
      static_cast<std::size_t>(options.count));

  const auto worker = [&](int t) {
    try {
      outcomes[static_cast<std::size_t>(t)] =
          run_trial(options, options.seed + static_cast<std::uint64_t>(t));
    } catch (const Error& e) {
      TrialOutcome& slot = outcomes[static_cast<std::size_t>(t)];
      slot.mismatch = true;
      slot.note = "seed " +
                  std::to_string(options.seed +
                                 static_cast<std::uint64_t>(t)) +
                  ": " + e.what();
    }
  };

#ifdef _OPENMP
  if (options.mode == ExecMode::Parallel) {
#pragma omp parallel for schedule(dynamic)
    for (int t = 0; t < options.count; ++t) worker(t);
  } else {
    for (int t = 0; t < options.count; ++t) worker(t);
  }
#else
  for (int t = 0; t < options.count; ++t) worker(t);
#endif

  for (const TrialOutcome& o : outcomes) {
    if (o.violated) {
      ++report.violated_count;
    } else if (!o.mismatch) {
      ++report.inside_count;
    }
    if (o.mismatch) ++report.mismatches;
    if (o.validity_failure) ++report.validity_failures;
    if (!o.note.empty() && report.failure_notes.size() < 10) {
      report.failure_notes.push_back(o.note);
    }
  }
  report.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  return report;
}

}  // namespace divknap
