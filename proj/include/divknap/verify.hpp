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

#ifndef DIVKNAP_VERIFY_HPP
#define DIVKNAP_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "divknap/geq_sep.hpp"
#include "divknap/oracle.hpp"

namespace divknap {

/// Seeded algorithm-vs-brute-force equivalence trials. One trial draws an
/// instance and a relaxation point, runs the combinatorial separator and
/// the exhaustive oracle, and demands exact agreement of the violation
/// (membership verdicts included). Optionally every algorithm-emitted cut
/// is re-checked by the validity oracle.
struct VerifyOptions {
  SetKind set = SetKind::Z;
  int count = 1000;
  std::uint64_t seed = 42;
  EnumerationBudget budget = EnumerationBudget::defaults_for(SetKind::Z);
  bool check_validity = true;
  ExecMode mode = ExecMode::Serial;  // Parallel fans trials out over threads
};

struct VerifyReport {
  int trials = 0;
  int mismatches = 0;
  int inside_count = 0;
  int violated_count = 0;
  int validity_failures = 0;
  std::vector<std::string> failure_notes;  // first few, for diagnostics
  double seconds = 0.0;

  bool ok() const { return mismatches == 0 && validity_failures == 0; }
};

VerifyReport run_verify(const VerifyOptions& options);

}  // namespace divknap

#endif  // DIVKNAP_VERIFY_HPP
