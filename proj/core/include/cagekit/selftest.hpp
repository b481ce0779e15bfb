// Copyright 2026 The cagekit Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace cagekit {

struct SelftestOptions {
  // Field orders above this are left out of every criterion.
  std::uint32_t q_max = 9;
  // Skip diameter computations for q >= 11.
  bool quick = false;
  unsigned threads = 1;
  std::uint64_t seed = 0x5eed'ca9e'0008ull;
  // Criterion ids to run; empty runs all of them.
  std::vector<int> only;
  // Progress lines, one per finished criterion, when non-null.
  std::ostream* log = nullptr;
};

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::vector<std::string> failures;
  std::string summary;
  double seconds = 0.0;
};

// Runs the acceptance battery: cage reproduction, formulation equivalence,
// B_q/H_q isomorphism, stage ledger, distance claims, the perfect
// dominating set, its removal, verifier soundness, and I/O round trips.
std::vector<CriterionResult> run_selftest(const SelftestOptions& options);

// "PASS  1  name  (1.23 s)  summary" followed by indented failure lines.
std::string format_result(const CriterionResult& r);

}  // namespace cagekit
