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

// Acceptance runner: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails.

#include <iostream>

#include "CLI11.hpp"
#include "cagekit/selftest.hpp"

int main(int argc, char** argv) {
  cagekit::SelftestOptions opt;
  opt.q_max = 16;
  CLI::App app{"cagekit acceptance criteria"};
  app.add_option("--q-max", opt.q_max, "Largest field order")->capture_default_str();
  app.add_option("--only", opt.only, "Criterion ids to run")->check(CLI::Range(1, 9));
  app.add_option("--threads", opt.threads)->capture_default_str();
  app.add_option("--seed", opt.seed)->capture_default_str();
  CLI11_PARSE(app, argc, argv);

  const auto results = cagekit::run_selftest(opt);
  int failed = 0;
  for (const auto& r : results) {
    std::cout << cagekit::format_result(r);
    failed += r.passed ? 0 : 1;
  }
  std::cout << (results.size() - failed) << "/" << results.size() << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
