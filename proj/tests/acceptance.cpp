// Copyright 2026 The sipwigner Authors
//
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

// Acceptance gate: one line per criterion, nonzero exit if any fails.
//   acceptance [--seed N] [--criterion K]

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <string>

#include "sipwigner/json_io.hpp"
#include "sipwigner/selftest.hpp"

int main(int argc, char** argv) {
  std::uint64_t seed = 20260101;
  int only = 0;
  for (int i = 1; i + 1 < argc; i += 2) {
    if (std::strcmp(argv[i], "--seed") == 0) seed = std::strtoull(argv[i + 1], nullptr, 0);
    else if (std::strcmp(argv[i], "--criterion") == 0) only = std::atoi(argv[i + 1]);
    else {
      std::fprintf(stderr, "usage: %s [--seed N] [--criterion K]\n", argv[0]);
      return 2;
    }
  }

  int failed = 0;
  std::printf("acceptance seed %llu\n", static_cast<unsigned long long>(seed));
  for (int id = 1; id <= sipwigner::kCriterionCount; ++id) {
    if (only != 0 && id != only) continue;
    const auto r = sipwigner::run_criterion(id, seed);
    std::printf("[%s] AC%d %s (%.1f ms)\n       %s\n       %s\n", r.passed ? "PASS" : "FAIL", r.id,
                r.name.c_str(), r.elapsed_ms, r.detail.c_str(),
                sipwigner::dump_json(r.metrics).c_str());
    if (!r.passed) ++failed;
  }
  std::printf("%d criterion(s) failed\n", failed);
  return failed == 0 ? 0 : 1;
}
