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

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace sipwigner {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double elapsed_ms = 0.0;
  nlohmann::json metrics;
};

inline constexpr int kCriterionCount = 7;

// Runs one acceptance criterion (1..7) under the given seed.
CriterionResult run_criterion(int id, std::uint64_t seed);
std::vector<CriterionResult> run_acceptance(std::uint64_t seed);

nlohmann::json to_json(const std::vector<CriterionResult>& results, std::uint64_t seed);

}  // namespace sipwigner
