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
#include <optional>
#include <string>
#include <vector>

#include "sipwigner/map_oracle.hpp"

namespace sipwigner {

// One run of the checkers or the reconstruction, as read from JSON:
//   {"source": Space, "target": Space, "map": MapSpec, "checks": [...],
//    "tol": 1e-8, "samples": 16, "seed": 42}
// MapSpec: {"builtin": "identity" | "example_1_1_T"} or
//          {"isometry": IsometrySpec} or
//          {"random_isometry": {"seed": u64, "conjugate": bool}} (weighted
//          permutation, an isometry for every p) or
//          {"random_unitary": {"seed": u64, "conjugate": bool}} (dense; an
//          isometry only for p = 2),
//          each optionally with "phase_seed": u64 and "scale": scalar.
struct RunConfig {
  std::optional<Space> source;
  std::optional<Space> target;
  nlohmann::json map;
  std::vector<std::string> checks{"wigner"};
  double tol = 1e-8;
  std::size_t samples = 16;
  std::uint64_t seed = 0;
};

RunConfig run_config_from_json(const nlohmann::json& j);
MapOracle build_map(const RunConfig& config);

// sip value next to its finite-difference cross-check. Where the oracle is
// undefined the document carries "oracle": null and non_smooth is set.
struct SipEval {
  nlohmann::json doc;
  bool non_smooth = false;
};
// {"space": Space, "x": [...], "y": [...], "h": optional step}
SipEval cmd_sip_eval(const nlohmann::json& j);

// {"space": Space, "x": [...], "y": [...], "tol": optional}
nlohmann::json cmd_orth_check(const nlohmann::json& j);

nlohmann::json cmd_check(const RunConfig& config);
nlohmann::json cmd_reconstruct(const RunConfig& config);
nlohmann::json cmd_counterexample();

}  // namespace sipwigner
