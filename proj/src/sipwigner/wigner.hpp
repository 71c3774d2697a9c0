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
#include <span>
#include <string>
#include <vector>

#include "sipwigner/map_oracle.hpp"

namespace sipwigner {

enum class Verdict { Pass, Fail };

struct Witness {
  Vec x;
  Vec y;
  std::vector<Scalar> lhs;     // quantity computed through the map
  std::vector<Scalar> rhs;     // the same quantity in the source space
  std::vector<Scalar> coeffs;  // (alpha, beta) for linearity draws
  double violation = 0.0;
  double threshold = 0.0;
};

struct Report {
  std::string check;
  Verdict verdict = Verdict::Pass;
  double max_violation = 0.0;
  std::optional<Witness> witness;  // always present on Fail
  std::uint64_t seed = 0;
  std::size_t pairs_checked = 0;
  double tol = 0.0;
  Field source_field = Field::Real;
  bool values_complex = false;
  // Surjectivity is a hypothesis no finite sample can confirm.
  bool surjectivity_assumed = true;

  bool passed() const { return verdict == Verdict::Pass; }
};

struct CheckOptions {
  double tol = 1e-8;
  std::uint64_t seed = 0;
  // The fixture's semi-inner product is one choice among many; checking
  // |[f(x), f(y)]| = |[x, y]| against it is refused unless this is cleared.
  bool require_smooth = true;
  std::size_t linearity_draws = 200;
};

// | |[f(x), f(y)]| - |[x, y]| | <= tol (1 + |x||y|) over samples x samples.
Report check_wigner(const MapOracle& m, std::span<const Vec> samples,
                    const CheckOptions& options = {});

// {|f(x)+f(y)|, |f(x)-f(y)|} = {|x+y|, |x-y|} as two-element multisets;
// real spaces only.
Report check_phase_isometry_sets(const MapOracle& m, std::span<const Vec> samples,
                                 const CheckOptions& options = {});

// [f(x), f(y)] = [x, y] without absolute values.
Report check_exact_preservation(const MapOracle& m, std::span<const Vec> samples,
                                const CheckOptions& options = {});

// f(a x + b y) = a f(x) + b f(y) on seeded draws from the samples, plus
// |f(x)| = |x|. The samples must span the source.
Report check_linearity(const MapOracle& m, std::span<const Vec> samples,
                       const CheckOptions& options = {});

nlohmann::json to_json(const Report& r);

}  // namespace sipwigner
