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
#include <utility>
#include <vector>

#include "sipwigner/map_oracle.hpp"

namespace sipwigner {

enum class Kind { Linear, ConjugateLinear };

std::string_view kind_name(Kind kind);

struct PhaseSample {
  Vec x;
  Scalar sigma;
};

// f(x) = sigma(x) U x^(*), where x^(*) is x or conj(x) according to kind.
// Gauge: sigma(e_1) = 1, i.e. the first column of U is f(e_1).
struct Reconstruction {
  Matrix U;
  Kind kind = Kind::Linear;
  std::vector<PhaseSample> phase_samples;
  double residual = 0.0;  // max over the test set of |f(x) - sigma(x) U x^(*)| / |x|
  Field field = Field::Real;
  std::uint64_t seed = 0;

  Vec apply(const Vec& x) const;
};

struct ReconstructOptions {
  double tol = 1e-8;
  std::uint64_t seed = 0;
  std::size_t test_vectors = 100;
};

// gamma with f(lambda x) = gamma f(x) and |gamma| = |lambda|.
Scalar recover_scalar_action(const MapOracle& m, const Vec& x, Scalar lambda,
                             double tol = 1e-8);

// (alpha, beta) with f(x + y) = alpha f(x) + beta f(y), |alpha| = |beta| = 1.
std::pair<Scalar, Scalar> recover_pair_coeffs(const MapOracle& m, const Vec& x, const Vec& y,
                                              double tol = 1e-8);

// Reads h(i) off the expansion of f(e_1 + i e_2) in f(e_1), f(e_2):
// +i means linear, -i conjugate-linear.
Kind detect_kind(const MapOracle& m, double tol = 1e-8);

// Phase at x for a finished reconstruction: [f(x), U x^(*)] / |x|^2.
Scalar phase_at(const Reconstruction& r, const MapOracle& m, const Vec& x);

Reconstruction reconstruct(const MapOracle& m, const ReconstructOptions& options = {});

nlohmann::json to_json(const Reconstruction& r, const Space& target);

}  // namespace sipwigner
