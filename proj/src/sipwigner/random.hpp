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
#include <numbers>
#include <random>

#include "sipwigner/space.hpp"

namespace sipwigner {

// Every random draw in the toolkit flows from one 64-bit seed through here.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double gaussian() { return normal_(engine_); }
  double uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(engine_);
  }
  std::size_t index(std::size_t n) {
    return std::uniform_int_distribution<std::size_t>(0, n - 1)(engine_);
  }
  bool coin() { return index(2) == 1; }
  std::uint64_t bits() { return engine_(); }

  // Standard Gaussian over the field (complex: independent real/imag parts).
  Scalar gaussian(Field field) {
    const double re = gaussian();
    return field == Field::Complex ? Scalar(re, gaussian()) : Scalar(re, 0.0);
  }
  // Uniform on {+1, -1} or on the unit circle.
  Scalar unimodular(Field field) {
    if (field == Field::Real) return coin() ? 1.0 : -1.0;
    return std::polar(1.0, uniform(0.0, 2.0 * std::numbers::pi));
  }

  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
  std::normal_distribution<double> normal_{0.0, 1.0};
};

// splitmix64 finalizer; used to derive independent sub-seeds.
inline std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
  return mix64(seed ^ mix64(stream));
}

}  // namespace sipwigner
