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

// Independent reference computations for the test suite. Nothing here calls
// into the library's numerical routines.

#pragma once

#include <cmath>
#include <complex>
#include <functional>
#include <limits>
#include <vector>

#include "sipwigner/random.hpp"
#include "sipwigner/space.hpp"

namespace oracle {

using sipwigner::Field;
using sipwigner::Scalar;
using sipwigner::Space;
using sipwigner::Vec;

// Plain sum of |x_i|^p, no rescaling.
inline double lp_norm(const Vec& x, double p) {
  double acc = 0.0;
  for (Eigen::Index i = 0; i < x.size(); ++i) acc += std::pow(std::abs(x[i]), p);
  return std::pow(acc, 1.0 / p);
}

// |y| times the derivative of |y + t x| at t = 0, from the chain rule on
// sum |y_i + t x_i|^p; the imaginary part comes from the same sum.
inline Scalar lp_sip_chain_rule(const Vec& x, const Vec& y, double p) {
  const double ny = lp_norm(y, p);
  if (ny == 0.0) return 0.0;
  Scalar acc = 0.0;
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    const double a = std::abs(y[i]);
    if (a == 0.0) continue;
    acc += x[i] * std::conj(y[i]) * std::pow(a, p - 2.0);
  }
  return acc / std::pow(ny, p - 2.0);
}

struct GridMin {
  double arg = 0.0;
  double value = std::numeric_limits<double>::infinity();
};

// Uniform grid search on [lo, hi].
inline GridMin grid_min(const std::function<double(double)>& g, double lo, double hi,
                        int points) {
  GridMin best;
  for (int k = 0; k <= points; ++k) {
    const double t = lo + (hi - lo) * k / points;
    const double v = g(t);
    if (v < best.value) best = {t, v};
  }
  return best;
}

// Repeated zooming grid search over a box in R^2.
struct GridMin2 {
  double a = 0.0;
  double b = 0.0;
  double value = std::numeric_limits<double>::infinity();
};

inline GridMin2 grid_min2(const std::function<double(double, double)>& g, double ca,
                          double cb, double half_width, int levels, int points = 40) {
  GridMin2 best{ca, cb, g(ca, cb)};
  double w = half_width;
  for (int level = 0; level < levels; ++level) {
    const double a0 = best.a, b0 = best.b;
    for (int i = -points; i <= points; ++i) {
      for (int j = -points; j <= points; ++j) {
        const double a = a0 + w * i / points;
        const double b = b0 + w * j / points;
        const double v = g(a, b);
        if (v < best.value) best = {a, b, v};
      }
    }
    w *= 4.0 / points;
  }
  return best;
}

// Random vector with Gaussian entries, not normalized.
inline Vec gaussian_vec(const Space& s, sipwigner::Rng& rng) {
  Vec v(s.dim());
  for (int i = 0; i < s.dim(); ++i) v[i] = rng.gaussian(s.field());
  return v;
}

// Small test grid of smooth spaces.
inline std::vector<Space> smooth_spaces() {
  std::vector<Space> out;
  for (Field f : {Field::Real, Field::Complex})
    for (double p : {1.5, 2.0, 3.0, 7.0})
      for (int n : {1, 2, 3, 5}) out.push_back(Space::lp(f, n, p));
  return out;
}

}  // namespace oracle
