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

#include <functional>
#include <span>
#include <vector>

#include "sipwigner/space.hpp"

namespace sipwigner {

// Absolute tolerance on norm values used by the scalar solvers.
inline constexpr double kSolverTol = 1e-8;
// Birkhoff-James margin threshold, relative to |x|.
inline constexpr double kOrthogonalityTol = 1e-7;

struct MinimizeOptions {
  double x_rel_tol = 1e-14;   // golden-section interval width, relative
  double sweep_rel_tol = 1e-13;
  int max_expansions = 80;     // bracket doublings before declaring non-coercive
  int max_golden_iterations = 400;
  int max_sweeps = 500;
};

struct ScalarMinimum {
  Scalar argmin;
  double value = 0.0;
  // The minimizer set is a nondegenerate interval; argmin is its midpoint.
  bool plateau = false;
};

// Minimizes a convex coercive g over the field. Real: golden section on an
// auto-expanded bracket. Complex: coordinate descent over (Re, Im) with
// golden-section line searches. Throws SolverError when a bracket cannot be
// closed.
ScalarMinimum minimize_scalar(const std::function<double(Scalar)>& g, Field field,
                              Scalar start = 0.0, const MinimizeOptions& options = {});

struct OrthVerdict {
  bool orthogonal = false;
  double margin = 0.0;  // min over lambda of |x + lambda y| - |x|
  Scalar minimizer;
  bool plateau = false;
};

// x is Birkhoff-James orthogonal to y when |x + lambda y| >= |x| for all
// scalars; decided by minimizing over lambda with threshold tol * |x|.
OrthVerdict bj_orthogonal(const Space& s, const Vec& x, const Vec& y,
                          double tol = kOrthogonalityTol);

struct CoeffFit {
  std::vector<Scalar> coeffs;
  double residual = 0.0;  // |target - sum coeffs_k basis_k|
};

// Best approximation of target from the span of one or two independent
// vectors. The search starts from the semi-inner-product normal equations,
// which are exact when target lies in the span.
CoeffFit best_coeffs(const Space& s, const Vec& target, std::span<const Vec> basis,
                     const MinimizeOptions& options = {});

}  // namespace sipwigner
