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

#include "sipwigner/orthogonality.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace sipwigner {

namespace {

constexpr double kInvPhi = 0.6180339887498948482;

struct LineMin {
  double x;
  double fx;
};

// Bracket-and-golden line search for a convex function of one real variable.
LineMin line_minimize(const std::function<double(double)>& phi, double start, double step,
                      const MinimizeOptions& opt) {
  double a = start, b = start, c = start + step;
  double fa, fb = phi(b), fc = phi(c);

  auto expand = [&](double dir) {
    // b is the best point so far, c the probe beyond it in direction dir.
    double delta = 2.0 * step;
    for (int k = 0; fc < fb; ++k) {
      if (k >= opt.max_expansions)
        fail(ErrorCode::SolverError, "bracket expansion failed: objective not coercive");
      a = b; fa = fb;
      b = c; fb = fc;
      c = b + dir * delta;
      fc = phi(c);
      delta *= 2.0;
    }
  };

  if (fc < fb) {
    expand(+1.0);
  } else {
    a = start - step;
    fa = phi(a);
    if (fa < fb) {
      std::swap(a, c);
      std::swap(fa, fc);
      expand(-1.0);
    }
  }
  if (a > c) {
    std::swap(a, c);
    std::swap(fa, fc);
  }

  double x1 = c - kInvPhi * (c - a);
  double x2 = a + kInvPhi * (c - a);
  double f1 = phi(x1), f2 = phi(x2);
  for (int it = 0; it < opt.max_golden_iterations; ++it) {
    const double mid = 0.5 * (a + c);
    if (c - a <= opt.x_rel_tol * (1.0 + std::abs(mid))) break;
    if (f1 <= f2) {
      c = x2;
      x2 = x1; f2 = f1;
      x1 = c - kInvPhi * (c - a);
      f1 = phi(x1);
    } else {
      a = x1;
      x1 = x2; f1 = f2;
      x2 = a + kInvPhi * (c - a);
      f2 = phi(x2);
    }
  }
  LineMin best = f1 <= f2 ? LineMin{x1, f1} : LineMin{x2, f2};
  if (fb < best.fx) best = {b, fb};
  return best;
}

// Cyclic coordinate descent over real variables with golden line searches.
std::vector<double> coordinate_descent(
    const std::function<double(const std::vector<double>&)>& fn, std::vector<double> x,
    const MinimizeOptions& opt) {
  const std::size_t n = x.size();
  std::vector<double> last_move(n, 0.0);
  for (int sweep = 0; sweep < opt.max_sweeps; ++sweep) {
    double scale = 1.0, moved = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
      auto phi = [&](double v) {
        std::vector<double> probe = x;
        probe[k] = v;
        return fn(probe);
      };
      const double step =
          std::max(1e-3 * (1.0 + std::abs(x[k])), 2.0 * std::abs(last_move[k]));
      const LineMin m = line_minimize(phi, x[k], step, opt);
      last_move[k] = m.x - x[k];
      moved = std::max(moved, std::abs(last_move[k]));
      x[k] = m.x;
      scale = std::max(scale, std::abs(x[k]));
    }
    if (moved <= opt.sweep_rel_tol * scale) break;
  }
  return x;
}

// Extent of the level set {g <= g(x0) + ftol} along one direction.
double plateau_extent(const std::function<double(double)>& phi, double x0, double f0,
                      double dir) {
  const double ftol = 4.0 * std::numeric_limits<double>::epsilon() * (1.0 + std::abs(f0));
  double inside = 0.0;
  double probe = 1e-9 * (1.0 + std::abs(x0));
  if (phi(x0 + dir * probe) > f0 + ftol) return 0.0;
  while (phi(x0 + dir * 2.0 * probe) <= f0 + ftol) {
    probe *= 2.0;
    if (probe > 1e12 * (1.0 + std::abs(x0))) return probe;
  }
  inside = probe;
  double outside = 2.0 * probe;
  for (int it = 0; it < 60 && outside - inside > 1e-12 * (1.0 + std::abs(x0)); ++it) {
    const double mid = 0.5 * (inside + outside);
    if (phi(x0 + dir * mid) <= f0 + ftol) inside = mid;
    else outside = mid;
  }
  return inside;
}

}  // namespace

ScalarMinimum minimize_scalar(const std::function<double(Scalar)>& g, Field field,
                              Scalar start, const MinimizeOptions& options) {
  if (field == Field::Real) {
    auto phi = [&](double v) { return g(Scalar(v, 0.0)); };
    const double step = 0.5 * (1.0 + std::abs(start.real()));
    LineMin m = line_minimize(phi, start.real(), step, options);

    ScalarMinimum out{Scalar(m.x, 0.0), m.fx, false};
    const double right = plateau_extent(phi, m.x, m.fx, +1.0);
    const double left = plateau_extent(phi, m.x, m.fx, -1.0);
    if (left + right > 1e-6 * (1.0 + std::abs(m.x))) {
      const double mid = m.x + 0.5 * (right - left);
      out = {Scalar(mid, 0.0), phi(mid), true};
    }
    return out;
  }

  auto fn = [&](const std::vector<double>& v) { return g(Scalar(v[0], v[1])); };
  const auto x = coordinate_descent(fn, {start.real(), start.imag()}, options);
  const Scalar z(x[0], x[1]);
  return {z, g(z), false};
}

OrthVerdict bj_orthogonal(const Space& s, const Vec& x, const Vec& y, double tol) {
  s.check(x, "x");
  s.check(y, "y");
  const double nx = norm(s, x);
  require(nx > 0.0, "Birkhoff-James orthogonality needs x != 0");
  require(tol > 0.0, "orthogonality tolerance must be positive");

  if (y.cwiseAbs().maxCoeff() == 0.0) return {true, 0.0, 0.0, false};

  auto g = [&](Scalar lambda) { return norm(s, Vec(x + lambda * y)); };
  const ScalarMinimum m = minimize_scalar(g, s.field());
  const double margin = std::min(0.0, m.value - nx);
  return {margin >= -tol * nx, margin, m.argmin, m.plateau};
}

CoeffFit best_coeffs(const Space& s, const Vec& target, std::span<const Vec> basis,
                     const MinimizeOptions& options) {
  s.check(target, "target");
  require(basis.size() == 1 || basis.size() == 2, "best_coeffs takes one or two basis vectors");
  const auto k = static_cast<Eigen::Index>(basis.size());
  Matrix b(s.dim(), k);
  for (Eigen::Index j = 0; j < k; ++j) {
    s.check(basis[j], "basis vector");
    b.col(j) = basis[j];
  }
  const Eigen::VectorXd sv = Eigen::JacobiSVD<Matrix>(b).singularValues();
  require(sv[0] > 0.0 && sv[k - 1] > 1e-12 * sv[0], "basis vectors are linearly dependent");

  // Normal equations sum_k c_k [b_k, b_j] = [target, b_j].
  Matrix gram(k, k);
  Vec rhs(k);
  for (Eigen::Index j = 0; j < k; ++j) {
    rhs[j] = sip(s, target, basis[j]);
    for (Eigen::Index i = 0; i < k; ++i) gram(j, i) = sip(s, basis[i], basis[j]);
  }
  Vec c0 = Vec::Zero(k);
  Eigen::FullPivLU<Matrix> lu(gram);
  if (lu.isInvertible()) c0 = lu.solve(rhs);
  if (!c0.allFinite()) c0.setZero();

  const bool complex = s.is_complex();
  const std::size_t per = complex ? 2 : 1;
  auto unpack = [&](const std::vector<double>& v) {
    Vec c(k);
    for (Eigen::Index j = 0; j < k; ++j)
      c[j] = Scalar(v[per * j], complex ? v[per * j + 1] : 0.0);
    return c;
  };
  auto residual = [&](const std::vector<double>& v) {
    return norm(s, Vec(target - b * unpack(v)));
  };

  std::vector<double> v0;
  for (Eigen::Index j = 0; j < k; ++j) {
    v0.push_back(c0[j].real());
    if (complex) v0.push_back(c0[j].imag());
  }
  const auto v = coordinate_descent(residual, v0, options);
  const Vec c = unpack(v);
  return {std::vector<Scalar>(c.data(), c.data() + k), residual(v)};
}

}  // namespace sipwigner
