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

#include "sipwigner/reconstruct.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>

#include "sipwigner/fixtures.hpp"
#include "sipwigner/orthogonality.hpp"
#include "sipwigner/random.hpp"

namespace sipwigner {

namespace {

void require_wigner_setting(const MapOracle& m) {
  if (!m.source().is_smooth() || !m.target().is_smooth())
    fail(ErrorCode::UnsupportedSpace,
         "reconstruction needs smooth source and target spaces");
  require(m.source().field() == m.target().field(), "source and target fields differ");
}

// Evaluates f(x) and insists on |f(x)| = |x|, which the Wigner identity forces at x = y.
Vec image_with_norm_check(const MapOracle& m, const Vec& x, double tol) {
  Vec fx = m(x);
  const double nx = norm(m.source(), x);
  const double nfx = norm(m.target(), fx);
  if (std::abs(nfx - nx) > tol * (1.0 + nx)) {
    std::ostringstream msg;
    msg << "map does not preserve norms: |f(x)| = " << nfx << ", |x| = " << nx;
    fail(ErrorCode::HypothesisViolation, msg.str(),
         {{"x", to_json(m.source(), x)}, {"norm_fx", nfx}, {"norm_x", nx}});
  }
  return fx;
}

}  // namespace

std::string_view kind_name(Kind kind) {
  return kind == Kind::Linear ? "linear" : "conjugate_linear";
}

Vec Reconstruction::apply(const Vec& x) const {
  return kind == Kind::ConjugateLinear ? Vec(U * x.conjugate()) : Vec(U * x);
}

Scalar recover_scalar_action(const MapOracle& m, const Vec& x, Scalar lambda, double tol) {
  require_wigner_setting(m);
  require(norm(m.source(), x) > 0.0, "recover_scalar_action needs x != 0");
  require(m.source().is_complex() || lambda.imag() == 0.0, "lambda must be real in a real space");

  const Vec fx = image_with_norm_check(m, x, tol);
  const Vec flx = image_with_norm_check(m, Vec(lambda * x), tol);
  const std::array<Vec, 1> basis{fx};
  const CoeffFit fit = best_coeffs(m.target(), flx, basis);
  const Scalar gamma = fit.coeffs[0];

  const double scale = 1.0 + norm(m.target(), flx);
  if (fit.residual > tol * scale || std::abs(std::abs(gamma) - std::abs(lambda)) > tol * (1.0 + std::abs(lambda))) {
    std::ostringstream msg;
    msg << "f(lambda x) is not a multiple gamma f(x) with |gamma| = |lambda|: residual "
        << fit.residual << ", |gamma| = " << std::abs(gamma) << ", |lambda| = " << std::abs(lambda);
    fail(ErrorCode::HypothesisViolation, msg.str(),
         {{"x", to_json(m.source(), x)},
          {"lambda", scalar_to_json(lambda, true)},
          {"gamma", scalar_to_json(gamma, true)},
          {"residual", fit.residual}});
  }
  return gamma;
}

std::pair<Scalar, Scalar> recover_pair_coeffs(const MapOracle& m, const Vec& x, const Vec& y,
                                              double tol) {
  require_wigner_setting(m);
  Matrix xy(m.source().dim(), 2);
  xy << x, y;
  Eigen::JacobiSVD<Matrix> svd(xy);
  svd.setThreshold(1e-12);
  require(svd.rank() == 2, "recover_pair_coeffs needs linearly independent x and y");

  const Vec fx = image_with_norm_check(m, x, tol);
  const Vec fy = image_with_norm_check(m, y, tol);
  const Vec fxy = image_with_norm_check(m, Vec(x + y), tol);

  Matrix images(m.target().dim(), 2);
  images << fx, fy;
  Eigen::JacobiSVD<Matrix> isvd(images);
  isvd.setThreshold(1e-10);
  if (isvd.rank() < 2)
    fail(ErrorCode::HypothesisViolation, "images of independent vectors are dependent",
         {{"x", to_json(m.source(), x)}, {"y", to_json(m.source(), y)}});

  const std::array<Vec, 2> basis{fx, fy};
  const CoeffFit fit = best_coeffs(m.target(), fxy, basis);
  const Scalar alpha = fit.coeffs[0];
  const Scalar beta = fit.coeffs[1];
  const double scale = 1.0 + norm(m.target(), fxy);
  if (fit.residual > tol * scale || std::abs(std::abs(alpha) - 1.0) > tol ||
      std::abs(std::abs(beta) - 1.0) > tol) {
    std::ostringstream msg;
    msg << "f(x+y) is not alpha f(x) + beta f(y) with unimodular coefficients: residual "
        << fit.residual << ", |alpha| = " << std::abs(alpha) << ", |beta| = " << std::abs(beta);
    fail(ErrorCode::HypothesisViolation, msg.str(),
         {{"x", to_json(m.source(), x)},
          {"y", to_json(m.source(), y)},
          {"alpha", scalar_to_json(alpha, true)},
          {"beta", scalar_to_json(beta, true)},
          {"residual", fit.residual}});
  }
  return {alpha, beta};
}

Kind detect_kind(const MapOracle& m, double tol) {
  require_wigner_setting(m);
  require(m.source().is_complex(), "detect_kind needs a complex space");
  const int n = m.source().dim();
  require(n >= 2, "detect_kind needs dimension at least 2");

  const Scalar i(0.0, 1.0);
  const Vec e1 = Vec::Unit(n, 0);
  const Vec e2 = Vec::Unit(n, 1);

  // f(e_1 + e_2) = a f(e_1) + b f(e_2) fixes the relative phase b / a.
  const auto [a, b] = recover_pair_coeffs(m, e1, e2, tol);
  // f(e_1 + i e_2) = c1 f(e_1) + c2 f(e_2), with c2 assembled through f(i e_2).
  const auto [c1, beta] = recover_pair_coeffs(m, e1, Vec(i * e2), tol);
  const Scalar gamma = recover_scalar_action(m, e2, i, tol);
  const Scalar h_of_i = (beta * gamma / c1) / (b / a);

  const double to_linear = std::abs(h_of_i - i);
  const double to_conjugate = std::abs(h_of_i + i);
  const double nearer = std::min(to_linear, to_conjugate);
  const double farther = std::max(to_linear, to_conjugate);
  if (!(10.0 * nearer < farther)) {
    std::ostringstream msg;
    msg << "cannot decide linear vs conjugate-linear: h(i) = " << h_of_i;
    fail(ErrorCode::KindAmbiguous, msg.str(), {{"h_of_i", scalar_to_json(h_of_i, true)}});
  }
  return to_linear < to_conjugate ? Kind::Linear : Kind::ConjugateLinear;
}

Scalar phase_at(const Reconstruction& r, const MapOracle& m, const Vec& x) {
  const double nx = norm(m.source(), x);
  require(nx > 0.0, "phase is defined at nonzero vectors");
  return sip(m.target(), m(x), r.apply(x)) / (nx * nx);
}

Reconstruction reconstruct(const MapOracle& m, const ReconstructOptions& opt) {
  require_wigner_setting(m);
  require(opt.tol > 0.0, "tolerance must be positive");
  const Space& X = m.source();
  const Space& Y = m.target();
  require(X.dim() == Y.dim(), "reconstruction needs equal source and target dimensions");
  const int n = X.dim();

  Reconstruction r;
  r.field = X.field();
  r.seed = opt.seed;
  r.U = Matrix::Zero(n, n);

  const Vec e1 = Vec::Unit(n, 0);
  r.U.col(0) = image_with_norm_check(m, e1, opt.tol);
  for (int j = 1; j < n; ++j) {
    const Vec ej = Vec::Unit(n, j);
    const auto [alpha, beta] = recover_pair_coeffs(m, e1, ej, opt.tol);
    r.U.col(j) = (beta / alpha) * m(ej);
  }
  r.kind = (X.is_complex() && n >= 2) ? detect_kind(m, opt.tol) : Kind::Linear;

  Rng rng(derive_seed(opt.seed, 0x7e57));
  for (std::size_t k = 0; k < opt.test_vectors; ++k) {
    const Vec x = random_unit_vector(X, rng);
    const Vec fx = m(x);
    const Scalar sigma = phase_at(r, m, x);
    const double defect = norm(Y, Vec(fx - sigma * r.apply(x)));
    if (std::abs(std::abs(sigma) - 1.0) > opt.tol || defect > opt.tol) {
      std::ostringstream msg;
      msg << "map is not phase equivalent to the recovered isometry: |sigma(x)| = "
          << std::abs(sigma) << ", |f(x) - sigma(x) U x| = " << defect;
      fail(ErrorCode::HypothesisViolation, msg.str(),
           {{"x", to_json(X, x)}, {"sigma", scalar_to_json(sigma, true)}, {"residual", defect}});
    }
    r.residual = std::max(r.residual, defect);
    r.phase_samples.push_back({x, sigma});
  }
  return r;
}

nlohmann::json to_json(const Reconstruction& r, const Space& target) {
  nlohmann::json j;
  j["kind"] = std::string(kind_name(r.kind));
  j["rows"] = r.U.rows();
  j["cols"] = r.U.cols();
  auto rows = nlohmann::json::array();
  for (Eigen::Index i = 0; i < r.U.rows(); ++i) {
    auto row = nlohmann::json::array();
    for (Eigen::Index k = 0; k < r.U.cols(); ++k)
      row.push_back(scalar_to_json(r.U(i, k), target.is_complex()));
    rows.push_back(row);
  }
  j["U"] = rows;
  j["residual"] = r.residual;
  j["gauge"] = "sigma(e_1) = 1; column 1 of U is f(e_1)";
  j["seed"] = r.seed;
  auto samples = nlohmann::json::array();
  for (const auto& s : r.phase_samples)
    samples.push_back({{"x", to_json(target, s.x)}, {"sigma", scalar_to_json(s.sigma, target.is_complex())}});
  j["phase_samples"] = samples;
  return j;
}

}  // namespace sipwigner
