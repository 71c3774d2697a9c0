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

#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "sipwigner/fixtures.hpp"
#include "sipwigner/reconstruct.hpp"
#include "test_util.hpp"

using namespace sipwigner;
using testutil::error_code_of;

namespace {

const Scalar kI(0.0, 1.0);

MapOracle identity(const Space& s) {
  return MapOracle(s, s, [](const Vec& x) { return x; }, "identity");
}

// Smallest |U' - w U| over unimodular w, with w fitted from the largest entry.
double gauge_distance(const Matrix& got, const Matrix& want) {
  Eigen::Index r = 0, c = 0;
  want.cwiseAbs().maxCoeff(&r, &c);
  const Scalar w = got(r, c) / want(r, c);
  return (got - (w / std::abs(w)) * want).norm();
}

}  // namespace

TEST_CASE("scalar action examples") {
  const Space s = Space::lp(Field::Complex, 3, 3.0);
  const Vec x = Vec::Unit(3, 1);
  CHECK(std::abs(recover_scalar_action(identity(s), x, 2.0) - 2.0) <= 1e-12);
  CHECK(std::abs(recover_scalar_action(scale_map(identity(s), -1.0), x, 2.0) - 2.0) <= 1e-12);
  CHECK(std::abs(recover_scalar_action(identity(s), x, kI) - kI) <= 1e-12);

  // With f = sigma U the action is gamma = lambda sigma(lambda x) / sigma(x).
  const PhaseFn sigma = seeded_phase(Field::Complex, 10);
  const MapOracle f = make_phase_equivalent(identity(s), sigma);
  const Scalar lambda(0.6, -1.3);
  const Scalar want = lambda * sigma(Vec(lambda * x)) / sigma(x);
  CHECK(std::abs(recover_scalar_action(f, x, lambda) - want) <= 1e-12);

  CHECK(error_code_of([&] { recover_scalar_action(scale_map(identity(s), 2.0), x, 2.0); }) ==
        ErrorCode::HypothesisViolation);
  CHECK(error_code_of([&] { recover_scalar_action(identity(s), Vec::Zero(3), 2.0); }) ==
        ErrorCode::ContractViolation);
}

TEST_CASE("pair coefficient examples") {
  const Space s = Space::lp(Field::Complex, 3, 4.0);
  const Vec x = Vec::Unit(3, 0), y = Vec::Unit(3, 2);
  for (const MapOracle& m : {identity(s), scale_map(identity(s), -1.0)}) {
    const auto [a, b] = recover_pair_coeffs(m, x, y);
    CHECK(std::abs(a - 1.0) <= 1e-10);
    CHECK(std::abs(b - 1.0) <= 1e-10);
  }
  const PhaseFn sigma = seeded_phase(Field::Complex, 11);
  const auto [a, b] = recover_pair_coeffs(make_phase_equivalent(identity(s), sigma), x, y);
  const Scalar s_sum = sigma(Vec(x + y));
  CHECK(std::abs(a - s_sum / sigma(x)) <= 1e-10);
  CHECK(std::abs(b - s_sum / sigma(y)) <= 1e-10);

  const MapOracle bent(s, s, [](const Vec& v) {
    Vec out = v;
    out[0] += 0.3 * std::abs(v[2]);
    return out;
  }, "bent");
  CHECK(error_code_of([&] { recover_pair_coeffs(bent, x, y); }) == ErrorCode::HypothesisViolation);
  CHECK(error_code_of([&] { recover_pair_coeffs(identity(s), x, Vec(2.0 * x)); }) ==
        ErrorCode::ContractViolation);
}

TEST_CASE("kind detection") {
  const Space s = Space::lp(Field::Complex, 3, 3.0);
  CHECK(detect_kind(identity(s)) == Kind::Linear);
  const MapOracle conj(s, s, [](const Vec& x) { return Vec(x.conjugate()); }, "conj");
  CHECK(detect_kind(conj) == Kind::ConjugateLinear);
  CHECK(detect_kind(make_phase_equivalent(conj, seeded_phase(Field::Complex, 3))) ==
        Kind::ConjugateLinear);
  CHECK(error_code_of([] { detect_kind(identity(Space::lp(Field::Real, 3, 3.0))); }) ==
        ErrorCode::ContractViolation);

  // Linear everywhere except one probe point, where it behaves as if i were real.
  const Space t = Space::lp(Field::Complex, 2, 3.0);
  const Vec probe = Vec::Unit(2, 0) + kI * Vec::Unit(2, 1);
  const MapOracle odd(t, t, [probe](const Vec& x) -> Vec {
    if (x == probe) return Vec::Unit(2, 0) + Vec::Unit(2, 1);
    return x;
  }, "odd");
  CHECK(error_code_of([&] { detect_kind(odd); }) == ErrorCode::KindAmbiguous);
}

TEST_CASE("reconstruction examples") {
  const Space s = Space::lp(Field::Complex, 3, 3.0);
  const Reconstruction id = reconstruct(identity(s));
  CHECK((id.U - Matrix::Identity(3, 3)).norm() <= 1e-12);
  CHECK(id.kind == Kind::Linear);
  CHECK(id.residual <= 1e-12);
  for (const auto& p : id.phase_samples) CHECK(std::abs(p.sigma - 1.0) <= 1e-12);

  const auto ex = example_1_1();
  CHECK(error_code_of([&] { reconstruct(ex.map); }) == ErrorCode::UnsupportedSpace);
  CHECK(error_code_of([&] { reconstruct(scale_map(identity(s), 2.0)); }) ==
        ErrorCode::HypothesisViolation);

  try {
    reconstruct(make_phase_equivalent(scale_map(identity(s), 2.0), seeded_phase(Field::Complex, 1)));
    FAIL("expected HypothesisViolation");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::HypothesisViolation);
    CHECK(e.witness().contains("x"));
  }

  const Space line = Space::lp(Field::Complex, 1, 3.0);
  const MapOracle conj1(line, line, [](const Vec& x) { return Vec(x.conjugate()); }, "conj");
  const Reconstruction r1 = reconstruct(conj1);
  CHECK(r1.kind == Kind::Linear);  // on a line, conjugation is a phase
  CHECK(r1.residual <= 1e-12);
}

TEST_CASE("round trip on generated maps") {
  Rng rng(12);
  for (const Space& s : oracle::smooth_spaces()) {
    const GeneratedIsometry g = generate_isometry(s, rng, true);
    const MapOracle f = make_phase_equivalent(g.map, seeded_phase(s.field(), rng.bits()));
    ReconstructOptions opt;
    opt.seed = rng.bits();
    const Reconstruction r = reconstruct(f, opt);
    const bool conj_expected = g.conjugate && s.dim() >= 2;
    CHECK((r.kind == Kind::ConjugateLinear) == conj_expected);
    CHECK(r.residual <= 1e-8);
    if (g.conjugate == conj_expected) CHECK(gauge_distance(r.U, g.U) <= 1e-8);

    // The recovered U is itself an isometry.
    for (int k = 0; k < 50; ++k) {
      const Vec x = oracle::gaussian_vec(s, rng);
      CHECK(norm(s, r.apply(x)) == doctest::Approx(norm(s, x)).epsilon(1e-9));
      const Vec fx = f(x);
      const Scalar sigma = phase_at(r, f, x);
      CHECK(std::abs(std::abs(sigma) - 1.0) <= 1e-8);
      CHECK(norm(s, Vec(fx - sigma * r.apply(x))) <= 1e-8 * norm(s, x));
    }
  }
}

TEST_CASE("phase gauge covariance") {
  Rng rng(13);
  for (int k = 0; k < 10; ++k) {
    const Space s = Space::lp(Field::Complex, 2 + static_cast<int>(rng.index(3)), 3.0);
    const GeneratedIsometry g = generate_isometry(s, rng, true);
    const Reconstruction base = reconstruct(g.map);
    const Reconstruction phased =
        reconstruct(make_phase_equivalent(g.map, seeded_phase(Field::Complex, rng.bits())));
    CHECK(base.kind == phased.kind);
    CHECK(gauge_distance(phased.U, base.U) <= 1e-8);
  }
}

TEST_CASE("reconstruction is deterministic under a seed") {
  const Space s = Space::lp(Field::Complex, 3, 1.5);
  Rng rng(14);
  const GeneratedIsometry g = generate_isometry(s, rng, true);
  const MapOracle f = make_phase_equivalent(g.map, seeded_phase(Field::Complex, 5));
  ReconstructOptions opt;
  opt.seed = 77;
  const Reconstruction a = reconstruct(f, opt), b = reconstruct(f, opt);
  CHECK(a.U == b.U);
  REQUIRE(a.phase_samples.size() == b.phase_samples.size());
  for (std::size_t k = 0; k < a.phase_samples.size(); ++k)
    CHECK(a.phase_samples[k].sigma == b.phase_samples[k].sigma);
}
