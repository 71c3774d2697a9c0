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
#include <vector>

#include "oracles.hpp"
#include "sipwigner/fixtures.hpp"
#include "sipwigner/json_io.hpp"
#include "sipwigner/wigner.hpp"
#include "test_util.hpp"

using namespace sipwigner;
using testutil::error_code_of;

namespace {

Vec rv(std::initializer_list<double> xs) {
  Vec v(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (double x : xs) v[i++] = x;
  return v;
}

MapOracle identity(const Space& s) {
  return MapOracle(s, s, [](const Vec& x) { return x; }, "identity");
}

// Recomputes the violation of a reported witness straight from the semi-inner
// products, independent of the checker's bookkeeping.
double wigner_violation(const MapOracle& m, const Witness& w) {
  const Space& X = m.source();
  const Space& Y = m.target();
  return std::abs(std::abs(sip(Y, m(w.x), m(w.y))) - std::abs(sip(X, w.x, w.y)));
}

}  // namespace

TEST_CASE("check_wigner examples") {
  const Space s = Space::lp(Field::Real, 3, 3.0);
  Rng rng(1);
  const auto samples = make_samples(s, 12, rng);
  const Report id = check_wigner(identity(s), samples);
  CHECK(id.passed());
  CHECK(id.max_violation == 0.0);
  CHECK_FALSE(id.witness.has_value());
  CHECK(id.pairs_checked == 144);

  const MapOracle flip(s, s, [](const Vec& x) { Vec y = x; y[0] = -y[0]; return y; }, "flip");
  CHECK(check_wigner(flip, samples).passed());

  const auto ex = example_1_1();
  CHECK(error_code_of([&] { check_wigner(ex.map, std::vector<Vec>{ex.x, ex.y}); }) ==
        ErrorCode::UnsupportedSpace);
  CheckOptions loose;
  loose.require_smooth = false;
  const Report r = check_wigner(ex.map, std::vector<Vec>{ex.x, ex.y}, loose);
  REQUIRE_FALSE(r.passed());
  REQUIRE(r.witness.has_value());
  CHECK(r.witness->lhs[0].real() == 0.25);
  CHECK(r.witness->rhs[0].real() == 0.75);
  CHECK(r.max_violation == 0.5);
}

TEST_CASE("check_phase_isometry_sets examples") {
  const Space s = Space::lp(Field::Real, 3, 3.0);
  Rng rng(2);
  const auto samples = make_samples(s, 10, rng);
  CHECK(check_phase_isometry_sets(scale_map(identity(s), -1.0), samples).passed());

  const std::vector<Vec> e1{rv({1, 0, 0})};
  const Report twice = check_phase_isometry_sets(scale_map(identity(s), 2.0), e1);
  REQUIRE_FALSE(twice.passed());
  REQUIRE(twice.witness.has_value());
  CHECK(twice.witness->lhs[0].real() == doctest::Approx(4.0));
  CHECK(twice.witness->lhs[1].real() == doctest::Approx(0.0));
  CHECK(twice.witness->rhs[0].real() == doctest::Approx(2.0));

  IsometrySpec spec{{2, 0, 1}, {1.0, -1.0, 1.0}, false};
  const MapOracle sigma_u = make_phase_equivalent(make_isometry(s, spec), seeded_phase(Field::Real, 8));
  CHECK(check_phase_isometry_sets(sigma_u, samples).passed());

  const Space c = Space::lp(Field::Complex, 2, 3.0);
  CHECK(error_code_of([&] { check_phase_isometry_sets(identity(c), make_samples(c, 4, rng)); }) ==
        ErrorCode::UnsupportedField);
}

TEST_CASE("check_exact_preservation examples") {
  const Space s = Space::lp(Field::Complex, 3, 3.0);
  Rng rng(3);
  const auto samples = make_samples(s, 10, rng);
  CHECK(check_exact_preservation(identity(s), samples).passed());
  IsometrySpec spec{{1, 2, 0}, {Scalar(0, 1), std::polar(1.0, 0.3), -1.0}, false};
  CHECK(check_exact_preservation(make_isometry(s, spec), samples).max_violation <= 1e-14);

  // A constant phase cancels against its conjugate: [-x, -y] = [x, y].
  CHECK(check_exact_preservation(scale_map(identity(s), -1.0), samples).passed());
  // A phase that varies from point to point does not cancel.
  const Report scrambled =
      check_exact_preservation(make_phase_equivalent(identity(s), seeded_phase(Field::Complex, 4)), samples);
  CHECK_FALSE(scrambled.passed());
  CHECK(scrambled.witness.has_value());
}

TEST_CASE("check_linearity examples") {
  const Space s = Space::lp(Field::Real, 3, 3.0);
  Rng rng(4);
  const auto samples = make_samples(s, 8, rng);
  CHECK(check_linearity(identity(s), samples).passed());
  const MapOracle shift(s, s, [](const Vec& x) { Vec y = x; y[0] += 1.0; return y; }, "shift");
  const Report r = check_linearity(shift, samples);
  CHECK_FALSE(r.passed());
  CHECK(r.witness.has_value());
  const std::vector<Vec> flat{rv({1, 0, 0}), rv({0, 1, 0})};
  CHECK(error_code_of([&] { check_linearity(identity(s), flat); }) == ErrorCode::ContractViolation);
  CHECK(error_code_of([&] { check_linearity(identity(s), std::vector<Vec>{}); }) ==
        ErrorCode::ContractViolation);
}

TEST_CASE("Wigner verdict is blind to pointwise phases") {
  Rng rng(5);
  for (const Space& s : oracle::smooth_spaces()) {
    const GeneratedIsometry g = generate_isometry(s, rng, true);
    const auto samples = make_samples(s, 10, rng);
    for (const MapOracle& base : {g.map, scale_map(g.map, 2.0)}) {
      const MapOracle phased = make_phase_equivalent(base, seeded_phase(s.field(), rng.bits()));
      CHECK(check_wigner(base, samples).verdict == check_wigner(phased, samples).verdict);
    }
  }
}

TEST_CASE("failing reports carry a witness that really violates") {
  Rng rng(6);
  for (const Space& s : oracle::smooth_spaces()) {
    const auto samples = make_samples(s, 8, rng);
    const MapOracle bad = scale_map(generate_isometry(s, rng, true).map, 1.5);
    const Report r = check_wigner(bad, samples);
    REQUIRE_FALSE(r.passed());
    REQUIRE(r.witness.has_value());
    CHECK(r.witness->violation > r.witness->threshold);
    CHECK(wigner_violation(bad, *r.witness) == doctest::Approx(r.witness->violation));
    CHECK(r.max_violation >= r.witness->violation);
  }
}

TEST_CASE("phase-equivalent isometries pass; their scalings fail") {
  Rng rng(7);
  for (int k = 0; k < 40; ++k) {
    const Space s = oracle::smooth_spaces()[rng.index(oracle::smooth_spaces().size())];
    const GeneratedIsometry g = generate_isometry(s, rng, true);
    const MapOracle f = make_phase_equivalent(g.map, seeded_phase(s.field(), rng.bits()));
    const auto samples = make_samples(s, 10, rng);
    CHECK(check_wigner(f, samples).passed());
    CHECK_FALSE(check_wigner(scale_map(f, 0.5), samples).passed());
    if (!s.is_complex()) {
      CHECK(check_phase_isometry_sets(f, samples).passed());
      CHECK_FALSE(check_phase_isometry_sets(scale_map(f, 3.0), samples).passed());
    }
  }
}

TEST_CASE("exact preservation implies linearity on generated maps") {
  Rng rng(8);
  int exact = 0;
  for (int k = 0; k < 60; ++k) {
    const Space s = oracle::smooth_spaces()[rng.index(oracle::smooth_spaces().size())];
    const GeneratedIsometry g = generate_isometry(s, rng, true);
    const MapOracle f = k % 3 == 0 ? g.map
                        : k % 3 == 1 ? make_phase_equivalent(g.map, seeded_phase(s.field(), rng.bits()))
                                     : make_phase_equivalent(g.map, constant_phase(rng.unimodular(s.field())));
    auto samples = make_samples(s, static_cast<std::size_t>(s.dim()) + 6, rng);
    const std::size_t base = samples.size();
    for (std::size_t i = 0; i < base; ++i) samples.push_back(rng.gaussian(s.field()) * samples[i]);
    if (check_exact_preservation(f, samples).passed()) {
      ++exact;
      CHECK(check_linearity(f, samples).passed());
    }
  }
  CHECK(exact > 0);
}

TEST_CASE("report JSON layout") {
  const Space s = Space::lp(Field::Real, 2, 3.0);
  Rng rng(9);
  const Report r = check_wigner(scale_map(identity(s), 2.0), make_samples(s, 4, rng));
  const nlohmann::json j = to_json(r);
  CHECK(j["check"] == "wigner");
  CHECK(j["verdict"] == "fail");
  CHECK(j["surjectivity"] == "assumed");
  CHECK(j["witness"].is_object());
  CHECK(j["witness"]["x"].is_array());
  CHECK(j.contains("max_violation"));
  CHECK(j.contains("pairs_checked"));
  CHECK(j.contains("seed"));
  CHECK(to_json(check_wigner(identity(s), make_samples(s, 4, rng)))["witness"].is_null());
}
