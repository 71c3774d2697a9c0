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

#include "sipwigner/fixtures.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <numeric>

namespace sipwigner {

IsometrySpec identity_spec(int n) {
  IsometrySpec spec;
  spec.perm.resize(static_cast<std::size_t>(n));
  std::iota(spec.perm.begin(), spec.perm.end(), 0);
  spec.diag.assign(static_cast<std::size_t>(n), 1.0);
  return spec;
}

void validate(const IsometrySpec& spec, const Space& s) {
  const auto n = static_cast<std::size_t>(s.dim());
  require(s.norm_kind() == NormKind::Lp, "isometry fixtures are built on Lp spaces");
  require(spec.perm.size() == n && spec.diag.size() == n,
          "isometry spec length does not match the space dimension");
  std::vector<int> sorted = spec.perm;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < n; ++i)
    require(sorted[i] == static_cast<int>(i), "perm is not a permutation");
  for (const auto& d : spec.diag) {
    if (s.is_complex())
      require(std::abs(std::abs(d) - 1.0) <= 1e-12, "diag entries must be unimodular");
    else
      require(d == 1.0 || d == -1.0, "real diag entries must be +1 or -1");
  }
  require(!spec.conjugate_first || s.is_complex(), "conjugate_first needs a complex space");
}

Matrix to_matrix(const IsometrySpec& spec) {
  const auto n = static_cast<Eigen::Index>(spec.perm.size());
  Matrix u = Matrix::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) u(i, spec.perm[static_cast<std::size_t>(i)]) = spec.diag[static_cast<std::size_t>(i)];
  return u;
}

MapOracle make_matrix_map(const Space& source, const Space& target, Matrix u,
                          bool conjugate, std::string name) {
  require(u.rows() == target.dim() && u.cols() == source.dim(), "matrix shape mismatch");
  return MapOracle(source, target,
                   [u = std::move(u), conjugate](const Vec& x) -> Vec {
                     return conjugate ? Vec(u * x.conjugate()) : Vec(u * x);
                   },
                   std::move(name));
}

MapOracle make_isometry(const Space& s, const IsometrySpec& spec) {
  validate(spec, s);
  return MapOracle(s, s,
                   [spec](const Vec& x) {
                     Vec y(x.size());
                     for (Eigen::Index i = 0; i < x.size(); ++i) {
                       const Scalar v = x[spec.perm[static_cast<std::size_t>(i)]];
                       y[i] = spec.diag[static_cast<std::size_t>(i)] *
                              (spec.conjugate_first ? std::conj(v) : v);
                     }
                     return y;
                   },
                   spec.conjugate_first ? "conjugate_isometry" : "isometry");
}

Matrix random_unitary(Field field, int n, Rng& rng) {
  Matrix g(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) g(i, j) = rng.gaussian(field);
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ();
  const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < n; ++j) {
    const double mag = std::abs(r(j, j));
    if (mag > 0.0) q.col(j) *= r(j, j) / mag;
  }
  if (field == Field::Real) q = q.real().cast<Scalar>();
  return q;
}

IsometrySpec random_isometry_spec(const Space& s, Rng& rng, bool allow_conjugate) {
  IsometrySpec spec = identity_spec(s.dim());
  std::shuffle(spec.perm.begin(), spec.perm.end(), rng.engine());
  for (auto& d : spec.diag) d = rng.unimodular(s.field());
  spec.conjugate_first = allow_conjugate && s.is_complex() && rng.coin();
  return spec;
}

GeneratedIsometry generate_isometry(const Space& s, Rng& rng, bool allow_conjugate) {
  require(s.is_smooth(), "isometry fixtures are built on Lp spaces");
  if (s.p() == 2.0 && rng.coin()) {
    Matrix u = random_unitary(s.field(), s.dim(), rng);
    const bool conjugate = allow_conjugate && s.is_complex() && rng.coin();
    MapOracle m = make_matrix_map(s, s, u, conjugate, conjugate ? "conjugate_unitary" : "unitary");
    return {s, std::move(u), conjugate, std::move(m)};
  }
  const IsometrySpec spec = random_isometry_spec(s, rng, allow_conjugate);
  return {s, to_matrix(spec), spec.conjugate_first, make_isometry(s, spec)};
}

PhaseFn seeded_phase(Field field, std::uint64_t seed) {
  return [field, seed](const Vec& x) -> Scalar {
    std::uint64_t h = mix64(seed);
    for (Eigen::Index i = 0; i < x.size(); ++i) {
      h = mix64(h ^ std::bit_cast<std::uint64_t>(x[i].real()));
      h = mix64(h ^ std::bit_cast<std::uint64_t>(x[i].imag()));
    }
    if (field == Field::Real) return (h & 1U) ? 1.0 : -1.0;
    const double unit = static_cast<double>(h >> 11) * 0x1.0p-53;
    return std::polar(1.0, 2.0 * std::numbers::pi * unit);
  };
}

PhaseFn constant_phase(Scalar value) {
  return [value](const Vec&) { return value; };
}

MapOracle make_phase_equivalent(const MapOracle& base, PhaseFn sigma) {
  return MapOracle(base.source(), base.target(),
                   [base, sigma = std::move(sigma)](const Vec& x) -> Vec {
                     return sigma(x) * base(x);
                   },
                   "phase*" + base.name());
}

MapOracle scale_map(const MapOracle& base, Scalar factor) {
  return MapOracle(base.source(), base.target(),
                   [base, factor](const Vec& x) -> Vec { return factor * base(x); },
                   "scaled*" + base.name());
}

CounterExample example_1_1() {
  const Space s = Space::linf2_fixture();
  MapOracle t(s, s, [](const Vec& v) { return Vec{{v[1], v[0]}}; }, "example_1_1_T");
  return {s, t, Vec{{1.0, 0.0}}, Vec{{1.0, 1.0}}, 0.75, 0.25};
}

Vec random_unit_vector(const Space& s, Rng& rng) {
  Vec x(s.dim());
  do {
    for (int i = 0; i < s.dim(); ++i) x[i] = rng.gaussian(s.field());
  } while (norm(s, x) == 0.0);
  return x / norm(s, x);
}

std::vector<Vec> make_samples(const Space& s, std::size_t count, Rng& rng) {
  std::vector<Vec> out;
  const int n = s.dim();
  auto push = [&](Vec v) {
    if (out.size() < count) out.push_back(v / norm(s, v));
  };
  for (int i = 0; i < n; ++i) push(Vec::Unit(n, i));
  if (n >= 2) {
    push(Vec::Unit(n, 0) + Vec::Unit(n, 1));
    push(Vec::Unit(n, 0) - Vec::Unit(n, 1));
    if (s.is_complex()) push(Vec::Unit(n, 0) + Scalar(0, 1) * Vec::Unit(n, 1));
  }
  while (out.size() < count) out.push_back(random_unit_vector(s, rng));
  return out;
}

nlohmann::json to_json(const IsometrySpec& spec, bool complex) {
  nlohmann::json j;
  j["perm"] = nlohmann::json::array();
  for (int p : spec.perm) j["perm"].push_back(p + 1);
  j["diag"] = nlohmann::json::array();
  for (const auto& d : spec.diag)
    j["diag"].push_back(complex ? scalar_to_json(d, true) : nlohmann::json(d.real()));
  j["conjugate_first"] = spec.conjugate_first;
  return j;
}

IsometrySpec isometry_spec_from_json(const nlohmann::json& j, const Space& s) {
  if (!j.is_object() || !j.contains("perm") || !j["perm"].is_array() || !j.contains("diag") ||
      !j["diag"].is_array())
    fail(ErrorCode::ParseError, "isometry spec needs \"perm\" and \"diag\" arrays");
  IsometrySpec spec;
  for (const auto& p : j["perm"]) {
    if (!p.is_number_integer()) fail(ErrorCode::ParseError, "perm entries must be integers");
    spec.perm.push_back(p.get<int>() - 1);
  }
  for (const auto& d : j["diag"]) spec.diag.push_back(scalar_from_json(d));
  if (j.contains("conjugate_first")) {
    if (!j["conjugate_first"].is_boolean())
      fail(ErrorCode::ParseError, "conjugate_first must be a boolean");
    spec.conjugate_first = j["conjugate_first"].get<bool>();
  }
  validate(spec, s);
  return spec;
}

}  // namespace sipwigner
