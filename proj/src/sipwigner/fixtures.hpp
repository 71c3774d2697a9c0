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
#include <functional>
#include <vector>

#include "sipwigner/map_oracle.hpp"
#include "sipwigner/random.hpp"

namespace sipwigner {

// A unimodular-weighted permutation: (U x)_i = diag_i * x_{perm_i}, applied
// to conj(x) when conjugate_first is set. For p != 2 these are all the ell_p
// isometries. perm is zero-based here and one-based in JSON.
struct IsometrySpec {
  std::vector<int> perm;
  std::vector<Scalar> diag;
  bool conjugate_first = false;
};

IsometrySpec identity_spec(int n);
void validate(const IsometrySpec& spec, const Space& s);
Matrix to_matrix(const IsometrySpec& spec);

MapOracle make_isometry(const Space& s, const IsometrySpec& spec);

// x -> U x (or U conj(x)) for an arbitrary matrix; used for the p = 2 family.
MapOracle make_matrix_map(const Space& source, const Space& target, Matrix u,
                          bool conjugate, std::string name = "matrix");

// Haar-style random orthogonal/unitary matrix from the QR factorization of a
// Gaussian matrix, with the R-diagonal phases folded back into Q.
Matrix random_unitary(Field field, int n, Rng& rng);

IsometrySpec random_isometry_spec(const Space& s, Rng& rng, bool allow_conjugate);

// Ground-truth (conjugate-)linear isometry with its matrix. For p = 2 half the
// draws are dense random orthogonal/unitary matrices, otherwise a random
// unimodular permutation.
struct GeneratedIsometry {
  Space space;
  Matrix U;
  bool conjugate = false;
  MapOracle map;
};
GeneratedIsometry generate_isometry(const Space& s, Rng& rng, bool allow_conjugate);

using PhaseFn = std::function<Scalar(const Vec&)>;

// A deterministic unimodular function of the exact bit pattern of x.
PhaseFn seeded_phase(Field field, std::uint64_t seed);
PhaseFn constant_phase(Scalar value);

MapOracle make_phase_equivalent(const MapOracle& base, PhaseFn sigma);
MapOracle scale_map(const MapOracle& base, Scalar factor);

// The transposition T(x, y) = (y, x) on the real max-norm plane, with the
// witness pair whose semi-inner products 3/4 and 1/4 differ.
struct CounterExample {
  Space space;
  MapOracle map;
  Vec x;
  Vec y;
  double sip_xy;    // 3/4
  double sip_TxTy;  // 1/4
};
CounterExample example_1_1();

// Basis vectors, normalized sums/differences (including the tie pair e_1, e_2)
// then unit-norm Gaussian directions, in that order, until count is reached.
std::vector<Vec> make_samples(const Space& s, std::size_t count, Rng& rng);
Vec random_unit_vector(const Space& s, Rng& rng);

nlohmann::json to_json(const IsometrySpec& spec, bool complex);
IsometrySpec isometry_spec_from_json(const nlohmann::json& j, const Space& s);

}  // namespace sipwigner
