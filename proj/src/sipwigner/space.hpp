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

#include <complex>
#include <optional>
#include <string>

#include <Eigen/Dense>
#include <json.hpp>

#include "sipwigner/errors.hpp"

namespace sipwigner {

using Scalar = std::complex<double>;
using Vec = Eigen::VectorXcd;
using Matrix = Eigen::MatrixXcd;

enum class Field { Real, Complex };

// Norm families: ell_p with 1 < p < inf, or the two-dimensional real max-norm
// fixture that carries a hand-picked (non-unique) semi-inner product.
enum class NormKind { Lp, LinfTwoFixture };

class Space {
 public:
  static Space lp(Field field, int dim, double p);
  static Space linf2_fixture();

  Field field() const { return field_; }
  int dim() const { return dim_; }
  NormKind norm_kind() const { return kind_; }
  // Exponent of an Lp space; infinity for the fixture.
  double p() const { return p_; }

  bool is_complex() const { return field_ == Field::Complex; }
  bool is_smooth() const { return kind_ == NormKind::Lp; }

  // Throws ContractViolation unless x has this space's length and, for real
  // spaces, zero imaginary parts.
  void check(const Vec& x, const char* what = "vector") const;

  bool operator==(const Space&) const = default;

  std::string describe() const;

 private:
  Space(Field field, int dim, NormKind kind, double p)
      : field_(field), dim_(dim), kind_(kind), p_(p) {}

  Field field_;
  int dim_;
  NormKind kind_;
  double p_;
};

double norm(const Space& s, const Vec& x);

// The semi-inner product [x, y]: linear in x, conjugate-homogeneous in y,
// with [x, x] = |x|^2. Unique on Lp; the fixture uses its own case split.
Scalar sip(const Space& s, const Vec& x, const Vec& y);

// Default central-difference step for gateaux_sip_oracle.
double default_fd_step(const Space& s, const Vec& y);

// Independent route to [x, y] through the Gateaux derivative of the norm at y,
// evaluated by central differences in extended precision. Throws
// NonSmoothPoint where the norm has a kink inside the stencil.
Scalar gateaux_sip_oracle(const Space& s, const Vec& x, const Vec& y,
                          std::optional<double> h = std::nullopt);

// Support functional at y as coefficients g, acting by c -> sum c_i conj(g_i).
Vec support_functional(const Space& s, const Vec& y);

// Applies a functional in the coefficient form returned above.
Scalar apply_functional(const Vec& g, const Vec& c);

// JSON: {"field":"real"|"complex","dim":n,"norm":{"lp":p}|{"linf2_fixture":true}}
nlohmann::json to_json(const Space& s);
Space space_from_json(const nlohmann::json& j);

// Vectors: real spaces use plain numbers, complex spaces {"re":..,"im":..}.
nlohmann::json to_json(const Space& s, const Vec& x);
nlohmann::json scalar_to_json(Scalar z, bool complex);
Vec vec_from_json(const Space& s, const nlohmann::json& j);
Scalar scalar_from_json(const nlohmann::json& j);

}  // namespace sipwigner
