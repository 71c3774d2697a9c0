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

#include "sipwigner/space.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace sipwigner {

namespace {

template <class T>
using VecT = Eigen::Matrix<std::complex<T>, Eigen::Dynamic, 1>;

// Scaled sum keeps |x_i|^p away from overflow/underflow for large p.
template <class T>
T lp_norm(const VecT<T>& x, T p) {
  T peak = 0;
  for (Eigen::Index i = 0; i < x.size(); ++i) peak = std::max(peak, std::abs(x[i]));
  if (peak == 0) return 0;
  T sum = 0;
  for (Eigen::Index i = 0; i < x.size(); ++i) sum += std::pow(std::abs(x[i]) / peak, p);
  return peak * std::pow(sum, T(1) / p);
}

template <class T>
T norm_t(const Space& s, const VecT<T>& x) {
  if (s.norm_kind() == NormKind::LinfTwoFixture)
    return std::max(std::abs(x[0]), std::abs(x[1]));
  return lp_norm<T>(x, static_cast<T>(s.p()));
}

}  // namespace

std::string_view error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::ContractViolation: return "ContractViolation";
    case ErrorCode::NonSmoothPoint: return "NonSmoothPoint";
    case ErrorCode::SolverError: return "SolverError";
    case ErrorCode::UnsupportedSpace: return "UnsupportedSpace";
    case ErrorCode::UnsupportedField: return "UnsupportedField";
    case ErrorCode::HypothesisViolation: return "HypothesisViolation";
    case ErrorCode::KindAmbiguous: return "KindAmbiguous";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

Space Space::lp(Field field, int dim, double p) {
  require(dim >= 1, "space dimension must be positive");
  require(std::isfinite(p) && p > 1.0, "Lp exponent must satisfy 1 < p < inf");
  return Space(field, dim, NormKind::Lp, p);
}

Space Space::linf2_fixture() {
  return Space(Field::Real, 2, NormKind::LinfTwoFixture,
               std::numeric_limits<double>::infinity());
}

void Space::check(const Vec& x, const char* what) const {
  if (x.size() != dim_) {
    std::ostringstream msg;
    msg << what << " has length " << x.size() << ", space dimension is " << dim_;
    fail(ErrorCode::ContractViolation, msg.str());
  }
  if (field_ == Field::Real) {
    for (Eigen::Index i = 0; i < x.size(); ++i) {
      if (x[i].imag() != 0.0)
        fail(ErrorCode::ContractViolation,
             std::string(what) + " has a nonzero imaginary part in a real space");
    }
  }
}

std::string Space::describe() const {
  std::ostringstream out;
  if (kind_ == NormKind::LinfTwoFixture) {
    out << "linf2_fixture(real, 2)";
  } else {
    out << "l" << p_ << "^" << dim_ << "(" << (is_complex() ? "complex" : "real")
        << ")";
  }
  return out.str();
}

double norm(const Space& s, const Vec& x) {
  s.check(x);
  return norm_t<double>(s, x);
}

Scalar sip(const Space& s, const Vec& x, const Vec& y) {
  s.check(x, "first argument");
  s.check(y, "second argument");

  if (s.norm_kind() == NormKind::LinfTwoFixture) {
    const double a = std::abs(y[0].real());
    const double b = std::abs(y[1].real());
    const double x1y1 = x[0].real() * y[0].real();
    const double x2y2 = x[1].real() * y[1].real();
    if (a > b) return x1y1;
    if (a < b) return x2y2;
    return 0.75 * x1y1 + 0.25 * x2y2;
  }

  // [x, y] = |y| * sum x_i conj(u_i) |u_i|^(p-2), u = y / |y|; zero terms drop.
  const double ny = norm_t<double>(s, y);
  if (ny == 0.0) return 0.0;
  const double p = s.p();
  Scalar acc = 0.0;
  for (int i = 0; i < s.dim(); ++i) {
    if (y[i] == 0.0) continue;
    const Scalar u = y[i] / ny;
    acc += x[i] * std::conj(u) * std::pow(std::abs(u), p - 2.0);
  }
  return ny * acc;
}

double default_fd_step(const Space& s, const Vec& y) {
  return 1e-5 * std::max(1.0, norm(s, y));
}

Scalar gateaux_sip_oracle(const Space& s, const Vec& x, const Vec& y,
                          std::optional<double> h) {
  s.check(x, "first argument");
  s.check(y, "second argument");
  const double step = h ? *h : default_fd_step(s, y);
  require(std::isfinite(step) && step > 0.0, "finite-difference step must be positive");
  require(y.cwiseAbs().maxCoeff() > 0.0, "Gateaux oracle needs a nonzero base point");

  if (s.norm_kind() == NormKind::LinfTwoFixture) {
    const double gap = std::abs(std::abs(y[0].real()) - std::abs(y[1].real()));
    if (gap == 0.0)
      fail(ErrorCode::NonSmoothPoint, "max norm has a kink where |y_1| = |y_2|");
    if (gap <= 2.0 * step * x.cwiseAbs().maxCoeff())
      fail(ErrorCode::NonSmoothPoint,
           "finite-difference stencil crosses the |y_1| = |y_2| kink");
  }

  using LD = long double;
  const VecT<LD> yl = y.cast<std::complex<LD>>();
  const VecT<LD> xl = x.cast<std::complex<LD>>();
  const LD t = step;
  auto slope = [&](const VecT<LD>& dir) {
    const VecT<LD> plus = yl + t * dir;
    const VecT<LD> minus = yl - t * dir;
    return (norm_t<LD>(s, plus) - norm_t<LD>(s, minus)) / (2 * t);
  };

  const LD ny = norm_t<LD>(s, yl);
  const LD re = slope(xl);
  // Im phi(x) = Re phi(-i x) by complex linearity.
  const LD im = s.is_complex() ? slope(std::complex<LD>(0, -1) * xl) : LD(0);
  return {static_cast<double>(ny * re), static_cast<double>(ny * im)};
}

Vec support_functional(const Space& s, const Vec& y) {
  s.check(y);
  const double ny = norm(s, y);
  require(ny > 0.0, "support functional needs a nonzero point");

  Vec g = Vec::Zero(s.dim());
  if (s.norm_kind() == NormKind::LinfTwoFixture) {
    const double a = std::abs(y[0].real());
    const double b = std::abs(y[1].real());
    if (a == b)
      fail(ErrorCode::NonSmoothPoint,
           "support functional is not unique where |y_1| = |y_2|");
    const int k = a > b ? 0 : 1;
    g[k] = y[k].real() > 0 ? 1.0 : -1.0;
    return g;
  }

  const double p = s.p();
  for (int i = 0; i < s.dim(); ++i) {
    if (y[i] == 0.0) continue;
    const Scalar u = y[i] / ny;
    g[i] = u * std::pow(std::abs(u), p - 2.0);
  }
  return g;
}

Scalar apply_functional(const Vec& g, const Vec& c) {
  require(g.size() == c.size(), "functional and vector lengths differ");
  // Eigen's dot conjugates its first operand.
  return g.dot(c);
}

nlohmann::json to_json(const Space& s) {
  nlohmann::json j;
  j["field"] = s.is_complex() ? "complex" : "real";
  j["dim"] = s.dim();
  if (s.norm_kind() == NormKind::LinfTwoFixture)
    j["norm"] = {{"linf2_fixture", true}};
  else
    j["norm"] = {{"lp", s.p()}};
  return j;
}

Space space_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("norm") || !j["norm"].is_object())
    fail(ErrorCode::ParseError, "space descriptor needs a \"norm\" object");
  const auto& nj = j["norm"];
  if (nj.contains("linf2_fixture")) {
    if (!nj["linf2_fixture"].is_boolean() || !nj["linf2_fixture"].get<bool>())
      fail(ErrorCode::ParseError, "\"linf2_fixture\" must be true");
    if (j.value("field", std::string("real")) != "real" || j.value("dim", 2) != 2)
      fail(ErrorCode::ContractViolation, "the max-norm fixture is real and two-dimensional");
    return Space::linf2_fixture();
  }
  if (!nj.contains("lp") || !nj["lp"].is_number())
    fail(ErrorCode::ParseError, "norm must be {\"lp\":p} or {\"linf2_fixture\":true}");
  if (!j.contains("dim") || !j["dim"].is_number_integer())
    fail(ErrorCode::ParseError, "space descriptor needs an integer \"dim\"");
  if (!j.contains("field") || !j["field"].is_string())
    fail(ErrorCode::ParseError, "space descriptor needs \"field\"");
  const auto field = j["field"].get<std::string>();
  if (field != "real" && field != "complex")
    fail(ErrorCode::ParseError, "field must be \"real\" or \"complex\"");
  return Space::lp(field == "real" ? Field::Real : Field::Complex, j["dim"].get<int>(),
                   nj["lp"].get<double>());
}

nlohmann::json scalar_to_json(Scalar z, bool complex) {
  if (!complex) return z.real();
  return {{"re", z.real()}, {"im", z.imag()}};
}

nlohmann::json to_json(const Space& s, const Vec& x) {
  auto out = nlohmann::json::array();
  for (Eigen::Index i = 0; i < x.size(); ++i) out.push_back(scalar_to_json(x[i], s.is_complex()));
  return out;
}

Scalar scalar_from_json(const nlohmann::json& j) {
  if (j.is_number()) return j.get<double>();
  if (j.is_object() && j.contains("re") && j["re"].is_number()) {
    const double im = j.contains("im") && j["im"].is_number() ? j["im"].get<double>() : 0.0;
    return {j["re"].get<double>(), im};
  }
  fail(ErrorCode::ParseError, "scalar must be a number or {\"re\":..,\"im\":..}");
}

Vec vec_from_json(const Space& s, const nlohmann::json& j) {
  if (!j.is_array()) fail(ErrorCode::ParseError, "vector must be a JSON array");
  Vec x(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) x[static_cast<Eigen::Index>(i)] = scalar_from_json(j[i]);
  s.check(x);
  return x;
}

}  // namespace sipwigner
