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

#include "sipwigner/wigner.hpp"

#include <algorithm>
#include <cmath>

#include "sipwigner/random.hpp"

namespace sipwigner {

namespace {

void require_samples(const MapOracle& m, std::span<const Vec> samples) {
  require(!samples.empty(), "sample set is empty");
  for (const auto& x : samples) m.source().check(x, "sample");
}

void require_smooth(const MapOracle& m, const CheckOptions& opt, const char* check) {
  require(opt.tol > 0.0, "tolerance must be positive");
  if (!opt.require_smooth) return;
  if (!m.source().is_smooth() || !m.target().is_smooth())
    fail(ErrorCode::UnsupportedSpace,
         std::string(check) + " needs smooth source and target spaces (unique semi-inner product)");
}

std::vector<Vec> images(const MapOracle& m, std::span<const Vec> samples) {
  std::vector<Vec> out;
  out.reserve(samples.size());
  for (const auto& x : samples) out.push_back(m(x));
  return out;
}

// Collects per-item violations; keeps the first maximal failing item as witness.
class Tally {
 public:
  Tally(std::string check, const MapOracle& m, const CheckOptions& opt, bool values_complex) {
    report_.check = std::move(check);
    report_.seed = opt.seed;
    report_.tol = opt.tol;
    report_.source_field = m.source().field();
    report_.values_complex = values_complex;
  }

  void add(double violation, double threshold, const std::function<Witness()>& make) {
    ++report_.pairs_checked;
    report_.max_violation = std::max(report_.max_violation, violation);
    if (!(violation <= threshold)) {
      report_.verdict = Verdict::Fail;
      if (!report_.witness || violation > report_.witness->violation) {
        Witness w = make();
        w.violation = violation;
        w.threshold = threshold;
        report_.witness = std::move(w);
      }
    }
  }

  Report finish() { return std::move(report_); }

 private:
  Report report_;
};

}  // namespace

Report check_wigner(const MapOracle& m, std::span<const Vec> samples,
                    const CheckOptions& opt) {
  require_smooth(m, opt, "check_wigner");
  require_samples(m, samples);
  const auto fx = images(m, samples);
  const Space& X = m.source();
  const Space& Y = m.target();

  Tally tally("wigner", m, opt, false);
  for (std::size_t i = 0; i < samples.size(); ++i) {
    for (std::size_t j = 0; j < samples.size(); ++j) {
      const double lhs = std::abs(sip(Y, fx[i], fx[j]));
      const double rhs = std::abs(sip(X, samples[i], samples[j]));
      const double scale = 1.0 + norm(X, samples[i]) * norm(X, samples[j]);
      tally.add(std::abs(lhs - rhs), opt.tol * scale, [&] {
        return Witness{samples[i], samples[j], {lhs}, {rhs}, {}};
      });
    }
  }
  return tally.finish();
}

Report check_phase_isometry_sets(const MapOracle& m, std::span<const Vec> samples,
                                 const CheckOptions& opt) {
  require(opt.tol > 0.0, "tolerance must be positive");
  if (m.source().is_complex() || m.target().is_complex())
    fail(ErrorCode::UnsupportedField, "check_phase_isometry_sets is defined for real spaces");
  require_samples(m, samples);
  const auto fx = images(m, samples);
  const Space& X = m.source();
  const Space& Y = m.target();

  Tally tally("phase_isometry_sets", m, opt, false);
  for (std::size_t i = 0; i < samples.size(); ++i) {
    for (std::size_t j = 0; j < samples.size(); ++j) {
      const double a1 = norm(Y, Vec(fx[i] + fx[j]));
      const double a2 = norm(Y, Vec(fx[i] - fx[j]));
      const double b1 = norm(X, Vec(samples[i] + samples[j]));
      const double b2 = norm(X, Vec(samples[i] - samples[j]));
      // Either pairing may match; near ties |x+y| ~ |x-y| make both valid.
      const double straight = std::max(std::abs(a1 - b1), std::abs(a2 - b2));
      const double crossed = std::max(std::abs(a1 - b2), std::abs(a2 - b1));
      const double scale = 1.0 + norm(X, samples[i]) + norm(X, samples[j]);
      tally.add(std::min(straight, crossed), opt.tol * scale, [&] {
        return Witness{samples[i], samples[j], {a1, a2}, {b1, b2}, {}};
      });
    }
  }
  return tally.finish();
}

Report check_exact_preservation(const MapOracle& m, std::span<const Vec> samples,
                                const CheckOptions& opt) {
  require_smooth(m, opt, "check_exact_preservation");
  require_samples(m, samples);
  const auto fx = images(m, samples);
  const Space& X = m.source();
  const Space& Y = m.target();

  Tally tally("exact_preservation", m, opt, Y.is_complex() || X.is_complex());
  for (std::size_t i = 0; i < samples.size(); ++i) {
    for (std::size_t j = 0; j < samples.size(); ++j) {
      const Scalar lhs = sip(Y, fx[i], fx[j]);
      const Scalar rhs = sip(X, samples[i], samples[j]);
      const double scale = 1.0 + norm(X, samples[i]) * norm(X, samples[j]);
      tally.add(std::abs(lhs - rhs), opt.tol * scale, [&] {
        return Witness{samples[i], samples[j], {lhs}, {rhs}, {}};
      });
    }
  }
  return tally.finish();
}

Report check_linearity(const MapOracle& m, std::span<const Vec> samples,
                       const CheckOptions& opt) {
  require(opt.tol > 0.0, "tolerance must be positive");
  require_samples(m, samples);
  const Space& X = m.source();
  const Space& Y = m.target();
  require(X.field() == Y.field(), "source and target fields differ");

  Matrix span(X.dim(), static_cast<Eigen::Index>(samples.size()));
  for (std::size_t k = 0; k < samples.size(); ++k) span.col(static_cast<Eigen::Index>(k)) = samples[k];
  Eigen::JacobiSVD<Matrix> svd(span);
  svd.setThreshold(1e-10);
  require(svd.rank() == X.dim(), "check_linearity samples must span the source space");

  const auto fx = images(m, samples);
  Tally tally("linearity", m, opt, false);

  for (std::size_t i = 0; i < samples.size(); ++i) {
    const double lhs = norm(Y, fx[i]);
    const double rhs = norm(X, samples[i]);
    tally.add(std::abs(lhs - rhs), opt.tol * (1.0 + rhs), [&] {
      return Witness{samples[i], samples[i], {lhs}, {rhs}, {}};
    });
  }

  Rng rng(derive_seed(opt.seed, 0x11ea7));
  for (std::size_t d = 0; d < opt.linearity_draws; ++d) {
    const std::size_t i = rng.index(samples.size());
    const std::size_t j = rng.index(samples.size());
    const Scalar a = rng.gaussian(X.field());
    const Scalar b = rng.gaussian(X.field());
    const Vec combo = a * samples[i] + b * samples[j];
    const double defect = norm(Y, Vec(m(combo) - a * fx[i] - b * fx[j]));
    const double scale =
        1.0 + std::abs(a) * norm(X, samples[i]) + std::abs(b) * norm(X, samples[j]);
    tally.add(defect, opt.tol * scale, [&] {
      return Witness{samples[i], samples[j], {defect}, {0.0}, {a, b}};
    });
  }
  return tally.finish();
}

nlohmann::json to_json(const Report& r) {
  const bool source_complex = r.source_field == Field::Complex;
  auto vec = [&](const Vec& v) {
    auto out = nlohmann::json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i)
      out.push_back(scalar_to_json(v[i], source_complex));
    return out;
  };
  auto values = [&](const std::vector<Scalar>& v) -> nlohmann::json {
    if (v.size() == 1) return scalar_to_json(v[0], r.values_complex);
    auto out = nlohmann::json::array();
    for (const auto& z : v) out.push_back(scalar_to_json(z, r.values_complex));
    return out;
  };

  nlohmann::json j;
  j["check"] = r.check;
  j["verdict"] = r.passed() ? "pass" : "fail";
  j["max_violation"] = r.max_violation;
  j["tol"] = r.tol;
  j["pairs_checked"] = r.pairs_checked;
  j["seed"] = r.seed;
  j["surjectivity"] = r.surjectivity_assumed ? "assumed" : "verified";
  if (r.witness) {
    const auto& w = *r.witness;
    j["witness"] = {{"x", vec(w.x)},           {"y", vec(w.y)},
                    {"lhs", values(w.lhs)},    {"rhs", values(w.rhs)},
                    {"violation", w.violation}, {"threshold", w.threshold}};
    if (!w.coeffs.empty()) {
      auto c = nlohmann::json::array();
      for (const auto& z : w.coeffs) c.push_back(scalar_to_json(z, source_complex));
      j["witness"]["coeffs"] = c;
    }
  } else {
    j["witness"] = nullptr;
  }
  return j;
}

}  // namespace sipwigner
