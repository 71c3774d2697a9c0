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

#include "sipwigner/commands.hpp"

#include <cmath>

#include "sipwigner/fixtures.hpp"
#include "sipwigner/orthogonality.hpp"
#include "sipwigner/random.hpp"
#include "sipwigner/reconstruct.hpp"
#include "sipwigner/wigner.hpp"

namespace sipwigner {

namespace {

std::uint64_t as_seed(const nlohmann::json& j, const char* what) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<std::int64_t>() >= 0))
    fail(ErrorCode::ParseError, std::string(what) + " must be a non-negative integer");
  return j.get<std::uint64_t>();
}

Space required_space(const nlohmann::json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    fail(ErrorCode::ParseError, std::string("missing \"") + key + "\"");
  return space_from_json(j[key]);
}

}  // namespace

RunConfig run_config_from_json(const nlohmann::json& j) {
  if (!j.is_object()) fail(ErrorCode::ParseError, "run config must be a JSON object");
  RunConfig c;
  if (j.contains("source")) c.source = space_from_json(j["source"]);
  if (j.contains("target")) c.target = space_from_json(j["target"]);
  if (!j.contains("map") || !j["map"].is_object())
    fail(ErrorCode::ParseError, "run config needs a \"map\" object");
  c.map = j["map"];
  if (j.contains("checks")) {
    if (!j["checks"].is_array()) fail(ErrorCode::ParseError, "\"checks\" must be an array");
    c.checks.clear();
    for (const auto& name : j["checks"]) {
      if (!name.is_string()) fail(ErrorCode::ParseError, "check names must be strings");
      c.checks.push_back(name.get<std::string>());
    }
  }
  if (j.contains("tol")) {
    if (!j["tol"].is_number()) fail(ErrorCode::ParseError, "\"tol\" must be a number");
    c.tol = j["tol"].get<double>();
  }
  if (j.contains("samples")) {
    if (!j["samples"].is_number_integer()) fail(ErrorCode::ParseError, "\"samples\" must be an integer");
    const auto n = j["samples"].get<std::int64_t>();
    require(n >= 2, "sample count must be at least 2");
    c.samples = static_cast<std::size_t>(n);
  }
  if (j.contains("seed")) c.seed = as_seed(j["seed"], "seed");
  require(std::isfinite(c.tol) && c.tol > 0.0, "tolerance must be positive");
  return c;
}

MapOracle build_map(const RunConfig& c) {
  const auto& mj = c.map;
  std::optional<MapOracle> base;

  if (mj.contains("builtin")) {
    if (!mj["builtin"].is_string()) fail(ErrorCode::ParseError, "\"builtin\" must be a string");
    const auto name = mj["builtin"].get<std::string>();
    if (name == "example_1_1_T") {
      const auto ex = example_1_1();
      if ((c.source && !(*c.source == ex.space)) || (c.target && !(*c.target == ex.space)))
        fail(ErrorCode::ContractViolation, "example_1_1_T acts on the linf2 fixture space");
      base = ex.map;
    } else if (name == "identity") {
      if (!c.source) fail(ErrorCode::ParseError, "identity map needs a \"source\" space");
      const Space target = c.target.value_or(*c.source);
      require(target.dim() == c.source->dim() && target.field() == c.source->field(),
              "identity needs matching dimension and field");
      base = MapOracle(*c.source, target, [](const Vec& x) { return x; }, "identity");
    } else {
      fail(ErrorCode::ParseError, "unknown builtin map \"" + name + "\"");
    }
  } else if (mj.contains("isometry")) {
    if (!c.source) fail(ErrorCode::ParseError, "isometry map needs a \"source\" space");
    require(!c.target || *c.target == *c.source, "isometry fixtures map a space to itself");
    base = make_isometry(*c.source, isometry_spec_from_json(mj["isometry"], *c.source));
  } else if (mj.contains("random_unitary")) {
    if (!c.source) fail(ErrorCode::ParseError, "random_unitary map needs a \"source\" space");
    const auto& rj = mj["random_unitary"];
    if (!rj.is_object()) fail(ErrorCode::ParseError, "\"random_unitary\" must be an object");
    const std::uint64_t seed = rj.contains("seed") ? as_seed(rj["seed"], "random_unitary.seed") : c.seed;
    const bool conjugate = rj.value("conjugate", false);
    require(!conjugate || c.source->is_complex(), "conjugate maps need a complex space");
    Rng rng(seed);
    const Space target = c.target.value_or(*c.source);
    require(target.dim() == c.source->dim(), "random_unitary needs equal dimensions");
    base = make_matrix_map(*c.source, target, random_unitary(c.source->field(), c.source->dim(), rng),
                           conjugate, "random_unitary");
  } else if (mj.contains("random_isometry")) {
    if (!c.source) fail(ErrorCode::ParseError, "random_isometry map needs a \"source\" space");
    const auto& rj = mj["random_isometry"];
    if (!rj.is_object()) fail(ErrorCode::ParseError, "\"random_isometry\" must be an object");
    const std::uint64_t seed = rj.contains("seed") ? as_seed(rj["seed"], "random_isometry.seed") : c.seed;
    const bool conjugate = rj.value("conjugate", false);
    require(!c.target || *c.target == *c.source, "isometry fixtures map a space to itself");
    Rng rng(seed);
    IsometrySpec spec = random_isometry_spec(*c.source, rng, false);
    spec.conjugate_first = conjugate;
    base = make_isometry(*c.source, spec);
  } else {
    fail(ErrorCode::ParseError,
         "map needs one of \"builtin\", \"isometry\", \"random_isometry\", \"random_unitary\"");
  }

  MapOracle m = *base;
  if (mj.contains("phase_seed"))
    m = make_phase_equivalent(m, seeded_phase(m.source().field(), as_seed(mj["phase_seed"], "phase_seed")));
  if (mj.contains("scale")) {
    const Scalar factor = scalar_from_json(mj["scale"]);
    require(m.target().is_complex() || factor.imag() == 0.0, "complex scale on a real space");
    m = scale_map(m, factor);
  }
  return m;
}

SipEval cmd_sip_eval(const nlohmann::json& j) {
  const Space s = required_space(j, "space");
  if (!j.contains("x") || !j.contains("y")) fail(ErrorCode::ParseError, "sip-eval needs \"x\" and \"y\"");
  const Vec x = vec_from_json(s, j["x"]);
  const Vec y = vec_from_json(s, j["y"]);
  std::optional<double> h;
  if (j.contains("h")) {
    if (!j["h"].is_number()) fail(ErrorCode::ParseError, "\"h\" must be a number");
    h = j["h"].get<double>();
  }

  SipEval out;
  const Scalar value = sip(s, x, y);
  out.doc["space"] = to_json(s);
  out.doc["x"] = to_json(s, x);
  out.doc["y"] = to_json(s, y);
  out.doc["sip"] = scalar_to_json(value, s.is_complex());
  try {
    const double step = h ? *h : default_fd_step(s, y);
    const Scalar oracle = gateaux_sip_oracle(s, x, y, step);
    out.doc["h"] = step;
    out.doc["oracle"] = scalar_to_json(oracle, s.is_complex());
    out.doc["abs_diff"] = std::abs(value - oracle);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NonSmoothPoint) throw;
    out.non_smooth = true;
    out.doc["oracle"] = nullptr;
    out.doc["abs_diff"] = nullptr;
    out.doc["oracle_error"] = {{"error", std::string(error_name(e.code()))}, {"message", e.what()}};
  }
  return out;
}

nlohmann::json cmd_orth_check(const nlohmann::json& j) {
  const Space s = required_space(j, "space");
  if (!j.contains("x") || !j.contains("y")) fail(ErrorCode::ParseError, "orth-check needs \"x\" and \"y\"");
  const Vec x = vec_from_json(s, j["x"]);
  const Vec y = vec_from_json(s, j["y"]);
  const double tol = j.value("tol", kOrthogonalityTol);
  const OrthVerdict v = bj_orthogonal(s, x, y, tol);

  nlohmann::json out;
  out["space"] = to_json(s);
  out["x"] = to_json(s, x);
  out["y"] = to_json(s, y);
  out["orthogonal"] = v.orthogonal;
  out["margin"] = v.margin;
  out["minimizer"] = scalar_to_json(v.minimizer, s.is_complex());
  out["plateau"] = v.plateau;
  out["tol"] = tol;
  if (s.is_smooth()) {
    // In smooth spaces x is orthogonal to y exactly when [y, x] = 0.
    const Scalar yx = sip(s, y, x);
    const bool by_sip = std::abs(yx) <= tol * norm(s, x) * norm(s, y);
    out["sip_yx"] = scalar_to_json(yx, s.is_complex());
    out["sip_orthogonal"] = by_sip;
    out["routes_agree"] = by_sip == v.orthogonal;
  }
  return out;
}

nlohmann::json cmd_check(const RunConfig& c) {
  const MapOracle m = build_map(c);
  Rng rng(derive_seed(c.seed, 0x5a3b1e));
  const auto samples = make_samples(m.source(), c.samples, rng);
  CheckOptions opt;
  opt.tol = c.tol;
  opt.seed = c.seed;

  nlohmann::json out;
  out["map"] = m.name();
  out["source"] = to_json(m.source());
  out["target"] = to_json(m.target());
  out["seed"] = c.seed;
  out["tol"] = c.tol;
  out["samples"] = samples.size();
  out["reports"] = nlohmann::json::array();
  bool all_pass = true;
  for (const auto& name : c.checks) {
    Report r;
    if (name == "wigner") r = check_wigner(m, samples, opt);
    else if (name == "phase_sets" || name == "phase_isometry_sets") r = check_phase_isometry_sets(m, samples, opt);
    else if (name == "exact" || name == "exact_preservation") r = check_exact_preservation(m, samples, opt);
    else if (name == "linearity") r = check_linearity(m, samples, opt);
    else fail(ErrorCode::ParseError, "unknown check \"" + name + "\"");
    all_pass = all_pass && r.passed();
    out["reports"].push_back(to_json(r));
  }
  out["verdict"] = all_pass ? "pass" : "fail";
  return out;
}

nlohmann::json cmd_reconstruct(const RunConfig& c) {
  const MapOracle m = build_map(c);
  ReconstructOptions opt;
  opt.tol = c.tol;
  opt.seed = c.seed;
  const Reconstruction r = reconstruct(m, opt);
  nlohmann::json out = to_json(r, m.target());
  out["map"] = m.name();
  out["source"] = to_json(m.source());
  out["target"] = to_json(m.target());
  out["tol"] = c.tol;
  return out;
}

nlohmann::json cmd_counterexample() {
  const auto ex = example_1_1();
  const Vec tx = ex.map(ex.x);
  const Vec ty = ex.map(ex.y);
  const Scalar sxy = sip(ex.space, ex.x, ex.y);
  const Scalar stxty = sip(ex.space, tx, ty);

  CheckOptions opt;
  opt.require_smooth = false;
  const std::vector<Vec> samples{ex.x, ex.y};
  const Report r = check_wigner(ex.map, samples, opt);

  nlohmann::json out;
  out["space"] = to_json(ex.space);
  out["map"] = ex.map.name();
  out["x"] = to_json(ex.space, ex.x);
  out["y"] = to_json(ex.space, ex.y);
  out["Tx"] = to_json(ex.space, tx);
  out["Ty"] = to_json(ex.space, ty);
  out["sip_xy"] = sxy.real();
  out["sip_TxTy"] = stxty.real();
  out["norm_preserved"] = norm(ex.space, tx) == norm(ex.space, ex.x) && norm(ex.space, ty) == norm(ex.space, ex.y);
  out["report"] = to_json(r);
  return out;
}

}  // namespace sipwigner
