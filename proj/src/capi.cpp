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

#include "sipwigner/sipwigner.h"

#include <cstring>
#include <memory>
#include <string>

#include "sipwigner/commands.hpp"
#include "sipwigner/fixtures.hpp"
#include "sipwigner/json_io.hpp"
#include "sipwigner/orthogonality.hpp"
#include "sipwigner/random.hpp"
#include "sipwigner/reconstruct.hpp"
#include "sipwigner/selftest.hpp"
#include "sipwigner/wigner.hpp"

struct sw_space {
  sipwigner::Space space;
};

struct sw_map {
  sipwigner::MapOracle map;
};

namespace {

using namespace sipwigner;

thread_local std::string g_last_error;
thread_local nlohmann::json g_last_witness;

sw_status to_status(ErrorCode code) {
  switch (code) {
    case ErrorCode::ContractViolation: return SW_ERR_CONTRACT;
    case ErrorCode::NonSmoothPoint: return SW_ERR_NON_SMOOTH;
    case ErrorCode::SolverError: return SW_ERR_SOLVER;
    case ErrorCode::UnsupportedSpace: return SW_ERR_UNSUPPORTED_SPACE;
    case ErrorCode::UnsupportedField: return SW_ERR_UNSUPPORTED_FIELD;
    case ErrorCode::HypothesisViolation: return SW_ERR_HYPOTHESIS;
    case ErrorCode::KindAmbiguous: return SW_ERR_KIND_AMBIGUOUS;
    case ErrorCode::ParseError: return SW_ERR_PARSE;
  }
  return SW_ERR_INTERNAL;
}

// Runs body, translating exceptions into status codes and the thread's last error.
template <class Body>
sw_status guarded(Body&& body) {
  g_last_error.clear();
  g_last_witness = nullptr;
  try {
    body();
    return SW_OK;
  } catch (const Error& e) {
    g_last_error = e.what();
    g_last_witness = e.witness();
    return to_status(e.code());
  } catch (const nlohmann::json::exception& e) {
    g_last_error = std::string("JSON: ") + e.what();
    return SW_ERR_PARSE;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return SW_ERR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown exception";
    return SW_ERR_INTERNAL;
  }
}

void require_ptr(const void* p, const char* what) {
  if (p == nullptr) fail(ErrorCode::ContractViolation, std::string(what) + " is null");
}

Vec read_vec(const Space& s, const sw_complex* x, size_t n) {
  require_ptr(x, "vector");
  require(n == static_cast<size_t>(s.dim()), "vector length does not match the space dimension");
  Vec v(static_cast<Eigen::Index>(n));
  for (size_t i = 0; i < n; ++i) v[static_cast<Eigen::Index>(i)] = Scalar(x[i].re, x[i].im);
  s.check(v);
  return v;
}

sw_complex to_c(Scalar z) { return {z.real(), z.imag()}; }

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void emit(const nlohmann::json& j, char** out) {
  require_ptr(out, "output string");
  *out = copy_string(dump_json(j));
}

nlohmann::json parse(const char* text) {
  require_ptr(text, "JSON input");
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    fail(ErrorCode::ParseError, std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace

extern "C" {

const char* sw_version(void) { return "1.0.0"; }

const char* sw_status_name(sw_status status) {
  switch (status) {
    case SW_OK: return "OK";
    case SW_ERR_CONTRACT: return "ContractViolation";
    case SW_ERR_NON_SMOOTH: return "NonSmoothPoint";
    case SW_ERR_SOLVER: return "SolverError";
    case SW_ERR_UNSUPPORTED_SPACE: return "UnsupportedSpace";
    case SW_ERR_UNSUPPORTED_FIELD: return "UnsupportedField";
    case SW_ERR_HYPOTHESIS: return "HypothesisViolation";
    case SW_ERR_KIND_AMBIGUOUS: return "KindAmbiguous";
    case SW_ERR_PARSE: return "ParseError";
    case SW_ERR_INTERNAL: return "InternalError";
  }
  return "Unknown";
}

const char* sw_last_error(void) { return g_last_error.c_str(); }

void sw_string_free(char* s) { std::free(s); }

sw_status sw_last_error_witness(char** out_json) {
  const nlohmann::json witness = g_last_witness;
  const std::string message = g_last_error;
  const sw_status st = guarded([&] { emit(witness, out_json); });
  g_last_witness = witness;
  g_last_error = message;
  return st;
}

sw_status sw_space_from_json(const char* json, sw_space** out) {
  return guarded([&] {
    require_ptr(out, "output handle");
    *out = nullptr;
    *out = new sw_space{space_from_json(parse(json))};
  });
}

void sw_space_free(sw_space* space) { delete space; }

size_t sw_space_dim(const sw_space* space) {
  return space ? static_cast<size_t>(space->space.dim()) : 0;
}

int sw_space_is_complex(const sw_space* space) { return space && space->space.is_complex(); }

int sw_space_is_smooth(const sw_space* space) { return space && space->space.is_smooth(); }

sw_status sw_space_to_json(const sw_space* space, char** out_json) {
  return guarded([&] {
    require_ptr(space, "space");
    emit(to_json(space->space), out_json);
  });
}

sw_status sw_norm(const sw_space* space, const sw_complex* x, size_t n, double* out) {
  return guarded([&] {
    require_ptr(space, "space");
    require_ptr(out, "output");
    *out = norm(space->space, read_vec(space->space, x, n));
  });
}

sw_status sw_sip(const sw_space* space, const sw_complex* x, const sw_complex* y, size_t n,
                 sw_complex* out) {
  return guarded([&] {
    require_ptr(space, "space");
    require_ptr(out, "output");
    const Space& s = space->space;
    *out = to_c(sip(s, read_vec(s, x, n), read_vec(s, y, n)));
  });
}

sw_status sw_gateaux_sip(const sw_space* space, const sw_complex* x, const sw_complex* y,
                         size_t n, double h, sw_complex* out) {
  return guarded([&] {
    require_ptr(space, "space");
    require_ptr(out, "output");
    const Space& s = space->space;
    std::optional<double> step;
    if (h > 0.0) step = h;
    *out = to_c(gateaux_sip_oracle(s, read_vec(s, x, n), read_vec(s, y, n), step));
  });
}

sw_status sw_support_functional(const sw_space* space, const sw_complex* y, size_t n,
                                sw_complex* out_coeffs) {
  return guarded([&] {
    require_ptr(space, "space");
    require_ptr(out_coeffs, "output");
    const Vec g = support_functional(space->space, read_vec(space->space, y, n));
    for (size_t i = 0; i < n; ++i) out_coeffs[i] = to_c(g[static_cast<Eigen::Index>(i)]);
  });
}

sw_status sw_bj_orthogonal(const sw_space* space, const sw_complex* x, const sw_complex* y,
                           size_t n, double tol, int* out_orthogonal, double* out_margin,
                           sw_complex* out_minimizer) {
  return guarded([&] {
    require_ptr(space, "space");
    const Space& s = space->space;
    const OrthVerdict v =
        bj_orthogonal(s, read_vec(s, x, n), read_vec(s, y, n), tol > 0.0 ? tol : kOrthogonalityTol);
    if (out_orthogonal) *out_orthogonal = v.orthogonal ? 1 : 0;
    if (out_margin) *out_margin = v.margin;
    if (out_minimizer) *out_minimizer = to_c(v.minimizer);
  });
}

sw_status sw_best_coeffs(const sw_space* space, const sw_complex* target,
                         const sw_complex* const* basis, size_t count, size_t n,
                         sw_complex* out_coeffs, double* out_residual) {
  return guarded([&] {
    require_ptr(space, "space");
    require_ptr(basis, "basis");
    require_ptr(out_coeffs, "output");
    const Space& s = space->space;
    require(count == 1 || count == 2, "basis must hold one or two vectors");
    std::vector<Vec> b;
    for (size_t k = 0; k < count; ++k) b.push_back(read_vec(s, basis[k], n));
    const CoeffFit fit = best_coeffs(s, read_vec(s, target, n), b);
    for (size_t k = 0; k < count; ++k) out_coeffs[k] = to_c(fit.coeffs[k]);
    if (out_residual) *out_residual = fit.residual;
  });
}

sw_status sw_map_from_json(const char* run_config_json, sw_map** out) {
  return guarded([&] {
    require_ptr(out, "output handle");
    *out = nullptr;
    nlohmann::json j = parse(run_config_json);
    *out = new sw_map{build_map(run_config_from_json(j))};
  });
}

sw_status sw_map_from_callback(const sw_space* source, const sw_space* target, sw_map_fn fn,
                               void* user_data, sw_map** out) {
  return guarded([&] {
    require_ptr(source, "source space");
    require_ptr(target, "target space");
    require_ptr(out, "output handle");
    require(fn != nullptr, "callback is null");
    *out = nullptr;
    const auto m = static_cast<size_t>(target->space.dim());
    MapOracle oracle(
        source->space, target->space,
        [fn, user_data, m](const Vec& x) -> Vec {
          std::vector<sw_complex> in(static_cast<size_t>(x.size()));
          for (Eigen::Index i = 0; i < x.size(); ++i) in[static_cast<size_t>(i)] = to_c(x[i]);
          std::vector<sw_complex> res(m);
          if (fn(in.data(), in.size(), res.data(), m, user_data) != 0)
            fail(ErrorCode::ContractViolation, "map callback reported failure");
          Vec y(static_cast<Eigen::Index>(m));
          for (size_t i = 0; i < m; ++i) y[static_cast<Eigen::Index>(i)] = Scalar(res[i].re, res[i].im);
          return y;
        },
        "callback");
    *out = new sw_map{std::move(oracle)};
  });
}

void sw_map_free(sw_map* map) { delete map; }

sw_status sw_map_eval(const sw_map* map, const sw_complex* x, size_t source_dim, sw_complex* out,
                      size_t target_dim) {
  return guarded([&] {
    require_ptr(map, "map");
    require_ptr(out, "output");
    require(target_dim == static_cast<size_t>(map->map.target().dim()),
            "output length does not match the target dimension");
    const Vec y = map->map(read_vec(map->map.source(), x, source_dim));
    for (size_t i = 0; i < target_dim; ++i) out[i] = to_c(y[static_cast<Eigen::Index>(i)]);
  });
}

sw_status sw_map_check(const sw_map* map, const char* check, size_t samples, double tol,
                       uint64_t seed, char** out_report_json) {
  return guarded([&] {
    require_ptr(map, "map");
    require_ptr(check, "check name");
    require(samples >= 2, "sample count must be at least 2");
    Rng rng(derive_seed(seed, 0x5a3b1e));
    const auto xs = make_samples(map->map.source(), samples, rng);
    CheckOptions opt;
    opt.tol = tol;
    opt.seed = seed;
    const std::string name = check;
    Report r;
    if (name == "wigner") r = check_wigner(map->map, xs, opt);
    else if (name == "phase_sets" || name == "phase_isometry_sets") r = check_phase_isometry_sets(map->map, xs, opt);
    else if (name == "exact" || name == "exact_preservation") r = check_exact_preservation(map->map, xs, opt);
    else if (name == "linearity") r = check_linearity(map->map, xs, opt);
    else fail(ErrorCode::ParseError, "unknown check \"" + name + "\"");
    emit(to_json(r), out_report_json);
  });
}

sw_status sw_map_reconstruct(const sw_map* map, double tol, uint64_t seed, char** out_json) {
  return guarded([&] {
    require_ptr(map, "map");
    ReconstructOptions opt;
    opt.tol = tol;
    opt.seed = seed;
    emit(to_json(reconstruct(map->map, opt), map->map.target()), out_json);
  });
}

sw_status sw_sip_eval_json(const char* request_json, char** out_json) {
  bool non_smooth = false;
  const sw_status st = guarded([&] {
    const SipEval r = cmd_sip_eval(parse(request_json));
    non_smooth = r.non_smooth;
    emit(r.doc, out_json);
    if (non_smooth) g_last_error = r.doc["oracle_error"]["message"].get<std::string>();
  });
  return st == SW_OK && non_smooth ? SW_ERR_NON_SMOOTH : st;
}

sw_status sw_orth_check_json(const char* request_json, char** out_json) {
  return guarded([&] { emit(cmd_orth_check(parse(request_json)), out_json); });
}

sw_status sw_check_json(const char* run_config_json, char** out_json) {
  return guarded([&] { emit(cmd_check(run_config_from_json(parse(run_config_json))), out_json); });
}

sw_status sw_reconstruct_json(const char* run_config_json, char** out_json) {
  return guarded(
      [&] { emit(cmd_reconstruct(run_config_from_json(parse(run_config_json))), out_json); });
}

sw_status sw_counterexample_json(char** out_json) {
  return guarded([&] { emit(cmd_counterexample(), out_json); });
}

sw_status sw_selftest_json(uint64_t seed, int criterion, char** out_json) {
  return guarded([&] {
    std::vector<CriterionResult> results;
    if (criterion == 0) results = run_acceptance(seed);
    else results.push_back(run_criterion(criterion, seed));
    emit(to_json(results, seed), out_json);
  });
}

}  // extern "C"
