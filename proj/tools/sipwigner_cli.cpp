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

// Command-line front end. Talks to the library only through the C API.

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "sipwigner/sipwigner.h"

namespace {

using nlohmann::json;

enum Exit : int {
  kPass = 0,
  kFail = 1,
  kUsage = 2,
  kNonSmooth = 3,
  kUnsupported = 4,
  kSolver = 5,
  kInternal = 6,
};

int exit_code(sw_status st) {
  switch (st) {
    case SW_OK: return kPass;
    case SW_ERR_PARSE:
    case SW_ERR_CONTRACT: return kUsage;
    case SW_ERR_NON_SMOOTH: return kNonSmooth;
    case SW_ERR_UNSUPPORTED_SPACE:
    case SW_ERR_UNSUPPORTED_FIELD: return kUnsupported;
    case SW_ERR_HYPOTHESIS:
    case SW_ERR_KIND_AMBIGUOUS: return kFail;
    case SW_ERR_SOLVER: return kSolver;
    case SW_ERR_INTERNAL: return kInternal;
  }
  return kInternal;
}

struct Options {
  std::string config_path;
  std::optional<std::uint64_t> seed;
  std::optional<double> tol;
  bool json_out = false;
  int criterion = 0;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_config_text(const std::string& path) {
  if (path.empty()) throw UsageError("--config <path> is required");
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open config file " + path);
  return {std::istreambuf_iterator<char>(in), {}};
}

std::optional<std::uint64_t> env_seed() {
  const char* raw = std::getenv("SIPWIGNER_SEED");
  if (raw == nullptr || *raw == '\0') return std::nullopt;
  try {
    std::size_t used = 0;
    const auto v = std::stoull(raw, &used, 0);
    if (used != std::string(raw).size()) throw std::invalid_argument(raw);
    return v;
  } catch (const std::exception&) {
    throw UsageError(std::string("SIPWIGNER_SEED is not an unsigned integer: ") + raw);
  }
}

// Precedence: --seed, then the config's own "seed", then SIPWIGNER_SEED.
json load_config(const Options& opt, bool wants_seed) {
  json cfg;
  try {
    cfg = json::parse(read_config_text(opt.config_path));
  } catch (const json::parse_error& e) {
    throw UsageError(std::string("config is not valid JSON: ") + e.what());
  }
  if (!cfg.is_object()) throw UsageError("config must be a JSON object");
  if (wants_seed) {
    if (opt.seed) cfg["seed"] = *opt.seed;
    else if (!cfg.contains("seed"))
      if (auto s = env_seed()) cfg["seed"] = *s;
  }
  if (opt.tol) cfg["tol"] = *opt.tol;
  return cfg;
}

// Runs a JSON-producing C call; returns the parsed document (if any) and status.
template <class Call>
std::pair<sw_status, std::string> call_json(Call&& call) {
  char* out = nullptr;
  const sw_status st = call(&out);
  std::string text = out ? out : "";
  sw_string_free(out);
  return {st, text};
}

int report_error(sw_status st, const Options& opt) {
  const std::string message = sw_last_error();
  if (opt.json_out) {
    json err = {{"error", sw_status_name(st)}, {"message", message}};
    auto [wst, witness] = call_json([](char** o) { return sw_last_error_witness(o); });
    if (wst == SW_OK && !witness.empty()) err["witness"] = json::parse(witness);
    std::cout << err.dump() << "\n";
  }
  std::cerr << "error: " << sw_status_name(st) << ": " << message << "\n";
  return exit_code(st);
}

std::string scalar_text(const json& z) {
  if (z.is_null()) return "n/a";
  if (z.is_number()) return z.dump();
  std::ostringstream out;
  out << z["re"].get<double>() << (z["im"].get<double>() < 0 ? " - " : " + ")
      << std::abs(z["im"].get<double>()) << "i";
  return out.str();
}

int cmd_sip_eval(const Options& opt) {
  const json cfg = load_config(opt, false);
  auto [st, text] = call_json([&](char** o) { return sw_sip_eval_json(cfg.dump().c_str(), o); });
  if (text.empty()) return report_error(st, opt);
  if (opt.json_out) {
    std::cout << text << "\n";
  } else {
    const json doc = json::parse(text);
    std::cout << "sip    = " << scalar_text(doc["sip"]) << "\n"
              << "oracle = " << scalar_text(doc["oracle"]) << "\n";
    if (!doc["abs_diff"].is_null()) std::cout << "|diff| = " << doc["abs_diff"].get<double>() << "\n";
  }
  if (st != SW_OK) std::cerr << "error: " << sw_status_name(st) << ": " << sw_last_error() << "\n";
  return exit_code(st);
}

int cmd_orth_check(const Options& opt) {
  const json cfg = load_config(opt, false);
  auto [st, text] = call_json([&](char** o) { return sw_orth_check_json(cfg.dump().c_str(), o); });
  if (st != SW_OK) return report_error(st, opt);
  if (opt.json_out) {
    std::cout << text << "\n";
    return kPass;
  }
  const json doc = json::parse(text);
  std::cout << "orthogonal: " << (doc["orthogonal"].get<bool>() ? "yes" : "no")
            << "  margin: " << doc["margin"].get<double>()
            << "  minimizer: " << scalar_text(doc["minimizer"]) << "\n";
  if (doc.contains("sip_yx"))
    std::cout << "[y,x] = " << scalar_text(doc["sip_yx"])
              << "  routes agree: " << (doc["routes_agree"].get<bool>() ? "yes" : "no") << "\n";
  return kPass;
}

int cmd_check(const Options& opt) {
  const json cfg = load_config(opt, true);
  auto [st, text] = call_json([&](char** o) { return sw_check_json(cfg.dump().c_str(), o); });
  if (st != SW_OK) return report_error(st, opt);
  const json doc = json::parse(text);
  if (opt.json_out) {
    std::cout << text << "\n";
  } else {
    for (const auto& r : doc["reports"]) {
      std::cout << r["check"].get<std::string>() << ": "
                << (r["verdict"] == "pass" ? "PASS" : "FAIL")
                << "  max_violation=" << r["max_violation"].get<double>()
                << "  pairs=" << r["pairs_checked"].get<std::size_t>() << "\n";
      if (!r["witness"].is_null())
        std::cout << "  witness: " << r["witness"].dump() << "\n";
    }
  }
  return doc["verdict"] == "pass" ? kPass : kFail;
}

int cmd_reconstruct(const Options& opt) {
  const json cfg = load_config(opt, true);
  auto [st, text] = call_json([&](char** o) { return sw_reconstruct_json(cfg.dump().c_str(), o); });
  if (st != SW_OK) return report_error(st, opt);
  if (opt.json_out) {
    std::cout << text << "\n";
    return kPass;
  }
  const json doc = json::parse(text);
  std::cout << "kind: " << doc["kind"].get<std::string>()
            << "  residual: " << doc["residual"].get<double>() << "\nU =\n";
  for (const auto& row : doc["U"]) {
    std::cout << " ";
    for (const auto& z : row) std::cout << "  " << scalar_text(z);
    std::cout << "\n";
  }
  return kPass;
}

int cmd_counterexample(const Options& opt) {
  auto [st, text] = call_json([](char** o) { return sw_counterexample_json(o); });
  if (st != SW_OK) return report_error(st, opt);
  if (opt.json_out) {
    std::cout << text << "\n";
    return kPass;
  }
  const json doc = json::parse(text);
  std::cout << "T(x1, x2) = (x2, x1) on the real max-norm plane is a linear isometry, yet\n"
            << "  [x, y]   = " << doc["sip_xy"].get<double>() << "  for x = (1,0), y = (1,1)\n"
            << "  [Tx, Ty] = " << doc["sip_TxTy"].get<double>() << "\n"
            << "wigner check on {x, y}: " << doc["report"]["verdict"].get<std::string>()
            << " (max_violation " << doc["report"]["max_violation"].get<double>() << ")\n";
  return kPass;
}

int cmd_selftest(const Options& opt) {
  std::uint64_t seed = 0;
  if (opt.seed) seed = *opt.seed;
  else if (auto s = env_seed()) seed = *s;
  auto [st, text] = call_json([&](char** o) { return sw_selftest_json(seed, opt.criterion, o); });
  if (st != SW_OK) return report_error(st, opt);
  const json doc = json::parse(text);
  if (opt.json_out) {
    std::cout << text << "\n";
  } else {
    std::cout << "selftest seed " << seed << "\n";
    for (const auto& c : doc["criteria"]) {
      std::cout << (c["verdict"] == "pass" ? "[PASS] " : "[FAIL] ") << "AC" << c["id"].get<int>()
                << "  " << c["name"].get<std::string>() << "\n         "
                << c["detail"].get<std::string>() << "\n";
    }
  }
  return doc["verdict"] == "pass" ? kPass : kFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"sipwigner: semi-inner products, Birkhoff-James orthogonality and Wigner-type symmetries"};
  app.require_subcommand(1);
  Options opt;
  std::uint64_t seed_value = 0;
  double tol_value = 0.0;

  auto add_common = [&](CLI::App* sub, bool config, bool seed, bool tol) {
    if (config) sub->add_option("--config", opt.config_path, "JSON request or run config ('-' for stdin)")->required();
    if (seed) sub->add_option("--seed", seed_value, "64-bit seed (falls back to SIPWIGNER_SEED)");
    if (tol) sub->add_option("--tol", tol_value, "tolerance override");
    sub->add_flag("--json", opt.json_out, "emit machine-readable JSON");
  };

  auto* sip_eval = app.add_subcommand("sip-eval", "semi-inner product with its finite-difference cross-check");
  add_common(sip_eval, true, false, false);
  auto* orth = app.add_subcommand("orth-check", "Birkhoff-James orthogonality of x to y");
  add_common(orth, true, false, true);
  auto* check = app.add_subcommand("check", "run Wigner-type checkers on a map");
  add_common(check, true, true, true);
  auto* recon = app.add_subcommand("reconstruct", "recover the isometry and phase of a Wigner map");
  add_common(recon, true, true, true);
  auto* counter = app.add_subcommand("counterexample", "non-smooth max-norm plane counterexample");
  add_common(counter, false, false, false);
  auto* selftest = app.add_subcommand("selftest", "run the acceptance suite");
  add_common(selftest, false, true, false);
  selftest->add_option("--criterion", opt.criterion, "run a single criterion (1-7)")->check(CLI::Range(0, 7));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  for (auto* sub : app.get_subcommands()) {
    if (auto* o = sub->get_option_no_throw("--seed"); o != nullptr && o->count() > 0) opt.seed = seed_value;
    if (auto* o = sub->get_option_no_throw("--tol"); o != nullptr && o->count() > 0) opt.tol = tol_value;
  }

  try {
    if (*sip_eval) return cmd_sip_eval(opt);
    if (*orth) return cmd_orth_check(opt);
    if (*check) return cmd_check(opt);
    if (*recon) return cmd_reconstruct(opt);
    if (*counter) return cmd_counterexample(opt);
    if (*selftest) return cmd_selftest(opt);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
