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

#include "sipwigner/json_io.hpp"

#include <cmath>
#include <cstdio>

namespace sipwigner {

namespace {

void write(const nlohmann::json& j, int indent, int depth, std::string& out) {
  auto newline = [&](int d) {
    if (indent < 0) return;
    out += '\n';
    out.append(static_cast<std::size_t>(indent * d), ' ');
  };
  const char* sep = indent < 0 ? ":" : ": ";

  switch (j.type()) {
    case nlohmann::json::value_t::object: {
      if (j.empty()) { out += "{}"; return; }
      out += '{';
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) out += ',';
        first = false;
        newline(depth + 1);
        out += nlohmann::json(it.key()).dump();
        out += sep;
        write(it.value(), indent, depth + 1, out);
      }
      newline(depth);
      out += '}';
      return;
    }
    case nlohmann::json::value_t::array: {
      if (j.empty()) { out += "[]"; return; }
      out += '[';
      bool first = true;
      for (const auto& v : j) {
        if (!first) out += ',';
        first = false;
        newline(depth + 1);
        write(v, indent, depth + 1, out);
      }
      newline(depth);
      out += ']';
      return;
    }
    case nlohmann::json::value_t::number_float: {
      const double v = j.get<double>();
      if (!std::isfinite(v)) { out += "null"; return; }
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.17g", v);
      out += buf;
      return;
    }
    default:
      out += j.dump();
  }
}

}  // namespace

std::string dump_json(const nlohmann::json& j, int indent) {
  std::string out;
  write(j, indent, 0, out);
  return out;
}

}  // namespace sipwigner
