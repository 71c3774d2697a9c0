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

#include <stdexcept>
#include <string>
#include <string_view>

#include <json.hpp>

namespace sipwigner {

enum class ErrorCode {
  ContractViolation,
  NonSmoothPoint,
  SolverError,
  UnsupportedSpace,
  UnsupportedField,
  HypothesisViolation,
  KindAmbiguous,
  ParseError,
};

std::string_view error_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message,
        nlohmann::json witness = nullptr)
      : std::runtime_error(message), code_(code), witness_(std::move(witness)) {}

  ErrorCode code() const { return code_; }

  // Structured evidence for the failure, null when there is none.
  const nlohmann::json& witness() const { return witness_; }

 private:
  ErrorCode code_;
  nlohmann::json witness_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message,
                              nlohmann::json witness = nullptr) {
  throw Error(code, message, std::move(witness));
}

inline void require(bool condition, const std::string& message) {
  if (!condition) fail(ErrorCode::ContractViolation, message);
}

}  // namespace sipwigner
