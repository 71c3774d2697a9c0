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

#include <functional>
#include <string>
#include <utility>

#include "sipwigner/space.hpp"

namespace sipwigner {

// A black-box map between two spaces. Evaluation checks both ends of the
// dimension contract.
class MapOracle {
 public:
  using Fn = std::function<Vec(const Vec&)>;

  MapOracle(Space source, Space target, Fn fn, std::string name = "map")
      : source_(std::move(source)), target_(std::move(target)), fn_(std::move(fn)),
        name_(std::move(name)) {}

  const Space& source() const { return source_; }
  const Space& target() const { return target_; }
  const std::string& name() const { return name_; }

  Vec operator()(const Vec& x) const {
    source_.check(x, "map input");
    Vec out = fn_(x);
    target_.check(out, "map output");
    return out;
  }

 private:
  Space source_;
  Space target_;
  Fn fn_;
  std::string name_;
};

}  // namespace sipwigner
