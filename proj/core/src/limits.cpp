// Copyright 2026 The estimand-algebra Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "estimand/limits.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "estimand/error.hpp"

namespace estimand {

std::optional<int> max_k_override() {
  const char* raw = std::getenv("ESTIMAND_ALGEBRA_MAX_K");
  if (raw == nullptr || *raw == '\0') return std::nullopt;
  char* end = nullptr;
  long value = std::strtol(raw, &end, 10);
  if (end == raw || *end != '\0' || value < 1) return std::nullopt;
  return static_cast<int>(std::min<long>(value, 16));
}

const SizeLimits& size_limits() {
  static const SizeLimits limits = [] {
    SizeLimits l;
    if (auto cap = max_k_override()) {
      l.sweep_k = std::min(*cap, l.index_k);
      l.class_k = std::min(*cap, l.index_k);
    }
    return l;
  }();
  return limits;
}

void require_k(int k, int cap, std::string_view what) {
  if (k < 1 || k > cap) {
    throw SizeLimitError(std::string(what) + ": K = " + std::to_string(k) +
                         " outside supported range 1.." + std::to_string(cap));
  }
}

}  // namespace estimand
