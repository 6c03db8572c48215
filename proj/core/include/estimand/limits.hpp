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

#pragma once

#include <optional>
#include <string_view>

namespace estimand {

/// Caps on K. Indexing tops out at 2^16 states; exhaustive S_K sweeps at
/// 6! = 720 permutations; class construction at K = 10.
struct SizeLimits {
  int index_k = 16;
  int sweep_k = 6;
  int class_k = 10;
};

/// Value of ESTIMAND_ALGEBRA_MAX_K, if set to a positive integer.
std::optional<int> max_k_override();

/// Default limits, with sweep_k and class_k replaced by the environment
/// override when present. The override never lifts index_k.
const SizeLimits& size_limits();

/// Throws SizeLimitError naming `what` unless 1 <= k <= cap.
void require_k(int k, int cap, std::string_view what);

}  // namespace estimand
