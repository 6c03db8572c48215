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

#include <string>
#include <string_view>
#include <vector>

namespace estimand {

/// A bijection sigma on the variable labels {1..K}.
class LabelPermutation {
 public:
  /// `image[i]` is sigma(i + 1), 1-based. Throws ValidationError unless the
  /// image is a bijection on {1..K}.
  explicit LabelPermutation(std::vector<int> image);

  static LabelPermutation identity(int k);
  /// Swaps labels a and b (1-based).
  static LabelPermutation transposition(int k, int a, int b);
  /// Parses the CLI form "2,3,1".
  static LabelPermutation parse(std::string_view text);

  int k() const noexcept { return static_cast<int>(image_.size()); }
  /// sigma(label), both 1-based.
  int operator()(int label) const { return image_[static_cast<std::size_t>(label - 1)]; }
  const std::vector<int>& image() const noexcept { return image_; }

  LabelPermutation inverse() const;
  bool is_identity() const;
  /// "2,3,1"
  std::string to_string() const;

  friend bool operator==(const LabelPermutation&, const LabelPermutation&) = default;
  friend auto operator<=>(const LabelPermutation&, const LabelPermutation&) = default;

 private:
  std::vector<int> image_;
};

/// (outer o inner)(i) = outer(inner(i)).
LabelPermutation compose(const LabelPermutation& outer, const LabelPermutation& inner);

}  // namespace estimand
