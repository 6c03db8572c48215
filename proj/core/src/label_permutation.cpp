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

#include "estimand/label_permutation.hpp"

#include <charconv>
#include <numeric>

#include "estimand/error.hpp"

namespace estimand {

LabelPermutation::LabelPermutation(std::vector<int> image) : image_(std::move(image)) {
  if (image_.empty()) throw ValidationError("permutation must act on at least one label");
  std::vector<bool> seen(image_.size(), false);
  for (int v : image_) {
    if (v < 1 || v > static_cast<int>(image_.size()) || seen[static_cast<std::size_t>(v - 1)]) {
      throw ValidationError("permutation image " + to_string() + " is not a bijection on {1.." +
                            std::to_string(image_.size()) + "}");
    }
    seen[static_cast<std::size_t>(v - 1)] = true;
  }
}

LabelPermutation LabelPermutation::identity(int k) {
  if (k < 1) throw ValidationError("permutation must act on at least one label");
  std::vector<int> image(static_cast<std::size_t>(k));
  std::iota(image.begin(), image.end(), 1);
  return LabelPermutation(std::move(image));
}

LabelPermutation LabelPermutation::transposition(int k, int a, int b) {
  if (a < 1 || a > k || b < 1 || b > k) {
    throw ArgumentError("transposition labels out of range 1.." + std::to_string(k));
  }
  std::vector<int> image = identity(k).image();
  std::swap(image[static_cast<std::size_t>(a - 1)], image[static_cast<std::size_t>(b - 1)]);
  return LabelPermutation(std::move(image));
}

LabelPermutation LabelPermutation::parse(std::string_view text) {
  std::vector<int> image;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view token = text.substr(pos, comma - pos);
    while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
    while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc() || ptr != token.data() + token.size()) {
      throw ValidationError("cannot parse permutation '" + std::string(text) + "'");
    }
    image.push_back(value);
    pos = comma + 1;
  }
  return LabelPermutation(std::move(image));
}

LabelPermutation LabelPermutation::inverse() const {
  std::vector<int> inv(image_.size());
  for (std::size_t i = 0; i < image_.size(); ++i) {
    inv[static_cast<std::size_t>(image_[i] - 1)] = static_cast<int>(i + 1);
  }
  return LabelPermutation(std::move(inv));
}

bool LabelPermutation::is_identity() const {
  for (std::size_t i = 0; i < image_.size(); ++i) {
    if (image_[i] != static_cast<int>(i + 1)) return false;
  }
  return true;
}

std::string LabelPermutation::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < image_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(image_[i]);
  }
  return out;
}

LabelPermutation compose(const LabelPermutation& outer, const LabelPermutation& inner) {
  if (outer.k() != inner.k()) {
    throw DimensionError("cannot compose permutations on " + std::to_string(outer.k()) +
                         " and " + std::to_string(inner.k()) + " labels");
  }
  std::vector<int> image(static_cast<std::size_t>(inner.k()));
  for (int i = 1; i <= inner.k(); ++i) image[static_cast<std::size_t>(i - 1)] = outer(inner(i));
  return LabelPermutation(std::move(image));
}

}  // namespace estimand
