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

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "estimand/label_permutation.hpp"

namespace estimand {

/// A subset A of the K action variables. Bit k-1 is set iff X_k is in A,
/// which in turn means X_k sits at its control state a_k = 0.
class SubsetMask {
 public:
  /// Throws SizeLimitError for K outside 1..16, ValidationError if bits >= 2^K.
  SubsetMask(std::uint32_t bits, int k);

  static SubsetMask empty(int k) { return {0u, k}; }
  static SubsetMask full(int k);
  /// 1-based variable indices, e.g. {1, 3} for {X1, X3}.
  static SubsetMask from_indices(int k, std::span<const int> indices);
  /// Binary state string "a_1...a_K"; a_k = '0' puts X_k in the subset.
  static SubsetMask from_state_string(std::string_view state);

  std::uint32_t bits() const noexcept { return bits_; }
  int k() const noexcept { return k_; }
  int size() const noexcept { return std::popcount(bits_); }
  bool is_empty() const noexcept { return bits_ == 0; }
  /// 1-based label.
  bool contains(int label) const noexcept { return (bits_ >> (label - 1)) & 1u; }
  bool is_subset_of(SubsetMask other) const noexcept { return (bits_ & ~other.bits_) == 0; }

  /// Sorted 1-based indices.
  std::vector<int> indices() const;
  std::string state_string() const;
  /// "{X1,X3}", or "{}" for the empty set.
  std::string to_string() const;

  friend bool operator==(SubsetMask, SubsetMask) = default;
  friend auto operator<=>(SubsetMask, SubsetMask) = default;

 private:
  std::uint32_t bits_;
  int k_;
};

SubsetMask set_union(SubsetMask a, SubsetMask b);
SubsetMask set_intersection(SubsetMask a, SubsetMask b);
SubsetMask set_difference(SubsetMask a, SubsetMask b);
/// Complement relative to X = {X_1..X_K}.
SubsetMask set_complement(SubsetMask a);

/// sigma*(A) = { sigma(X) : X in A }.
SubsetMask apply_sigma_star(const LabelPermutation& sigma, SubsetMask a);

/// Bijection between 2^X and {0..2^K-1}: ascending cardinality blocks, a
/// fixed order inside each block (lexicographic by bitmask by default).
class CanonicalOrdering {
 public:
  /// Accepts any sequence of all 2^K masks sorted by cardinality. Throws
  /// ValidationError otherwise.
  static CanonicalOrdering from_sequence(int k, std::vector<std::uint32_t> masks);

  int k() const noexcept { return k_; }
  std::size_t size() const noexcept { return mask_of_.size(); }

  std::size_t index_of(SubsetMask a) const;
  SubsetMask mask_of(std::size_t index) const { return {mask_of_.at(index), k_}; }

  std::size_t block_begin(int q) const { return block_offset_.at(static_cast<std::size_t>(q)); }
  std::size_t block_size(int q) const {
    return block_offset_.at(static_cast<std::size_t>(q) + 1) - block_begin(q);
  }

  bool is_lexicographic() const;

  friend bool operator==(const CanonicalOrdering&, const CanonicalOrdering&) = default;

 private:
  CanonicalOrdering() = default;

  int k_ = 0;
  std::vector<std::uint32_t> mask_of_;
  std::vector<std::uint32_t> index_of_;
  std::vector<std::size_t> block_offset_;
};

/// The canonical ordering: by cardinality, then by bitmask value.
CanonicalOrdering enumerate_by_cardinality(int k);

/// Nonempty subsets of X in canonical order.
std::vector<SubsetMask> nonempty_subsets(int k);

/// All subsets of `within` (a bitmask), in canonical order restricted to it.
std::vector<std::uint32_t> canonical_submasks(std::uint32_t within);

std::uint64_t binomial(int n, int r);

}  // namespace estimand
