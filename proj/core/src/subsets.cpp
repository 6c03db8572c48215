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

#include "estimand/subsets.hpp"

#include <algorithm>
#include <string>

#include "estimand/error.hpp"
#include "estimand/limits.hpp"

namespace estimand {

namespace {

void require_same_k(SubsetMask a, SubsetMask b) {
  if (a.k() != b.k()) {
    throw DimensionError("subsets over K = " + std::to_string(a.k()) + " and K = " +
                         std::to_string(b.k()) + " cannot be combined");
  }
}

bool canonical_less(std::uint32_t a, std::uint32_t b) {
  int pa = std::popcount(a);
  int pb = std::popcount(b);
  return pa != pb ? pa < pb : a < b;
}

}  // namespace

SubsetMask::SubsetMask(std::uint32_t bits, int k) : bits_(bits), k_(k) {
  require_k(k, size_limits().index_k, "subset indexing");
  if (bits >= (1u << k)) {
    throw ValidationError("bitmask " + std::to_string(bits) + " exceeds 2^" + std::to_string(k));
  }
}

SubsetMask SubsetMask::full(int k) {
  require_k(k, size_limits().index_k, "subset indexing");
  return {(1u << k) - 1u, k};
}

SubsetMask SubsetMask::from_indices(int k, std::span<const int> indices) {
  require_k(k, size_limits().index_k, "subset indexing");
  std::uint32_t bits = 0;
  for (int i : indices) {
    if (i < 1 || i > k) {
      throw ValidationError("variable index " + std::to_string(i) + " outside 1.." +
                            std::to_string(k));
    }
    std::uint32_t bit = 1u << (i - 1);
    if (bits & bit) throw ValidationError("duplicate variable index " + std::to_string(i));
    bits |= bit;
  }
  return {bits, k};
}

SubsetMask SubsetMask::from_state_string(std::string_view state) {
  const int k = static_cast<int>(state.size());
  require_k(k, size_limits().index_k, "state string");
  std::uint32_t bits = 0;
  for (int i = 0; i < k; ++i) {
    char c = state[static_cast<std::size_t>(i)];
    if (c == '0') {
      bits |= 1u << i;
    } else if (c != '1') {
      throw ValidationError("state string '" + std::string(state) + "' must contain only 0 and 1");
    }
  }
  return {bits, k};
}

std::vector<int> SubsetMask::indices() const {
  std::vector<int> out;
  for (int i = 1; i <= k_; ++i) {
    if (contains(i)) out.push_back(i);
  }
  return out;
}

std::string SubsetMask::state_string() const {
  std::string out(static_cast<std::size_t>(k_), '1');
  for (int i = 0; i < k_; ++i) {
    if ((bits_ >> i) & 1u) out[static_cast<std::size_t>(i)] = '0';
  }
  return out;
}

std::string SubsetMask::to_string() const {
  std::string out = "{";
  bool first = true;
  for (int i : indices()) {
    if (!first) out += ',';
    out += "X" + std::to_string(i);
    first = false;
  }
  return out + "}";
}

SubsetMask set_union(SubsetMask a, SubsetMask b) {
  require_same_k(a, b);
  return {a.bits() | b.bits(), a.k()};
}

SubsetMask set_intersection(SubsetMask a, SubsetMask b) {
  require_same_k(a, b);
  return {a.bits() & b.bits(), a.k()};
}

SubsetMask set_difference(SubsetMask a, SubsetMask b) {
  require_same_k(a, b);
  return {a.bits() & ~b.bits(), a.k()};
}

SubsetMask set_complement(SubsetMask a) {
  return {~a.bits() & ((1u << a.k()) - 1u), a.k()};
}

SubsetMask apply_sigma_star(const LabelPermutation& sigma, SubsetMask a) {
  if (sigma.k() != a.k()) {
    throw DimensionError("permutation on " + std::to_string(sigma.k()) +
                         " labels applied to a subset of " + std::to_string(a.k()) +
                         " variables");
  }
  std::uint32_t bits = 0;
  for (int i = 1; i <= a.k(); ++i) {
    if (a.contains(i)) bits |= 1u << (sigma(i) - 1);
  }
  return {bits, a.k()};
}

CanonicalOrdering CanonicalOrdering::from_sequence(int k, std::vector<std::uint32_t> masks) {
  require_k(k, size_limits().index_k, "canonical ordering");
  const std::size_t n = std::size_t{1} << k;
  if (masks.size() != n) {
    throw ValidationError("ordering must list all " + std::to_string(n) + " subsets");
  }
  CanonicalOrdering ord;
  ord.k_ = k;
  ord.index_of_.assign(n, static_cast<std::uint32_t>(n));
  for (std::size_t i = 0; i < n; ++i) {
    std::uint32_t m = masks[i];
    if (m >= n || ord.index_of_[m] != n) {
      throw ValidationError("ordering is not a bijection on 2^X");
    }
    if (i > 0 && std::popcount(m) < std::popcount(masks[i - 1])) {
      throw ValidationError("ordering is not sorted by cardinality");
    }
    ord.index_of_[m] = static_cast<std::uint32_t>(i);
  }
  ord.block_offset_.assign(static_cast<std::size_t>(k) + 2, 0);
  for (int q = 0; q <= k; ++q) {
    ord.block_offset_[static_cast<std::size_t>(q) + 1] =
        ord.block_offset_[static_cast<std::size_t>(q)] + binomial(k, q);
  }
  ord.mask_of_ = std::move(masks);
  return ord;
}

std::size_t CanonicalOrdering::index_of(SubsetMask a) const {
  if (a.k() != k_) {
    throw DimensionError("subset over K = " + std::to_string(a.k()) +
                         " looked up in an ordering for K = " + std::to_string(k_));
  }
  return index_of_[a.bits()];
}

bool CanonicalOrdering::is_lexicographic() const {
  return std::is_sorted(mask_of_.begin(), mask_of_.end(), canonical_less);
}

CanonicalOrdering enumerate_by_cardinality(int k) {
  require_k(k, size_limits().index_k, "enumerate_by_cardinality");
  std::vector<std::uint32_t> masks(std::size_t{1} << k);
  for (std::size_t i = 0; i < masks.size(); ++i) masks[i] = static_cast<std::uint32_t>(i);
  std::sort(masks.begin(), masks.end(), canonical_less);
  return CanonicalOrdering::from_sequence(k, std::move(masks));
}

std::vector<SubsetMask> nonempty_subsets(int k) {
  CanonicalOrdering ord = enumerate_by_cardinality(k);
  std::vector<SubsetMask> out;
  out.reserve(ord.size() - 1);
  for (std::size_t i = 1; i < ord.size(); ++i) out.push_back(ord.mask_of(i));
  return out;
}

std::vector<std::uint32_t> canonical_submasks(std::uint32_t within) {
  std::vector<std::uint32_t> out;
  std::uint32_t sub = within;
  while (true) {
    out.push_back(sub);
    if (sub == 0) break;
    sub = (sub - 1) & within;
  }
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

std::uint64_t binomial(int n, int r) {
  if (r < 0 || r > n) return 0;
  std::uint64_t result = 1;
  for (int i = 1; i <= r; ++i) {
    result = result * static_cast<std::uint64_t>(n - r + i) / static_cast<std::uint64_t>(i);
  }
  return result;
}

}  // namespace estimand
