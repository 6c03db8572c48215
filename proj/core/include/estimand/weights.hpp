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

#include <cstddef>
#include <map>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "estimand/rational.hpp"
#include "estimand/subsets.hpp"

namespace estimand {

enum class WeightKind { point_mass, invariant, permutable, compatible_pmf };

std::string_view to_string(WeightKind kind);
/// Accepts "point_mass", "invariant", "permutable", "compatible_pmf".
WeightKind weight_kind_from_string(std::string_view text);

/// Invariant weights keyed by (|Y|, |T|). Missing cells are zero.
using CardinalityTable = std::map<std::pair<int, int>, Rational>;

struct WeightEntry {
  SubsetMask t;
  SubsetMask y;
  Rational w;
};

/// w(T, Y) for every nonempty Y and T in the complement of Y, with the
/// normalization sum_T w(T, Y) = 1 and w >= 0 enforced at construction.
class WeightSpec {
 public:
  static WeightSpec point_mass(int k);
  /// w(T, Y) = 2^-(K - |Y|).
  static WeightSpec equal_invariant(int k);
  static WeightSpec invariant(int k, const CardinalityTable& table);
  /// Raw (T, Y) entries declared invariant. With `strict`, entries that are
  /// not a function of (|T|, |Y|) are rejected; otherwise they are kept as
  /// given so the weight symmetry condition can be reported on. Missing entries are zero.
  static WeightSpec invariant_from_entries(int k, const std::vector<WeightEntry>& entries,
                                           bool strict = true);
  static WeightSpec permutable(int k, const std::vector<WeightEntry>& entries);

  WeightKind kind() const noexcept { return kind_; }
  int k() const noexcept { return k_; }

  /// Throws ArgumentError unless Y is nonempty and T is disjoint from Y.
  const Rational& at(SubsetMask t, SubsetMask y) const;

  bool depends_only_on_cardinalities() const;
  /// The (|Y|, |T|) table when weights depend only on cardinalities.
  std::optional<CardinalityTable> cardinality_table() const;
  bool is_point_mass() const;

  /// Joint pmf indexed by subset bits, when derived from one.
  const std::optional<std::vector<Rational>>& source_pmf() const noexcept { return pmf_; }

  /// Every (T, Y) cell, Y in canonical order, then T in canonical order.
  std::vector<WeightEntry> entries() const;

 private:
  friend WeightSpec derive_compatible_weights(int k, const std::vector<Rational>& pmf);

  WeightSpec(WeightKind kind, int k);
  Rational& cell(SubsetMask t, SubsetMask y);
  void fill(const std::vector<WeightEntry>& entries);
  void validate() const;

  WeightKind kind_;
  int k_;
  /// blocks_[y.bits()] holds w(., Y) indexed by T compressed onto Y^c.
  std::vector<std::vector<Rational>> blocks_;
  std::optional<std::vector<Rational>> pmf_;
};

/// w(T, Y) = sum over Z in Y of pmf(Z u T). `pmf` is indexed by subset bits
/// and must be nonnegative and sum to 1. The result has kind permutable.
WeightSpec derive_compatible_weights(int k, const std::vector<Rational>& pmf);

}  // namespace estimand
