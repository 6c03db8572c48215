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
#include <optional>
#include <unordered_map>
#include <vector>

#include "estimand/matrix.hpp"
#include "estimand/subsets.hpp"

namespace estimand {

enum class Basis { canonical, expanded };

/// Unit: every entry in {-1, 0, 1}. Fractional: some entry strictly
/// between -1 and 1 (weighted classes over the 2^K basis).
enum class EntryRegime { unit, fractional };

/// One coordinate of the weight-by-estimand basis: the product
/// w(t, y) * f(z | t) with z a subset of y and t a subset of y^c.
struct ExpandedColumn {
  SubsetMask y;
  SubsetMask t;
  SubsetMask z;

  friend bool operator==(const ExpandedColumn&, const ExpandedColumn&) = default;
};

/// Column layout for weighted generator matrices: blocks by nonempty y in
/// canonical order; inside a block, t over subsets of y^c in canonical
/// order, then z over subsets of y in canonical order. Every block spans
/// 2^K columns, so the basis has (2^K - 1) * 2^K entries.
class ExpandedBasis {
 public:
  static ExpandedBasis build(int k);

  int k() const noexcept { return k_; }
  std::size_t size() const noexcept { return columns_.size(); }
  const ExpandedColumn& column(std::size_t j) const { return columns_.at(j); }
  const std::vector<ExpandedColumn>& columns() const noexcept { return columns_; }
  std::size_t index_of(SubsetMask y, SubsetMask t, SubsetMask z) const;

 private:
  int k_ = 0;
  std::vector<ExpandedColumn> columns_;
  std::unordered_map<std::uint64_t, std::size_t> index_;
};

/// A d x n matrix H of exact rationals defining contrasts Delta = H v,
/// together with the basis its columns refer to.
class GeneratorMatrix {
 public:
  /// Columns follow `ordering` (2^K of them). Entries must lie in [-1, 1].
  static GeneratorMatrix canonical(int k, RationalMatrix m);
  static GeneratorMatrix canonical(int k, RationalMatrix m, CanonicalOrdering ordering);
  /// Columns follow ExpandedBasis::build(k).
  static GeneratorMatrix expanded(int k, RationalMatrix m);

  int k() const noexcept { return k_; }
  Basis basis() const noexcept { return basis_; }
  const RationalMatrix& matrix() const noexcept { return matrix_; }
  std::size_t rows() const noexcept { return matrix_.rows(); }
  std::size_t cols() const noexcept { return matrix_.cols(); }

  /// Throws ArgumentError for expanded-basis matrices.
  const CanonicalOrdering& ordering() const;
  /// Throws ArgumentError for canonical-basis matrices.
  const ExpandedBasis& expanded_basis() const;

  EntryRegime regime() const;

  /// Same matrix with its columns rearranged to follow `target`.
  GeneratorMatrix reordered(const CanonicalOrdering& target) const;

 private:
  GeneratorMatrix(int k, Basis basis, RationalMatrix m);

  int k_;
  Basis basis_;
  RationalMatrix matrix_;
  std::optional<CanonicalOrdering> ordering_;
  std::optional<ExpandedBasis> expanded_;
};

}  // namespace estimand
