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
#include <string>
#include <vector>

#include "estimand/generator_matrix.hpp"
#include "estimand/label_permutation.hpp"
#include "estimand/matrix.hpp"
#include "estimand/subsets.hpp"

namespace estimand {

/// Right-multiplication by a permutation matrix, stored by source column:
/// column j of H * P_c is column source(j) of H.
class ColumnPermutation {
 public:
  explicit ColumnPermutation(std::vector<std::size_t> source);

  std::size_t size() const noexcept { return source_.size(); }
  std::size_t source(std::size_t j) const { return source_[j]; }
  const std::vector<std::size_t>& sources() const noexcept { return source_; }

  /// P with P(source(j), j) = 1.
  RationalMatrix to_dense() const;

 private:
  std::vector<std::size_t> source_;
};

/// H * P_c without forming P_c.
RationalMatrix apply_columns(const RationalMatrix& h, const ColumnPermutation& pc);

/// P_c = diag(P^(0), ..., P^(K)) induced by a label permutation. Column j
/// of H * P_c is column index_of(sigma*(mask_of(j))) of H.
class InducedPermutationMatrix {
 public:
  int k() const noexcept { return k_; }
  std::size_t dimension() const noexcept { return columns_.size(); }
  const ColumnPermutation& columns() const noexcept { return columns_; }

  /// Block q as a C(K,q) x C(K,q) 0/1 matrix (rows and columns are
  /// positions inside the cardinality-q block).
  RationalMatrix block(int q) const;
  RationalMatrix to_dense() const { return columns_.to_dense(); }

 private:
  friend InducedPermutationMatrix induce_column_permutation(const LabelPermutation&,
                                                            const CanonicalOrdering&);
  InducedPermutationMatrix(int k, CanonicalOrdering ordering, ColumnPermutation columns);

  int k_;
  CanonicalOrdering ordering_;
  ColumnPermutation columns_;
};

InducedPermutationMatrix induce_column_permutation(const LabelPermutation& sigma,
                                                   const CanonicalOrdering& ordering);

/// Induced action on the weight-by-estimand basis:
/// (y, t, z) -> (sigma*(y), sigma*(t), sigma*(z)).
ColumnPermutation induce_expanded_permutation(const LabelPermutation& sigma,
                                              const ExpandedBasis& basis);

/// Dispatches on the matrix basis.
ColumnPermutation induce_for(const GeneratorMatrix& h, const LabelPermutation& sigma);

/// Outcome of a sweep over S_K. `witness` is the first failing permutation in
/// enumeration order; `checked` counts permutations examined.
struct InvarianceVerdict {
  bool invariant = true;
  std::optional<LabelPermutation> witness;
  std::size_t checked = 0;
};

/// All k! permutations, lexicographic by image, identity first.
std::vector<LabelPermutation> enumerate_symmetric_group(int k);

/// A permutation of the d rows of H. image(i) = j sends row i of H to row j
/// of P_r * H, so (P_r)(j, i) = 1.
class RowPermutation {
 public:
  /// 0-based image. Throws ValidationError unless a bijection.
  explicit RowPermutation(std::vector<std::size_t> image);
  static RowPermutation identity(std::size_t d);

  std::size_t size() const noexcept { return image_.size(); }
  std::size_t image(std::size_t i) const { return image_[i]; }
  /// 1-based image, the JSON form.
  std::vector<std::size_t> image_one_based() const;
  bool is_identity() const;
  std::string to_string() const;

  RationalMatrix to_dense() const;
  /// P_r * H.
  RationalMatrix apply(const RationalMatrix& h) const;

  friend bool operator==(const RowPermutation&, const RowPermutation&) = default;

 private:
  std::vector<std::size_t> image_;
};

/// Row matching: for each row i of H take the smallest unused j with
/// row i of H equal to row j of H * P_c. The result satisfies
/// P_r * H = H * P_c exactly. Throws NotInvariantError naming the first
/// row of H that has no partner.
RowPermutation algorithm1_recover_row_permutation(const RationalMatrix& h,
                                                  const ColumnPermutation& pc);
RowPermutation algorithm1_recover_row_permutation(const GeneratorMatrix& h,
                                                  const InducedPermutationMatrix& pc);
RowPermutation algorithm1_recover_row_permutation(const GeneratorMatrix& h,
                                                  const LabelPermutation& sigma);

}  // namespace estimand
