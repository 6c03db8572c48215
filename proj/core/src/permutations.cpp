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

#include "estimand/permutations.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "estimand/error.hpp"
#include "estimand/limits.hpp"

namespace estimand {

namespace {

void require_bijection(const std::vector<std::size_t>& image, const char* what) {
  std::vector<bool> seen(image.size(), false);
  for (std::size_t v : image) {
    if (v >= image.size() || seen[v]) {
      throw ValidationError(std::string(what) + " is not a bijection");
    }
    seen[v] = true;
  }
}

}  // namespace

ColumnPermutation::ColumnPermutation(std::vector<std::size_t> source) : source_(std::move(source)) {
  require_bijection(source_, "column permutation");
}

RationalMatrix ColumnPermutation::to_dense() const {
  RationalMatrix p(source_.size(), source_.size());
  for (std::size_t j = 0; j < source_.size(); ++j) p(source_[j], j) = 1;
  return p;
}

RationalMatrix apply_columns(const RationalMatrix& h, const ColumnPermutation& pc) {
  if (h.cols() != pc.size()) {
    throw DimensionError("column permutation of size " + std::to_string(pc.size()) +
                         " applied to a matrix with " + std::to_string(h.cols()) + " columns");
  }
  RationalMatrix out(h.rows(), h.cols());
  for (std::size_t r = 0; r < h.rows(); ++r)
    for (std::size_t j = 0; j < h.cols(); ++j) out(r, j) = h(r, pc.source(j));
  return out;
}

InducedPermutationMatrix::InducedPermutationMatrix(int k, CanonicalOrdering ordering,
                                                   ColumnPermutation columns)
    : k_(k), ordering_(std::move(ordering)), columns_(std::move(columns)) {}

RationalMatrix InducedPermutationMatrix::block(int q) const {
  if (q < 0 || q > k_) throw ArgumentError("block index out of range");
  const std::size_t begin = ordering_.block_begin(q);
  const std::size_t n = ordering_.block_size(q);
  RationalMatrix b(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    std::size_t src = columns_.source(begin + j);
    if (src < begin || src >= begin + n) {
      throw InternalError("induced permutation leaves cardinality block " + std::to_string(q));
    }
    b(src - begin, j) = 1;
  }
  return b;
}

InducedPermutationMatrix induce_column_permutation(const LabelPermutation& sigma,
                                                   const CanonicalOrdering& ordering) {
  if (sigma.k() != ordering.k()) {
    throw DimensionError("permutation on " + std::to_string(sigma.k()) +
                         " labels used with an ordering for K = " + std::to_string(ordering.k()));
  }
  std::vector<std::size_t> source(ordering.size());
  for (std::size_t j = 0; j < ordering.size(); ++j) {
    source[j] = ordering.index_of(apply_sigma_star(sigma, ordering.mask_of(j)));
  }
  return InducedPermutationMatrix(sigma.k(), ordering, ColumnPermutation(std::move(source)));
}

ColumnPermutation induce_expanded_permutation(const LabelPermutation& sigma,
                                              const ExpandedBasis& basis) {
  if (sigma.k() != basis.k()) throw DimensionError("permutation and basis disagree on K");
  std::vector<std::size_t> source(basis.size());
  for (std::size_t j = 0; j < basis.size(); ++j) {
    const ExpandedColumn& c = basis.column(j);
    source[j] = basis.index_of(apply_sigma_star(sigma, c.y), apply_sigma_star(sigma, c.t),
                               apply_sigma_star(sigma, c.z));
  }
  return ColumnPermutation(std::move(source));
}

ColumnPermutation induce_for(const GeneratorMatrix& h, const LabelPermutation& sigma) {
  if (h.basis() == Basis::canonical) {
    return induce_column_permutation(sigma, h.ordering()).columns();
  }
  return induce_expanded_permutation(sigma, h.expanded_basis());
}

std::vector<LabelPermutation> enumerate_symmetric_group(int k) {
  require_k(k, size_limits().sweep_k, "symmetric group enumeration");
  std::vector<int> image(static_cast<std::size_t>(k));
  std::iota(image.begin(), image.end(), 1);
  std::vector<LabelPermutation> out;
  do {
    out.emplace_back(image);
  } while (std::next_permutation(image.begin(), image.end()));
  return out;
}

RowPermutation::RowPermutation(std::vector<std::size_t> image) : image_(std::move(image)) {
  require_bijection(image_, "row permutation");
}

RowPermutation RowPermutation::identity(std::size_t d) {
  std::vector<std::size_t> image(d);
  std::iota(image.begin(), image.end(), std::size_t{0});
  return RowPermutation(std::move(image));
}

std::vector<std::size_t> RowPermutation::image_one_based() const {
  std::vector<std::size_t> out(image_);
  for (auto& v : out) ++v;
  return out;
}

bool RowPermutation::is_identity() const {
  for (std::size_t i = 0; i < image_.size(); ++i) {
    if (image_[i] != i) return false;
  }
  return true;
}

std::string RowPermutation::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < image_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(image_[i] + 1);
  }
  return out;
}

RationalMatrix RowPermutation::to_dense() const {
  RationalMatrix p(image_.size(), image_.size());
  for (std::size_t i = 0; i < image_.size(); ++i) p(image_[i], i) = 1;
  return p;
}

RationalMatrix RowPermutation::apply(const RationalMatrix& h) const {
  if (h.rows() != image_.size()) {
    throw DimensionError("row permutation of size " + std::to_string(image_.size()) +
                         " applied to a matrix with " + std::to_string(h.rows()) + " rows");
  }
  RationalMatrix out(h.rows(), h.cols());
  for (std::size_t i = 0; i < h.rows(); ++i)
    for (std::size_t c = 0; c < h.cols(); ++c) out(image_[i], c) = h(i, c);
  return out;
}

RowPermutation algorithm1_recover_row_permutation(const RationalMatrix& h,
                                                  const ColumnPermutation& pc) {
  const RationalMatrix permuted = apply_columns(h, pc);
  const std::size_t d = h.rows();
  std::vector<bool> used(d, false);
  std::vector<std::size_t> image(d);
  for (std::size_t i = 0; i < d; ++i) {
    auto row = h.row(i);
    std::size_t match = d;
    for (std::size_t j = 0; j < d; ++j) {
      if (used[j]) continue;
      auto candidate = permuted.row(j);
      if (std::equal(row.begin(), row.end(), candidate.begin(), candidate.end())) {
        match = j;
        break;
      }
    }
    if (match == d) {
      throw NotInvariantError("row " + std::to_string(i + 1) +
                                  " of H has no unused partner among the rows of H * P_c",
                              i + 1);
    }
    used[match] = true;
    image[i] = match;
  }
  return RowPermutation(std::move(image));
}

RowPermutation algorithm1_recover_row_permutation(const GeneratorMatrix& h,
                                                  const InducedPermutationMatrix& pc) {
  if (h.basis() != Basis::canonical || pc.k() != h.k()) {
    throw DimensionError("induced permutation does not match the generator matrix");
  }
  return algorithm1_recover_row_permutation(h.matrix(), pc.columns());
}

RowPermutation algorithm1_recover_row_permutation(const GeneratorMatrix& h,
                                                  const LabelPermutation& sigma) {
  return algorithm1_recover_row_permutation(h.matrix(), induce_for(h, sigma));
}

}  // namespace estimand
