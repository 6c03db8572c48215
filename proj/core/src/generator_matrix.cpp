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

#include "estimand/generator_matrix.hpp"

#include <string>

#include "estimand/error.hpp"
#include "estimand/limits.hpp"

namespace estimand {

namespace {

std::uint64_t column_key(std::uint32_t y, std::uint32_t t, std::uint32_t z) {
  return (static_cast<std::uint64_t>(y) << 40) | (static_cast<std::uint64_t>(t) << 20) | z;
}

void check_entry_range(const RationalMatrix& m) {
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (abs(m(r, c)) > 1) {
        throw ValidationError("generator entry " + to_string(m(r, c)) + " at (" +
                              std::to_string(r + 1) + "," + std::to_string(c + 1) +
                              ") lies outside [-1, 1]");
      }
    }
  }
}

}  // namespace

ExpandedBasis ExpandedBasis::build(int k) {
  require_k(k, size_limits().class_k, "expanded basis");
  ExpandedBasis basis;
  basis.k_ = k;
  const std::uint32_t full = (1u << k) - 1u;
  for (SubsetMask y : nonempty_subsets(k)) {
    for (std::uint32_t t : canonical_submasks(full & ~y.bits())) {
      for (std::uint32_t z : canonical_submasks(y.bits())) {
        basis.index_.emplace(column_key(y.bits(), t, z), basis.columns_.size());
        basis.columns_.push_back({y, SubsetMask(t, k), SubsetMask(z, k)});
      }
    }
  }
  return basis;
}

std::size_t ExpandedBasis::index_of(SubsetMask y, SubsetMask t, SubsetMask z) const {
  auto it = index_.find(column_key(y.bits(), t.bits(), z.bits()));
  if (it == index_.end()) {
    throw ArgumentError("(" + y.to_string() + ", " + t.to_string() + ", " + z.to_string() +
                        ") is not a coordinate of the expanded basis");
  }
  return it->second;
}

GeneratorMatrix::GeneratorMatrix(int k, Basis basis, RationalMatrix m)
    : k_(k), basis_(basis), matrix_(std::move(m)) {
  check_entry_range(matrix_);
}

GeneratorMatrix GeneratorMatrix::canonical(int k, RationalMatrix m) {
  return canonical(k, std::move(m), enumerate_by_cardinality(k));
}

GeneratorMatrix GeneratorMatrix::canonical(int k, RationalMatrix m, CanonicalOrdering ordering) {
  if (ordering.k() != k) throw DimensionError("ordering built for a different K");
  if (m.cols() != ordering.size()) {
    throw DimensionError("generator matrix over K = " + std::to_string(k) + " needs " +
                         std::to_string(ordering.size()) + " columns, got " +
                         std::to_string(m.cols()));
  }
  GeneratorMatrix g(k, Basis::canonical, std::move(m));
  g.ordering_ = std::move(ordering);
  return g;
}

GeneratorMatrix GeneratorMatrix::expanded(int k, RationalMatrix m) {
  ExpandedBasis basis = ExpandedBasis::build(k);
  if (m.cols() != basis.size()) {
    throw DimensionError("expanded generator matrix over K = " + std::to_string(k) + " needs " +
                         std::to_string(basis.size()) + " columns, got " +
                         std::to_string(m.cols()));
  }
  GeneratorMatrix g(k, Basis::expanded, std::move(m));
  g.expanded_ = std::move(basis);
  return g;
}

const CanonicalOrdering& GeneratorMatrix::ordering() const {
  if (!ordering_) throw ArgumentError("expanded-basis matrix has no canonical ordering");
  return *ordering_;
}

const ExpandedBasis& GeneratorMatrix::expanded_basis() const {
  if (!expanded_) throw ArgumentError("canonical-basis matrix has no expanded basis");
  return *expanded_;
}

EntryRegime GeneratorMatrix::regime() const {
  for (std::size_t r = 0; r < matrix_.rows(); ++r) {
    for (const Rational& x : matrix_.row(r)) {
      if (x != 0 && x != 1 && x != -1) return EntryRegime::fractional;
    }
  }
  return EntryRegime::unit;
}

GeneratorMatrix GeneratorMatrix::reordered(const CanonicalOrdering& target) const {
  const CanonicalOrdering& source = ordering();
  if (target.k() != k_) throw DimensionError("ordering built for a different K");
  RationalMatrix out(matrix_.rows(), matrix_.cols());
  for (std::size_t j = 0; j < target.size(); ++j) {
    std::size_t from = source.index_of(target.mask_of(j));
    for (std::size_t r = 0; r < matrix_.rows(); ++r) out(r, j) = matrix_(r, from);
  }
  return canonical(k_, std::move(out), target);
}

}  // namespace estimand
