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

#include "estimand/contrasts.hpp"

#include <bit>
#include <string>

#include "estimand/error.hpp"

namespace estimand {

std::vector<Rational> apply_contrast(const GeneratorMatrix& h, std::span<const Rational> v) {
  if (v.size() != h.cols()) {
    throw DimensionError("vector of length " + std::to_string(v.size()) +
                         " does not match a generator matrix with " + std::to_string(h.cols()) +
                         " columns");
  }
  return multiply(h.matrix(), v);
}

std::size_t RowMultiset::total() const {
  std::size_t n = 0;
  for (const auto& [row, m] : entries) n += m;
  return n;
}

RowMultiset row_multiset(const RationalMatrix& h) {
  RowMultiset out;
  for (std::size_t r = 0; r < h.rows(); ++r) ++out.entries[h.row_vector(r)];
  return out;
}

RowMultiset row_multiset(const GeneratorMatrix& h) { return row_multiset(h.matrix()); }

InvarianceVerdict is_invariant_multiset_test(const GeneratorMatrix& h) {
  InvarianceVerdict verdict;
  const RowMultiset base = row_multiset(h);
  for (const LabelPermutation& sigma : enumerate_symmetric_group(h.k())) {
    ++verdict.checked;
    if (row_multiset(apply_columns(h.matrix(), induce_for(h, sigma))) != base) {
      verdict.invariant = false;
      verdict.witness = sigma;
      break;
    }
  }
  return verdict;
}

InvarianceVerdict is_invariant_definitional(const GeneratorMatrix& h) {
  InvarianceVerdict verdict;
  for (const LabelPermutation& sigma : enumerate_symmetric_group(h.k())) {
    ++verdict.checked;
    const ColumnPermutation pc = induce_for(h, sigma);
    try {
      const RowPermutation pr = algorithm1_recover_row_permutation(h.matrix(), pc);
      if (pr.apply(h.matrix()) != apply_columns(h.matrix(), pc)) {
        throw InternalError("row matching returned P_r with P_r H != H P_c for sigma = " +
                            sigma.to_string());
      }
    } catch (const NotInvariantError&) {
      verdict.invariant = false;
      verdict.witness = sigma;
      break;
    }
  }
  return verdict;
}

GeneratorMatrix embed_weighted_basis(const EstimandClass& cls) {
  const WeightKind kind = cls.weights().kind();
  if (kind != WeightKind::point_mass && kind != WeightKind::permutable) {
    throw ArgumentError(
        "invariant-weight classes use the 2^K coefficient matrix, not the expanded basis");
  }
  const int k = cls.k();
  ExpandedBasis basis = ExpandedBasis::build(k);
  const std::vector<SubsetMask> ys = nonempty_subsets(k);
  RationalMatrix m(ys.size(), basis.size());
  for (std::size_t r = 0; r < ys.size(); ++r) {
    for (std::uint32_t t : canonical_submasks(set_complement(ys[r]).bits())) {
      for (std::uint32_t z : canonical_submasks(ys[r].bits())) {
        const std::size_t c = basis.index_of(ys[r], SubsetMask(t, k), SubsetMask(z, k));
        m(r, c) = (std::popcount(z) & 1) ? -1 : 1;
      }
    }
  }
  return GeneratorMatrix::expanded(k, std::move(m));
}

std::vector<Rational> expanded_value_vector(const ExpandedBasis& basis, const WeightSpec& weights,
                                            std::span<const Rational> f) {
  if (weights.k() != basis.k()) throw DimensionError("weights and basis disagree on K");
  if (f.size() != (std::size_t{1} << basis.k())) throw DimensionError("f needs 2^K entries");
  std::vector<Rational> v(basis.size());
  for (std::size_t j = 0; j < basis.size(); ++j) {
    const ExpandedColumn& c = basis.column(j);
    v[j] = weights.at(c.t, c.y) * f[c.z.bits() | c.t.bits()];
  }
  return v;
}

RationalMatrix drop_zero_weight_columns(const GeneratorMatrix& expanded, const WeightSpec& weights) {
  const ExpandedBasis& basis = expanded.expanded_basis();
  if (weights.k() != basis.k()) throw DimensionError("weights and basis disagree on K");
  std::vector<std::size_t> keep;
  for (std::size_t j = 0; j < basis.size(); ++j) {
    if (!is_zero(weights.at(basis.column(j).t, basis.column(j).y))) keep.push_back(j);
  }
  RationalMatrix out(expanded.rows(), keep.size());
  for (std::size_t r = 0; r < expanded.rows(); ++r)
    for (std::size_t c = 0; c < keep.size(); ++c) out(r, c) = expanded.matrix()(r, keep[c]);
  return out;
}

GeneratorMatrix collapse_to_canonical(const GeneratorMatrix& expanded, const WeightSpec& weights) {
  const ExpandedBasis& basis = expanded.expanded_basis();
  const int k = basis.k();
  if (weights.k() != k) throw DimensionError("weights and basis disagree on K");
  const CanonicalOrdering ordering = enumerate_by_cardinality(k);
  RationalMatrix out(expanded.rows(), ordering.size());
  for (std::size_t j = 0; j < basis.size(); ++j) {
    const ExpandedColumn& col = basis.column(j);
    const Rational& w = weights.at(col.t, col.y);
    if (is_zero(w)) continue;
    const std::size_t target = ordering.index_of(set_union(col.z, col.t));
    for (std::size_t r = 0; r < expanded.rows(); ++r) {
      out(r, target) += w * expanded.matrix()(r, j);
    }
  }
  return GeneratorMatrix::canonical(k, std::move(out), ordering);
}

GeneratorMatrix class_coefficient_matrix(const EstimandClass& cls) {
  return GeneratorMatrix::canonical(cls.k(), coefficient_matrix(cls.members(), cls.ordering()),
                                    cls.ordering());
}

}  // namespace estimand
