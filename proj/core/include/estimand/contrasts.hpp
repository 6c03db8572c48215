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
#include <span>
#include <vector>

#include "estimand/estimand_class.hpp"
#include "estimand/generator_matrix.hpp"
#include "estimand/permutations.hpp"
#include "estimand/rational.hpp"
#include "estimand/weights.hpp"

namespace estimand {

/// Delta = H v.
std::vector<Rational> apply_contrast(const GeneratorMatrix& h, std::span<const Rational> v);

/// Distinct rows with multiplicities, rows ordered lexicographically.
struct RowMultiset {
  std::map<std::vector<Rational>, std::size_t> entries;

  std::size_t total() const;
  friend bool operator==(const RowMultiset&, const RowMultiset&) = default;
};

RowMultiset row_multiset(const RationalMatrix& h);
RowMultiset row_multiset(const GeneratorMatrix& h);

/// Compares R(H P_c) with R(H) for every sigma in S_K.
InvarianceVerdict is_invariant_multiset_test(const GeneratorMatrix& h);

/// Runs row matching for every sigma in S_K and checks P_r H = H P_c
/// exactly for each recovered P_r.
InvarianceVerdict is_invariant_definitional(const GeneratorMatrix& h);

/// Weight-by-estimand embedding: one row per nonempty Y, with (-1)^|Z| at
/// coordinate (Y, T, Z) for every T in Y^c and Z in Y. Requires point-mass
/// or permutable weights; weights enter through expanded_value_vector.
GeneratorMatrix embed_weighted_basis(const EstimandClass& cls);

/// v(Y, T, Z) = w(T, Y) f(Z u T). `f` is indexed by subset bits.
std::vector<Rational> expanded_value_vector(const ExpandedBasis& basis, const WeightSpec& weights,
                                            std::span<const Rational> f);

/// Columns (Y, T, Z) with w(T, Y) = 0 removed.
RationalMatrix drop_zero_weight_columns(const GeneratorMatrix& expanded, const WeightSpec& weights);

/// Folds an expanded matrix onto the 2^K canonical columns: column (Y, T, Z)
/// contributes w(T, Y) times itself to column Z u T.
GeneratorMatrix collapse_to_canonical(const GeneratorMatrix& expanded, const WeightSpec& weights);

/// The (2^K - 1) x 2^K matrix of closed-form coefficients.
GeneratorMatrix class_coefficient_matrix(const EstimandClass& cls);

}  // namespace estimand
