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
#include <cstdint>
#include <vector>

#include "estimand/estimand_class.hpp"
#include "estimand/weights.hpp"

namespace estimand {

/// sum over nonempty Y of (-1)^(|Y|+1) Delta_Y.
EstimandExpression inclusion_exclusion_sum(const EstimandClass& cls);

/// f(empty) - f(X).
EstimandExpression maximal_effect(int k);

struct ResidualReport {
  /// coef(Z) of res = inclusion_exclusion_sum - maximal_effect.
  EstimandExpression coeffs;
  bool is_residual_free;
  EstimandExpression maximal_effect_expr;
};

/// coef(Z) straight from the weights.
EstimandExpression residual_closed_form(const WeightSpec& weights);

/// Computes coef both from the weights and by expanding the class, and
/// throws InternalError if the two differ.
ResidualReport residual_coefficients(const EstimandClass& cls);

bool is_residual_free(const EstimandClass& cls);

struct UniquenessReport {
  int k = 0;
  int grid_denominator = 0;
  /// Every normalized (T, Y) table with entries in {0, 1/D, ..., 1}.
  std::uint64_t tables_inspected = 0;
  std::uint64_t residual_free_count = 0;
  /// Residual-free tables found, capped at max_reported.
  std::vector<std::vector<WeightEntry>> residual_free_tables;
  bool only_point_mass = false;

  static constexpr std::size_t max_reported = 16;
};

/// Exhaustive grid search for residual-free weight tables. Requires
/// K in {2, 3} and 1 <= D <= 8.
UniquenessReport uniqueness_probe(int k, int grid_denominator);

}  // namespace estimand
