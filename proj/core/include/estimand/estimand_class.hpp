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
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "estimand/label_permutation.hpp"
#include "estimand/matrix.hpp"
#include "estimand/permutations.hpp"
#include "estimand/rational.hpp"
#include "estimand/subsets.hpp"
#include "estimand/weights.hpp"

namespace estimand {

/// Orders subset bits by cardinality, then by value.
struct CanonicalLess {
  bool operator()(std::uint32_t a, std::uint32_t b) const noexcept {
    const int pa = std::popcount(a);
    const int pb = std::popcount(b);
    return pa != pb ? pa < pb : a < b;
  }
};

/// A linear combination sum_Z c(Z) f(Z). Only nonzero terms are stored.
class EstimandExpression {
 public:
  using Terms = std::map<std::uint32_t, Rational, CanonicalLess>;

  explicit EstimandExpression(int k, std::optional<SubsetMask> target = std::nullopt);

  int k() const noexcept { return k_; }
  /// The Y this expression stands for, if any. Not part of equality.
  const std::optional<SubsetMask>& target() const noexcept { return target_; }
  void set_target(std::optional<SubsetMask> target);

  Rational coefficient(SubsetMask z) const;
  void add(SubsetMask z, const Rational& c);
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  /// Coefficients laid out along `ordering`.
  std::vector<Rational> dense(const CanonicalOrdering& ordering) const;

  /// f(Z) becomes f(sigma*(Z)); the target moves to sigma*(Y).
  EstimandExpression push_forward(const LabelPermutation& sigma) const;

  EstimandExpression& operator+=(const EstimandExpression& other);
  EstimandExpression& operator-=(const EstimandExpression& other);
  EstimandExpression& operator*=(const Rational& scalar);

  friend bool operator==(const EstimandExpression& a, const EstimandExpression& b) {
    return a.k_ == b.k_ && a.terms_ == b.terms_;
  }

 private:
  int k_;
  std::optional<SubsetMask> target_;
  Terms terms_;
};

EstimandExpression operator+(EstimandExpression a, const EstimandExpression& b);
EstimandExpression operator-(EstimandExpression a, const EstimandExpression& b);
EstimandExpression operator-(EstimandExpression a);
EstimandExpression operator*(const Rational& scalar, EstimandExpression a);

/// sum_{T in Y^c} w(T,Y) sum_{Z in Y} (-1)^|Z| f(Z u T).
EstimandExpression nested_form(const WeightSpec& weights, SubsetMask y);
/// c(Z) = (-1)^|Z n Y| w(Z \ Y, Y).
EstimandExpression closed_form(const WeightSpec& weights, SubsetMask y);
/// sum_T w(T,Y) sum_{Z in Y \ {X_p}} (-1)^|Z| (f(Z u T) - f(Z u {X_p} u T)).
/// Throws ArgumentError if X_pivot is not in Y.
EstimandExpression proposition1_form(const WeightSpec& weights, SubsetMask y, int pivot);
EstimandExpression proposition1_form(const EstimandExpression& expr, const WeightSpec& weights,
                                     int pivot);

class EstimandClass {
 public:
  int k() const noexcept { return weights_.k(); }
  const WeightSpec& weights() const noexcept { return weights_; }
  /// 2^K - 1 members in canonical Y order.
  const std::vector<EstimandExpression>& members() const noexcept { return members_; }
  const EstimandExpression& member(SubsetMask y) const;
  const CanonicalOrdering& ordering() const noexcept { return ordering_; }

 private:
  friend EstimandClass build_class(int k, const WeightSpec& weights);
  EstimandClass(WeightSpec weights, std::vector<EstimandExpression> members);

  WeightSpec weights_;
  CanonicalOrdering ordering_;
  std::vector<EstimandExpression> members_;
};

/// Builds every member twice (nested and closed form) and throws
/// InternalError if the two disagree.
EstimandClass build_class(int k, const WeightSpec& weights);

/// Literal check of w(Z \ s(Y), s(Y)) = w(s^-1(Z) \ Y, Y) over all Z, Y, s.
bool check_condition1(const WeightSpec& weights);

/// K(K-1)/2.
std::int64_t degrees_of_freedom(int k);

/// Free (|T|,|Y|) cells minus one normalization per |Y| < K, counted by
/// enumeration.
std::int64_t independent_weight_cells(int k);

/// Permutable weights move with the labels; all other kinds stay fixed.
/// Fails at the first sigma for which some Delta_{s(Y)} differs from the
/// relabeled Delta_Y.
InvarianceVerdict check_class_invariance(const EstimandClass& cls);

/// The member for Y after relabeling by sigma. Permutable weights are
/// relabeled along with f.
EstimandExpression relabeled_member(const EstimandClass& cls, SubsetMask y,
                                    const LabelPermutation& sigma);

/// Rows are expressions, columns follow `ordering`.
RationalMatrix coefficient_matrix(const std::vector<EstimandExpression>& exprs,
                                  const CanonicalOrdering& ordering);
std::size_t expression_rank(const std::vector<EstimandExpression>& exprs);
std::size_t completeness_rank(const EstimandClass& cls);
bool is_complete(const EstimandClass& cls);

/// Members with |Y| = q.
std::vector<EstimandExpression> subclass_of_order(const EstimandClass& cls, int q);

}  // namespace estimand
