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

#include "estimand/estimand_class.hpp"

#include <string>

#include "estimand/error.hpp"
#include "estimand/limits.hpp"

namespace estimand {

namespace {

int parity_sign(int n) { return (n & 1) ? -1 : 1; }

void require_same_k(int a, int b) {
  if (a != b) throw DimensionError("expressions over different K");
}

}  // namespace

EstimandExpression::EstimandExpression(int k, std::optional<SubsetMask> target)
    : k_(k), target_(target) {
  require_k(k, size_limits().index_k, "estimand expression");
  set_target(target);
}

void EstimandExpression::set_target(std::optional<SubsetMask> target) {
  if (target && target->k() != k_) throw DimensionError("target subset has the wrong K");
  target_ = target;
}

Rational EstimandExpression::coefficient(SubsetMask z) const {
  require_same_k(z.k(), k_);
  auto it = terms_.find(z.bits());
  return it == terms_.end() ? Rational(0) : it->second;
}

void EstimandExpression::add(SubsetMask z, const Rational& c) {
  require_same_k(z.k(), k_);
  if (estimand::is_zero(c)) return;
  auto [it, inserted] = terms_.emplace(z.bits(), c);
  if (!inserted) {
    it->second += c;
    if (estimand::is_zero(it->second)) terms_.erase(it);
  }
}

std::vector<Rational> EstimandExpression::dense(const CanonicalOrdering& ordering) const {
  require_same_k(ordering.k(), k_);
  std::vector<Rational> out(ordering.size(), Rational(0));
  for (const auto& [bits, c] : terms_) out[ordering.index_of(SubsetMask(bits, k_))] = c;
  return out;
}

EstimandExpression EstimandExpression::push_forward(const LabelPermutation& sigma) const {
  require_same_k(sigma.k(), k_);
  std::optional<SubsetMask> t;
  if (target_) t = apply_sigma_star(sigma, *target_);
  EstimandExpression out(k_, t);
  for (const auto& [bits, c] : terms_) out.add(apply_sigma_star(sigma, SubsetMask(bits, k_)), c);
  return out;
}

EstimandExpression& EstimandExpression::operator+=(const EstimandExpression& other) {
  require_same_k(other.k_, k_);
  for (const auto& [bits, c] : other.terms_) add(SubsetMask(bits, k_), c);
  return *this;
}

EstimandExpression& EstimandExpression::operator-=(const EstimandExpression& other) {
  require_same_k(other.k_, k_);
  for (const auto& [bits, c] : other.terms_) {
    Rational neg = -c;
    add(SubsetMask(bits, k_), neg);
  }
  return *this;
}

EstimandExpression& EstimandExpression::operator*=(const Rational& scalar) {
  if (estimand::is_zero(scalar)) {
    terms_.clear();
    return *this;
  }
  for (auto& [bits, c] : terms_) c *= scalar;
  return *this;
}

EstimandExpression operator+(EstimandExpression a, const EstimandExpression& b) { return a += b; }
EstimandExpression operator-(EstimandExpression a, const EstimandExpression& b) { return a -= b; }
EstimandExpression operator-(EstimandExpression a) { return a *= Rational(-1); }
EstimandExpression operator*(const Rational& scalar, EstimandExpression a) { return a *= scalar; }

EstimandExpression nested_form(const WeightSpec& weights, SubsetMask y) {
  const int k = weights.k();
  if (y.is_empty()) throw ArgumentError("Delta_Y needs a nonempty Y");
  EstimandExpression out(k, y);
  for (std::uint32_t t : canonical_submasks(set_complement(y).bits())) {
    const Rational& w = weights.at(SubsetMask(t, k), y);
    if (is_zero(w)) continue;
    for (std::uint32_t z : canonical_submasks(y.bits())) {
      Rational c = parity_sign(std::popcount(z)) * w;
      out.add(SubsetMask(z | t, k), c);
    }
  }
  return out;
}

EstimandExpression closed_form(const WeightSpec& weights, SubsetMask y) {
  const int k = weights.k();
  if (y.is_empty()) throw ArgumentError("Delta_Y needs a nonempty Y");
  EstimandExpression out(k, y);
  const std::uint32_t full = (1u << k) - 1u;
  for (std::uint32_t z = 0; z <= full; ++z) {
    const SubsetMask zm(z, k);
    const Rational& w = weights.at(set_difference(zm, y), y);
    Rational c = parity_sign(std::popcount(z & y.bits())) * w;
    out.add(zm, c);
  }
  return out;
}

EstimandExpression proposition1_form(const WeightSpec& weights, SubsetMask y, int pivot) {
  const int k = weights.k();
  if (pivot < 1 || pivot > k || !y.contains(pivot)) {
    throw ArgumentError("pivot X" + std::to_string(pivot) + " is not in " + y.to_string());
  }
  const std::uint32_t p = 1u << (pivot - 1);
  EstimandExpression out(k, y);
  for (std::uint32_t t : canonical_submasks(set_complement(y).bits())) {
    const Rational& w = weights.at(SubsetMask(t, k), y);
    if (is_zero(w)) continue;
    for (std::uint32_t z : canonical_submasks(y.bits() & ~p)) {
      Rational c = parity_sign(std::popcount(z)) * w;
      out.add(SubsetMask(z | t, k), c);
      Rational neg = -c;
      out.add(SubsetMask(z | p | t, k), neg);
    }
  }
  return out;
}

EstimandExpression proposition1_form(const EstimandExpression& expr, const WeightSpec& weights,
                                     int pivot) {
  if (!expr.target()) throw ArgumentError("expression has no target Y");
  if (expr.k() != weights.k()) throw DimensionError("expression and weights disagree on K");
  return proposition1_form(weights, *expr.target(), pivot);
}

EstimandClass::EstimandClass(WeightSpec weights, std::vector<EstimandExpression> members)
    : weights_(std::move(weights)),
      ordering_(enumerate_by_cardinality(weights_.k())),
      members_(std::move(members)) {}

const EstimandExpression& EstimandClass::member(SubsetMask y) const {
  if (y.k() != k()) throw DimensionError("member lookup with mismatched K");
  if (y.is_empty()) throw ArgumentError("the class has no member for the empty set");
  // Members follow the canonical ordering with the empty set removed.
  return members_.at(ordering_.index_of(y) - 1);
}

EstimandClass build_class(int k, const WeightSpec& weights) {
  require_k(k, size_limits().class_k, "estimand class");
  if (weights.k() != k) {
    throw DimensionError("weights are for K = " + std::to_string(weights.k()) +
                         ", class requested for K = " + std::to_string(k));
  }
  std::vector<EstimandExpression> members;
  for (SubsetMask y : nonempty_subsets(k)) {
    EstimandExpression nested = nested_form(weights, y);
    if (nested != closed_form(weights, y)) {
      throw InternalError("nested and closed forms disagree for Y = " + y.to_string());
    }
    members.push_back(std::move(nested));
  }
  return EstimandClass(weights, std::move(members));
}

bool check_condition1(const WeightSpec& weights) {
  const int k = weights.k();
  const std::uint32_t full = (1u << k) - 1u;
  for (const LabelPermutation& sigma : enumerate_symmetric_group(k)) {
    const LabelPermutation inv = sigma.inverse();
    for (SubsetMask y : nonempty_subsets(k)) {
      const SubsetMask sy = apply_sigma_star(sigma, y);
      for (std::uint32_t z = 0; z <= full; ++z) {
        const SubsetMask zm(z, k);
        const Rational& lhs = weights.at(set_difference(zm, sy), sy);
        const Rational& rhs = weights.at(set_difference(apply_sigma_star(inv, zm), y), y);
        if (lhs != rhs) return false;
      }
    }
  }
  return true;
}

std::int64_t degrees_of_freedom(int k) {
  if (k < 1) throw ArgumentError("K must be at least 1");
  return static_cast<std::int64_t>(k) * (k - 1) / 2;
}

std::int64_t independent_weight_cells(int k) {
  if (k < 1) throw ArgumentError("K must be at least 1");
  std::int64_t cells = 0;
  std::int64_t constraints = 0;
  // |Y| = K has the single forced cell w(empty, X) = 1.
  for (int q = 1; q < k; ++q) {
    for (int t = 0; t <= k - q; ++t) ++cells;
    ++constraints;
  }
  return cells - constraints;
}

EstimandExpression relabeled_member(const EstimandClass& cls, SubsetMask y,
                                    const LabelPermutation& sigma) {
  const WeightSpec& weights = cls.weights();
  if (weights.kind() != WeightKind::permutable) return cls.member(y).push_forward(sigma);
  const int k = cls.k();
  const std::uint32_t full = (1u << k) - 1u;
  const SubsetMask sy = apply_sigma_star(sigma, y);
  EstimandExpression out(k, sy);
  for (std::uint32_t z = 0; z <= full; ++z) {
    const SubsetMask zm(z, k);
    const Rational& w = weights.at(apply_sigma_star(sigma, set_difference(zm, y)), sy);
    Rational c = parity_sign(std::popcount(z & y.bits())) * w;
    out.add(apply_sigma_star(sigma, zm), c);
  }
  return out;
}

InvarianceVerdict check_class_invariance(const EstimandClass& cls) {
  InvarianceVerdict verdict;
  for (const LabelPermutation& sigma : enumerate_symmetric_group(cls.k())) {
    ++verdict.checked;
    for (SubsetMask y : nonempty_subsets(cls.k())) {
      if (relabeled_member(cls, y, sigma) != cls.member(apply_sigma_star(sigma, y))) {
        verdict.invariant = false;
        verdict.witness = sigma;
        return verdict;
      }
    }
  }
  return verdict;
}

RationalMatrix coefficient_matrix(const std::vector<EstimandExpression>& exprs,
                                  const CanonicalOrdering& ordering) {
  RationalMatrix m(exprs.size(), ordering.size());
  for (std::size_t r = 0; r < exprs.size(); ++r) {
    const std::vector<Rational> row = exprs[r].dense(ordering);
    for (std::size_t c = 0; c < row.size(); ++c) m(r, c) = row[c];
  }
  return m;
}

std::size_t expression_rank(const std::vector<EstimandExpression>& exprs) {
  if (exprs.empty()) return 0;
  return rank(coefficient_matrix(exprs, enumerate_by_cardinality(exprs.front().k())));
}

std::size_t completeness_rank(const EstimandClass& cls) { return expression_rank(cls.members()); }

bool is_complete(const EstimandClass& cls) {
  return completeness_rank(cls) == (std::size_t{1} << cls.k()) - 1;
}

std::vector<EstimandExpression> subclass_of_order(const EstimandClass& cls, int q) {
  std::vector<EstimandExpression> out;
  for (const EstimandExpression& m : cls.members()) {
    if (m.target() && m.target()->size() == q) out.push_back(m);
  }
  return out;
}

}  // namespace estimand
