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

#include <cstdint>
#include <map>
#include <string_view>
#include <vector>

#include "estimand/estimand_class.hpp"
#include "estimand/mu_table.hpp"
#include "estimand/permutations.hpp"
#include "estimand/weights.hpp"

namespace estimand {

enum class RatioLink { risk_ratio, odds_ratio };

std::string_view to_string(RatioLink link);
/// Accepts "risk-ratio", "risk_ratio", "odds-ratio", "odds_ratio".
RatioLink ratio_link_from_string(std::string_view text);

/// g(mu): mu for risk ratios, mu / (1 - mu) for odds ratios. Throws
/// DomainError naming `state` when mu is outside the link's domain.
Rational link_value(RatioLink link, const Rational& mu, std::string_view state);

/// prod over Z in Y of g(f(Z))^((-1)^|Z|).
class RatioEstimand {
 public:
  using Exponents = std::map<std::uint32_t, int, CanonicalLess>;

  RatioEstimand(SubsetMask y, RatioLink link);

  int k() const noexcept { return y_.k(); }
  SubsetMask target() const noexcept { return y_; }
  RatioLink link() const noexcept { return link_; }
  const Exponents& exponents() const noexcept { return exponents_; }
  int exponent(SubsetMask z) const;

  /// log Delta_Y as a linear form in log g(f(Z)).
  EstimandExpression log_form() const;
  RatioEstimand push_forward(const LabelPermutation& sigma) const;

  friend bool operator==(const RatioEstimand&, const RatioEstimand&) = default;

 private:
  SubsetMask y_;
  RatioLink link_;
  Exponents exponents_;
};

class RatioClass {
 public:
  int k() const noexcept { return k_; }
  RatioLink link() const noexcept { return link_; }
  const std::vector<RatioEstimand>& members() const noexcept { return members_; }
  const RatioEstimand& member(SubsetMask y) const;

 private:
  friend RatioClass build_ratio_class(int k, RatioLink link);
  RatioClass(int k, RatioLink link, std::vector<RatioEstimand> members);

  int k_;
  RatioLink link_;
  CanonicalOrdering ordering_;
  std::vector<RatioEstimand> members_;
};

RatioClass build_ratio_class(int k, RatioLink link);
/// Throws ArgumentError unless `weights` are point-mass.
RatioClass build_ratio_class(int k, RatioLink link, const WeightSpec& weights);

struct MultiplicativeDecomposition {
  /// Delta_Y for every member, in canonical Y order.
  std::vector<Rational> member_values;
  /// prod Delta_Y^((-1)^(|Y|+1)).
  Rational product;
  /// g(f(empty)) / g(f(X)).
  Rational expected;
  bool identity_holds;
};

MultiplicativeDecomposition multiplicative_decomposition(const RatioClass& cls, const MuTable& mu);

/// Delta_{s(Y)} must equal the relabeled Delta_Y for every s in S_K.
InvarianceVerdict check_ratio_class_invariance(const RatioClass& cls);

/// log Delta_Y computed as sum_Z e(Z) log g(mu(Z)).
long double log_value(const RatioEstimand& expr, const MuTable& mu);

}  // namespace estimand
