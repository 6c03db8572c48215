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

#include "estimand/ratio_scale.hpp"

#include <bit>
#include <cmath>
#include <string>

#include "estimand/error.hpp"
#include "estimand/limits.hpp"
#include "estimand/render_eval.hpp"

namespace estimand {

std::string_view to_string(RatioLink link) {
  return link == RatioLink::risk_ratio ? "risk-ratio" : "odds-ratio";
}

RatioLink ratio_link_from_string(std::string_view text) {
  if (text == "risk-ratio" || text == "risk_ratio") return RatioLink::risk_ratio;
  if (text == "odds-ratio" || text == "odds_ratio") return RatioLink::odds_ratio;
  throw ValidationError("unknown ratio scale '" + std::string(text) + "'");
}

Rational link_value(RatioLink link, const Rational& mu, std::string_view state) {
  if (link == RatioLink::risk_ratio) {
    if (sgn(mu) <= 0) {
      throw DomainError("risk ratio needs mu > 0, but mu(" + std::string(state) + ") = " +
                        to_string(mu));
    }
    return mu;
  }
  if (sgn(mu) <= 0 || mu >= 1) {
    throw DomainError("odds ratio needs 0 < mu < 1, but mu(" + std::string(state) + ") = " +
                      to_string(mu));
  }
  Rational out = mu / (1 - mu);
  return out;
}

RatioEstimand::RatioEstimand(SubsetMask y, RatioLink link) : y_(y), link_(link) {
  if (y.is_empty()) throw ArgumentError("ratio estimands need a nonempty Y");
  for (std::uint32_t z : canonical_submasks(y.bits())) {
    exponents_.emplace(z, (std::popcount(z) & 1) ? -1 : 1);
  }
}

int RatioEstimand::exponent(SubsetMask z) const {
  if (z.k() != k()) throw DimensionError("exponent lookup with mismatched K");
  auto it = exponents_.find(z.bits());
  return it == exponents_.end() ? 0 : it->second;
}

EstimandExpression RatioEstimand::log_form() const {
  EstimandExpression out(k(), y_);
  for (const auto& [bits, e] : exponents_) out.add(SubsetMask(bits, k()), Rational(e));
  return out;
}

RatioEstimand RatioEstimand::push_forward(const LabelPermutation& sigma) const {
  if (sigma.k() != k()) throw DimensionError("permutation and estimand disagree on K");
  RatioEstimand out(apply_sigma_star(sigma, y_), link_);
  out.exponents_.clear();
  for (const auto& [bits, e] : exponents_) {
    out.exponents_.emplace(apply_sigma_star(sigma, SubsetMask(bits, k())).bits(), e);
  }
  return out;
}

RatioClass::RatioClass(int k, RatioLink link, std::vector<RatioEstimand> members)
    : k_(k), link_(link), ordering_(enumerate_by_cardinality(k)), members_(std::move(members)) {}

const RatioEstimand& RatioClass::member(SubsetMask y) const {
  if (y.k() != k_) throw DimensionError("member lookup with mismatched K");
  if (y.is_empty()) throw ArgumentError("the class has no member for the empty set");
  return members_.at(ordering_.index_of(y) - 1);
}

RatioClass build_ratio_class(int k, RatioLink link) {
  require_k(k, size_limits().class_k, "ratio class");
  std::vector<RatioEstimand> members;
  for (SubsetMask y : nonempty_subsets(k)) members.emplace_back(y, link);
  return RatioClass(k, link, std::move(members));
}

RatioClass build_ratio_class(int k, RatioLink link, const WeightSpec& weights) {
  if (weights.k() != k) throw DimensionError("weights and class disagree on K");
  if (!weights.is_point_mass()) {
    throw ArgumentError("ratio-scale classes are defined for point-mass weights only");
  }
  return build_ratio_class(k, link);
}

MultiplicativeDecomposition multiplicative_decomposition(const RatioClass& cls, const MuTable& mu) {
  if (mu.k() != cls.k()) throw DimensionError("mu table and class disagree on K");
  MultiplicativeDecomposition out{{}, Rational(1), Rational(0), false};
  for (const RatioEstimand& m : cls.members()) {
    Rational v = evaluate(m, mu);
    if (m.target().size() % 2 == 1) {
      out.product *= v;
    } else {
      out.product /= v;
    }
    out.member_values.push_back(std::move(v));
  }
  const SubsetMask empty = SubsetMask::empty(cls.k());
  const SubsetMask full = SubsetMask::full(cls.k());
  out.expected = link_value(cls.link(), mu.at(empty), empty.state_string()) /
                 link_value(cls.link(), mu.at(full), full.state_string());
  out.identity_holds = out.product == out.expected;
  return out;
}

InvarianceVerdict check_ratio_class_invariance(const RatioClass& cls) {
  InvarianceVerdict verdict;
  for (const LabelPermutation& sigma : enumerate_symmetric_group(cls.k())) {
    ++verdict.checked;
    for (const RatioEstimand& m : cls.members()) {
      if (m.push_forward(sigma) != cls.member(apply_sigma_star(sigma, m.target()))) {
        verdict.invariant = false;
        verdict.witness = sigma;
        return verdict;
      }
    }
  }
  return verdict;
}

long double log_value(const RatioEstimand& expr, const MuTable& mu) {
  if (mu.k() != expr.k()) throw DimensionError("mu table and estimand disagree on K");
  long double total = 0;
  for (const auto& [bits, e] : expr.exponents()) {
    const SubsetMask z(bits, expr.k());
    const Rational g = link_value(expr.link(), mu.at(z), z.state_string());
    total += e * std::log(static_cast<long double>(g.get_d()));
  }
  return total;
}

}  // namespace estimand
