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

#include <span>
#include <string>
#include <string_view>

#include "estimand/estimand_class.hpp"
#include "estimand/mu_table.hpp"
#include "estimand/ratio_scale.hpp"

namespace estimand {

enum class RenderFormat { unicode, latex, markdown };

RenderFormat render_format_from_string(std::string_view text);

/// "μ(1,0)" or "\mu(1,0)".
std::string render_state(SubsetMask z, RenderFormat format);

/// Terms in canonical order. When the expression has a target Y and its
/// coefficients split into per-T groups sharing one weight, each group is
/// printed once with the weight factored out.
std::string render_expression(const EstimandExpression& expr, RenderFormat format);
std::string render_expression(const RatioEstimand& expr, RenderFormat format);

Rational evaluate(const EstimandExpression& expr, const MuTable& mu);
/// Throws DomainError when a mu value is outside the link's domain.
Rational evaluate(const RatioEstimand& expr, const MuTable& mu);
/// `f` is indexed by subset bits.
long double evaluate_real(const EstimandExpression& expr, std::span<const long double> f);

}  // namespace estimand
