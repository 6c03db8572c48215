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

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "estimand/estimand_class.hpp"
#include "estimand/generator_matrix.hpp"
#include "estimand/label_permutation.hpp"
#include "estimand/mu_table.hpp"
#include "estimand/ratio_scale.hpp"
#include "estimand/rational.hpp"
#include "estimand/subsets.hpp"
#include "estimand/weights.hpp"

namespace estimand {

using Json = nlohmann::json;

/// Parses JSON keeping non-integer numbers as their source text, so "0.1"
/// reaches parse_rational unchanged. Throws ValidationError on syntax errors.
Json parse_exact_json(std::string_view text);
Json read_json_file(const std::filesystem::path& path);
/// Sorted keys, two-space indent, trailing newline.
std::string dump_canonical(const Json& value);

/// "p/q", or a bare integer string.
Json rational_to_json(const Rational& value);
/// Accepts strings ("3/4", "0.25", "1e-2") and integers.
Rational rational_from_json(const Json& value);

/// Sorted 1-based index array.
Json subset_to_json(SubsetMask a);
/// Index array, or a state string of length K.
SubsetMask subset_from_json(const Json& value, int k);

Json permutation_to_json(const LabelPermutation& sigma);
/// Image array or the "2,3,1" form.
LabelPermutation permutation_from_json(const Json& value);

/// {"k", "basis": "canonical" | "expanded", "rows"}.
Json generator_to_json(const GeneratorMatrix& h);
GeneratorMatrix generator_from_json(const Json& value);

/// {"kind", "k", ...}. Payloads: "table" keyed "q:t" with q = |Y| and
/// t = |T|; "entries" as [{"T", "Y", "w"}]; "pmf" keyed by state string.
Json weights_to_json(const WeightSpec& weights);
WeightSpec weights_from_json(const Json& value);

/// {"y", "coeffs": {state: rational}}.
Json expression_to_json(const EstimandExpression& expr);
EstimandExpression expression_from_json(const Json& value, int k);

Json class_to_json(const EstimandClass& cls);
Json class_to_json(const RatioClass& cls);

struct ClassDocument {
  int k = 0;
  /// "difference", "risk-ratio" or "odds-ratio".
  std::string scale;
  std::optional<EstimandClass> difference;
  std::optional<RatioClass> ratio;
};

/// Rebuilds the class from its weights and checks any stored members
/// against the rebuilt ones.
ClassDocument class_from_json(const Json& value);

Json mu_to_json(const MuTable& mu);
/// A state-string map, or {"values": map} with optional "k".
MuTable mu_from_json(const Json& value, std::optional<int> k = std::nullopt);

}  // namespace estimand
