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

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace estimand {

/// Exact rational scalar. Always kept in canonical (reduced) form.
using Rational = mpq_class;

/// Parses "p/q", an integer, or a decimal literal ("0.25", "-1.5e-3")
/// into an exact rational. Decimals never pass through floating point.
Rational parse_rational(std::string_view text);

/// "p/q", or a bare integer when the denominator is 1.
std::string to_string(const Rational& value);

inline bool is_zero(const Rational& value) { return sgn(value) == 0; }

}  // namespace estimand
