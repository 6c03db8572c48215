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

#include <map>
#include <span>
#include <string>
#include <vector>

#include "estimand/rational.hpp"
#include "estimand/subsets.hpp"

namespace estimand {

/// mu(a_1, ..., a_K) for all 2^K treatment states, keyed by state string.
/// The subset for a state puts X_k in A exactly when a_k = 0.
class MuTable {
 public:
  /// Throws ValidationError for malformed or missing keys.
  MuTable(int k, std::map<std::string, Rational> values);
  /// `f` is indexed by subset bits.
  static MuTable from_f_vector(int k, std::span<const Rational> f);

  int k() const noexcept { return k_; }
  const std::map<std::string, Rational>& values() const noexcept { return values_; }
  const Rational& at(SubsetMask a) const;
  const Rational& at_state(const std::string& state) const;

  /// f(A) indexed by subset bits.
  std::vector<Rational> f_vector() const;
  /// f(A) laid out along `ordering`.
  std::vector<Rational> f_vector(const CanonicalOrdering& ordering) const;

 private:
  int k_;
  std::map<std::string, Rational> values_;
  std::vector<Rational> by_bits_;
};

}  // namespace estimand
