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

#include "estimand/mu_table.hpp"

#include "estimand/error.hpp"
#include "estimand/limits.hpp"

namespace estimand {

MuTable::MuTable(int k, std::map<std::string, Rational> values) : k_(k), values_(std::move(values)) {
  require_k(k, size_limits().index_k, "mu table");
  const std::size_t n = std::size_t{1} << k;
  by_bits_.assign(n, Rational(0));
  std::vector<bool> seen(n, false);
  for (const auto& [state, value] : values_) {
    if (state.size() != static_cast<std::size_t>(k)) {
      throw ValidationError("mu key '" + state + "' is not a state string of length " +
                            std::to_string(k));
    }
    const SubsetMask a = SubsetMask::from_state_string(state);
    seen[a.bits()] = true;
    by_bits_[a.bits()] = value;
  }
  for (std::size_t b = 0; b < n; ++b) {
    if (!seen[b]) {
      throw ValidationError("mu table is missing state " +
                            SubsetMask(static_cast<std::uint32_t>(b), k).state_string());
    }
  }
}

MuTable MuTable::from_f_vector(int k, std::span<const Rational> f) {
  require_k(k, size_limits().index_k, "mu table");
  if (f.size() != (std::size_t{1} << k)) throw DimensionError("f needs 2^K entries");
  std::map<std::string, Rational> values;
  for (std::size_t b = 0; b < f.size(); ++b) {
    values.emplace(SubsetMask(static_cast<std::uint32_t>(b), k).state_string(), f[b]);
  }
  return MuTable(k, std::move(values));
}

const Rational& MuTable::at(SubsetMask a) const {
  if (a.k() != k_) throw DimensionError("mu lookup with mismatched K");
  return by_bits_[a.bits()];
}

const Rational& MuTable::at_state(const std::string& state) const {
  auto it = values_.find(state);
  if (it == values_.end()) throw ValidationError("mu table has no state '" + state + "'");
  return it->second;
}

std::vector<Rational> MuTable::f_vector() const { return by_bits_; }

std::vector<Rational> MuTable::f_vector(const CanonicalOrdering& ordering) const {
  if (ordering.k() != k_) throw DimensionError("ordering built for a different K");
  std::vector<Rational> out(ordering.size());
  for (std::size_t j = 0; j < ordering.size(); ++j) out[j] = by_bits_[ordering.mask_of(j).bits()];
  return out;
}

}  // namespace estimand
