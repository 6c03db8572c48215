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

#include "estimand/weights.hpp"

#include <string>

#include "estimand/error.hpp"
#include "estimand/limits.hpp"

namespace estimand {

namespace {

/// Packs the bits of `t` that lie in `within` into a dense index.
std::size_t compress(std::uint32_t t, std::uint32_t within) {
  std::size_t out = 0;
  int pos = 0;
  for (std::uint32_t rest = within; rest; rest &= rest - 1) {
    std::uint32_t low = rest & (~rest + 1);
    if (t & low) out |= std::size_t{1} << pos;
    ++pos;
  }
  return out;
}

std::uint32_t expand(std::size_t index, std::uint32_t within) {
  std::uint32_t out = 0;
  int pos = 0;
  for (std::uint32_t rest = within; rest; rest &= rest - 1) {
    std::uint32_t low = rest & (~rest + 1);
    if ((index >> pos) & 1u) out |= low;
    ++pos;
  }
  return out;
}

std::string cell_name(SubsetMask t, SubsetMask y) {
  return "w(" + t.to_string() + "," + y.to_string() + ")";
}

}  // namespace

std::string_view to_string(WeightKind kind) {
  switch (kind) {
    case WeightKind::point_mass: return "point_mass";
    case WeightKind::invariant: return "invariant";
    case WeightKind::permutable: return "permutable";
    case WeightKind::compatible_pmf: return "compatible_pmf";
  }
  return "unknown";
}

WeightKind weight_kind_from_string(std::string_view text) {
  if (text == "point_mass" || text == "point-mass") return WeightKind::point_mass;
  if (text == "invariant") return WeightKind::invariant;
  if (text == "permutable") return WeightKind::permutable;
  if (text == "compatible_pmf" || text == "compatible-pmf") return WeightKind::compatible_pmf;
  throw ValidationError("unknown weight kind '" + std::string(text) + "'");
}

WeightSpec::WeightSpec(WeightKind kind, int k) : kind_(kind), k_(k) {
  require_k(k, size_limits().class_k, "weight specification");
  const std::uint32_t full = (1u << k) - 1u;
  blocks_.resize(std::size_t{1} << k);
  for (std::uint32_t y = 1; y <= full; ++y) {
    blocks_[y].assign(std::size_t{1} << (k - std::popcount(y)), Rational(0));
  }
}

Rational& WeightSpec::cell(SubsetMask t, SubsetMask y) {
  return const_cast<Rational&>(std::as_const(*this).at(t, y));
}

const Rational& WeightSpec::at(SubsetMask t, SubsetMask y) const {
  if (t.k() != k_ || y.k() != k_) throw DimensionError("weight lookup with mismatched K");
  if (y.is_empty()) throw ArgumentError("weights are defined for nonempty Y only");
  if (t.bits() & y.bits()) {
    throw ArgumentError(cell_name(t, y) + " is undefined: T must lie in the complement of Y");
  }
  const std::uint32_t comp = set_complement(y).bits();
  return blocks_[y.bits()][compress(t.bits(), comp)];
}

void WeightSpec::fill(const std::vector<WeightEntry>& entries) {
  std::vector<std::vector<bool>> seen(blocks_.size());
  for (std::size_t y = 1; y < blocks_.size(); ++y) seen[y].assign(blocks_[y].size(), false);
  for (const WeightEntry& e : entries) {
    Rational& slot = cell(e.t, e.y);
    const std::size_t idx = compress(e.t.bits(), set_complement(e.y).bits());
    if (seen[e.y.bits()][idx]) throw ValidationError("duplicate entry " + cell_name(e.t, e.y));
    seen[e.y.bits()][idx] = true;
    slot = e.w;
  }
}

void WeightSpec::validate() const {
  for (std::uint32_t y = 1; y < blocks_.size(); ++y) {
    const SubsetMask ym(y, k_);
    Rational total = 0;
    const auto& block = blocks_[y];
    for (std::size_t i = 0; i < block.size(); ++i) {
      if (sgn(block[i]) < 0) {
        const SubsetMask t(expand(i, set_complement(ym).bits()), k_);
        throw ValidationError("negative weight " + cell_name(t, ym) + " = " + to_string(block[i]));
      }
      total += block[i];
    }
    if (total != 1) {
      throw ValidationError("weights for Y = " + ym.to_string() + " sum to " + to_string(total) +
                            ", expected 1");
    }
  }
}

WeightSpec WeightSpec::point_mass(int k) {
  WeightSpec spec(WeightKind::point_mass, k);
  for (std::size_t y = 1; y < spec.blocks_.size(); ++y) spec.blocks_[y][0] = 1;
  return spec;
}

WeightSpec WeightSpec::equal_invariant(int k) {
  WeightSpec spec(WeightKind::invariant, k);
  for (std::size_t y = 1; y < spec.blocks_.size(); ++y) {
    const Rational share(1, static_cast<unsigned long>(spec.blocks_[y].size()));
    for (auto& w : spec.blocks_[y]) w = share;
  }
  return spec;
}

WeightSpec WeightSpec::invariant(int k, const CardinalityTable& table) {
  WeightSpec spec(WeightKind::invariant, k);
  for (const auto& [key, value] : table) {
    const auto [q, t] = key;
    if (q < 1 || q > k || t < 0 || t > k - q) {
      throw ValidationError("invariant table cell " + std::to_string(q) + ":" + std::to_string(t) +
                            " is outside 1 <= |Y| <= K, 0 <= |T| <= K - |Y|");
    }
  }
  for (std::uint32_t y = 1; y < spec.blocks_.size(); ++y) {
    const std::uint32_t comp = set_complement(SubsetMask(y, k)).bits();
    auto& block = spec.blocks_[y];
    for (std::size_t i = 0; i < block.size(); ++i) {
      const int t = std::popcount(expand(i, comp));
      auto it = table.find({std::popcount(y), t});
      if (it != table.end()) block[i] = it->second;
    }
  }
  spec.validate();
  return spec;
}

WeightSpec WeightSpec::invariant_from_entries(int k, const std::vector<WeightEntry>& entries,
                                              bool strict) {
  WeightSpec spec(WeightKind::invariant, k);
  spec.fill(entries);
  spec.validate();
  if (strict && !spec.depends_only_on_cardinalities()) {
    throw ValidationError(
        "invariant weights must depend only on (|T|, |Y|); pass non-strict to keep them raw");
  }
  return spec;
}

WeightSpec WeightSpec::permutable(int k, const std::vector<WeightEntry>& entries) {
  WeightSpec spec(WeightKind::permutable, k);
  spec.fill(entries);
  spec.validate();
  return spec;
}

bool WeightSpec::depends_only_on_cardinalities() const {
  return cardinality_table().has_value();
}

std::optional<CardinalityTable> WeightSpec::cardinality_table() const {
  CardinalityTable table;
  for (std::uint32_t y = 1; y < blocks_.size(); ++y) {
    const std::uint32_t comp = set_complement(SubsetMask(y, k_)).bits();
    const auto& block = blocks_[y];
    for (std::size_t i = 0; i < block.size(); ++i) {
      const std::pair<int, int> key{std::popcount(y), std::popcount(expand(i, comp))};
      auto [it, inserted] = table.emplace(key, block[i]);
      if (!inserted && it->second != block[i]) return std::nullopt;
    }
  }
  return table;
}

bool WeightSpec::is_point_mass() const {
  for (std::size_t y = 1; y < blocks_.size(); ++y) {
    if (blocks_[y][0] != 1) return false;
  }
  return true;
}

std::vector<WeightEntry> WeightSpec::entries() const {
  std::vector<WeightEntry> out;
  for (SubsetMask y : nonempty_subsets(k_)) {
    for (std::uint32_t t : canonical_submasks(set_complement(y).bits())) {
      const SubsetMask tm(t, k_);
      out.push_back({tm, y, at(tm, y)});
    }
  }
  return out;
}

WeightSpec derive_compatible_weights(int k, const std::vector<Rational>& pmf) {
  WeightSpec spec(WeightKind::permutable, k);
  if (pmf.size() != (std::size_t{1} << k)) {
    throw DimensionError("pmf has " + std::to_string(pmf.size()) + " entries, expected 2^K = " +
                         std::to_string(std::size_t{1} << k));
  }
  Rational total = 0;
  for (std::size_t z = 0; z < pmf.size(); ++z) {
    if (sgn(pmf[z]) < 0) {
      throw ValidationError("pmf entry for " + SubsetMask(static_cast<std::uint32_t>(z), k).state_string() +
                            " is negative");
    }
    total += pmf[z];
  }
  if (total != 1) throw ValidationError("pmf sums to " + to_string(total) + ", expected 1");

  for (std::uint32_t y = 1; y < spec.blocks_.size(); ++y) {
    const std::uint32_t comp = set_complement(SubsetMask(y, k)).bits();
    auto& block = spec.blocks_[y];
    for (std::size_t i = 0; i < block.size(); ++i) {
      const std::uint32_t t = expand(i, comp);
      for (std::uint32_t z = y;; z = (z - 1) & y) {
        block[i] += pmf[z | t];
        if (z == 0) break;
      }
    }
  }
  try {
    spec.validate();
  } catch (const ValidationError& e) {
    throw InternalError(std::string("derived weights lost normalization: ") + e.what());
  }
  spec.pmf_ = pmf;
  return spec;
}

}  // namespace estimand
