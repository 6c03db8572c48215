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

#include "estimand/residual.hpp"

#include <bit>
#include <string>
#include <unordered_map>

#include "estimand/error.hpp"
#include "estimand/limits.hpp"

namespace estimand {

EstimandExpression inclusion_exclusion_sum(const EstimandClass& cls) {
  EstimandExpression sum(cls.k());
  for (const EstimandExpression& m : cls.members()) {
    if (m.target()->size() % 2 == 1) {
      sum += m;
    } else {
      sum -= m;
    }
  }
  return sum;
}

EstimandExpression maximal_effect(int k) {
  EstimandExpression out(k);
  out.add(SubsetMask::empty(k), Rational(1));
  out.add(SubsetMask::full(k), Rational(-1));
  return out;
}

EstimandExpression residual_closed_form(const WeightSpec& weights) {
  const int k = weights.k();
  const std::uint32_t full = (1u << k) - 1u;
  EstimandExpression out(k);
  for (std::uint32_t z = 0; z <= full; ++z) {
    const SubsetMask zm(z, k);
    Rational c = 0;
    for (SubsetMask y : nonempty_subsets(k)) {
      const Rational& w = weights.at(set_difference(zm, y), y);
      const int parity = y.size() + std::popcount(z & y.bits()) + 1;
      if (parity % 2 == 0) {
        c += w;
      } else {
        c -= w;
      }
    }
    if (z == 0) c -= 1;
    if (z == full) c += 1;
    out.add(zm, c);
  }
  return out;
}

ResidualReport residual_coefficients(const EstimandClass& cls) {
  EstimandExpression me = maximal_effect(cls.k());
  EstimandExpression expanded = inclusion_exclusion_sum(cls) - me;
  if (expanded != residual_closed_form(cls.weights())) {
    throw InternalError("closed-form residual coefficients disagree with the expanded class");
  }
  const bool free = expanded.is_zero();
  return ResidualReport{std::move(expanded), free, std::move(me)};
}

bool is_residual_free(const EstimandClass& cls) { return residual_coefficients(cls).is_residual_free; }

namespace {

using Vec = std::vector<std::int64_t>;

struct VecHash {
  std::size_t operator()(const Vec& v) const noexcept {
    std::uint64_t h = 1469598103934665603ull;
    for (std::int64_t x : v) {
      h ^= static_cast<std::uint64_t>(x);
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};

/// All ways to write `total` as an ordered sum of `parts` nonnegative ints.
void compositions(int total, int parts, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (parts == 1) {
    cur.push_back(total);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (int v = 0; v <= total; ++v) {
    cur.push_back(v);
    compositions(total - v, parts - 1, cur, out);
    cur.pop_back();
  }
}

/// Choices for one Y: each composition and its contribution to D * coef*.
struct YOptions {
  SubsetMask y;
  std::vector<std::uint32_t> ts;
  std::vector<std::vector<int>> comps;
  std::vector<Vec> contrib;
};

YOptions options_for(SubsetMask y, int d) {
  const int k = y.k();
  YOptions o{y, canonical_submasks(set_complement(y).bits()), {}, {}};
  std::vector<int> cur;
  compositions(d, static_cast<int>(o.ts.size()), cur, o.comps);
  for (const auto& comp : o.comps) {
    Vec v(std::size_t{1} << k, 0);
    for (std::size_t i = 0; i < o.ts.size(); ++i) {
      if (comp[i] == 0) continue;
      for (std::uint32_t zp : canonical_submasks(y.bits())) {
        const int parity = y.size() + std::popcount(zp) + 1;
        v[zp | o.ts[i]] += (parity % 2 == 0) ? comp[i] : -comp[i];
      }
    }
    o.contrib.push_back(std::move(v));
  }
  return o;
}

/// Odometer over the cartesian product of `opts`, calling visit(sum, picks).
template <typename Visit>
void enumerate_half(const std::vector<YOptions>& opts, std::size_t dim, Visit visit) {
  std::vector<std::size_t> pick(opts.size(), 0);
  while (true) {
    Vec sum(dim, 0);
    for (std::size_t i = 0; i < opts.size(); ++i) {
      const Vec& c = opts[i].contrib[pick[i]];
      for (std::size_t j = 0; j < dim; ++j) sum[j] += c[j];
    }
    visit(sum, pick);
    std::size_t i = 0;
    while (i < opts.size() && ++pick[i] == opts[i].comps.size()) pick[i++] = 0;
    if (i == opts.size()) return;
  }
}

}  // namespace

UniquenessReport uniqueness_probe(int k, int grid_denominator) {
  if (k != 2 && k != 3) throw SizeLimitError("uniqueness probe supports K in {2, 3}");
  if (grid_denominator < 1 || grid_denominator > 8) {
    throw SizeLimitError("uniqueness probe supports grid denominators 1..8");
  }
  const int d = grid_denominator;
  const std::size_t dim = std::size_t{1} << k;

  std::vector<YOptions> all;
  for (SubsetMask y : nonempty_subsets(k)) all.push_back(options_for(y, d));

  // Split the Y list so both halves have comparable product sizes.
  std::uint64_t total = 1;
  for (const auto& o : all) total *= o.comps.size();
  std::vector<YOptions> left, right;
  std::uint64_t left_size = 1;
  for (auto& o : all) {
    const std::uint64_t grown = left_size * o.comps.size();
    if (grown * grown <= total) {
      left_size = grown;
      left.push_back(std::move(o));
    } else {
      right.push_back(std::move(o));
    }
  }

  UniquenessReport report;
  report.k = k;
  report.grid_denominator = d;
  report.tables_inspected = total;

  // Base term: -D at the empty set, +D at X.
  std::unordered_map<Vec, std::vector<std::vector<std::size_t>>, VecHash> left_sums;
  enumerate_half(left, dim, [&](Vec sum, const std::vector<std::size_t>& pick) {
    sum[0] -= d;
    sum[dim - 1] += d;
    left_sums[std::move(sum)].push_back(pick);
  });

  const WeightSpec point_mass = WeightSpec::point_mass(k);
  bool saw_other = false;
  enumerate_half(right, dim, [&](Vec sum, const std::vector<std::size_t>& rpick) {
    for (auto& x : sum) x = -x;
    auto it = left_sums.find(sum);
    if (it == left_sums.end()) return;
    for (const auto& lpick : it->second) {
      ++report.residual_free_count;
      std::vector<WeightEntry> entries;
      auto append = [&](const std::vector<YOptions>& half, const std::vector<std::size_t>& pick) {
        for (std::size_t i = 0; i < half.size(); ++i) {
          const auto& comp = half[i].comps[pick[i]];
          for (std::size_t j = 0; j < half[i].ts.size(); ++j) {
            Rational w(comp[j], d);
            w.canonicalize();
            entries.push_back({SubsetMask(half[i].ts[j], k), half[i].y, std::move(w)});
          }
        }
      };
      append(left, lpick);
      append(right, rpick);
      // Confirm the hit with exact rational coefficients.
      const WeightSpec spec = WeightSpec::permutable(k, entries);
      if (!residual_closed_form(spec).is_zero()) {
        throw InternalError("grid search reported a table whose residual is nonzero");
      }
      bool is_pm = true;
      for (const WeightEntry& e : spec.entries()) {
        if (e.w != point_mass.at(e.t, e.y)) is_pm = false;
      }
      if (!is_pm) saw_other = true;
      if (report.residual_free_tables.size() < UniquenessReport::max_reported) {
        report.residual_free_tables.push_back(spec.entries());
      }
    }
  });
  report.only_point_mass = report.residual_free_count == 1 && !saw_other;
  return report;
}

}  // namespace estimand
