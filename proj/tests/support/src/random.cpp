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

#include "test_support/random.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <cstring>
#include <set>
#include <string>

#include "estimand/subsets.hpp"

namespace estimand::testing {

namespace {

std::uint64_t& seed_slot() {
  static std::uint64_t seed = [] {
    const char* env = std::getenv("ESTIMAND_TEST_SEED");
    return env && *env ? std::stoull(env) : kDefaultSeed;
  }();
  return seed;
}

}  // namespace

std::uint64_t test_seed() { return seed_slot(); }
void set_test_seed(std::uint64_t seed) { seed_slot() = seed; }

bool consume_seed_flag(int& argc, char** argv) {
  bool found = false;
  int out = 1;
  for (int i = 1; i < argc; ++i) {
    const char* a = argv[i];
    if (std::strncmp(a, "--seed=", 7) == 0) {
      set_test_seed(std::stoull(a + 7));
      found = true;
    } else if (std::strcmp(a, "--seed") == 0 && i + 1 < argc) {
      set_test_seed(std::stoull(argv[++i]));
      found = true;
    } else {
      argv[out++] = argv[i];
    }
  }
  argc = out;
  return found;
}

Rational Rng::open_unit(int max_den) {
  const int q = uniform(2, max_den);
  Rational r(uniform(1, q - 1), q);
  r.canonicalize();
  return r;
}

RawWeights random_raw_weights(Rng& rng, int k, bool sparse) {
  const std::uint32_t full = (1u << k) - 1u;
  RawWeights w;
  for (std::uint32_t y = 1; y <= full; ++y) {
    std::vector<std::uint32_t> ts;
    for (std::uint32_t t = 0; t <= full; ++t) {
      if ((t & y) == 0) ts.push_back(t);
    }
    std::vector<int> draws;
    int total = 0;
    for (std::size_t i = 0; i < ts.size(); ++i) {
      int v = rng.uniform(1, 9);
      if (sparse && rng.uniform(0, 2) == 0) v = 0;
      draws.push_back(v);
      total += v;
    }
    if (total == 0) {
      draws[0] = 1;
      total = 1;
    }
    for (std::size_t i = 0; i < ts.size(); ++i) {
      Rational r(draws[i], total);
      r.canonicalize();
      w[{ts[i], y}] = r;
    }
  }
  return w;
}

std::vector<WeightEntry> to_entries(int k, const RawWeights& raw) {
  std::vector<WeightEntry> out;
  for (const auto& [key, w] : raw) {
    out.push_back({SubsetMask(key.first, k), SubsetMask(key.second, k), w});
  }
  return out;
}

std::vector<Rational> random_pmf(Rng& rng, int k) {
  const std::size_t n = std::size_t{1} << k;
  std::vector<int> draws(n);
  int total = 0;
  const bool sparse = rng.uniform(0, 3) == 0;
  for (auto& d : draws) {
    d = rng.uniform(sparse ? 0 : 1, 12);
    total += d;
  }
  if (total == 0) {
    draws[0] = 1;
    total = 1;
  }
  std::vector<Rational> pmf;
  for (int d : draws) {
    Rational r(d, total);
    r.canonicalize();
    pmf.push_back(r);
  }
  return pmf;
}

MuTable random_mu(Rng& rng, int k) {
  std::vector<Rational> f;
  for (std::size_t i = 0; i < (std::size_t{1} << k); ++i) f.push_back(rng.open_unit());
  return MuTable::from_f_vector(k, f);
}

DenseMatrix random_ternary(Rng& rng, std::size_t d, std::size_t n) {
  DenseMatrix m(d, std::vector<Rational>(n));
  for (auto& row : m)
    for (auto& x : row) x = rng.uniform(-1, 1);
  return m;
}

DenseMatrix orbit_closed(Rng& rng, int k, std::size_t seeds, bool drop_one) {
  const std::size_t n = std::size_t{1} << k;
  const auto sigmas = oracle_permutations(k);
  DenseMatrix rows;
  for (std::size_t s = 0; s < seeds; ++s) {
    const DenseMatrix seed = random_ternary(rng, 1, n);
    std::set<std::vector<Rational>> orbit;
    for (const auto& sigma : sigmas) {
      orbit.insert(oracle_matmul(seed, oracle_induced_matrix(k, sigma))[0]);
    }
    rows.insert(rows.end(), orbit.begin(), orbit.end());
  }
  std::shuffle(rows.begin(), rows.end(), rng.engine());
  if (drop_one && rows.size() > 1) rows.erase(rows.begin() + rng.uniform(0, static_cast<int>(rows.size()) - 1));
  return rows;
}

}  // namespace estimand::testing
