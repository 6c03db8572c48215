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

#include <benchmark/benchmark.h>

#include "estimand/contrasts.hpp"
#include "estimand/estimand_class.hpp"
#include "estimand/permutations.hpp"
#include "estimand/ratio_scale.hpp"
#include "estimand/residual.hpp"

namespace {

using namespace estimand;

void BM_BuildPointMassClass(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  const WeightSpec w = WeightSpec::point_mass(k);
  for (auto _ : state) benchmark::DoNotOptimize(build_class(k, w));
}
BENCHMARK(BM_BuildPointMassClass)->DenseRange(2, 8, 2);

void BM_BuildEqualWeightClass(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  const WeightSpec w = WeightSpec::equal_invariant(k);
  for (auto _ : state) benchmark::DoNotOptimize(build_class(k, w));
}
BENCHMARK(BM_BuildEqualWeightClass)->DenseRange(2, 6, 2);

void BM_InducedPermutation(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  const CanonicalOrdering ord = enumerate_by_cardinality(k);
  const LabelPermutation sigma = enumerate_symmetric_group(std::min(k, 6)).back();
  std::vector<int> image = sigma.image();
  for (int i = static_cast<int>(image.size()) + 1; i <= k; ++i) image.push_back(i);
  const LabelPermutation full(image);
  for (auto _ : state) benchmark::DoNotOptimize(induce_column_permutation(full, ord));
}
BENCHMARK(BM_InducedPermutation)->DenseRange(4, 12, 4);

void BM_MultisetInvariance(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  const GeneratorMatrix h = class_coefficient_matrix(build_class(k, WeightSpec::point_mass(k)));
  for (auto _ : state) benchmark::DoNotOptimize(is_invariant_multiset_test(h));
}
BENCHMARK(BM_MultisetInvariance)->DenseRange(2, 5, 1);

void BM_DefinitionalInvariance(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  const GeneratorMatrix h = class_coefficient_matrix(build_class(k, WeightSpec::point_mass(k)));
  for (auto _ : state) benchmark::DoNotOptimize(is_invariant_definitional(h));
}
BENCHMARK(BM_DefinitionalInvariance)->DenseRange(2, 5, 1);

void BM_ResidualCoefficients(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  const EstimandClass cls = build_class(k, WeightSpec::equal_invariant(k));
  for (auto _ : state) benchmark::DoNotOptimize(residual_coefficients(cls));
}
BENCHMARK(BM_ResidualCoefficients)->DenseRange(2, 6, 2);

void BM_CompletenessRank(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  const EstimandClass cls = build_class(k, WeightSpec::equal_invariant(k));
  for (auto _ : state) benchmark::DoNotOptimize(completeness_rank(cls));
}
BENCHMARK(BM_CompletenessRank)->DenseRange(2, 6, 2);

void BM_UniquenessProbe(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(uniqueness_probe(3, d));
}
BENCHMARK(BM_UniquenessProbe)->Arg(2)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_RatioDecomposition(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  const RatioClass cls = build_ratio_class(k, RatioLink::odds_ratio);
  std::vector<Rational> f;
  for (std::size_t i = 0; i < (std::size_t{1} << k); ++i) {
    Rational v(static_cast<long>(i + 1), static_cast<long>((std::size_t{1} << k) + 2));
    v.canonicalize();
    f.push_back(v);
  }
  const MuTable mu = MuTable::from_f_vector(k, f);
  for (auto _ : state) benchmark::DoNotOptimize(multiplicative_decomposition(cls, mu));
}
BENCHMARK(BM_RatioDecomposition)->DenseRange(2, 6, 2);

}  // namespace

BENCHMARK_MAIN();
