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

#include <gtest/gtest.h>

#include <set>

#include "estimand/error.hpp"
#include "estimand/subsets.hpp"
#include "test_support/oracles.hpp"

namespace estimand {
namespace {

using testing::oracle_canonical_masks;
using testing::oracle_permutations;
using testing::oracle_sigma_star;

SubsetMask S(int k, std::initializer_list<int> idx) {
  std::vector<int> v(idx);
  return SubsetMask::from_indices(k, v);
}

TEST(Ordering, KTwoMatchesStateVectorLayout) {
  const CanonicalOrdering ord = enumerate_by_cardinality(2);
  ASSERT_EQ(ord.size(), 4u);
  EXPECT_EQ(ord.mask_of(0), SubsetMask::empty(2));
  EXPECT_EQ(ord.mask_of(1), S(2, {1}));
  EXPECT_EQ(ord.mask_of(2), S(2, {2}));
  EXPECT_EQ(ord.mask_of(3), S(2, {1, 2}));
  // (mu(1,1), mu(0,1), mu(1,0), mu(0,0))
  EXPECT_EQ(ord.mask_of(0).state_string(), "11");
  EXPECT_EQ(ord.mask_of(1).state_string(), "01");
  EXPECT_EQ(ord.mask_of(2).state_string(), "10");
  EXPECT_EQ(ord.mask_of(3).state_string(), "00");
}

TEST(Ordering, KOne) {
  const CanonicalOrdering ord = enumerate_by_cardinality(1);
  ASSERT_EQ(ord.size(), 2u);
  EXPECT_TRUE(ord.mask_of(0).is_empty());
  EXPECT_EQ(ord.mask_of(1), S(1, {1}));
}

TEST(Ordering, KThreeBlocks) {
  const CanonicalOrdering ord = enumerate_by_cardinality(3);
  const std::vector<std::size_t> sizes = {1, 3, 3, 1};
  for (int q = 0; q <= 3; ++q) EXPECT_EQ(ord.block_size(q), sizes[static_cast<std::size_t>(q)]);
  EXPECT_EQ(ord.index_of(S(3, {2})), 2u);
}

TEST(Ordering, MatchesOracleAndRoundTrips) {
  for (int k = 1; k <= 10; ++k) {
    const CanonicalOrdering ord = enumerate_by_cardinality(k);
    const auto expected = oracle_canonical_masks(k);
    ASSERT_EQ(ord.size(), expected.size());
    for (std::size_t i = 0; i < ord.size(); ++i) {
      EXPECT_EQ(ord.mask_of(i).bits(), expected[i]);
      EXPECT_EQ(ord.index_of(ord.mask_of(i)), i);
    }
    for (int q = 0; q <= k; ++q) EXPECT_EQ(ord.block_size(q), binomial(k, q));
    EXPECT_TRUE(ord.is_lexicographic());
  }
}

TEST(Ordering, SizeGuard) {
  EXPECT_THROW(enumerate_by_cardinality(0), SizeLimitError);
  EXPECT_THROW(enumerate_by_cardinality(17), SizeLimitError);
  EXPECT_NO_THROW(enumerate_by_cardinality(16));
}

TEST(Ordering, FromSequenceRejectsUnsorted) {
  EXPECT_THROW(CanonicalOrdering::from_sequence(2, {0, 3, 1, 2}), ValidationError);
  EXPECT_THROW(CanonicalOrdering::from_sequence(2, {0, 1, 1, 3}), ValidationError);
  const CanonicalOrdering swapped = CanonicalOrdering::from_sequence(2, {0, 2, 1, 3});
  EXPECT_FALSE(swapped.is_lexicographic());
  EXPECT_EQ(swapped.index_of(S(2, {2})), 1u);
}

TEST(SetOps, Examples) {
  EXPECT_EQ(set_complement(S(2, {1})), S(2, {2}));
  EXPECT_EQ(set_difference(S(2, {1, 2}), S(2, {2})), S(2, {1}));
  EXPECT_EQ(set_intersection(S(3, {1, 3}), S(3, {2, 3})), S(3, {3}));
  EXPECT_EQ(set_union(S(3, {1}), S(3, {3})), S(3, {1, 3}));
}

TEST(SetOps, MismatchedK) {
  EXPECT_THROW(set_union(S(2, {1}), S(3, {1})), DimensionError);
  EXPECT_THROW(set_intersection(S(2, {1}), S(3, {1})), DimensionError);
  EXPECT_THROW(set_difference(S(2, {1}), S(3, {1})), DimensionError);
}

TEST(SubsetMask, Validation) {
  EXPECT_THROW(SubsetMask(4u, 2), ValidationError);
  EXPECT_THROW(SubsetMask::from_state_string("0a"), ValidationError);
  std::vector<int> bad = {3};
  EXPECT_THROW(SubsetMask::from_indices(2, bad), ValidationError);
}

TEST(SubsetMask, Encodings) {
  const SubsetMask a = S(3, {1, 3});
  EXPECT_EQ(a.state_string(), "010");
  EXPECT_EQ(SubsetMask::from_state_string("010"), a);
  EXPECT_EQ(a.to_string(), "{X1,X3}");
  EXPECT_EQ(SubsetMask::empty(3).to_string(), "{}");
  EXPECT_EQ(a.indices(), (std::vector<int>{1, 3}));
}

TEST(SigmaStar, Examples) {
  EXPECT_EQ(apply_sigma_star(LabelPermutation::transposition(2, 1, 2), S(2, {1})), S(2, {2}));
  EXPECT_EQ(apply_sigma_star(LabelPermutation::identity(3), S(3, {1, 3})), S(3, {1, 3}));
  EXPECT_EQ(apply_sigma_star(LabelPermutation({2, 3, 1}), S(3, {1, 3})), S(3, {1, 2}));
  EXPECT_THROW(apply_sigma_star(LabelPermutation::identity(2), S(3, {1})), DimensionError);
}

TEST(SigmaStar, ExhaustivePropertiesUpToSix) {
  for (int k = 1; k <= 6; ++k) {
    const std::uint32_t n = 1u << k;
    for (const auto& image : oracle_permutations(k)) {
      const LabelPermutation sigma(image);
      std::set<std::uint32_t> seen;
      for (std::uint32_t a = 0; a < n; ++a) {
        const SubsetMask am(a, k);
        const SubsetMask sa = apply_sigma_star(sigma, am);
        ASSERT_EQ(sa.bits(), oracle_sigma_star(image, a));
        ASSERT_EQ(sa.size(), am.size());
        ASSERT_EQ(apply_sigma_star(sigma, set_complement(am)), set_complement(sa));
        seen.insert(sa.bits());
      }
      ASSERT_EQ(seen.size(), n);
    }
  }
}

TEST(SigmaStar, DistributesOverIntersection) {
  for (int k = 1; k <= 4; ++k) {
    const std::uint32_t n = 1u << k;
    for (const auto& image : oracle_permutations(k)) {
      const LabelPermutation sigma(image);
      for (std::uint32_t a = 0; a < n; ++a)
        for (std::uint32_t b = 0; b < n; ++b) {
          const SubsetMask am(a, k), bm(b, k);
          ASSERT_EQ(apply_sigma_star(sigma, set_intersection(am, bm)),
                    set_intersection(apply_sigma_star(sigma, am), apply_sigma_star(sigma, bm)));
        }
    }
  }
}

TEST(Submasks, CanonicalOrder) {
  EXPECT_EQ(canonical_submasks(0b101u), (std::vector<std::uint32_t>{0, 1, 4, 5}));
  EXPECT_EQ(canonical_submasks(0u), (std::vector<std::uint32_t>{0}));
  EXPECT_EQ(nonempty_subsets(2).size(), 3u);
}

}  // namespace
}  // namespace estimand
