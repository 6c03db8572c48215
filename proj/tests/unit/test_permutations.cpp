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
#include "estimand/generator_matrix.hpp"
#include "estimand/permutations.hpp"
#include "test_support/oracles.hpp"
#include "test_support/random.hpp"

namespace estimand {
namespace {

using testing::DenseMatrix;

RationalMatrix M(const std::vector<std::vector<int>>& rows) {
  std::vector<std::vector<Rational>> data;
  for (const auto& r : rows) data.emplace_back(r.begin(), r.end());
  return RationalMatrix::from_rows(data);
}

DenseMatrix dense(const RationalMatrix& m) {
  DenseMatrix out;
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(m.row_vector(r));
  return out;
}

const GeneratorMatrix& h1() {
  static const GeneratorMatrix h = GeneratorMatrix::canonical(2, M({{0, 0, 1, -1}, {1, 0, -1, 0}}));
  return h;
}

const GeneratorMatrix& h2() {
  static const GeneratorMatrix h = GeneratorMatrix::canonical(2, M({{1, -1, 0, 0}, {1, 0, -1, 0}}));
  return h;
}

TEST(Induced, SwapOnKTwo) {
  const auto p = induce_column_permutation(LabelPermutation::transposition(2, 1, 2),
                                           enumerate_by_cardinality(2));
  EXPECT_EQ(p.block(0), RationalMatrix::identity(1));
  EXPECT_EQ(p.block(1), M({{0, 1}, {1, 0}}));
  EXPECT_EQ(p.block(2), RationalMatrix::identity(1));
  EXPECT_EQ(p.to_dense(), M({{1, 0, 0, 0}, {0, 0, 1, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}}));
}

TEST(Induced, IdentityGivesIdentity) {
  for (int k = 1; k <= 5; ++k) {
    const auto p = induce_column_permutation(LabelPermutation::identity(k), enumerate_by_cardinality(k));
    EXPECT_EQ(p.to_dense(), RationalMatrix::identity(std::size_t{1} << k));
  }
}

TEST(Induced, ThreeCycleOnKThree) {
  const LabelPermutation sigma({2, 3, 1});
  const auto p = induce_column_permutation(sigma, enumerate_by_cardinality(3));
  // Column j of H P_c reads column index(sigma*(mask j)) of H.
  // Singletons: {X1}->{X2}, {X2}->{X3}, {X3}->{X1}.
  EXPECT_EQ(p.block(1), M({{0, 0, 1}, {1, 0, 0}, {0, 1, 0}}));
  // Pairs in order {X1,X2}, {X1,X3}, {X2,X3}:
  // {X1,X2}->{X2,X3}, {X1,X3}->{X1,X2}, {X2,X3}->{X1,X3}.
  EXPECT_EQ(p.block(2), M({{0, 1, 0}, {0, 0, 1}, {1, 0, 0}}));
}

TEST(Induced, MatchesOracleAndIsOrthogonal) {
  for (int k = 1; k <= 4; ++k) {
    for (const auto& image : testing::oracle_permutations(k)) {
      const auto p = induce_column_permutation(LabelPermutation(image), enumerate_by_cardinality(k));
      const RationalMatrix d = p.to_dense();
      ASSERT_EQ(dense(d), testing::oracle_induced_matrix(k, image));
      ASSERT_EQ(multiply(d, d.transpose()), RationalMatrix::identity(d.rows()));
      for (int q = 0; q <= k; ++q) {
        const RationalMatrix b = p.block(q);
        ASSERT_EQ(multiply(b, b.transpose()), RationalMatrix::identity(b.rows()));
      }
    }
  }
}

// Under the column convention P(sigma*(mask j), j) = 1 the induced map is a
// homomorphism: P_{s o t} = P_s P_t.
TEST(Induced, CovariantGroupLaw) {
  for (int k = 1; k <= 4; ++k) {
    const CanonicalOrdering ord = enumerate_by_cardinality(k);
    const auto group = enumerate_symmetric_group(k);
    for (const auto& s : group)
      for (const auto& t : group) {
        const RationalMatrix lhs = induce_column_permutation(compose(s, t), ord).to_dense();
        const RationalMatrix rhs = multiply(induce_column_permutation(s, ord).to_dense(),
                                            induce_column_permutation(t, ord).to_dense());
        ASSERT_EQ(lhs, rhs) << s.to_string() << " o " << t.to_string();
      }
  }
}

TEST(Induced, DimensionMismatch) {
  EXPECT_THROW(induce_column_permutation(LabelPermutation::identity(2), enumerate_by_cardinality(3)),
               DimensionError);
}

TEST(SymmetricGroup, Counts) {
  EXPECT_EQ(enumerate_symmetric_group(2).size(), 2u);
  EXPECT_EQ(enumerate_symmetric_group(3).size(), 6u);
  const auto s4 = enumerate_symmetric_group(4);
  EXPECT_EQ(s4.size(), 24u);
  EXPECT_EQ(std::set<LabelPermutation>(s4.begin(), s4.end()).size(), 24u);
  EXPECT_TRUE(s4.front().is_identity());
  EXPECT_TRUE(std::is_sorted(s4.begin(), s4.end()));
  EXPECT_EQ(enumerate_symmetric_group(6).size(), 720u);
  EXPECT_THROW(enumerate_symmetric_group(7), SizeLimitError);
}

TEST(LabelPermutations, ParseAndCompose) {
  const LabelPermutation s = LabelPermutation::parse("2,3,1");
  EXPECT_EQ(s(1), 2);
  EXPECT_EQ(s(3), 1);
  EXPECT_EQ(s.to_string(), "2,3,1");
  EXPECT_TRUE(compose(s, s.inverse()).is_identity());
  EXPECT_EQ(compose(s, s), LabelPermutation({3, 1, 2}));
  EXPECT_THROW(LabelPermutation::parse("1,1"), ValidationError);
  EXPECT_THROW(LabelPermutation::parse("1,x"), ValidationError);
  EXPECT_THROW(LabelPermutation({0, 1}), ValidationError);
}

TEST(RowRecovery, ExchangesRowsOfH2) {
  const RowPermutation pr = algorithm1_recover_row_permutation(h2(), LabelPermutation({2, 1}));
  EXPECT_EQ(pr.image_one_based(), (std::vector<std::size_t>{2, 1}));
  EXPECT_EQ(pr.to_string(), "2,1");
}

TEST(RowRecovery, IdentityPermutation) {
  for (const GeneratorMatrix* h : {&h1(), &h2()}) {
    EXPECT_TRUE(algorithm1_recover_row_permutation(*h, LabelPermutation::identity(2)).is_identity());
  }
}

TEST(RowRecovery, DuplicateRowsUseSmallestIndex) {
  // Rows 1 and 2 coincide and are fixed by the swap.
  const GeneratorMatrix h =
      GeneratorMatrix::canonical(2, M({{1, 0, 0, -1}, {1, 0, 0, -1}, {0, 1, 1, 0}}));
  const RowPermutation pr = algorithm1_recover_row_permutation(h, LabelPermutation({2, 1}));
  EXPECT_TRUE(pr.is_identity());
  // Brute force: every valid assignment, keep the lexicographically least.
  const RationalMatrix target = apply_columns(h.matrix(), induce_for(h, LabelPermutation({2, 1})));
  std::vector<std::size_t> best;
  for (const auto& order : testing::oracle_permutations(3)) {
    std::vector<std::size_t> image;
    for (int v : order) image.push_back(static_cast<std::size_t>(v - 1));
    if (RowPermutation(image).apply(h.matrix()) == target && (best.empty() || image < best)) best = image;
  }
  EXPECT_EQ(pr, RowPermutation(best));
}

TEST(RowRecovery, FailureNamesFirstUnmatchedRow) {
  try {
    algorithm1_recover_row_permutation(h1(), LabelPermutation({2, 1}));
    FAIL() << "expected NotInvariantError";
  } catch (const NotInvariantError& e) {
    EXPECT_EQ(e.unmatched_row(), 1u);
    EXPECT_EQ(e.kind(), ErrorKind::not_invariant);
  }
}

TEST(RowRecovery, ExactOnOrbitClosedMatrices) {
  testing::Rng rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    const int k = rng.uniform(2, 4);
    const DenseMatrix rows = testing::orbit_closed(rng, k, static_cast<std::size_t>(rng.uniform(1, 2)), false);
    const GeneratorMatrix h = GeneratorMatrix::canonical(k, RationalMatrix::from_rows(rows));
    for (const auto& sigma : enumerate_symmetric_group(k)) {
      const RowPermutation pr = algorithm1_recover_row_permutation(h, sigma);
      ASSERT_EQ(pr.apply(h.matrix()), apply_columns(h.matrix(), induce_for(h, sigma)));
      // P_r H as a dense product agrees with the row-image shortcut.
      ASSERT_EQ(multiply(pr.to_dense(), h.matrix()), pr.apply(h.matrix()));
    }
  }
}

TEST(RowPermutations, Validation) {
  EXPECT_THROW(RowPermutation({0, 0}), ValidationError);
  EXPECT_THROW(RowPermutation({1, 2}), ValidationError);
  EXPECT_THROW(RowPermutation::identity(2).apply(M({{1}})), DimensionError);
}

TEST(ColumnPermutations, DenseProductMatchesShortcut) {
  testing::Rng rng(12);
  for (int k = 1; k <= 4; ++k) {
    const RationalMatrix h = RationalMatrix::from_rows(testing::random_ternary(rng, 3, std::size_t{1} << k));
    for (const auto& sigma : enumerate_symmetric_group(k)) {
      const auto p = induce_column_permutation(sigma, enumerate_by_cardinality(k));
      ASSERT_EQ(apply_columns(h, p.columns()), multiply(h, p.to_dense()));
    }
  }
}

}  // namespace
}  // namespace estimand
