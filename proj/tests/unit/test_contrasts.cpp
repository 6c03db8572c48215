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

#include "estimand/contrasts.hpp"
#include "estimand/error.hpp"
#include "estimand/estimand_class.hpp"
#include "estimand/render_eval.hpp"
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

GeneratorMatrix h1() { return GeneratorMatrix::canonical(2, M({{0, 0, 1, -1}, {1, 0, -1, 0}})); }
GeneratorMatrix h2() { return GeneratorMatrix::canonical(2, M({{1, -1, 0, 0}, {1, 0, -1, 0}})); }

std::vector<Rational> V(std::initializer_list<int> v) { return {v.begin(), v.end()}; }

TEST(ApplyContrast, Examples) {
  const std::vector<Rational> f = V({4, 3, 2, 1});
  EXPECT_EQ(apply_contrast(h2(), f), V({1, 2}));
  EXPECT_EQ(apply_contrast(h1(), f), V({1, 2}));
  EXPECT_THROW(apply_contrast(h2(), V({1, 2, 3})), DimensionError);
}

TEST(RowMultisets, CountsDuplicates) {
  const RowMultiset m = row_multiset(M({{1, 0}, {0, 1}, {1, 0}}));
  EXPECT_EQ(m.total(), 3u);
  EXPECT_EQ(m.entries.size(), 2u);
  EXPECT_EQ(m.entries.at(V({1, 0})), 2u);
}

TEST(Invariance, H1FailsUnderSwap) {
  const InvarianceVerdict v = is_invariant_multiset_test(h1());
  EXPECT_FALSE(v.invariant);
  ASSERT_TRUE(v.witness.has_value());
  EXPECT_EQ(v.witness->to_string(), "2,1");
  const InvarianceVerdict d = is_invariant_definitional(h1());
  EXPECT_FALSE(d.invariant);
  EXPECT_EQ(d.witness, v.witness);
}

TEST(Invariance, H2Holds) {
  EXPECT_TRUE(is_invariant_multiset_test(h2()).invariant);
  const InvarianceVerdict d = is_invariant_definitional(h2());
  EXPECT_TRUE(d.invariant);
  EXPECT_EQ(d.checked, 2u);
}

TEST(Invariance, ZeroRowAndEmptyMatrices) {
  EXPECT_TRUE(is_invariant_multiset_test(GeneratorMatrix::canonical(2, RationalMatrix(0, 4))).invariant);
  EXPECT_TRUE(is_invariant_multiset_test(GeneratorMatrix::canonical(3, RationalMatrix(2, 8))).invariant);
}

TEST(Invariance, AgreesWithBruteForce) {
  testing::Rng rng(21);
  int invariant_seen = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const int k = rng.uniform(2, 3);
    const std::size_t n = std::size_t{1} << k;
    DenseMatrix rows;
    if (trial % 2 == 0) {
      rows = testing::random_ternary(rng, static_cast<std::size_t>(rng.uniform(1, 4)), n);
    } else {
      rows = testing::orbit_closed(rng, k, 1, rng.coin());
      if (rows.size() > 6) rows.resize(6);
    }
    const GeneratorMatrix h = GeneratorMatrix::canonical(k, RationalMatrix::from_rows(rows));
    const bool expected = testing::oracle_brute_force_invariant(rows, k);
    const InvarianceVerdict a = is_invariant_multiset_test(h);
    const InvarianceVerdict b = is_invariant_definitional(h);
    ASSERT_EQ(a.invariant, expected) << "trial " << trial;
    ASSERT_EQ(b.invariant, expected) << "trial " << trial;
    ASSERT_EQ(a.witness, b.witness);
    invariant_seen += expected;
  }
  EXPECT_GT(invariant_seen, 20);
}

TEST(Invariance, IndependentOfColumnOrdering) {
  testing::Rng rng(22);
  for (int trial = 0; trial < 50; ++trial) {
    const int k = 3;
    const RationalMatrix base = RationalMatrix::from_rows(
        trial % 2 ? testing::orbit_closed(rng, k, 1, false) : testing::random_ternary(rng, 3, 8));
    const GeneratorMatrix h = GeneratorMatrix::canonical(k, base);
    // Same cardinality blocks, members reversed inside each block.
    const CanonicalOrdering scrambled =
        CanonicalOrdering::from_sequence(k, {0, 4, 2, 1, 6, 5, 3, 7});
    const GeneratorMatrix moved = h.reordered(scrambled);
    ASSERT_EQ(moved.ordering(), scrambled);
    for (std::size_t c = 0; c < 8; ++c) {
      const std::size_t src = h.ordering().index_of(scrambled.mask_of(c));
      for (std::size_t r = 0; r < base.rows(); ++r) ASSERT_EQ(moved.matrix()(r, c), base(r, src));
    }
    ASSERT_EQ(is_invariant_multiset_test(moved).invariant, is_invariant_multiset_test(h).invariant);
    ASSERT_EQ(is_invariant_definitional(moved).invariant, is_invariant_definitional(h).invariant);
  }
}

TEST(Embedding, KTwoShape) {
  const EstimandClass cls = build_class(2, WeightSpec::point_mass(2));
  const GeneratorMatrix e = embed_weighted_basis(cls);
  EXPECT_EQ(e.rows(), 3u);
  EXPECT_EQ(e.cols(), 12u);
  EXPECT_EQ(e.basis(), Basis::expanded);
  EXPECT_TRUE(is_invariant_multiset_test(e).invariant);
  EXPECT_TRUE(is_invariant_definitional(e).invariant);
  EXPECT_EQ(drop_zero_weight_columns(e, cls.weights()).cols(), 8u);
}

TEST(Embedding, KOneIsSingleContrast) {
  const EstimandClass cls = build_class(1, WeightSpec::point_mass(1));
  const GeneratorMatrix e = embed_weighted_basis(cls);
  EXPECT_EQ(e.matrix(), M({{1, -1}}));
  EXPECT_EQ(class_coefficient_matrix(cls).matrix(), M({{1, -1}}));
}

TEST(Embedding, RejectsInvariantKind) {
  EXPECT_THROW(embed_weighted_basis(build_class(2, WeightSpec::equal_invariant(2))), ArgumentError);
}

TEST(Embedding, CollapseMatchesCoefficientMatrix) {
  testing::Rng rng(23);
  for (int k = 1; k <= 4; ++k) {
    for (int trial = 0; trial < 5; ++trial) {
      const WeightSpec w = trial == 0 ? WeightSpec::point_mass(k)
                                      : WeightSpec::permutable(k, testing::to_entries(
                                                                      k, testing::random_raw_weights(rng, k, trial % 2)));
      const EstimandClass cls = build_class(k, w);
      const GeneratorMatrix e = embed_weighted_basis(cls);
      ASSERT_EQ(collapse_to_canonical(e, w).matrix(), class_coefficient_matrix(cls).matrix());
      // H v(w, f) reproduces the member values.
      std::vector<Rational> f;
      for (std::size_t i = 0; i < (std::size_t{1} << k); ++i) f.push_back(rng.open_unit());
      const std::vector<Rational> values =
          apply_contrast(e, expanded_value_vector(e.expanded_basis(), w, f));
      const MuTable mu = MuTable::from_f_vector(k, f);
      for (std::size_t r = 0; r < cls.members().size(); ++r) {
        ASSERT_EQ(values[r], evaluate(cls.members()[r], mu));
      }
    }
  }
}

TEST(Embedding, PointMassReducesToZSums) {
  // With w(T, Y) = [T empty] each row collapses to sum_{Z in Y} (-1)^|Z| f(Z).
  for (int k = 1; k <= 5; ++k) {
    const EstimandClass cls = build_class(k, WeightSpec::point_mass(k));
    const GeneratorMatrix c = class_coefficient_matrix(cls);
    const std::vector<SubsetMask> ys = nonempty_subsets(k);
    for (std::size_t r = 0; r < ys.size(); ++r)
      for (std::size_t j = 0; j < c.cols(); ++j) {
        const SubsetMask z = c.ordering().mask_of(j);
        const int expected = z.is_subset_of(ys[r]) ? (z.size() % 2 ? -1 : 1) : 0;
        ASSERT_EQ(c.matrix()(r, j), Rational(expected));
      }
    EXPECT_EQ(c.regime(), EntryRegime::unit);
  }
}

TEST(EqualWeights, ClassIsInvariantAndFractional) {
  const EstimandClass cls = build_class(2, WeightSpec::equal_invariant(2));
  const GeneratorMatrix h = class_coefficient_matrix(cls);
  EXPECT_EQ(h.regime(), EntryRegime::fractional);
  EXPECT_TRUE(is_invariant_multiset_test(h).invariant);
  EXPECT_TRUE(is_invariant_definitional(h).invariant);
  const Rational half(1, 2);
  // Rows: X1 main effect, X2 main effect, interaction; columns 11, 01, 10, 00.
  const std::vector<std::vector<Rational>> expected = {
      {half, -half, half, -half}, {half, half, -half, -half}, {1, -1, -1, 1}};
  EXPECT_EQ(h.matrix(), RationalMatrix::from_rows(expected));
}

}  // namespace
}  // namespace estimand
