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

#include "estimand/error.hpp"
#include "estimand/io.hpp"
#include "estimand/render_eval.hpp"
#include "test_support/random.hpp"

namespace estimand {
namespace {

SubsetMask S(int k, std::initializer_list<int> idx) {
  std::vector<int> v(idx);
  return SubsetMask::from_indices(k, v);
}

TEST(Rationals, ParseForms) {
  EXPECT_EQ(rational_from_json(Json("3/4")), Rational(3, 4));
  EXPECT_EQ(rational_from_json(Json("6/8")), Rational(3, 4));
  EXPECT_EQ(rational_from_json(Json("0.25")), Rational(1, 4));
  EXPECT_EQ(rational_from_json(Json("1e-2")), Rational(1, 100));
  EXPECT_EQ(rational_from_json(Json(-7)), -7);
  EXPECT_EQ(rational_to_json(parse_rational("-3/6")), Json("-1/2"));
  EXPECT_EQ(rational_to_json(Rational(5)), Json("5"));
  EXPECT_THROW(rational_from_json(Json("1/0")), ValidationError);
  EXPECT_THROW(rational_from_json(Json("abc")), ValidationError);
  EXPECT_THROW(rational_from_json(Json::array()), ValidationError);
}

TEST(Rationals, DecimalLiteralsStayExact) {
  const Json j = parse_exact_json(R"({"a": 0.1, "b": 1.25e-1, "c": 3})");
  EXPECT_EQ(rational_from_json(j.at("a")), Rational(1, 10));
  EXPECT_EQ(rational_from_json(j.at("b")), Rational(1, 8));
  EXPECT_EQ(rational_from_json(j.at("c")), 3);
  EXPECT_THROW(parse_exact_json("{\"a\": }"), ValidationError);
}

TEST(Subsets, BothEncodings) {
  EXPECT_EQ(subset_from_json(Json::parse("[1,3]"), 3), S(3, {1, 3}));
  EXPECT_EQ(subset_from_json(Json("010"), 3), S(3, {1, 3}));
  EXPECT_EQ(subset_to_json(S(3, {3, 1})), Json::parse("[1,3]"));
  EXPECT_THROW(subset_from_json(Json("01"), 3), ValidationError);
  EXPECT_THROW(subset_from_json(Json::parse("[4]"), 3), ValidationError);
}

TEST(Permutations, BothEncodings) {
  EXPECT_EQ(permutation_from_json(Json("2,1")), LabelPermutation({2, 1}));
  EXPECT_EQ(permutation_from_json(Json::parse("[2,3,1]")), LabelPermutation({2, 3, 1}));
  EXPECT_EQ(permutation_from_json(permutation_to_json(LabelPermutation({3, 1, 2}))), LabelPermutation({3, 1, 2}));
}

TEST(Generators, RoundTrip) {
  const Json j = Json::parse(R"({"k": 2, "basis": "canonical", "rows": [[1, -1, 0, 0], ["1/2", 0, "-1/2", 0]]})");
  const GeneratorMatrix h = generator_from_json(j);
  EXPECT_EQ(h.matrix()(1, 0), Rational(1, 2));
  EXPECT_EQ(generator_from_json(generator_to_json(h)).matrix(), h.matrix());
  EXPECT_THROW(generator_from_json(Json::parse(R"({"k": 2, "rows": [[1, 2, 3]]})")), Error);
}

TEST(Weights, RoundTripEveryKind) {
  testing::Rng rng(81);
  std::vector<WeightSpec> specs = {WeightSpec::point_mass(3), WeightSpec::equal_invariant(3),
                                   WeightSpec::permutable(3, testing::to_entries(3, testing::random_raw_weights(rng, 3, true))),
                                   derive_compatible_weights(2, testing::random_pmf(rng, 2))};
  for (const WeightSpec& w : specs) {
    const WeightSpec back = weights_from_json(parse_exact_json(dump_canonical(weights_to_json(w))));
    ASSERT_EQ(back.k(), w.k());
    ASSERT_EQ(back.source_pmf(), w.source_pmf());
    for (const WeightEntry& e : w.entries()) ASSERT_EQ(back.at(e.t, e.y), e.w);
    ASSERT_EQ(dump_canonical(weights_to_json(back)), dump_canonical(weights_to_json(w)));
  }
}

TEST(Weights, InvariantTablePayload) {
  const WeightSpec w = weights_from_json(
      parse_exact_json(R"({"kind": "invariant", "k": 2, "table": {"1:0": 0.5, "1:1": "1/2", "2:0": 1}})"));
  EXPECT_EQ(w.at(S(2, {2}), S(2, {1})), Rational(1, 2));
  EXPECT_THROW(weights_from_json(parse_exact_json(R"({"kind": "invariant", "k": 2, "table": {"1:0": 0.6, "1:1": 0.5, "2:0": 1}})")),
               ValidationError);
  EXPECT_THROW(weights_from_json(parse_exact_json(R"({"kind": "mystery", "k": 2})")), ValidationError);
}

TEST(Expressions, RoundTrip) {
  const EstimandClass cls = build_class(3, WeightSpec::equal_invariant(3));
  for (const auto& m : cls.members()) {
    const EstimandExpression back = expression_from_json(expression_to_json(m), 3);
    ASSERT_EQ(back, m);
    ASSERT_EQ(back.target(), m.target());
    ASSERT_EQ(render_expression(back, RenderFormat::latex), render_expression(m, RenderFormat::latex));
  }
}

TEST(Classes, DifferenceRoundTrip) {
  const EstimandClass cls = build_class(2, WeightSpec::equal_invariant(2));
  const Json j = class_to_json(cls);
  EXPECT_EQ(j.at("format"), "estimand-class");
  const ClassDocument doc = class_from_json(parse_exact_json(dump_canonical(j)));
  ASSERT_TRUE(doc.difference.has_value());
  EXPECT_EQ(doc.scale, "difference");
  EXPECT_EQ(doc.difference->members(), cls.members());
}

TEST(Classes, RatioRoundTrip) {
  const RatioClass cls = build_ratio_class(3, RatioLink::odds_ratio);
  const ClassDocument doc = class_from_json(class_to_json(cls));
  ASSERT_TRUE(doc.ratio.has_value());
  EXPECT_EQ(doc.scale, "odds-ratio");
  EXPECT_EQ(doc.ratio->members(), cls.members());
}

TEST(Classes, TamperedMembersRejected) {
  Json j = class_to_json(build_class(2, WeightSpec::point_mass(2)));
  j["members"][0]["coeffs"]["11"] = "2";
  EXPECT_THROW(class_from_json(j), ValidationError);
}

TEST(Mu, Encodings) {
  const MuTable a = mu_from_json(parse_exact_json(R"({"11": 0.4, "01": "3/10", "10": 0.2, "00": 0.1})"));
  EXPECT_EQ(a.at_state("11"), Rational(2, 5));
  const MuTable b = mu_from_json(parse_exact_json(R"({"k": 2, "values": {"1,1": 0.4, "0,1": 0.3, "1,0": 0.2, "0,0": 0.1}})"));
  EXPECT_EQ(a.values(), b.values());
  EXPECT_EQ(mu_from_json(mu_to_json(a)).values(), a.values());
  EXPECT_THROW(mu_from_json(parse_exact_json(R"({"11": 1, "01": 1})")), ValidationError);
  EXPECT_THROW(mu_from_json(parse_exact_json(R"({"1": 1, "0": 1})"), 2), Error);
}

TEST(Canonical, StableDump) {
  const Json j = class_to_json(build_class(2, WeightSpec::point_mass(2)));
  EXPECT_EQ(dump_canonical(j), dump_canonical(parse_exact_json(dump_canonical(j))));
  EXPECT_EQ(dump_canonical(j).back(), '\n');
}

}  // namespace
}  // namespace estimand
