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

#include <string>
#include <vector>

#include "estimand/contrasts.hpp"
#include "estimand/error.hpp"
#include "estimand/estimand_class.hpp"
#include "estimand/generator_matrix.hpp"
#include "estimand/io.hpp"
#include "estimand/weights.hpp"
#include "estimand_cli/cli.hpp"

namespace estimand::cli {

namespace {

GeneratorMatrix from_integer_rows(int k, const std::vector<std::vector<int>>& rows) {
  std::vector<std::vector<Rational>> data;
  for (const auto& row : rows) data.emplace_back(row.begin(), row.end());
  return GeneratorMatrix::canonical(k, RationalMatrix::from_rows(data));
}

}  // namespace

const std::vector<std::string>& example_names() {
  static const std::vector<std::string> names = {"example3-h1", "example3-h2", "k2-class",
                                                 "k3-class", "dasgupta-k2"};
  return names;
}

std::string example_fixture(std::string_view name) {
  if (name == "example3-h1") {
    return dump_canonical(generator_to_json(from_integer_rows(2, {{0, 0, 1, -1}, {1, 0, -1, 0}})));
  }
  if (name == "example3-h2") {
    return dump_canonical(generator_to_json(from_integer_rows(2, {{1, -1, 0, 0}, {1, 0, -1, 0}})));
  }
  if (name == "k2-class") {
    return dump_canonical(class_to_json(build_class(2, WeightSpec::point_mass(2))));
  }
  if (name == "k3-class") {
    return dump_canonical(class_to_json(build_class(3, WeightSpec::point_mass(3))));
  }
  if (name == "dasgupta-k2") {
    // Equal invariant weights over the 2^K basis.
    const EstimandClass cls = build_class(2, WeightSpec::equal_invariant(2));
    return dump_canonical(generator_to_json(class_coefficient_matrix(cls)));
  }
  throw ArgumentError("unknown fixture '" + std::string(name) + "'");
}

}  // namespace estimand::cli
