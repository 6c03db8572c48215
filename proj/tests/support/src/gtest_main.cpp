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

#include <iostream>

#include "test_support/random.hpp"

int main(int argc, char** argv) {
  estimand::testing::consume_seed_flag(argc, argv);
  ::testing::InitGoogleTest(&argc, argv);
  std::cout << "test seed: " << estimand::testing::test_seed() << "\n";
  return RUN_ALL_TESTS();
}
