// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "popular/oracle.hpp"

#include <gtest/gtest.h>

#include <cstdlib>
#include <vector>

#include "popular/error.hpp"
#include "popular/generators.hpp"

namespace popular {
namespace {

TEST(OracleTest, FixtureCounts) {
  EXPECT_EQ(EnumerateFeasible(NamedFixture("intro")).size(), 45u);
  EXPECT_EQ(EnumerateFeasible(NamedFixture("a1")).size(), 24u);
  EXPECT_TRUE(BrutePopular(NamedFixture("intro")).empty());
  std::vector<Solution> a1 = BrutePopular(NamedFixture("a1"));
  ASSERT_EQ(a1.size(), 2u);
  EXPECT_EQ(a1[0].elements.ToVector(), (std::vector<int>{0, 5, 7, 9}));
  EXPECT_EQ(a1[1].elements.ToVector(), (std::vector<int>{2, 3, 7, 9}));
  std::vector<Solution> a3 = BrutePopular(NamedFixture("a3"));
  ASSERT_EQ(a3.size(), 1u);
  EXPECT_EQ(a3[0].elements.ToVector(), (std::vector<int>{1, 3, 5, 6}));
}

TEST(OracleTest, BothEnumerationsAgree) {
  for (std::uint64_t seed = 0; seed < 90; ++seed) {
    RandomSpec spec;
    spec.seed = seed;
    spec.kind = static_cast<InstanceKind>(seed % 3);
    spec.agents = 3 + static_cast<int>(seed % 2);
    spec.max_edges = 9;
    Instance inst = RandomInstance(spec);
    std::vector<Solution> a = EnumerateFeasible(inst);
    std::vector<Solution> b = EnumerateFeasibleByElements(inst);
    ASSERT_EQ(a, b) << "seed " << seed;
    for (const Solution& s : a) ASSERT_TRUE(IsFeasible(inst, s.elements));
  }
}

TEST(OracleTest, IndependentSemanticsIncludeTheEmptySet) {
  RandomSpec spec;
  spec.kind = InstanceKind::kColorfulForest;
  spec.agents = 2;
  Instance inst = RandomInstance(spec);
  std::vector<Solution> all = EnumerateFeasible(inst);
  ASSERT_FALSE(all.empty());
  EXPECT_TRUE(all.front().elements.Empty());
}

TEST(OracleTest, MinMarginOnIntroIsPositive) {
  auto pick = BruteMinMargin(NamedFixture("intro"));
  ASSERT_TRUE(pick.has_value());
  EXPECT_GE(pick->margin, 1);
  auto a1 = BruteMinMargin(NamedFixture("a1"));
  EXPECT_EQ(a1->margin, 0);
}

TEST(OracleTest, MinCostPopular) {
  Instance inst = NamedFixture("a1");
  CostMap costs(inst.NumElements());
  costs[0].value = 5;  // only A''' uses (b,a)
  auto pick = BruteMinCostPopular(inst, costs);
  ASSERT_TRUE(pick.has_value());
  EXPECT_EQ(pick->solution.elements.ToVector(), (std::vector<int>{2, 3, 7, 9}));
  EXPECT_EQ(pick->cost, Rational(0));
  costs[2].infinite = true;
  EXPECT_EQ(BruteMinCostPopular(inst, costs)->cost, Rational(5));
  costs[0].infinite = true;
  EXPECT_FALSE(BruteMinCostPopular(inst, costs).has_value());
  EXPECT_THROW(BruteMinCostPopular(inst, CostMap(3)), Error);
}

TEST(OracleTest, DeskScaleGuard) {
  Instance inst = NamedFixture("intro");
  EXPECT_DOUBLE_EQ(EnumerationBound(inst), 81.0);
  try {
    EnumerateFeasible(inst, 80);
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDeskScaleExceeded);
  }
  EXPECT_EQ(BruteLimit(), kDefaultBruteLimit);
  setenv("POPOLO_BRUTE_LIMIT", "50", 1);
  EXPECT_EQ(BruteLimit(), 50u);
  EXPECT_THROW(EnumerateFeasible(inst), Error);
  setenv("POPOLO_BRUTE_LIMIT", "junk", 1);
  EXPECT_EQ(BruteLimit(), kDefaultBruteLimit);
  unsetenv("POPOLO_BRUTE_LIMIT");
}

}  // namespace
}  // namespace popular
