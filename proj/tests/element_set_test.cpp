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

#include "popular/element_set.hpp"

#include <gtest/gtest.h>

#include <vector>

namespace popular {
namespace {

TEST(ElementSetTest, InsertEraseAndQueries) {
  ElementSet s(10);
  EXPECT_TRUE(s.Empty());
  s.Insert(3);
  s.Insert(7);
  EXPECT_EQ(s.Size(), 2);
  EXPECT_TRUE(s.Contains(3));
  EXPECT_FALSE(s.Contains(4));
  s.Erase(3);
  EXPECT_EQ(s.ToVector(), std::vector<int>{7});
  EXPECT_EQ(s.GroundSize(), 10);
}

TEST(ElementSetTest, SetAlgebra) {
  ElementSet a = ElementSet::FromVector(6, {0, 1, 2});
  ElementSet b = ElementSet::FromVector(6, {2, 3});
  EXPECT_EQ((a | b).ToVector(), (std::vector<int>{0, 1, 2, 3}));
  EXPECT_EQ((a & b).ToVector(), std::vector<int>{2});
  EXPECT_EQ((a - b).ToVector(), (std::vector<int>{0, 1}));
  EXPECT_EQ(a.Complement().ToVector(), (std::vector<int>{3, 4, 5}));
  EXPECT_TRUE(a.Intersects(b));
  EXPECT_FALSE((a - b).Intersects(b));
  EXPECT_TRUE(ElementSet::FromVector(6, {1}).IsProperSubsetOf(a));
  EXPECT_TRUE(a.IsSubsetOf(a));
  EXPECT_FALSE(a.IsProperSubsetOf(a));
  EXPECT_EQ(a.With(5).Size(), 4);
  EXPECT_EQ(a.Without(0).Size(), 2);
}

TEST(ElementSetTest, IterationVisitsIdsInOrder) {
  ElementSet s = ElementSet::FromVector(130, {129, 0, 64, 65});
  std::vector<int> seen;
  for (int e = s.First(); e >= 0; e = s.Next(e)) seen.push_back(e);
  EXPECT_EQ(seen, (std::vector<int>{0, 64, 65, 129}));
  std::vector<int> each;
  s.ForEach([&](int e) { each.push_back(e); });
  EXPECT_EQ(each, seen);
  EXPECT_EQ(ElementSet(5).First(), -1);
}

TEST(ElementSetTest, FullAndEmptyGround) {
  EXPECT_EQ(ElementSet::Full(4).Size(), 4);
  EXPECT_TRUE(ElementSet::Full(0).Empty());
  EXPECT_EQ(ElementSet(0), ElementSet::Full(0));
}

TEST(ElementSetTest, OrderingIsTotal) {
  ElementSet a = ElementSet::FromVector(4, {0, 2});
  ElementSet b = ElementSet::FromVector(4, {1});
  EXPECT_TRUE(a < b || b < a);
  EXPECT_FALSE(a < a);
}

}  // namespace
}  // namespace popular
