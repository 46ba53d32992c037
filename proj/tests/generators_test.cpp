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

#include "popular/generators.hpp"

#include <gtest/gtest.h>

#include <set>
#include <string>
#include <vector>

#include "popular/error.hpp"
#include "popular/instance_io.hpp"
#include "popular/oracle.hpp"
#include "popular/solver.hpp"

namespace popular {
namespace {

TEST(GeneratorsTest, SameSpecSameInstance) {
  RandomSpec spec;
  spec.seed = 99;
  spec.mutual_pairs = true;
  EXPECT_EQ(DumpJson(InstanceToJson(RandomInstance(spec))),
            DumpJson(InstanceToJson(RandomInstance(spec))));
  RandomSpec other = spec;
  other.seed = 100;
  EXPECT_NE(DumpJson(InstanceToJson(RandomInstance(spec))),
            DumpJson(InstanceToJson(RandomInstance(other))));
}

TEST(GeneratorsTest, RandomArborescencesAreFeasible) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    RandomSpec spec;
    spec.seed = seed;
    spec.agents = 1 + static_cast<int>(seed % 6);
    spec.max_edges = 14;
    spec.root_prob = seed % 2 ? 0.3 : 1.0;
    spec.mutual_pairs = seed % 3 == 0;
    Instance inst = RandomInstance(spec);
    ASSERT_EQ(StructuralObstruction(inst), "") << "seed " << seed;
    ASSERT_LE(inst.NumElements(), 14) << "seed " << seed;
  }
}

TEST(GeneratorsTest, RootEdgesRankLast) {
  RandomSpec spec;
  spec.seed = 3;
  spec.agents = 5;
  spec.edge_prob = 0.7;
  Instance inst = RandomInstance(spec);
  for (const Edge& e : inst.edges()) {
    if (e.tail != "r") continue;
    for (int f : inst.ClassOf(inst.AgentOf(e.id))) {
      if (f != e.id) {
        EXPECT_TRUE(inst.Prefers(f, e.id));
      }
    }
  }
}

TEST(GeneratorsTest, MutualPairsRankFirst) {
  RandomSpec spec;
  spec.seed = 8;
  spec.agents = 4;
  spec.mutual_pairs = true;
  Instance inst = RandomInstance(spec);
  int mutual = 0;
  for (const Edge& e : inst.edges()) {
    if (e.tail == "r" || inst.FindEdge(e.head, e.tail) < 0) continue;
    ++mutual;
  }
  EXPECT_GE(mutual, 4);
}

TEST(GeneratorsTest, ColorfulInstancesUseEveryColor) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    RandomSpec spec;
    spec.seed = seed;
    spec.kind = InstanceKind::kColorfulForest;
    spec.agents = 4;
    spec.max_edges = 8;
    spec.preferences = PreferenceModel::kWeak;
    Instance inst = RandomInstance(spec);
    ASSERT_EQ(inst.NumAgents(), 4);
    for (int a = 0; a < 4; ++a) ASSERT_FALSE(inst.ClassOf(a).empty());
    ASSERT_TRUE(inst.AllWeakRankings());
  }
}

TEST(GeneratorsTest, UnknownFixtureThrows) {
  EXPECT_THROW(NamedFixture("a9"), Error);
}

TEST(GadgetTest, VertexCoverOfAnEdge) {
  UndirectedGraph k2{{"x", "y"}, {{"x", "y"}}};
  CostedInstance g = VertexCoverGadget(k2);
  EXPECT_EQ(g.instance.NumAgents(), 7);
  std::set<std::string> costs_seen;
  for (const Cost& c : g.costs) {
    costs_seen.insert(c.infinite ? "inf" : std::to_string(c.value.numerator()));
  }
  EXPECT_EQ(costs_seen, (std::set<std::string>{"0", "1", "inf"}));
  auto pick = BruteMinCostPopular(g.instance, g.costs);
  ASSERT_TRUE(pick.has_value());
  EXPECT_EQ(pick->cost, Rational(1));
}

TEST(GadgetTest, VertexCoverOfAPath) {
  // Minimum vertex cover of a-b-c is {b}.
  UndirectedGraph p3{{"a", "b", "c"}, {{"a", "b"}, {"b", "c"}}};
  CostedInstance g = VertexCoverGadget(p3);
  auto pick = BruteMinCostPopular(g.instance, g.costs);
  ASSERT_TRUE(pick.has_value());
  EXPECT_EQ(pick->cost, Rational(1));
}

TEST(GadgetTest, ExactCoverCandidate) {
  GadgetWithCandidate g =
      ExactCoverGadget({"x", "y", "z"}, {{"x", "y", "z"}, {"x", "y", "z"}, {"x", "y", "z"}}, {0});
  EXPECT_TRUE(IsFeasible(g.instance, g.candidate.elements));
  EXPECT_LE(Margin(g.instance, g.candidate), 2);
}

TEST(GadgetTest, ExactCoverValidation) {
  std::vector<std::vector<std::string>> sets = {{"x", "y", "z"}, {"x", "y", "z"}, {"x", "y", "z"}};
  EXPECT_THROW(ExactCoverGadget({"x", "y", "z"}, {{"x", "y", "z"}}, {0}), Error);
  EXPECT_THROW(ExactCoverGadget({"x", "y", "z"}, sets, {0, 1}), Error);
  EXPECT_THROW(ExactCoverGadget({"x", "y", "z"}, sets, {}), Error);
  EXPECT_THROW(ExactCoverGadget({"x", "y", "z"}, sets, {5}), Error);
}

}  // namespace
}  // namespace popular
