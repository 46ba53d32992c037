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

#ifndef POPULAR_REDUCTIONS_HPP_
#define POPULAR_REDUCTIONS_HPP_

#include <cstdint>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "popular/element_set.hpp"
#include "popular/error.hpp"
#include "popular/instance.hpp"
#include "popular/intersection.hpp"
#include "popular/matroid.hpp"
#include "popular/solver.hpp"

namespace popular {

// Links an instance to the auxiliary instance built from it. Original
// element e becomes forward[e]; dummies[a] is the worst-ranked dummy element
// added for original agent a, or -1.
struct ReductionMap {
  std::vector<int> forward;
  std::vector<int> dummies;
  // Auxiliary element -> original element, or -1 for dummies.
  std::vector<int> backward;
  // Extra agents added by the category reduction, with their two elements.
  std::vector<std::pair<int, int>> dummy_agent_elements;
  // For each category, the indices into dummy_agent_elements it owns.
  std::vector<std::vector<int>> category_dummy_agents;
  std::vector<std::vector<int>> categories;
  std::vector<std::pair<int, int>> bounds;
};

struct Reduced {
  Instance instance;
  ReductionMap map;
};

// Original solution induced by an auxiliary solution.
inline Solution Project(const Instance& original, const ReductionMap& map,
                        const ElementSet& aux) {
  ElementSet out = original.EmptySet();
  aux.ForEach([&](int x) {
    if (map.backward[x] >= 0) out.Insert(map.backward[x]);
  });
  return MakeSolution(original, out);
}

// Auxiliary solution of a common independent set: every agent left without
// an element takes its dummy. For category reductions the dummy agents are
// filled so that each category uses exactly its quota.
inline Solution Lift(const Instance& original, const Instance& aux,
                     const ReductionMap& map, const Solution& sol) {
  ElementSet out = aux.EmptySet();
  sol.elements.ForEach([&](int e) { out.Insert(map.forward[e]); });
  for (int a = 0; a < original.NumAgents(); ++a) {
    if (sol.assignment[a] == -1 && map.dummies[a] >= 0) {
      out.Insert(map.dummies[a]);
    }
  }
  for (std::size_t k = 0; k < map.categories.size(); ++k) {
    int used = 0;
    for (int a : map.categories[k]) used += sol.assignment[a] == -1 ? 0 : 1;
    int f_count = used - map.bounds[k].first;
    const std::vector<int>& dummy_agents = map.category_dummy_agents[k];
    for (int j = 0; j < static_cast<int>(dummy_agents.size()); ++j) {
      const auto& [f, g] = map.dummy_agent_elements[dummy_agents[j]];
      out.Insert(j < f_count ? f : g);
    }
  }
  return MakeSolution(aux, out);
}

namespace internal {

inline std::string FreshName(const std::string& base,
                             const std::set<std::string>& taken) {
  std::string name = base;
  while (taken.count(name)) name += "'";
  return name;
}

inline void CopyPreferences(InstanceBuilder& b, const Instance& inst,
                            const ReductionMap& map) {
  for (int e = 0; e < inst.NumElements(); ++e) {
    const std::string& agent = inst.agents()[inst.AgentOf(e)];
    inst.WorseThan(e).ForEach(
        [&](int f) { b.AddDominance(agent, map.forward[e], map.forward[f]); });
  }
}

// Every original element of agent a beats its dummy.
inline void DummyWorst(InstanceBuilder& b, const Instance& inst,
                       const ReductionMap& map) {
  for (int a = 0; a < inst.NumAgents(); ++a) {
    for (int e : inst.ClassOf(a)) {
      b.AddDominance(inst.agents()[a], map.forward[e], map.dummies[a]);
    }
  }
}

inline ReductionMap IdentityPrefix(const Instance& inst) {
  ReductionMap map;
  for (int e = 0; e < inst.NumElements(); ++e) {
    map.forward.push_back(e);
    map.backward.push_back(e);
  }
  map.dummies.assign(inst.NumAgents(), -1);
  return map;
}

// Copies the original elements as colored elements of a generic instance,
// keeping endpoints for readability.
inline void CopyElementsColored(InstanceBuilder& b, const Instance& inst) {
  for (const std::string& v : inst.vertices()) b.AddVertex(v);
  for (const std::string& a : inst.agents()) b.AddAgent(a);
  for (const Edge& e : inst.edges()) {
    const std::string& color = inst.agents()[inst.AgentOf(e.id)];
    if (e.HasEndpoints()) {
      b.AddEdge(e.tail, e.head, color);
    } else {
      b.AddElement(color);
    }
  }
}

}  // namespace internal

// Adds a root with an edge to every vertex, ranked below all of its other
// incoming edges.
inline Reduced BranchingToArborescence(const Instance& inst) {
  if (inst.kind() != InstanceKind::kArborescence || inst.root()) {
    throw Error(ErrorCode::kSchema, "expected a rootless digraph instance");
  }
  std::set<std::string> taken(inst.vertices().begin(), inst.vertices().end());
  const std::string root = internal::FreshName("r", taken);
  InstanceBuilder b(InstanceKind::kArborescence);
  b.AddVertex(root).SetRoot(root);
  for (const std::string& v : inst.vertices()) b.AddVertex(v);
  for (const Edge& e : inst.edges()) b.AddEdge(e.tail, e.head);
  ReductionMap map = internal::IdentityPrefix(inst);
  for (int a = 0; a < inst.NumAgents(); ++a) {
    map.dummies[a] = b.AddEdge(root, inst.agents()[a]);
    map.backward.push_back(-1);
  }
  internal::CopyPreferences(b, inst, map);
  internal::DummyWorst(b, inst, map);
  return {b.Build(), map};
}

// Colorful forests of H become colorful bases: one dummy edge on two fresh
// vertices per color, graphic matroid of the enlarged graph truncated to the
// number of colors.
inline Reduced ColorfulToBase(const Instance& inst) {
  if (inst.kind() != InstanceKind::kColorfulForest) {
    throw Error(ErrorCode::kSchema, "expected a colorful forest instance");
  }
  std::set<std::string> taken(inst.vertices().begin(), inst.vertices().end());
  InstanceBuilder b(InstanceKind::kGeneric);
  internal::CopyElementsColored(b, inst);
  ReductionMap map = internal::IdentityPrefix(inst);
  for (int a = 0; a < inst.NumAgents(); ++a) {
    std::string u = internal::FreshName("u_" + inst.agents()[a], taken);
    taken.insert(u);
    std::string v = internal::FreshName("v_" + inst.agents()[a], taken);
    taken.insert(v);
    b.AddVertex(u).AddVertex(v);
    map.dummies[a] = b.AddEdge(u, v, inst.agents()[a]);
    map.backward.push_back(-1);
  }
  internal::CopyPreferences(b, inst, map);
  internal::DummyWorst(b, inst, map);
  return {b.Build(), map};
}

// Common independent sets of any instance become common bases: one free
// dummy per agent, direct sum truncated to the number of agents.
inline Reduced CommonIndependentToBase(const Instance& inst) {
  const int n = inst.NumAgents();
  InstanceBuilder b(InstanceKind::kGeneric);
  internal::CopyElementsColored(b, inst);
  ReductionMap map = internal::IdentityPrefix(inst);
  for (int a = 0; a < n; ++a) {
    map.dummies[a] = b.AddElement(inst.agents()[a]);
    map.backward.push_back(-1);
  }
  b.SetMatroid(Truncate(DirectSumMatroid::Concat({inst.matroid(), MakeFree(n)}), n));
  internal::CopyPreferences(b, inst, map);
  internal::DummyWorst(b, inst, map);
  return {b.Build(), map};
}

// Common independent sets I with lo <= |I| <= hi become common bases.
inline Reduced WithSizeWindow(const Instance& inst, int lo, int hi) {
  const int n = inst.NumAgents();
  if (lo < 0 || lo > hi) {
    throw Error(ErrorCode::kSchema, "size window needs 0 <= lo <= hi");
  }
  if (inst.matroid()->FullRank() < lo || lo > n) {
    throw Error(ErrorCode::kStructurallyInfeasible,
                "no common independent set can reach the lower size bound");
  }
  InstanceBuilder b(InstanceKind::kGeneric);
  internal::CopyElementsColored(b, inst);
  ReductionMap map = internal::IdentityPrefix(inst);
  for (int a = 0; a < n; ++a) {
    map.dummies[a] = b.AddElement(inst.agents()[a]);
    map.backward.push_back(-1);
  }
  MatroidPtr inner = Truncate(inst.matroid(), hi);
  MatroidPtr dummies = std::make_shared<UniformMatroid>(n, n - lo);
  b.SetMatroid(Truncate(DirectSumMatroid::Concat({inner, dummies}), n));
  internal::CopyPreferences(b, inst, map);
  internal::DummyWorst(b, inst, map);
  return {b.Build(), map};
}

// Admissible common independent sets (between lo_k and hi_k elements held by
// the agents of category k) become common bases. Each agent gets a worst
// dummy e_i; each category gets hi_k - lo_k dummy agents owning two tied
// elements f_j, g_j. The e_i and f_j of a category form a uniform matroid of
// rank |P_k| - lo_k; the originals and all g_j form the original matroid plus
// free elements, truncated to the sum of the hi_k.
inline Reduced WithCategories(const Instance& inst,
                              const std::vector<std::vector<int>>& categories,
                              const std::vector<std::pair<int, int>>& bounds) {
  const int n = inst.NumAgents();
  if (categories.size() != bounds.size()) {
    throw Error(ErrorCode::kSchema, "one bound pair per category");
  }
  std::vector<int> seen(n, 0);
  for (const auto& cat : categories) {
    for (int a : cat) {
      if (a < 0 || a >= n) throw Error(ErrorCode::kOutOfRange, "unknown agent");
      ++seen[a];
    }
  }
  for (int a = 0; a < n; ++a) {
    if (seen[a] != 1) {
      throw Error(ErrorCode::kSchema, "categories must partition the agents");
    }
  }
  int sum_lo = 0;
  int sum_hi = 0;
  for (std::size_t k = 0; k < categories.size(); ++k) {
    const auto& [lo, hi] = bounds[k];
    if (lo < 0 || lo > hi) {
      throw Error(ErrorCode::kSchema, "category bounds need 0 <= lo <= hi");
    }
    if (lo > static_cast<int>(categories[k].size())) {
      throw Error(ErrorCode::kStructurallyInfeasible,
                  "category lower bound exceeds its size");
    }
    sum_lo += lo;
    sum_hi += hi;
  }
  if (inst.matroid()->FullRank() < sum_lo) {
    throw Error(ErrorCode::kStructurallyInfeasible,
                "matroid rank is below the sum of lower bounds");
  }

  std::set<std::string> taken(inst.agents().begin(), inst.agents().end());
  InstanceBuilder b(InstanceKind::kGeneric);
  internal::CopyElementsColored(b, inst);
  ReductionMap map = internal::IdentityPrefix(inst);
  map.categories = categories;
  map.bounds = bounds;
  for (int a = 0; a < n; ++a) {
    map.dummies[a] = b.AddElement(inst.agents()[a]);
    map.backward.push_back(-1);
  }
  std::vector<std::string> dummy_names;
  std::vector<int> g_ids;
  for (std::size_t k = 0; k < categories.size(); ++k) {
    map.category_dummy_agents.emplace_back();
    for (int j = 0; j < bounds[k].second - bounds[k].first; ++j) {
      std::string name = internal::FreshName(
          "k" + std::to_string(k) + "_" + std::to_string(j), taken);
      taken.insert(name);
      b.AddAgent(name);
      int f = b.AddElement(name);
      int g = b.AddElement(name);
      map.backward.push_back(-1);
      map.backward.push_back(-1);
      map.category_dummy_agents.back().push_back(
          static_cast<int>(map.dummy_agent_elements.size()));
      map.dummy_agent_elements.push_back({f, g});
      g_ids.push_back(g);
    }
  }
  const int total = b.NumEdges();

  std::vector<int> main_elements;
  for (int e = 0; e < inst.NumElements(); ++e) main_elements.push_back(e);
  main_elements.insert(main_elements.end(), g_ids.begin(), g_ids.end());
  std::vector<DirectSumMatroid::Part> parts;
  parts.push_back(
      {Truncate(DirectSumMatroid::Concat(
                    {inst.matroid(), MakeFree(static_cast<int>(g_ids.size()))}),
                sum_hi),
       main_elements});
  for (std::size_t k = 0; k < categories.size(); ++k) {
    std::vector<int> f_block;
    for (int a : categories[k]) f_block.push_back(map.dummies[a]);
    for (int d : map.category_dummy_agents[k]) {
      f_block.push_back(map.dummy_agent_elements[d].first);
    }
    int rank = static_cast<int>(categories[k].size()) - bounds[k].first;
    parts.push_back({std::make_shared<UniformMatroid>(
                         static_cast<int>(f_block.size()), rank),
                     f_block});
  }
  b.SetMatroid(std::make_shared<DirectSumMatroid>(total, std::move(parts)));
  internal::CopyPreferences(b, inst, map);
  internal::DummyWorst(b, inst, map);
  return {b.Build(), map};
}

// Solve for any instance: common-base instances directly, colorful forests,
// branchings and other common-independent-set instances through their
// auxiliary instance.
struct ReducedSolve {
  SolveResult result;
  // Set when the instance was reduced first.
  std::optional<Reduced> reduced;
  std::optional<Solution> projected;
};

inline Reduced ReduceToBase(const Instance& inst) {
  if (inst.kind() == InstanceKind::kColorfulForest) return ColorfulToBase(inst);
  if (inst.kind() == InstanceKind::kArborescence && !inst.root()) {
    return BranchingToArborescence(inst);
  }
  return CommonIndependentToBase(inst);
}

inline ReducedSolve SolveAny(const Instance& inst, const ElementSet& forced,
                             const ElementSet& forbidden) {
  ReducedSolve out;
  if (inst.BaseSemantics()) {
    out.result = SolveForcedForbidden(inst, forced, forbidden);
    out.projected = out.result.solution;
    return out;
  }
  out.reduced = ReduceToBase(inst);
  const Reduced& r = *out.reduced;
  auto map_set = [&](const ElementSet& s) {
    ElementSet m = r.instance.EmptySet();
    s.ForEach([&](int e) { m.Insert(r.map.forward[e]); });
    return m;
  };
  out.result =
      SolveForcedForbidden(r.instance, map_set(forced), map_set(forbidden));
  if (out.result.solution) {
    out.projected = Project(inst, r.map, out.result.solution->elements);
  }
  return out;
}

inline ReducedSolve SolveAny(const Instance& inst) {
  return SolveAny(inst, inst.EmptySet(), inst.EmptySet());
}

// Unpopularity margin under either semantics.
inline std::int64_t PopularityMargin(const Instance& inst, const Solution& sol) {
  if (inst.BaseSemantics()) return Margin(inst, sol);
  if (!IsFeasible(inst, sol.elements)) {
    throw Error(ErrorCode::kSchema, "margin of an infeasible solution");
  }
  Reduced r = ReduceToBase(inst);
  return Margin(r.instance, Lift(inst, r.instance, r.map, sol));
}

struct MinCostResult {
  Status status = Status::kNoPopular;
  std::optional<Solution> forest;
  Rational cost = 0;
  Chain certificate;
  std::string reason;
};

// Cheapest popular colorful forest under weak rankings. Infinite-cost
// elements are never used.
inline MinCostResult MinCostPopularColorfulForest(const Instance& inst,
                                                  const CostMap& costs) {
  if (inst.kind() != InstanceKind::kColorfulForest) {
    throw Error(ErrorCode::kSchema, "expected a colorful forest instance");
  }
  if (!inst.AllWeakRankings()) {
    throw Error(ErrorCode::kNotWeakRanking,
                "min-cost popular forests need weak rankings for every color");
  }
  if (static_cast<int>(costs.size()) != inst.NumElements()) {
    throw Error(ErrorCode::kSchema, "one cost per element required");
  }
  Reduced r = ColorfulToBase(inst);
  const Instance& aux = r.instance;
  SolveResult solved = Solve(aux);
  MinCostResult out;
  out.status = solved.status;
  out.reason = solved.reason;
  if (solved.status != Status::kPopular) return out;
  out.certificate = solved.certificate;
  if (solved.certificate.size() > 2) {
    throw std::logic_error("auxiliary certificate longer than two sets");
  }

  ElementSet allowed = CandidateElements(aux, solved.certificate);
  std::vector<Rational> weight(aux.NumElements(), Rational(0));
  for (int e = 0; e < inst.NumElements(); ++e) {
    if (costs[e].infinite) {
      allowed.Erase(r.map.forward[e]);
    } else {
      weight[r.map.forward[e]] = -costs[e].value;
    }
  }
  MatroidPtr face = aux.matroid();
  if (solved.certificate.size() == 2) {
    const ElementSet& c = solved.certificate.front();
    face = std::make_shared<DirectSumMatroid>(
        aux.NumElements(),
        std::vector<DirectSumMatroid::Part>{
            {Restrict(aux.matroid(), c), c.ToVector()},
            {Contract(aux.matroid(), c), c.Complement().ToVector()}});
  }
  auto best = MaxWeightCommonBase<Rational>(*aux.partition(), *face, weight,
                                            Rational(0), allowed);
  if (!best || best->set.Size() < inst.NumAgents()) {
    out.status = Status::kNoPopular;
    out.reason = "every popular forest uses an element of infinite cost";
    return out;
  }
  out.forest = Project(inst, r.map, best->set);
  out.cost = -best->weight;
  return out;
}

}  // namespace popular

#endif  // POPULAR_REDUCTIONS_HPP_
