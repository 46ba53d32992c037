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

#ifndef POPULAR_ORACLE_HPP_
#define POPULAR_ORACLE_HPP_

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "popular/element_set.hpp"
#include "popular/error.hpp"
#include "popular/instance.hpp"

namespace popular {

inline constexpr std::uint64_t kDefaultBruteLimit = 1000000;

// Upper bound on enumerated sets; POPOLO_BRUTE_LIMIT overrides the default.
inline std::uint64_t BruteLimit() {
  if (const char* env = std::getenv("POPOLO_BRUTE_LIMIT")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return kDefaultBruteLimit;
}

// Product over agents of the number of choices each one has.
inline double EnumerationBound(const Instance& inst) {
  double bound = 1;
  const int extra = inst.BaseSemantics() ? 0 : 1;
  for (const auto& cls : inst.classes()) {
    bound *= static_cast<double>(cls.size() + extra);
  }
  return bound;
}

namespace internal {

inline void CheckDeskScale(const Instance& inst, std::uint64_t limit) {
  if (EnumerationBound(inst) > static_cast<double>(limit)) {
    throw Error(ErrorCode::kDeskScaleExceeded,
                "enumeration bound exceeds the limit of " +
                    std::to_string(limit));
  }
}

inline void SortCanonical(std::vector<Solution>& sols) {
  std::sort(sols.begin(), sols.end(), [](const Solution& a, const Solution& b) {
    return a.elements.ToVector() < b.elements.ToVector();
  });
}

}  // namespace internal

// Every feasible set (common base, or common independent set for forest and
// branching instances) exactly once, by backtracking over agents.
inline std::vector<Solution> EnumerateFeasible(
    const Instance& inst, std::uint64_t limit = BruteLimit()) {
  internal::CheckDeskScale(inst, limit);
  const bool base = inst.BaseSemantics();
  const Matroid& m = *inst.matroid();
  std::vector<Solution> out;
  ElementSet current = inst.EmptySet();
  auto recurse = [&](auto&& self, int agent) -> void {
    if (agent == inst.NumAgents()) {
      if (!base || m.IsIndependent(current)) {
        out.push_back(MakeSolution(inst, current));
      }
      return;
    }
    if (!base) self(self, agent + 1);
    for (int e : inst.ClassOf(agent)) {
      current.Insert(e);
      if (m.IsIndependent(current)) self(self, agent + 1);
      current.Erase(e);
    }
  };
  recurse(recurse, 0);
  internal::SortCanonical(out);
  return out;
}

// Same family by an include/exclude search over element ids.
inline std::vector<Solution> EnumerateFeasibleByElements(
    const Instance& inst, std::uint64_t limit = BruteLimit()) {
  internal::CheckDeskScale(inst, limit);
  const Matroid& m = *inst.matroid();
  const Matroid& p = *inst.partition();
  std::vector<Solution> out;
  ElementSet current = inst.EmptySet();
  auto recurse = [&](auto&& self, int e) -> void {
    if (e == inst.NumElements()) {
      if (IsFeasible(inst, current)) out.push_back(MakeSolution(inst, current));
      return;
    }
    self(self, e + 1);
    current.Insert(e);
    if (p.IsIndependent(current) && m.IsIndependent(current)) self(self, e + 1);
    current.Erase(e);
  };
  recurse(recurse, 0);
  internal::SortCanonical(out);
  return out;
}

// max over feasible B of phi(B, sol) - phi(sol, B), by direct comparison.
inline int BruteMargin(const Instance& inst, const Solution& sol,
                       const std::vector<Solution>& all) {
  int best = 0;
  for (const Solution& other : all) best = std::max(best, Compare(inst, other, sol));
  return best;
}

inline bool BruteIsPopular(const Instance& inst, const Solution& sol,
                           const std::vector<Solution>& all) {
  for (const Solution& other : all) {
    if (Compare(inst, other, sol) > 0) return false;
  }
  return true;
}

inline std::vector<Solution> BrutePopular(const Instance& inst,
                                          const std::vector<Solution>& all) {
  std::vector<Solution> out;
  for (const Solution& s : all) {
    if (BruteIsPopular(inst, s, all)) out.push_back(s);
  }
  return out;
}

inline std::vector<Solution> BrutePopular(const Instance& inst) {
  return BrutePopular(inst, EnumerateFeasible(inst));
}

struct MarginPick {
  Solution solution;
  int margin = 0;
};

inline std::optional<MarginPick> BruteMinMargin(const Instance& inst) {
  std::vector<Solution> all = EnumerateFeasible(inst);
  std::optional<MarginPick> best;
  for (const Solution& s : all) {
    int mu = BruteMargin(inst, s, all);
    if (!best || mu < best->margin) best = MarginPick{s, mu};
  }
  return best;
}

struct CostPick {
  Solution solution;
  Rational cost = 0;
};

// Cheapest popular feasible set of finite cost.
inline std::optional<CostPick> BruteMinCostPopular(const Instance& inst,
                                                   const CostMap& costs) {
  if (static_cast<int>(costs.size()) != inst.NumElements()) {
    throw Error(ErrorCode::kSchema, "one cost per element required");
  }
  std::vector<Solution> all = EnumerateFeasible(inst);
  std::vector<CostPick> finite;
  for (const Solution& s : all) {
    if (auto c = TotalCost(costs, s.elements)) finite.push_back({s, *c});
  }
  std::stable_sort(finite.begin(), finite.end(),
                   [](const CostPick& a, const CostPick& b) {
                     return a.cost < b.cost;
                   });
  for (const CostPick& pick : finite) {
    if (BruteIsPopular(inst, pick.solution, all)) return pick;
  }
  return std::nullopt;
}

}  // namespace popular

#endif  // POPULAR_ORACLE_HPP_
