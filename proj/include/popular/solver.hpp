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

#ifndef POPULAR_SOLVER_HPP_
#define POPULAR_SOLVER_HPP_

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "popular/element_set.hpp"
#include "popular/error.hpp"
#include "popular/instance.hpp"
#include "popular/intersection.hpp"

namespace popular {

// A multichain C_1 <= C_2 <= ... <= C_p of element sets.
using Chain = std::vector<ElementSet>;

// levels[e] is the first 1-based index i with e in C_i, or 0 if e lies in no
// set of the chain.
inline std::vector<int> Levels(const Chain& chain, int ground_size) {
  std::vector<int> level(ground_size, 0);
  for (int i = static_cast<int>(chain.size()) - 1; i >= 0; --i) {
    chain[i].ForEach([&](int e) { level[e] = i + 1; });
  }
  return level;
}

// Elements an agent may take while the chain stays a dual witness: its
// undominated elements on its deepest level, plus undominated elements one
// level up that beat everything on the deepest level. Every element must
// lie in the chain.
inline ElementSet CandidateElements(const Instance& inst, const Chain& chain) {
  const std::vector<int> level = Levels(chain, inst.NumElements());
  ElementSet out = inst.EmptySet();
  for (int a = 0; a < inst.NumAgents(); ++a) {
    const std::vector<int>& cls = inst.ClassOf(a);
    int top = 0;
    for (int e : cls) top = std::max(top, level[e]);
    for (int e : cls) {
      if (level[e] != top && level[e] != top - 1) continue;
      bool dominated = false;
      for (int f : cls) {
        if (level[f] == level[e] && inst.Prefers(f, e)) dominated = true;
      }
      if (dominated) continue;
      if (level[e] == top) {
        out.Insert(e);
        continue;
      }
      bool beats_top = true;
      for (int f : cls) {
        if (level[f] == top && !inst.Prefers(e, f)) beats_top = false;
      }
      if (beats_top) out.Insert(e);
    }
  }
  return out;
}

// Drops repeated sets and the empty set.
inline Chain PruneChain(const Chain& chain) {
  Chain out;
  for (const ElementSet& s : chain) {
    if (s.Empty()) continue;
    if (!out.empty() && out.back() == s) continue;
    out.push_back(s);
  }
  return out;
}

struct TraceStep {
  Chain chain;
  ElementSet candidates;
  ElementSet chosen;
  // 1-based index of the first deficient set, 0 if none.
  int deficient = 0;
};

struct SolveTrace {
  std::vector<TraceStep> steps;
  Chain final_chain;
};

enum class Status { kPopular, kNoPopular, kStructurallyInfeasible };

inline const char* StatusName(Status s) {
  switch (s) {
    case Status::kPopular: return "popular";
    case Status::kNoPopular: return "no_popular";
    case Status::kStructurallyInfeasible: return "structurally_infeasible";
  }
  return "unknown";
}

struct SolveResult {
  Status status = Status::kNoPopular;
  std::optional<Solution> solution;
  // Pruned final chain; a dual certificate when status is kPopular.
  Chain certificate;
  SolveTrace trace;
  // The final multichain had repeated or empty sets.
  bool chain_pruned = false;
  std::string reason;
};

// Reason the instance has no common base at all, or empty.
inline std::string StructuralObstruction(const Instance& inst) {
  for (int a = 0; a < inst.NumAgents(); ++a) {
    if (inst.ClassOf(a).empty()) {
      return "agent " + inst.agents()[a] + " owns no element";
    }
  }
  const int n = inst.NumAgents();
  if (inst.matroid()->FullRank() != n) {
    return "matroid rank " + std::to_string(inst.matroid()->FullRank()) +
           " differs from the agent count " + std::to_string(n);
  }
  if (MaxCommonIndependent(*inst.partition(), *inst.matroid()).Size() < n) {
    return "no common base exists";
  }
  return "";
}

// Popular common base avoiding `forbidden`, or a proof-carrying failure.
inline SolveResult SolveForbidden(const Instance& inst,
                                  const ElementSet& forbidden) {
  if (!inst.BaseSemantics()) {
    throw Error(ErrorCode::kSchema,
                "solver needs a common-base instance; reduce it first");
  }
  SolveResult result;
  if (std::string why = StructuralObstruction(inst); !why.empty()) {
    result.status = Status::kStructurallyInfeasible;
    result.reason = why;
    return result;
  }
  const int n = inst.NumAgents();
  const ElementSet ground = inst.Ground();
  if (n == 0) {
    result.status = Status::kPopular;
    result.solution = MakeSolution(inst, inst.EmptySet());
    return result;
  }

  const Matroid& m = *inst.matroid();
  Chain chain{ground};
  const int max_steps = (n + 1) * (n + 1);
  while (static_cast<int>(chain.size()) <= n) {
    if (static_cast<int>(result.trace.steps.size()) >= max_steps) {
      throw std::logic_error("chain iteration bound exceeded");
    }
    TraceStep step;
    step.chain = chain;
    step.candidates = CandidateElements(inst, chain) - forbidden;
    const std::vector<int> level = Levels(chain, inst.NumElements());
    step.chosen = LexMaxCommonIndependent(*inst.partition(), m, level,
                                          static_cast<int>(chain.size()),
                                          step.candidates);
    for (int i = 0; i < static_cast<int>(chain.size()); ++i) {
      if ((step.chosen & chain[i]).Size() < m.Rank(chain[i])) {
        step.deficient = i + 1;
        break;
      }
    }
    result.trace.steps.push_back(step);
    if (step.deficient == 0) {
      result.status = Status::kPopular;
      result.solution = MakeSolution(inst, step.chosen);
      break;
    }
    const int k = step.deficient - 1;
    chain[k] = m.Span(step.chosen & chain[k]);
    if (k + 1 == static_cast<int>(chain.size())) chain.push_back(ground);
  }
  if (result.status != Status::kPopular) {
    result.status = Status::kNoPopular;
    result.reason = "chain length exceeded the number of agents";
  }
  result.trace.final_chain = chain;
  result.certificate = PruneChain(chain);
  result.chain_pruned = result.certificate.size() != chain.size();
  return result;
}

inline SolveResult Solve(const Instance& inst) {
  return SolveForbidden(inst, inst.EmptySet());
}

// Popular common base containing `forced` and avoiding `forbidden`.
inline SolveResult SolveForcedForbidden(const Instance& inst,
                                        const ElementSet& forced,
                                        const ElementSet& forbidden) {
  SolveResult early;
  early.status = Status::kNoPopular;
  if (forced.Intersects(forbidden)) {
    early.reason = "an element is both forced and forbidden";
    return early;
  }
  ElementSet excluded = forbidden;
  std::vector<int> count(inst.NumAgents(), 0);
  forced.ForEach([&](int e) { ++count[inst.AgentOf(e)]; });
  for (int a = 0; a < inst.NumAgents(); ++a) {
    if (count[a] > 1) {
      early.reason = "two forced elements share agent " + inst.agents()[a];
      return early;
    }
    if (count[a] == 1) {
      for (int e : inst.ClassOf(a)) {
        if (!forced.Contains(e)) excluded.Insert(e);
      }
    }
  }
  return SolveForbidden(inst, excluded);
}

enum class EdgeClass { kInAllPopular, kInSomePopular, kInNoPopular };

inline const char* EdgeClassName(EdgeClass c) {
  switch (c) {
    case EdgeClass::kInAllPopular: return "in_all_popular";
    case EdgeClass::kInSomePopular: return "in_some_popular";
    case EdgeClass::kInNoPopular: return "in_no_popular";
  }
  return "unknown";
}

// Status of every element across all popular common bases. Empty when the
// instance has none.
inline std::optional<std::vector<EdgeClass>> ClassifyEdges(
    const Instance& inst) {
  if (Solve(inst).status != Status::kPopular) return std::nullopt;
  std::vector<EdgeClass> out(inst.NumElements());
  for (int e = 0; e < inst.NumElements(); ++e) {
    ElementSet single = inst.EmptySet().With(e);
    if (SolveForcedForbidden(inst, single, inst.EmptySet()).status !=
        Status::kPopular) {
      out[e] = EdgeClass::kInNoPopular;
    } else if (SolveForbidden(inst, single).status != Status::kPopular) {
      out[e] = EdgeClass::kInAllPopular;
    } else {
      out[e] = EdgeClass::kInSomePopular;
    }
  }
  return out;
}

struct CertificateCheck {
  bool valid = false;
  std::string reason;
};

// Checks that `chain` witnesses popularity of `sol`: it is a strictly
// increasing chain of nonempty sets ending at the ground set, sol is a common
// base inside the candidate set of the chain, and sol spans every set.
inline CertificateCheck VerifyCertificate(const Instance& inst,
                                          const Solution& sol,
                                          const Chain& chain) {
  const ElementSet ground = inst.Ground();
  if (!IsFeasible(inst, sol.elements)) {
    return {false, "solution is not a common base"};
  }
  if (chain.empty()) {
    if (ground.Empty()) return {true, ""};
    return {false, "empty chain"};
  }
  for (std::size_t i = 0; i < chain.size(); ++i) {
    if (chain[i].GroundSize() != ground.GroundSize()) {
      return {false, "chain set over the wrong ground set"};
    }
    if (chain[i].Empty()) return {false, "chain contains the empty set"};
    if (i > 0 && !chain[i - 1].IsProperSubsetOf(chain[i])) {
      return {false, "chain is not strictly increasing at position " +
                         std::to_string(i + 1)};
    }
  }
  if (!(chain.back() == ground)) {
    return {false, "chain does not end at the ground set"};
  }
  if (!sol.elements.IsSubsetOf(CandidateElements(inst, chain))) {
    return {false, "solution uses an element outside the candidate set"};
  }
  for (std::size_t i = 0; i < chain.size(); ++i) {
    if (!(inst.matroid()->Span(sol.elements & chain[i]) == chain[i])) {
      return {false, "solution does not span chain set " +
                         std::to_string(i + 1)};
    }
  }
  return {true, ""};
}

struct DualSolution {
  // One entry per chain set, all 1.
  std::vector<int> y;
  std::vector<std::int64_t> alpha;
  std::int64_t objective = 0;
  bool rows_hold = true;
  // First violated row, if any.
  int violated_agent = -1;
  int violated_element = -1;
};

// Dual solution read off a chain: y = 1 on every chain set and alpha_v minus
// the number of chain sets holding the element of agent v.
inline DualSolution ExtractDual(const Instance& inst, const Solution& sol,
                                const Chain& chain) {
  DualSolution dual;
  dual.y.assign(chain.size(), 1);
  dual.alpha.assign(inst.NumAgents(), 0);
  auto covering = [&](int e) {
    std::int64_t c = 0;
    for (const ElementSet& s : chain) c += s.Contains(e) ? 1 : 0;
    return c;
  };
  for (const ElementSet& s : chain) dual.objective += inst.matroid()->Rank(s);
  for (int a = 0; a < inst.NumAgents(); ++a) {
    int held = sol.assignment[a];
    if (held != -1) dual.alpha[a] = -covering(held);
    dual.objective += dual.alpha[a];
  }
  for (int a = 0; a < inst.NumAgents() && dual.rows_hold; ++a) {
    for (int e : inst.ClassOf(a)) {
      if (covering(e) + dual.alpha[a] < Wt(inst, sol, e)) {
        dual.rows_hold = false;
        dual.violated_agent = a;
        dual.violated_element = e;
        break;
      }
    }
  }
  return dual;
}

// Maximum of phi(B, sol) - phi(sol, B) over common bases B.
inline std::int64_t Margin(const Instance& inst, const Solution& sol) {
  if (!inst.BaseSemantics()) {
    throw Error(ErrorCode::kSchema, "margin needs a common-base instance");
  }
  if (!IsFeasible(inst, sol.elements)) {
    throw Error(ErrorCode::kSchema, "margin of an infeasible solution");
  }
  std::vector<std::int64_t> w(inst.NumElements());
  for (int e = 0; e < inst.NumElements(); ++e) w[e] = Wt(inst, sol, e);
  auto best = MaxWeightCommonBase(*inst.partition(), *inst.matroid(), w);
  if (!best) throw Error(ErrorCode::kNoCommonBase, "no common base");
  return best->weight;
}

}  // namespace popular

#endif  // POPULAR_SOLVER_HPP_
