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

#ifndef POPULAR_INSTANCE_HPP_
#define POPULAR_INSTANCE_HPP_

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <boost/rational.hpp>

#include "popular/element_set.hpp"
#include "popular/error.hpp"
#include "popular/matroid.hpp"

namespace popular {

// kArborescence: agents are the non-root vertices and each one owns its
// incoming edges. Without a root the instance asks for branchings.
// kColorfulForest: agents are colors; feasible sets are colorful forests.
// kGeneric: agents are colors; feasible sets are common bases of the color
// partition and the matroid (by default the graphic matroid truncated to the
// number of agents).
enum class InstanceKind { kArborescence, kColorfulForest, kGeneric };

inline const char* KindName(InstanceKind kind) {
  switch (kind) {
    case InstanceKind::kArborescence: return "arborescence";
    case InstanceKind::kColorfulForest: return "colorful_forest";
    case InstanceKind::kGeneric: return "generic";
  }
  return "unknown";
}

struct Edge {
  int id = 0;
  // Empty for elements that are not graph edges.
  std::string tail;
  std::string head;
  std::optional<std::string> color;

  bool HasEndpoints() const { return !tail.empty() || !head.empty(); }
};

class Instance {
 public:
  InstanceKind kind() const { return kind_; }
  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::optional<std::string>& root() const { return root_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<std::string>& agents() const { return agents_; }
  const std::vector<int>& ClassOf(int agent) const { return classes_[agent]; }
  const std::vector<std::vector<int>>& classes() const { return classes_; }
  int AgentOf(int e) const { return agent_of_[e]; }
  const MatroidPtr& matroid() const { return matroid_; }
  const MatroidPtr& partition() const { return partition_; }
  bool custom_matroid() const { return custom_matroid_; }

  int NumElements() const { return static_cast<int>(edges_.size()); }
  int NumAgents() const { return static_cast<int>(agents_.size()); }
  ElementSet Ground() const { return ElementSet::Full(NumElements()); }
  ElementSet EmptySet() const { return ElementSet(NumElements()); }

  // True when feasible sets are common bases; false when they are common
  // independent sets (colorful forests, branchings).
  bool BaseSemantics() const {
    if (kind_ == InstanceKind::kGeneric) return true;
    return kind_ == InstanceKind::kArborescence && root_.has_value();
  }

  // e is strictly preferred to f by their common agent.
  bool Prefers(int e, int f) const { return worse_[e].Contains(f); }
  // Elements f with e preferred to f.
  const ElementSet& WorseThan(int e) const { return worse_[e]; }
  bool IsWeakRanking(int agent) const { return weak_[agent]; }
  bool AllWeakRankings() const {
    for (bool w : weak_) {
      if (!w) return false;
    }
    return true;
  }

  int AgentIndex(const std::string& name) const {
    for (int i = 0; i < NumAgents(); ++i) {
      if (agents_[i] == name) return i;
    }
    return -1;
  }

  // Id of the first edge tail->head, or -1.
  int FindEdge(const std::string& tail, const std::string& head) const {
    for (const Edge& e : edges_) {
      if (e.tail == tail && e.head == head) return e.id;
    }
    return -1;
  }

  std::string Label(int e) const {
    const Edge& edge = edges_[e];
    if (edge.HasEndpoints()) return "(" + edge.tail + "," + edge.head + ")";
    return "#" + std::to_string(e);
  }

 private:
  friend class InstanceBuilder;

  InstanceKind kind_ = InstanceKind::kArborescence;
  std::vector<std::string> vertices_;
  std::optional<std::string> root_;
  std::vector<Edge> edges_;
  std::vector<std::string> agents_;
  std::vector<std::vector<int>> classes_;
  std::vector<int> agent_of_;
  MatroidPtr matroid_;
  MatroidPtr partition_;
  bool custom_matroid_ = false;
  std::vector<ElementSet> worse_;
  std::vector<bool> weak_;
};

class InstanceBuilder {
 public:
  explicit InstanceBuilder(InstanceKind kind) : kind_(kind) {}

  InstanceBuilder& AddVertex(const std::string& name) {
    if (name.empty()) throw Error(ErrorCode::kSchema, "empty vertex name");
    if (vertex_set_.count(name)) {
      throw Error(ErrorCode::kSchema, "duplicate vertex " + name);
    }
    vertex_set_.insert(name);
    vertices_.push_back(name);
    return *this;
  }

  InstanceBuilder& SetRoot(const std::string& name) {
    root_ = name;
    return *this;
  }

  // Declares an agent ahead of the colors seen on edges. Only meaningful for
  // colorful and generic instances.
  InstanceBuilder& AddAgent(const std::string& name) {
    declared_agents_.push_back(name);
    return *this;
  }

  int AddEdge(const std::string& tail, const std::string& head,
              std::optional<std::string> color = std::nullopt) {
    if (tail.empty() || head.empty()) {
      throw Error(ErrorCode::kSchema, "edge endpoints must be named");
    }
    edges_.push_back({static_cast<int>(edges_.size()), tail, head,
                      std::move(color)});
    return edges_.back().id;
  }

  // An element without endpoints, owned by `color`.
  int AddElement(const std::string& color) {
    edges_.push_back({static_cast<int>(edges_.size()), "", "", color});
    return edges_.back().id;
  }

  // Weak ranking for `agent`: every id in an earlier group beats every id in
  // a later group.
  InstanceBuilder& SetRanks(const std::string& agent,
                            const std::vector<std::vector<int>>& groups) {
    std::vector<int> seen;
    for (std::size_t i = 0; i < groups.size(); ++i) {
      for (int e : groups[i]) seen.push_back(e);
      for (std::size_t j = i + 1; j < groups.size(); ++j) {
        for (int better : groups[i]) {
          for (int worse : groups[j]) pairs_.push_back({agent, better, worse});
        }
      }
    }
    std::sort(seen.begin(), seen.end());
    if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) {
      throw Error(ErrorCode::kSchema,
                  "element ranked twice for agent " + agent);
    }
    mentioned_.push_back({agent, seen});
    return *this;
  }

  // Strict ranking from best to worst.
  InstanceBuilder& SetOrder(const std::string& agent,
                            const std::vector<int>& best_first) {
    std::vector<std::vector<int>> groups;
    for (int e : best_first) groups.push_back({e});
    return SetRanks(agent, groups);
  }

  InstanceBuilder& AddDominance(const std::string& agent, int better,
                                int worse) {
    pairs_.push_back({agent, better, worse});
    mentioned_.push_back({agent, {better, worse}});
    return *this;
  }

  InstanceBuilder& SetMatroid(MatroidPtr matroid) {
    matroid_ = std::move(matroid);
    return *this;
  }

  int NumEdges() const { return static_cast<int>(edges_.size()); }

  Instance Build() const {
    Instance inst;
    inst.kind_ = kind_;
    inst.vertices_ = vertices_;
    inst.root_ = root_;
    inst.edges_ = edges_;
    const int m = static_cast<int>(edges_.size());

    std::map<std::string, int> vertex_index;
    for (int v = 0; v < static_cast<int>(vertices_.size()); ++v) {
      vertex_index[vertices_[v]] = v;
    }
    if (root_ && !vertex_index.count(*root_)) {
      throw Error(ErrorCode::kSchema, "root " + *root_ + " is not a vertex");
    }
    for (const Edge& e : edges_) {
      if (!e.HasEndpoints()) continue;
      if (!vertex_index.count(e.tail) || !vertex_index.count(e.head)) {
        throw Error(ErrorCode::kSchema,
                    "edge " + std::to_string(e.id) + " has an unknown endpoint");
      }
    }

    std::map<std::string, int> agent_index;
    auto add_agent = [&](const std::string& name) {
      if (agent_index.count(name)) return;
      agent_index[name] = static_cast<int>(inst.agents_.size());
      inst.agents_.push_back(name);
    };
    if (kind_ == InstanceKind::kArborescence) {
      if (!declared_agents_.empty()) {
        throw Error(ErrorCode::kSchema,
                    "arborescence agents are the non-root vertices");
      }
      for (const std::string& v : vertices_) {
        if (!root_ || v != *root_) add_agent(v);
      }
    } else {
      for (const std::string& a : declared_agents_) {
        if (agent_index.count(a)) {
          throw Error(ErrorCode::kSchema, "duplicate agent " + a);
        }
        add_agent(a);
      }
      for (const Edge& e : edges_) {
        if (!e.color) {
          throw Error(ErrorCode::kSchema,
                      "element " + std::to_string(e.id) + " has no color");
        }
        add_agent(*e.color);
      }
    }

    inst.classes_.assign(inst.agents_.size(), {});
    inst.agent_of_.assign(m, -1);
    for (const Edge& e : edges_) {
      int agent;
      if (kind_ == InstanceKind::kArborescence) {
        if (!e.HasEndpoints()) {
          throw Error(ErrorCode::kSchema, "arborescence elements need endpoints");
        }
        if (root_ && e.head == *root_) {
          throw Error(ErrorCode::kRootIncoming,
                      "edge " + std::to_string(e.id) + " enters the root");
        }
        agent = agent_index.at(e.head);
      } else {
        agent = agent_index.at(*e.color);
      }
      inst.agent_of_[e.id] = agent;
      inst.classes_[agent].push_back(e.id);
    }
    inst.partition_ = PartitionMatroid::FromClasses(m, inst.classes_);

    if (matroid_) {
      if (matroid_->GroundSize() != m) {
        throw Error(ErrorCode::kGroundMismatch,
                    "matroid ground size differs from the element count");
      }
      inst.matroid_ = matroid_;
      inst.custom_matroid_ = true;
    } else {
      std::vector<std::pair<int, int>> endpoints;
      for (const Edge& e : edges_) {
        if (!e.HasEndpoints()) {
          throw Error(ErrorCode::kSchema,
                      "element " + std::to_string(e.id) +
                          " has no endpoints and no matroid was given");
        }
        endpoints.push_back({vertex_index.at(e.tail), vertex_index.at(e.head)});
      }
      MatroidPtr graphic = std::make_shared<GraphicMatroid>(
          static_cast<int>(vertices_.size()), std::move(endpoints));
      if (kind_ == InstanceKind::kGeneric) {
        graphic = Truncate(graphic, inst.NumAgents());
      }
      inst.matroid_ = graphic;
    }

    BuildPreferences(inst, agent_index);
    return inst;
  }

 private:
  struct Pair {
    std::string agent;
    int better;
    int worse;
  };

  void BuildPreferences(Instance& inst,
                        const std::map<std::string, int>& agent_index) const {
    const int m = inst.NumElements();
    auto check = [&](const std::string& agent, int e) {
      auto it = agent_index.find(agent);
      if (it == agent_index.end()) {
        throw Error(ErrorCode::kSchema, "preferences for unknown agent " + agent);
      }
      if (e < 0 || e >= m) {
        throw Error(ErrorCode::kOutOfRange,
                    "preference mentions unknown element " + std::to_string(e));
      }
      if (inst.agent_of_[e] != it->second) {
        throw Error(ErrorCode::kForeignElement,
                    "element " + std::to_string(e) +
                        " does not belong to agent " + agent);
      }
    };
    for (const auto& [agent, ids] : mentioned_) {
      for (int e : ids) check(agent, e);
    }

    inst.worse_.assign(m, ElementSet(m));
    for (const Pair& p : pairs_) inst.worse_[p.better].Insert(p.worse);
    // Transitive closure inside each class.
    for (const std::vector<int>& cls : inst.classes_) {
      for (int k : cls) {
        for (int i : cls) {
          if (inst.worse_[i].Contains(k)) inst.worse_[i] |= inst.worse_[k];
        }
      }
    }
    for (int e = 0; e < m; ++e) {
      if (inst.worse_[e].Contains(e)) {
        throw Error(ErrorCode::kPreferenceCycle,
                    "preferences of agent " + inst.agents_[inst.agent_of_[e]] +
                        " contain a cycle through element " +
                        std::to_string(e));
      }
    }

    inst.weak_.assign(inst.NumAgents(), true);
    for (int a = 0; a < inst.NumAgents(); ++a) {
      const std::vector<int>& cls = inst.classes_[a];
      auto indifferent = [&](int x, int y) {
        return !inst.Prefers(x, y) && !inst.Prefers(y, x);
      };
      for (int x : cls) {
        for (int y : cls) {
          if (!indifferent(x, y)) continue;
          for (int z : cls) {
            if (indifferent(y, z) && !indifferent(x, z)) inst.weak_[a] = false;
          }
        }
      }
    }
  }

  InstanceKind kind_;
  std::vector<std::string> vertices_;
  std::set<std::string> vertex_set_;
  std::optional<std::string> root_;
  std::vector<std::string> declared_agents_;
  std::vector<Edge> edges_;
  std::vector<Pair> pairs_;
  std::vector<std::pair<std::string, std::vector<int>>> mentioned_;
  MatroidPtr matroid_;
};

// A feasible-set candidate together with the induced assignment.
struct Solution {
  ElementSet elements;
  // Element held by each agent, or -1.
  std::vector<int> assignment;

  friend bool operator==(const Solution& a, const Solution& b) {
    return a.elements == b.elements;
  }
};

// Throws if some agent holds two elements.
inline Solution MakeSolution(const Instance& inst, const ElementSet& elements) {
  Solution sol{elements, std::vector<int>(inst.NumAgents(), -1)};
  elements.ForEach([&](int e) {
    int a = inst.AgentOf(e);
    if (sol.assignment[a] != -1) {
      throw Error(ErrorCode::kSchema,
                  "agent " + inst.agents()[a] + " holds two elements");
    }
    sol.assignment[a] = e;
  });
  return sol;
}

inline Solution MakeSolution(const Instance& inst, const std::vector<int>& ids) {
  for (int e : ids) {
    if (e < 0 || e >= inst.NumElements()) {
      throw Error(ErrorCode::kOutOfRange,
                  "solution element " + std::to_string(e) + " out of range");
    }
  }
  return MakeSolution(inst, ElementSet::FromVector(inst.NumElements(), ids));
}

// Common base under base semantics, common independent set otherwise.
inline bool IsFeasible(const Instance& inst, const ElementSet& s) {
  if (!inst.partition()->IsIndependent(s)) return false;
  if (!inst.matroid()->IsIndependent(s)) return false;
  return !inst.BaseSemantics() || s.Size() == inst.NumAgents();
}

// +1 if the agent owning e prefers e to what it holds in `current` (holding
// nothing counts as worse than anything), -1 if it prefers its current
// element, 0 otherwise.
inline int Wt(const Instance& inst, const Solution& current, int e) {
  int held = current.assignment[inst.AgentOf(e)];
  if (held == -1) return 1;
  if (inst.Prefers(e, held)) return 1;
  if (inst.Prefers(held, e)) return -1;
  return 0;
}

// Number of agents preferring x to y.
inline int Phi(const Instance& inst, const Solution& x, const Solution& y) {
  int count = 0;
  for (int a = 0; a < inst.NumAgents(); ++a) {
    int ex = x.assignment[a];
    int ey = y.assignment[a];
    if (ex == -1) continue;
    if (ey == -1 || inst.Prefers(ex, ey)) ++count;
  }
  return count;
}

// phi(x, y) - phi(y, x): positive when x is more popular than y.
inline int Compare(const Instance& inst, const Solution& x, const Solution& y) {
  return Phi(inst, x, y) - Phi(inst, y, x);
}

using Rational = boost::rational<std::int64_t>;

struct Cost {
  bool infinite = false;
  Rational value = 0;
};

using CostMap = std::vector<Cost>;

inline std::optional<Rational> TotalCost(const CostMap& costs,
                                         const ElementSet& s) {
  Rational total = 0;
  for (int e = s.First(); e >= 0; e = s.Next(e)) {
    if (costs[e].infinite) return std::nullopt;
    total += costs[e].value;
  }
  return total;
}

}  // namespace popular

#endif  // POPULAR_INSTANCE_HPP_
