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

#ifndef POPULAR_GENERATORS_HPP_
#define POPULAR_GENERATORS_HPP_

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "popular/error.hpp"
#include "popular/instance.hpp"

namespace popular {

// Deterministic draws on top of mt19937_64; the standard distributions are
// implementation-defined, these are not.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Uniform in [0, n).
  int Below(int n) { return static_cast<int>(engine_() % static_cast<std::uint64_t>(n)); }
  // Uniform in [lo, hi].
  int Between(int lo, int hi) { return lo + Below(hi - lo + 1); }
  bool Coin(double p) {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53 < p;
  }
  template <typename T>
  void Shuffle(std::vector<T>& v) {
    for (int i = static_cast<int>(v.size()) - 1; i > 0; --i) {
      std::swap(v[i], v[Below(i + 1)]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

enum class PreferenceModel { kWeak, kPartial, kMixed };

struct RandomSpec {
  std::uint64_t seed = 0;
  InstanceKind kind = InstanceKind::kArborescence;
  // Agents for arborescence and generic instances, colors for colorful ones.
  int agents = 4;
  // Vertices besides the root; defaults to `agents` for arborescences and
  // agents + 1 otherwise.
  int vertices = 0;
  int max_edges = 12;
  double edge_prob = 0.4;
  PreferenceModel preferences = PreferenceModel::kMixed;
  // Number of indifference groups available to a weak ranking.
  int weak_levels = 3;
  double partial_density = 0.5;
  // Arborescence only: the root edge of every agent is its unique worst
  // element.
  bool root_last = true;
  // Arborescence only: probability that a vertex gets a root edge before
  // reachability is enforced.
  double root_prob = 1.0;
  // Arborescence only: pair up vertices with mutual edges that both ends
  // rank strictly first.
  bool mutual_pairs = false;
};

namespace internal {

inline void RandomPreferences(
    InstanceBuilder& b, const Instance& shape, int agent_index,
    const RandomSpec& spec,
    const std::set<std::pair<std::string, std::string>>& mates, Rng& rng) {
  const std::string& agent = shape.agents()[agent_index];
  std::vector<int> first;
  std::vector<int> cls;
  std::vector<int> last;
  for (int e : shape.ClassOf(agent_index)) {
    const Edge& edge = shape.edges()[e];
    bool from_root = shape.root() && edge.tail == *shape.root();
    if (mates.count({edge.tail, edge.head})) {
      first.push_back(e);
    } else {
      (spec.root_last && from_root ? last : cls).push_back(e);
    }
  }
  for (int best : first) {
    for (int e : cls) b.AddDominance(agent, best, e);
    for (int e : last) b.AddDominance(agent, best, e);
  }
  for (int worst : last) {
    for (int e : cls) b.AddDominance(agent, e, worst);
  }
  bool weak = spec.preferences == PreferenceModel::kWeak ||
              (spec.preferences == PreferenceModel::kMixed && rng.Coin(0.5));
  if (weak) {
    std::vector<std::vector<int>> groups(std::max(1, spec.weak_levels));
    for (int e : cls) groups[rng.Below(static_cast<int>(groups.size()))].push_back(e);
    std::vector<std::vector<int>> nonempty;
    for (auto& g : groups) {
      if (!g.empty()) nonempty.push_back(g);
    }
    b.SetRanks(agent, nonempty);
    return;
  }
  std::vector<int> order = cls;
  rng.Shuffle(order);
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (std::size_t j = i + 1; j < order.size(); ++j) {
      if (rng.Coin(spec.partial_density)) b.AddDominance(agent, order[i], order[j]);
    }
  }
}

}  // namespace internal

// Random instance. Arborescence instances always contain a spanning
// arborescence; colorful and generic ones need not be feasible.
inline Instance RandomInstance(const RandomSpec& spec) {
  Rng rng(spec.seed);
  InstanceBuilder b(spec.kind);
  std::vector<std::pair<std::string, std::string>> edges;
  std::vector<std::string> colors;
  std::set<std::pair<std::string, std::string>> mates;

  if (spec.kind == InstanceKind::kArborescence) {
    const int n = spec.vertices > 0 ? spec.vertices : spec.agents;
    std::vector<std::string> names;
    for (int i = 0; i < n; ++i) names.push_back("v" + std::to_string(i));
    b.AddVertex("r").SetRoot("r");
    for (const auto& v : names) b.AddVertex(v);
    std::set<std::pair<std::string, std::string>> present;
    auto add = [&](const std::string& t, const std::string& h) {
      if (present.insert({t, h}).second) edges.push_back({t, h});
    };
    if (spec.mutual_pairs) {
      std::vector<std::string> order = names;
      rng.Shuffle(order);
      for (int i = 0; i + 1 < n; i += 2) {
        add(order[i], order[i + 1]);
        add(order[i + 1], order[i]);
        mates.insert({order[i], order[i + 1]});
        mates.insert({order[i + 1], order[i]});
      }
    }
    for (const auto& v : names) {
      if (rng.Coin(spec.root_prob)) add("r", v);
    }
    // Attach unreachable vertices to reachable ones until everything hangs
    // off the root.
    std::set<std::string> reached{"r"};
    bool grew = true;
    while (grew) {
      grew = false;
      for (const auto& [t, h] : edges) {
        if (reached.count(t) && reached.insert(h).second) grew = true;
      }
    }
    std::vector<std::string> order = names;
    rng.Shuffle(order);
    for (const auto& v : order) {
      if (reached.count(v)) continue;
      std::vector<std::string> tails(reached.begin(), reached.end());
      add(tails[rng.Below(static_cast<int>(tails.size()))], v);
      reached.insert(v);
      grew = true;
      while (grew) {
        grew = false;
        for (const auto& [t, h] : edges) {
          if (reached.count(t) && reached.insert(h).second) grew = true;
        }
      }
    }
    std::vector<std::pair<std::string, std::string>> pool;
    for (const auto& head : names) {
      pool.push_back({"r", head});
      for (const auto& tail : names) {
        if (tail != head) pool.push_back({tail, head});
      }
    }
    rng.Shuffle(pool);
    for (const auto& e : pool) {
      if (static_cast<int>(edges.size()) >= spec.max_edges) break;
      if (present.count(e) || !rng.Coin(spec.edge_prob)) continue;
      add(e.first, e.second);
    }
    // Group each class together so ids read naturally.
    std::stable_sort(edges.begin(), edges.end(),
                     [&](const auto& x, const auto& y) {
                       auto ix = std::find(names.begin(), names.end(), x.second);
                       auto iy = std::find(names.begin(), names.end(), y.second);
                       return ix < iy;
                     });
    for (const auto& [t, h] : edges) b.AddEdge(t, h);
  } else {
    const int q = spec.agents;
    const int nv = spec.vertices > 0 ? spec.vertices : q + 1;
    for (int i = 0; i < nv; ++i) b.AddVertex("v" + std::to_string(i));
    for (int c = 0; c < q; ++c) colors.push_back("c" + std::to_string(c));
    int m = std::min(spec.max_edges, std::max(q, 1 + rng.Below(spec.max_edges)));
    for (int i = 0; i < m; ++i) {
      int u = rng.Below(nv);
      int v = rng.Below(nv - 1);
      if (v >= u) ++v;
      // The first q edges cover every color once.
      std::string color = i < q ? colors[i] : colors[rng.Below(q)];
      b.AddEdge("v" + std::to_string(u), "v" + std::to_string(v), color);
    }
    for (const auto& c : colors) b.AddAgent(c);
  }

  Instance shape = b.Build();
  for (int a = 0; a < shape.NumAgents(); ++a) {
    internal::RandomPreferences(b, shape, a, spec, mates, rng);
  }
  return b.Build();
}

// Preferences ordered by (rank, id), strict.
namespace internal {

inline void RankedOrders(InstanceBuilder& b, const Instance& shape,
                         const std::vector<int>& rank) {
  for (int a = 0; a < shape.NumAgents(); ++a) {
    std::vector<int> cls = shape.ClassOf(a);
    std::stable_sort(cls.begin(), cls.end(),
                     [&](int x, int y) { return rank[x] < rank[y]; });
    b.SetOrder(shape.agents()[a], cls);
  }
}

}  // namespace internal

// Small fixtures on agents {a, b, c, d}: "intro" has twelve edges and no
// popular arborescence, "a1" drops (r,d) and has one, "a3" is a four-vertex
// path-like instance whose chain repeats a set mid-run. "A.1", "A.2" and
// "A.3" are accepted as aliases.
inline Instance NamedFixture(std::string name) {
  if (name == "A.1") name = "a1";
  if (name == "A.2") name = "intro";
  if (name == "A.3") name = "a3";
  InstanceBuilder b(InstanceKind::kArborescence);
  b.AddVertex("r").AddVertex("a").AddVertex("b").AddVertex("c").AddVertex("d");
  b.SetRoot("r");
  if (name == "intro" || name == "a1") {
    // Per head: the mutual edge, the crossing edge, the root edge.
    const std::vector<std::vector<std::string>> tails = {
        {"b", "c", "r"}, {"a", "d", "r"}, {"d", "a", "r"}, {"c", "b", "r"}};
    const std::vector<std::string> heads = {"a", "b", "c", "d"};
    std::vector<std::vector<int>> orders(4);
    for (int h = 0; h < 4; ++h) {
      for (const std::string& t : tails[h]) {
        if (name == "a1" && t == "r" && heads[h] == "d") continue;
        orders[h].push_back(b.AddEdge(t, heads[h]));
      }
    }
    for (int h = 0; h < 4; ++h) b.SetOrder(heads[h], orders[h]);
    return b.Build();
  }
  if (name == "a3") {
    int ba = b.AddEdge("b", "a");
    int ra = b.AddEdge("r", "a");
    int cb = b.AddEdge("c", "b");
    int ab = b.AddEdge("a", "b");
    int dc = b.AddEdge("d", "c");
    int bc = b.AddEdge("b", "c");
    int cd = b.AddEdge("c", "d");
    b.SetOrder("a", {ba, ra});
    b.SetOrder("b", {cb, ab});
    b.SetOrder("c", {dc, bc});
    b.SetOrder("d", {cd});
    return b.Build();
  }
  throw Error(ErrorCode::kSchema, "unknown fixture " + name);
}

struct UndirectedGraph {
  std::vector<std::string> vertices;
  std::vector<std::pair<std::string, std::string>> edges;
};

struct CostedInstance {
  Instance instance;
  CostMap costs;
};

// Arborescence instance whose cheapest popular arborescence costs the size of
// a minimum vertex cover of h. Costs are 0, 1 or infinite.
inline CostedInstance VertexCoverGadget(const UndirectedGraph& h) {
  InstanceBuilder b(InstanceKind::kArborescence);
  b.AddVertex("r").SetRoot("r");
  b.AddVertex("w");
  for (const auto& v : h.vertices) b.AddVertex(v + "0").AddVertex(v + "1");
  std::vector<std::pair<std::string, std::string>> edge_vertices;
  for (std::size_t i = 0; i < h.edges.size(); ++i) {
    const auto& [u, v] = h.edges[i];
    std::string eu = "e" + std::to_string(i) + "_" + u;
    std::string ev = "e" + std::to_string(i) + "_" + v;
    b.AddVertex(eu).AddVertex(ev);
    edge_vertices.push_back({eu, ev});
  }

  std::vector<int> rank;
  std::vector<Cost> costs;
  Cost inf{true, 0};
  auto add = [&](const std::string& t, const std::string& hd, int r, Cost c) {
    b.AddEdge(t, hd);
    rank.push_back(r);
    costs.push_back(c);
  };
  for (std::size_t i = 0; i < h.edges.size(); ++i) {
    const auto& [eu, ev] = edge_vertices[i];
    add(eu, ev, 1, {});
    add(ev, eu, 1, {});
    add(eu, "w", 1, inf);
    add(ev, "w", 1, inf);
  }
  for (const auto& v : h.vertices) {
    add(v + "0", v + "1", 1, {});
    add(v + "1", v + "0", 1, {});
  }
  add("r", "w", 2, {});
  for (const auto& v : h.vertices) {
    add("w", v + "0", 2, {});
    add("w", v + "1", 2, {false, 1});
  }
  for (const auto& [eu, ev] : edge_vertices) {
    add("w", eu, 2, {});
    add("w", ev, 2, {});
  }
  for (const auto& v : h.vertices) add("r", v + "1", 3, inf);
  for (std::size_t i = 0; i < h.edges.size(); ++i) {
    const auto& [u, v] = h.edges[i];
    add(u + "0", edge_vertices[i].first, 3, inf);
    add(v + "0", edge_vertices[i].second, 3, inf);
  }
  Instance shape = b.Build();
  internal::RankedOrders(b, shape, rank);
  return {b.Build(), costs};
}

struct GadgetWithCandidate {
  Instance instance;
  Solution candidate;
};

// Arborescence instance built from an exact cover problem in which every
// universe element lies in exactly three of the sets (repeats allowed). The
// candidate arborescence is built from `cover`, a list of set indices
// covering every element once; its unpopularity margin is at most
// 2 |universe| / 3.
inline GadgetWithCandidate ExactCoverGadget(
    const std::vector<std::string>& universe,
    const std::vector<std::vector<std::string>>& sets,
    const std::vector<int>& cover) {
  // slots[u][i] is the index of the i-th set containing u.
  std::map<std::string, std::vector<int>> slots;
  for (const auto& u : universe) slots[u];
  for (int s = 0; s < static_cast<int>(sets.size()); ++s) {
    for (const auto& u : sets[s]) {
      if (!slots.count(u)) {
        throw Error(ErrorCode::kSchema, "set mentions unknown element " + u);
      }
      slots[u].push_back(s);
    }
  }
  for (const auto& u : universe) {
    if (slots[u].size() != 3) {
      throw Error(ErrorCode::kSchema,
                  "element " + u + " must lie in exactly three sets");
    }
  }
  std::map<std::string, int> sigma;
  for (int s : cover) {
    if (s < 0 || s >= static_cast<int>(sets.size())) {
      throw Error(ErrorCode::kOutOfRange, "cover index out of range");
    }
    for (const auto& u : sets[s]) {
      if (sigma.count(u)) {
        throw Error(ErrorCode::kSchema, "cover hits " + u + " twice");
      }
      const auto& sl = slots[u];
      sigma[u] = static_cast<int>(std::find(sl.begin(), sl.end(), s) - sl.begin()) + 1;
    }
  }
  if (sigma.size() != universe.size()) {
    throw Error(ErrorCode::kSchema, "cover misses an element");
  }

  auto a = [](const std::string& u, int i) { return u + "a" + std::to_string(i); };
  auto bv = [](const std::string& u, int i) { return u + "b" + std::to_string(i); };
  InstanceBuilder b(InstanceKind::kArborescence);
  b.AddVertex("r").SetRoot("r");
  for (const auto& u : universe) {
    b.AddVertex(u + "0").AddVertex(u + "1");
    for (int i = 1; i <= 3; ++i) b.AddVertex(a(u, i));
    for (int i = 1; i <= 3; ++i) b.AddVertex(bv(u, i));
  }
  std::vector<int> rank;
  auto add = [&](const std::string& t, const std::string& h, int r) {
    rank.push_back(r);
    return b.AddEdge(t, h);
  };
  for (const auto& u : universe) {
    for (int i = 1; i <= 3; ++i) {
      add(a(u, i), bv(u, i), 1);
      add(bv(u, i), a(u, i), 1);
    }
    add(u + "0", u + "1", 1);
    add(u + "1", u + "0", 1);
    add(a(u, 3), bv(u, 2), 2);
    add(a(u, 2), bv(u, 1), 2);
    add(a(u, 1), bv(u, 3), 2);
    for (const std::string& x : {u + "0", u + "1"}) {
      for (int i = 1; i <= 3; ++i) {
        add(x, a(u, i), 2);
        add(a(u, i), x, 2);
      }
    }
    add("r", u + "0", 3);
    add("r", u + "1", 3);
  }
  for (const auto& u : universe) {
    for (const auto& v : universe) {
      if (u == v) continue;
      for (int i = 1; i <= 3; ++i) {
        for (int j = 1; j <= 3; ++j) {
          if (slots[u][i - 1] == slots[v][j - 1]) add(bv(u, i), bv(v, j), 3);
        }
      }
    }
  }
  Instance shape = b.Build();
  internal::RankedOrders(b, shape, rank);
  Instance inst = b.Build();

  std::vector<int> chosen;
  auto pick = [&](const std::string& t, const std::string& h) {
    int id = inst.FindEdge(t, h);
    if (id < 0) throw std::logic_error("gadget edge missing");
    chosen.push_back(id);
  };
  for (const auto& u : universe) {
    int s = sigma[u];
    pick("r", u + "0");
    pick(u + "0", u + "1");
    pick(u + "0", a(u, s));
    pick(a(u, s), bv(u, s));
    const std::vector<std::pair<std::string, std::string>> cycle = {
        {bv(u, 1), a(u, 1)}, {a(u, 1), bv(u, 3)}, {bv(u, 3), a(u, 3)},
        {a(u, 3), bv(u, 2)}, {bv(u, 2), a(u, 2)}, {a(u, 2), bv(u, 1)}};
    for (const auto& [t, h] : cycle) {
      if (t != bv(u, s) && h != bv(u, s)) pick(t, h);
    }
  }
  return {inst, MakeSolution(inst, chosen)};
}

}  // namespace popular

#endif  // POPULAR_GENERATORS_HPP_
