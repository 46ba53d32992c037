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

#ifndef POPULAR_INTERSECTION_HPP_
#define POPULAR_INTERSECTION_HPP_

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "popular/element_set.hpp"
#include "popular/error.hpp"
#include "popular/matroid.hpp"

namespace popular {

// Integer vector compared lexicographically. Used as the weight of an element
// when maximizing (|I & C_1|, ..., |I & C_p|).
class LevelWeight {
 public:
  LevelWeight() = default;
  explicit LevelWeight(int dim) : v_(dim, 0) {}
  explicit LevelWeight(std::vector<std::int64_t> v) : v_(std::move(v)) {}

  const std::vector<std::int64_t>& values() const { return v_; }

  LevelWeight& operator+=(const LevelWeight& o) {
    for (std::size_t i = 0; i < v_.size(); ++i) v_[i] += o.v_[i];
    return *this;
  }
  LevelWeight& operator-=(const LevelWeight& o) {
    for (std::size_t i = 0; i < v_.size(); ++i) v_[i] -= o.v_[i];
    return *this;
  }
  friend LevelWeight operator+(LevelWeight a, const LevelWeight& b) {
    return a += b;
  }
  friend LevelWeight operator-(LevelWeight a, const LevelWeight& b) {
    return a -= b;
  }
  LevelWeight operator-() const {
    LevelWeight r = *this;
    for (auto& x : r.v_) x = -x;
    return r;
  }
  friend bool operator<(const LevelWeight& a, const LevelWeight& b) {
    return a.v_ < b.v_;
  }
  friend bool operator==(const LevelWeight& a, const LevelWeight& b) {
    return a.v_ == b.v_;
  }

 private:
  std::vector<std::int64_t> v_;
};

template <typename W>
struct WeightedSet {
  ElementSet set;
  W weight;
};

// Extreme common independent sets of every cardinality reachable inside
// `allowed`: entry k has k elements and maximum weight among such sets.
// Augments along exchange-graph paths of minimum length (vertex length -w(x)
// outside the current set, w(y) inside), then fewest arcs, then smallest end
// id. Bellman-Ford relaxes in increasing id order and only on strict
// improvement, so ties resolve toward smaller ids.
template <typename W>
std::vector<WeightedSet<W>> ExtremeCommonIndependentSets(
    const Matroid& m1, const Matroid& m2, const std::vector<W>& weight,
    const W& zero, const ElementSet& allowed, int max_size = -1) {
  const int n = m1.GroundSize();
  if (m2.GroundSize() != n || allowed.GroundSize() != n ||
      static_cast<int>(weight.size()) != n) {
    throw Error(ErrorCode::kGroundMismatch,
                "intersection inputs disagree on the ground set");
  }
  ElementSet current(n);
  W total = zero;
  std::vector<WeightedSet<W>> path{{current, total}};

  struct Label {
    bool reached = false;
    W dist;
    int hops = 0;
    int pred = -1;
  };
  auto better = [](const W& d1, int h1, const W& d2, int h2) {
    if (d1 < d2) return true;
    if (d2 < d1) return false;
    return h1 < h2;
  };

  while (max_size < 0 || current.Size() < max_size) {
    const ElementSet outside = allowed - current;
    const ElementSet sources = outside - m1.Span(current);
    const ElementSet sinks = outside - m2.Span(current);
    if (sources.Empty() || sinks.Empty()) break;

    // Arcs y -> x when I - y + x is independent in m1, x -> y when it is
    // independent in m2.
    const std::vector<int> inside = current.ToVector();
    std::vector<ElementSet> from_inside(n, ElementSet(n));
    std::vector<ElementSet> into_inside(n, ElementSet(n));
    for (int y : inside) {
      ElementSet rest = current.Without(y);
      from_inside[y] = outside - m1.Span(rest);
      (outside - m2.Span(rest)).ForEach([&](int x) { into_inside[x].Insert(y); });
    }
    auto length = [&](int v) { return current.Contains(v) ? weight[v] : -weight[v]; };

    std::vector<Label> label(n);
    sources.ForEach([&](int x) {
      label[x].reached = true;
      label[x].dist = length(x);
    });
    const std::vector<int> nodes = (allowed & (current | outside)).ToVector();
    bool changed = true;
    int rounds = 0;
    while (changed) {
      changed = false;
      if (++rounds > static_cast<int>(nodes.size()) + 1) {
        throw std::logic_error("negative cycle in the exchange graph");
      }
      for (int u : nodes) {
        if (!label[u].reached) continue;
        const ElementSet& out =
            current.Contains(u) ? from_inside[u] : into_inside[u];
        for (int v = out.First(); v >= 0; v = out.Next(v)) {
          W d = label[u].dist + length(v);
          int h = label[u].hops + 1;
          if (!label[v].reached || better(d, h, label[v].dist, label[v].hops)) {
            label[v] = {true, d, h, u};
            changed = true;
          }
        }
      }
    }

    int sink = -1;
    sinks.ForEach([&](int t) {
      if (!label[t].reached) return;
      if (sink == -1 ||
          better(label[t].dist, label[t].hops, label[sink].dist,
                 label[sink].hops)) {
        sink = t;
      }
    });
    if (sink == -1) break;

    total = total - label[sink].dist;
    for (int v = sink; v != -1; v = label[v].pred) {
      if (current.Contains(v)) {
        current.Erase(v);
      } else {
        current.Insert(v);
      }
    }
    path.push_back({current, total});
  }
  return path;
}

// Largest common independent set inside `allowed`.
inline ElementSet MaxCommonIndependent(const Matroid& m1, const Matroid& m2,
                                       const ElementSet& allowed) {
  std::vector<int> zero(m1.GroundSize(), 0);
  return ExtremeCommonIndependentSets<int>(m1, m2, zero, 0, allowed)
      .back()
      .set;
}

inline ElementSet MaxCommonIndependent(const Matroid& m1, const Matroid& m2) {
  return MaxCommonIndependent(m1, m2, ElementSet::Full(m1.GroundSize()));
}

// Common independent set inside `allowed` maximizing
// (|I & C_1|, ..., |I & C_p|) lexicographically, where level[e] is the first
// 1-based index i with e in C_i and C_p contains every element.
inline ElementSet LexMaxCommonIndependent(const Matroid& m1, const Matroid& m2,
                                          const std::vector<int>& level,
                                          int num_levels,
                                          const ElementSet& allowed) {
  std::vector<LevelWeight> weight;
  weight.reserve(level.size());
  for (int lv : level) {
    std::vector<std::int64_t> v(num_levels, 0);
    for (int i = lv - 1; i < num_levels; ++i) v[i] = 1;
    weight.emplace_back(std::move(v));
  }
  auto path = ExtremeCommonIndependentSets<LevelWeight>(
      m1, m2, weight, LevelWeight(num_levels), allowed);
  std::size_t best = 0;
  for (std::size_t k = 1; k < path.size(); ++k) {
    if (path[best].weight < path[k].weight) best = k;
  }
  return path[best].set;
}

// Maximum-weight common base with every element inside `allowed`, where a
// common base has min(rank(m1), rank(m2)) elements. Empty when none exists.
template <typename W>
std::optional<WeightedSet<W>> MaxWeightCommonBase(const Matroid& m1,
                                                  const Matroid& m2,
                                                  const std::vector<W>& weight,
                                                  const W& zero,
                                                  const ElementSet& allowed) {
  const int target = std::min(m1.FullRank(), m2.FullRank());
  auto path =
      ExtremeCommonIndependentSets<W>(m1, m2, weight, zero, allowed, target);
  if (path.back().set.Size() < target) return std::nullopt;
  return path.back();
}

inline std::optional<WeightedSet<std::int64_t>> MaxWeightCommonBase(
    const Matroid& m1, const Matroid& m2,
    const std::vector<std::int64_t>& weight) {
  return MaxWeightCommonBase<std::int64_t>(m1, m2, weight, 0,
                                           ElementSet::Full(m1.GroundSize()));
}

}  // namespace popular

#endif  // POPULAR_INTERSECTION_HPP_
