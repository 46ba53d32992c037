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

#ifndef POPULAR_MATROID_HPP_
#define POPULAR_MATROID_HPP_

#include <algorithm>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include <boost/pending/disjoint_sets.hpp>

#include "json.hpp"
#include "popular/element_set.hpp"
#include "popular/error.hpp"

namespace popular {

// Independence oracle over the ground set {0, ..., GroundSize()-1}. Rank and
// span have greedy defaults; subclasses override them when a direct formula
// is cheaper.
class Matroid {
 public:
  virtual ~Matroid() = default;

  virtual int GroundSize() const = 0;

  bool IsIndependent(const ElementSet& s) const {
    CheckGround(s);
    return DoIsIndependent(s);
  }
  int Rank(const ElementSet& s) const {
    CheckGround(s);
    return DoRank(s);
  }
  ElementSet Span(const ElementSet& s) const {
    CheckGround(s);
    return DoSpan(s);
  }
  int FullRank() const { return DoRank(ElementSet::Full(GroundSize())); }

  // Greedy basis of s scanning ids in increasing order.
  ElementSet GreedyBasis(const ElementSet& s) const {
    CheckGround(s);
    ElementSet basis(GroundSize());
    s.ForEach([&](int e) {
      basis.Insert(e);
      if (!DoIsIndependent(basis)) basis.Erase(e);
    });
    return basis;
  }

  // JSON description of the oracle, see instance_io.hpp for the schema.
  virtual nlohmann::json Describe() const = 0;

 protected:
  virtual bool DoIsIndependent(const ElementSet& s) const = 0;

  virtual int DoRank(const ElementSet& s) const {
    return GreedyBasis(s).Size();
  }

  virtual ElementSet DoSpan(const ElementSet& s) const {
    ElementSet basis = GreedyBasis(s);
    ElementSet span = s;
    for (int e = 0; e < GroundSize(); ++e) {
      if (!span.Contains(e) && !DoIsIndependent(basis.With(e))) span.Insert(e);
    }
    return span;
  }

  void CheckGround(const ElementSet& s) const {
    if (s.GroundSize() != GroundSize()) {
      throw Error(ErrorCode::kGroundMismatch,
                  "set over " + std::to_string(s.GroundSize()) +
                      " elements passed to a matroid over " +
                      std::to_string(GroundSize()));
    }
  }
};

using MatroidPtr = std::shared_ptr<const Matroid>;

// Cycle matroid of an undirected multigraph. Element i is the edge
// endpoints[i]; loops are dependent.
class GraphicMatroid : public Matroid {
 public:
  GraphicMatroid(int num_vertices, std::vector<std::pair<int, int>> endpoints)
      : num_vertices_(num_vertices), endpoints_(std::move(endpoints)) {
    for (const auto& [u, v] : endpoints_) {
      if (u < 0 || v < 0 || u >= num_vertices_ || v >= num_vertices_) {
        throw Error(ErrorCode::kOutOfRange, "edge endpoint out of range");
      }
    }
  }

  int GroundSize() const override {
    return static_cast<int>(endpoints_.size());
  }
  int NumVertices() const { return num_vertices_; }
  const std::vector<std::pair<int, int>>& Endpoints() const {
    return endpoints_;
  }

  nlohmann::json Describe() const override { return {{"type", "graphic"}}; }

 protected:
  bool DoIsIndependent(const ElementSet& s) const override {
    Components comp(num_vertices_);
    for (int e = s.First(); e >= 0; e = s.Next(e)) {
      if (!comp.Join(endpoints_[e].first, endpoints_[e].second)) return false;
    }
    return true;
  }

  int DoRank(const ElementSet& s) const override {
    Components comp(num_vertices_);
    int rank = 0;
    s.ForEach([&](int e) {
      if (comp.Join(endpoints_[e].first, endpoints_[e].second)) ++rank;
    });
    return rank;
  }

  ElementSet DoSpan(const ElementSet& s) const override {
    Components comp(num_vertices_);
    s.ForEach(
        [&](int e) { comp.Join(endpoints_[e].first, endpoints_[e].second); });
    ElementSet span(GroundSize());
    for (int e = 0; e < GroundSize(); ++e) {
      if (comp.Same(endpoints_[e].first, endpoints_[e].second)) span.Insert(e);
    }
    return span;
  }

 private:
  class Components {
   public:
    explicit Components(int n) : sets_(n) {
      for (int v = 0; v < n; ++v) sets_.make_set(v);
    }
    // False if u and v were already connected.
    bool Join(int u, int v) {
      int a = sets_.find_set(u);
      int b = sets_.find_set(v);
      if (a == b) return false;
      sets_.link(a, b);
      return true;
    }
    bool Same(int u, int v) { return sets_.find_set(u) == sets_.find_set(v); }

   private:
    boost::disjoint_sets_with_storage<> sets_;
  };

  int num_vertices_;
  std::vector<std::pair<int, int>> endpoints_;
};

// Element e lies in class class_of[e]; a set is independent when it holds at
// most capacities[c] elements of every class c.
class PartitionMatroid : public Matroid {
 public:
  PartitionMatroid(std::vector<int> class_of, std::vector<int> capacities)
      : class_of_(std::move(class_of)), capacities_(std::move(capacities)) {
    for (int c : class_of_) {
      if (c < 0 || c >= static_cast<int>(capacities_.size())) {
        throw Error(ErrorCode::kOutOfRange, "partition class out of range");
      }
    }
  }

  // Capacity one in every class.
  static std::shared_ptr<PartitionMatroid> FromClasses(
      int ground_size, const std::vector<std::vector<int>>& classes) {
    std::vector<int> class_of(ground_size, -1);
    for (int c = 0; c < static_cast<int>(classes.size()); ++c) {
      for (int e : classes[c]) {
        if (e < 0 || e >= ground_size || class_of[e] != -1) {
          throw Error(ErrorCode::kSchema,
                      "classes must partition the ground set");
        }
        class_of[e] = c;
      }
    }
    if (std::find(class_of.begin(), class_of.end(), -1) != class_of.end()) {
      throw Error(ErrorCode::kSchema, "classes must partition the ground set");
    }
    return std::make_shared<PartitionMatroid>(
        std::move(class_of), std::vector<int>(classes.size(), 1));
  }

  int GroundSize() const override { return static_cast<int>(class_of_.size()); }
  int ClassOf(int e) const { return class_of_[e]; }
  int NumClasses() const { return static_cast<int>(capacities_.size()); }

  nlohmann::json Describe() const override {
    std::vector<std::vector<int>> classes(capacities_.size());
    for (int e = 0; e < GroundSize(); ++e) classes[class_of_[e]].push_back(e);
    return {{"type", "partition"},
            {"classes", classes},
            {"capacities", capacities_}};
  }

 protected:
  bool DoIsIndependent(const ElementSet& s) const override {
    std::vector<int> count = Counts(s);
    for (std::size_t c = 0; c < count.size(); ++c) {
      if (count[c] > capacities_[c]) return false;
    }
    return true;
  }

  int DoRank(const ElementSet& s) const override {
    std::vector<int> count = Counts(s);
    int rank = 0;
    for (std::size_t c = 0; c < count.size(); ++c) {
      rank += std::min(count[c], capacities_[c]);
    }
    return rank;
  }

  ElementSet DoSpan(const ElementSet& s) const override {
    std::vector<int> count = Counts(s);
    ElementSet span = s;
    for (int e = 0; e < GroundSize(); ++e) {
      if (count[class_of_[e]] >= capacities_[class_of_[e]]) span.Insert(e);
    }
    return span;
  }

 private:
  std::vector<int> Counts(const ElementSet& s) const {
    std::vector<int> count(capacities_.size(), 0);
    s.ForEach([&](int e) { ++count[class_of_[e]]; });
    return count;
  }

  std::vector<int> class_of_;
  std::vector<int> capacities_;
};

class UniformMatroid : public Matroid {
 public:
  UniformMatroid(int ground_size, int rank)
      : ground_size_(ground_size), rank_(rank) {
    if (rank < 0) throw Error(ErrorCode::kOutOfRange, "negative rank");
  }

  int GroundSize() const override { return ground_size_; }

  nlohmann::json Describe() const override {
    if (rank_ >= ground_size_) return {{"type", "free"}};
    return {{"type", "uniform"}, {"rank", rank_}};
  }

 protected:
  bool DoIsIndependent(const ElementSet& s) const override {
    return s.Size() <= rank_;
  }
  int DoRank(const ElementSet& s) const override {
    return std::min(s.Size(), rank_);
  }
  ElementSet DoSpan(const ElementSet& s) const override {
    return s.Size() >= rank_ ? ElementSet::Full(ground_size_) : s;
  }

 private:
  int ground_size_;
  int rank_;
};

inline MatroidPtr MakeFree(int ground_size) {
  return std::make_shared<UniformMatroid>(ground_size, ground_size);
}

// Independent sets of the inner matroid with at most `limit` elements.
class TruncatedMatroid : public Matroid {
 public:
  TruncatedMatroid(MatroidPtr inner, int limit)
      : inner_(std::move(inner)), limit_(limit) {
    if (limit < 0) throw Error(ErrorCode::kOutOfRange, "negative truncation");
  }

  int GroundSize() const override { return inner_->GroundSize(); }

  nlohmann::json Describe() const override {
    return {{"type", "truncation"},
            {"limit", limit_},
            {"inner", inner_->Describe()}};
  }

 protected:
  bool DoIsIndependent(const ElementSet& s) const override {
    return s.Size() <= limit_ && inner_->IsIndependent(s);
  }
  int DoRank(const ElementSet& s) const override {
    return std::min(inner_->Rank(s), limit_);
  }
  ElementSet DoSpan(const ElementSet& s) const override {
    if (inner_->Rank(s) >= limit_) return ElementSet::Full(GroundSize());
    return inner_->Span(s);
  }

 private:
  MatroidPtr inner_;
  int limit_;
};

// Restriction to `subset`. Local element j is the j-th smallest member of
// subset.
class RestrictedMatroid : public Matroid {
 public:
  RestrictedMatroid(MatroidPtr inner, const ElementSet& subset)
      : inner_(std::move(inner)), members_(subset.ToVector()) {
    if (subset.GroundSize() != inner_->GroundSize()) {
      throw Error(ErrorCode::kGroundMismatch, "restriction subset mismatch");
    }
  }

  int GroundSize() const override { return static_cast<int>(members_.size()); }

  nlohmann::json Describe() const override {
    return {{"type", "restriction"},
            {"subset", members_},
            {"inner", inner_->Describe()}};
  }

 protected:
  bool DoIsIndependent(const ElementSet& s) const override {
    return inner_->IsIndependent(Lift(s));
  }
  int DoRank(const ElementSet& s) const override {
    return inner_->Rank(Lift(s));
  }
  ElementSet DoSpan(const ElementSet& s) const override {
    ElementSet span = inner_->Span(Lift(s));
    ElementSet out(GroundSize());
    for (int j = 0; j < GroundSize(); ++j) {
      if (span.Contains(members_[j])) out.Insert(j);
    }
    return out;
  }

 private:
  ElementSet Lift(const ElementSet& s) const {
    ElementSet out(inner_->GroundSize());
    s.ForEach([&](int j) { out.Insert(members_[j]); });
    return out;
  }

  MatroidPtr inner_;
  std::vector<int> members_;
};

// Contraction by `subset`. Local element j is the j-th smallest element
// outside subset. X is independent iff X together with a fixed greedy basis
// of subset is independent in the inner matroid.
class ContractedMatroid : public Matroid {
 public:
  ContractedMatroid(MatroidPtr inner, const ElementSet& subset)
      : inner_(std::move(inner)),
        contracted_(subset.ToVector()),
        basis_(inner_->GreedyBasis(subset)),
        members_(subset.Complement().ToVector()) {}

  int GroundSize() const override { return static_cast<int>(members_.size()); }

  nlohmann::json Describe() const override {
    return {{"type", "contraction"},
            {"subset", contracted_},
            {"inner", inner_->Describe()}};
  }

 protected:
  bool DoIsIndependent(const ElementSet& s) const override {
    return inner_->IsIndependent(Lift(s));
  }
  int DoRank(const ElementSet& s) const override {
    return inner_->Rank(Lift(s)) - basis_.Size();
  }
  ElementSet DoSpan(const ElementSet& s) const override {
    ElementSet span = inner_->Span(Lift(s));
    ElementSet out(GroundSize());
    for (int j = 0; j < GroundSize(); ++j) {
      if (span.Contains(members_[j])) out.Insert(j);
    }
    return out;
  }

 private:
  ElementSet Lift(const ElementSet& s) const {
    ElementSet out = basis_;
    s.ForEach([&](int j) { out.Insert(members_[j]); });
    return out;
  }

  MatroidPtr inner_;
  std::vector<int> contracted_;
  ElementSet basis_;
  std::vector<int> members_;
};

// Direct sum of matroids embedded into a common ground set. Part i maps its
// local element j to global element parts[i].elements[j]. The embedded
// element sets must be disjoint; global elements covered by no part are
// loops.
class DirectSumMatroid : public Matroid {
 public:
  struct Part {
    MatroidPtr matroid;
    std::vector<int> elements;
  };

  DirectSumMatroid(int ground_size, std::vector<Part> parts)
      : ground_size_(ground_size),
        parts_(std::move(parts)),
        owner_(ground_size, -1),
        local_(ground_size, -1) {
    for (int i = 0; i < static_cast<int>(parts_.size()); ++i) {
      const Part& part = parts_[i];
      if (static_cast<int>(part.elements.size()) !=
          part.matroid->GroundSize()) {
        throw Error(ErrorCode::kGroundMismatch,
                    "direct sum part size does not match its matroid");
      }
      for (int j = 0; j < static_cast<int>(part.elements.size()); ++j) {
        int e = part.elements[j];
        if (e < 0 || e >= ground_size_) {
          throw Error(ErrorCode::kOutOfRange, "direct sum element out of range");
        }
        if (owner_[e] != -1) {
          throw Error(ErrorCode::kSchema, "direct sum parts overlap");
        }
        owner_[e] = i;
        local_[e] = j;
      }
    }
  }

  // Parts laid out one after another.
  static std::shared_ptr<DirectSumMatroid> Concat(
      const std::vector<MatroidPtr>& matroids) {
    std::vector<Part> parts;
    int offset = 0;
    for (const MatroidPtr& m : matroids) {
      std::vector<int> elements(m->GroundSize());
      for (int j = 0; j < m->GroundSize(); ++j) elements[j] = offset + j;
      offset += m->GroundSize();
      parts.push_back({m, std::move(elements)});
    }
    return std::make_shared<DirectSumMatroid>(offset, std::move(parts));
  }

  int GroundSize() const override { return ground_size_; }

  nlohmann::json Describe() const override {
    nlohmann::json parts = nlohmann::json::array();
    for (const Part& part : parts_) {
      parts.push_back(
          {{"elements", part.elements}, {"matroid", part.matroid->Describe()}});
    }
    return {{"type", "direct_sum"}, {"parts", parts}};
  }

 protected:
  bool DoIsIndependent(const ElementSet& s) const override {
    for (int e = s.First(); e >= 0; e = s.Next(e)) {
      if (owner_[e] == -1) return false;
    }
    std::vector<ElementSet> local = Split(s);
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (!parts_[i].matroid->IsIndependent(local[i])) return false;
    }
    return true;
  }

  int DoRank(const ElementSet& s) const override {
    std::vector<ElementSet> local = Split(s);
    int rank = 0;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      rank += parts_[i].matroid->Rank(local[i]);
    }
    return rank;
  }

  ElementSet DoSpan(const ElementSet& s) const override {
    std::vector<ElementSet> local = Split(s);
    ElementSet span(ground_size_);
    for (int e = 0; e < ground_size_; ++e) {
      if (owner_[e] == -1) span.Insert(e);
    }
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      parts_[i].matroid->Span(local[i]).ForEach(
          [&](int j) { span.Insert(parts_[i].elements[j]); });
    }
    return span;
  }

 private:
  std::vector<ElementSet> Split(const ElementSet& s) const {
    std::vector<ElementSet> local;
    local.reserve(parts_.size());
    for (const Part& part : parts_) local.emplace_back(part.matroid->GroundSize());
    s.ForEach([&](int e) {
      if (owner_[e] != -1) local[owner_[e]].Insert(local_[e]);
    });
    return local;
  }

  int ground_size_;
  std::vector<Part> parts_;
  std::vector<int> owner_;
  std::vector<int> local_;
};

inline MatroidPtr Truncate(MatroidPtr m, int limit) {
  return std::make_shared<TruncatedMatroid>(std::move(m), limit);
}

inline MatroidPtr Restrict(MatroidPtr m, const ElementSet& subset) {
  return std::make_shared<RestrictedMatroid>(std::move(m), subset);
}

inline MatroidPtr Contract(MatroidPtr m, const ElementSet& subset) {
  return std::make_shared<ContractedMatroid>(std::move(m), subset);
}

}  // namespace popular

#endif  // POPULAR_MATROID_HPP_
