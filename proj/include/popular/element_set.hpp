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

#ifndef POPULAR_ELEMENT_SET_HPP_
#define POPULAR_ELEMENT_SET_HPP_

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace popular {

// A subset of a ground set {0, ..., n-1}. Iteration is always in increasing
// id order.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(int ground_size) : bits_(ground_size) {}
  ElementSet(int ground_size, std::initializer_list<int> ids)
      : bits_(ground_size) {
    for (int e : ids) Insert(e);
  }

  static ElementSet Full(int ground_size) {
    ElementSet s(ground_size);
    s.bits_.set();
    return s;
  }

  static ElementSet FromVector(int ground_size, const std::vector<int>& ids) {
    ElementSet s(ground_size);
    for (int e : ids) s.Insert(e);
    return s;
  }

  int GroundSize() const { return static_cast<int>(bits_.size()); }
  int Size() const { return static_cast<int>(bits_.count()); }
  bool Empty() const { return bits_.none(); }

  bool Contains(int e) const { return bits_.test(e); }
  void Insert(int e) { bits_.set(e); }
  void Erase(int e) { bits_.reset(e); }

  ElementSet With(int e) const {
    ElementSet s = *this;
    s.Insert(e);
    return s;
  }
  ElementSet Without(int e) const {
    ElementSet s = *this;
    s.Erase(e);
    return s;
  }

  bool IsSubsetOf(const ElementSet& other) const {
    return bits_.is_subset_of(other.bits_);
  }
  bool IsProperSubsetOf(const ElementSet& other) const {
    return bits_.is_proper_subset_of(other.bits_);
  }
  bool Intersects(const ElementSet& other) const {
    return bits_.intersects(other.bits_);
  }

  ElementSet& operator|=(const ElementSet& o) {
    bits_ |= o.bits_;
    return *this;
  }
  ElementSet& operator&=(const ElementSet& o) {
    bits_ &= o.bits_;
    return *this;
  }
  ElementSet& operator-=(const ElementSet& o) {
    bits_ -= o.bits_;
    return *this;
  }
  friend ElementSet operator|(ElementSet a, const ElementSet& b) {
    return a |= b;
  }
  friend ElementSet operator&(ElementSet a, const ElementSet& b) {
    return a &= b;
  }
  friend ElementSet operator-(ElementSet a, const ElementSet& b) {
    return a -= b;
  }
  ElementSet Complement() const {
    ElementSet s = *this;
    s.bits_.flip();
    return s;
  }

  friend bool operator==(const ElementSet& a, const ElementSet& b) {
    return a.bits_ == b.bits_;
  }
  // Orders first by ground size, then lexicographically by sorted ids.
  friend bool operator<(const ElementSet& a, const ElementSet& b) {
    if (a.GroundSize() != b.GroundSize()) return a.GroundSize() < b.GroundSize();
    return a.ToVector() < b.ToVector();
  }

  // Smallest member, or -1.
  int First() const { return Next(-1); }
  // Smallest member greater than e, or -1.
  int Next(int e) const {
    std::size_t pos = e < 0 ? bits_.find_first() : bits_.find_next(e);
    return pos == boost::dynamic_bitset<std::uint64_t>::npos
               ? -1
               : static_cast<int>(pos);
  }

  template <typename F>
  void ForEach(F&& f) const {
    for (int e = First(); e >= 0; e = Next(e)) f(e);
  }

  std::vector<int> ToVector() const {
    std::vector<int> out;
    out.reserve(Size());
    ForEach([&](int e) { out.push_back(e); });
    return out;
  }

 private:
  boost::dynamic_bitset<std::uint64_t> bits_;
};

}  // namespace popular

#endif  // POPULAR_ELEMENT_SET_HPP_
