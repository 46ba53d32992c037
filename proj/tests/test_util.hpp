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

// Random matroids and subset brute force shared by the tests.

#ifndef POPULAR_TESTS_TEST_UTIL_HPP_
#define POPULAR_TESTS_TEST_UTIL_HPP_

#include <memory>
#include <utility>
#include <vector>

#include "popular/element_set.hpp"
#include "popular/generators.hpp"
#include "popular/matroid.hpp"

namespace popular::testing {

inline MatroidPtr RandomGraphic(Rng& rng, int n) {
  const int nv = rng.Between(2, 5);
  std::vector<std::pair<int, int>> ends;
  for (int i = 0; i < n; ++i) ends.push_back({rng.Below(nv), rng.Below(nv)});
  return std::make_shared<GraphicMatroid>(nv, std::move(ends));
}

inline MatroidPtr RandomPartition(Rng& rng, int n) {
  const int k = rng.Between(1, 4);
  std::vector<int> class_of(n);
  for (int& c : class_of) c = rng.Below(k);
  std::vector<int> caps(k);
  for (int& c : caps) c = rng.Between(0, 2);
  return std::make_shared<PartitionMatroid>(std::move(class_of), std::move(caps));
}

// One of graphic, partition, uniform, truncated graphic or a direct sum of
// two of those on a random split.
inline MatroidPtr RandomMatroid(Rng& rng, int n) {
  switch (rng.Below(5)) {
    case 0: return RandomGraphic(rng, n);
    case 1: return RandomPartition(rng, n);
    case 2: return std::make_shared<UniformMatroid>(n, rng.Between(0, n));
    case 3: return Truncate(RandomGraphic(rng, n), rng.Between(0, 3));
    default: {
      std::vector<int> left;
      std::vector<int> right;
      for (int e = 0; e < n; ++e) (rng.Coin(0.5) ? left : right).push_back(e);
      std::vector<DirectSumMatroid::Part> parts;
      parts.push_back({RandomGraphic(rng, static_cast<int>(left.size())), left});
      parts.push_back({RandomPartition(rng, static_cast<int>(right.size())), right});
      return std::make_shared<DirectSumMatroid>(n, std::move(parts));
    }
  }
}

inline ElementSet RandomSubset(Rng& rng, int n, double p = 0.5) {
  ElementSet s(n);
  for (int e = 0; e < n; ++e) {
    if (rng.Coin(p)) s.Insert(e);
  }
  return s;
}

inline ElementSet MaskSet(int n, unsigned mask) {
  ElementSet s(n);
  for (int e = 0; e < n; ++e) {
    if (mask >> e & 1u) s.Insert(e);
  }
  return s;
}

}  // namespace popular::testing

#endif  // POPULAR_TESTS_TEST_UTIL_HPP_
