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


// Every labeled matroid on [n] (n <= 6), found by testing every family of
// k-subsets against the basis-exchange axiom.

#ifndef POSITROID_TESTS_ALL_MATROIDS_HPP
#define POSITROID_TESTS_ALL_MATROIDS_HPP

#include <cstdint>
#include <vector>

#include "positroid/matroid.hpp"

namespace oracle {

inline bool exchange_holds(const std::vector<std::uint64_t>& family, std::uint64_t members) {
  for (std::uint64_t b1 : family) {
    for (std::uint64_t b2 : family) {
      for (std::uint64_t rest = b1 & ~b2; rest != 0; rest &= rest - 1) {
        const std::uint64_t x = rest & (~rest + 1);
        bool found = false;
        for (std::uint64_t cand = b2 & ~b1; cand != 0 && !found; cand &= cand - 1) {
          const std::uint64_t y = cand & (~cand + 1);
          found = (members >> ((b1 & ~x) | y)) & 1U;
        }
        if (!found) return false;
      }
    }
  }
  return true;
}

inline std::vector<positroid::Matroid> all_matroids(int n) {
  std::vector<positroid::Matroid> out;
  for (int k = 0; k <= n; ++k) {
    const auto subsets = positroid::k_subsets(n, k);
    const std::size_t m = subsets.size();
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << m); ++mask) {
      std::vector<std::uint64_t> family;
      std::uint64_t members = 0;
      for (std::size_t t = 0; t < m; ++t) {
        if ((mask >> t) & 1U) {
          family.push_back(subsets[t].bits());
          members |= std::uint64_t{1} << subsets[t].bits();
        }
      }
      if (!exchange_holds(family, members)) continue;
      std::vector<positroid::Subset> bases;
      for (std::uint64_t b : family) bases.push_back(positroid::Subset::from_bits(b));
      out.emplace_back(n, std::move(bases));
    }
  }
  return out;
}

}  // namespace oracle

#endif  // POSITROID_TESTS_ALL_MATROIDS_HPP
