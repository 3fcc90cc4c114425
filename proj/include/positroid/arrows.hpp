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

// Clockwise and counterclockwise arrows of a decorated permutation and the
// arrow-counting functions that read off ranks of cyclic intervals.

#ifndef POSITROID_ARROWS_HPP
#define POSITROID_ARROWS_HPP

#include <functional>
#include <vector>

#include "positroid/cyclic.hpp"
#include "positroid/decorated_permutation.hpp"
#include "positroid/error.hpp"
#include "positroid/matroid.hpp"

namespace positroid {

enum class ArrowKind { kClockwise, kCounterclockwise };

/// The n arrows of a decorated permutation, indexed by start position.
struct ArrowSet {
  ArrowKind kind = ArrowKind::kClockwise;
  std::vector<CyclicInterval> arrows;

  const CyclicInterval& at(int start) const { return arrows[static_cast<std::size_t>(start - 1)]; }

  std::vector<Subset> member_sets() const {
    std::vector<Subset> out;
    out.reserve(arrows.size());
    for (const auto& a : arrows) out.push_back(a.members());
    return out;
  }
};

/// C_i = [i, perm(i)], or all of [n] when i is a coloop. A loop's arrow is {i}.
inline ArrowSet cw_arrows(const DecoratedPermutation& dp) {
  require_valid(dp);
  const int n = dp.n();
  ArrowSet out{ArrowKind::kClockwise, {}};
  for (int i = 1; i <= n; ++i) {
    out.arrows.push_back(dp.is_coloop(i) ? CyclicInterval::full(n)
                                         : CyclicInterval::arc(n, i, dp.image(i)));
  }
  return out;
}

/// CC_i = [perm(i), i], or all of [n] when i is a loop.
inline ArrowSet ccw_arrows(const DecoratedPermutation& dp) {
  require_valid(dp);
  const int n = dp.n();
  ArrowSet out{ArrowKind::kCounterclockwise, {}};
  for (int i = 1; i <= n; ++i) {
    out.arrows.push_back(dp.is_loop(i) ? CyclicInterval::full(n)
                                       : CyclicInterval::arc(n, dp.image(i), i));
  }
  return out;
}

namespace detail {

inline int count_contained(const std::vector<Subset>& arrows, Subset a) {
  int count = 0;
  for (Subset arrow : arrows)
    if (arrow.is_subset_of(a)) ++count;
  return count;
}

}  // namespace detail

/// Number of CW-arrows inside A; n - rank(dp) when A = [n]. Needs a coloop-free dp.
inline int cw_function(const DecoratedPermutation& dp, Subset a) {
  require_valid(dp);
  detail::require(dp.coloops().empty(), "cw_function: decorated permutation has a coloop");
  detail::require(a.within(dp.n()), "cw_function: subset not contained in [n]");
  if (a == Subset::full(dp.n())) return dp.n() - rank(dp);
  return detail::count_contained(cw_arrows(dp).member_sets(), a);
}

/// Number of CCW-arrows inside A; rank(dp) when A = [n]. Needs a loop-free dp.
inline int ccw_function(const DecoratedPermutation& dp, Subset a) {
  require_valid(dp);
  detail::require(dp.loops().empty(), "ccw_function: decorated permutation has a loop");
  detail::require(a.within(dp.n()), "ccw_function: subset not contained in [n]");
  if (a == Subset::full(dp.n())) return rank(dp);
  return detail::count_contained(ccw_arrows(dp).member_sets(), a);
}

/// rk(J) = |J| - cw(J) for a cyclic interval J.
inline int rank_cyclic_interval(const DecoratedPermutation& dp, const CyclicInterval& interval) {
  detail::require(interval.ground() == dp.n(), "rank_cyclic_interval: ground sets differ");
  const Subset members = interval.members();
  return members.size() - cw_function(dp, members);
}

/// |A| - cw(A), an upper bound on rk(A) for proper subsets A.
inline int rank_upper_bound(const DecoratedPermutation& dp, Subset a) {
  detail::require(a != Subset::full(dp.n()), "rank_upper_bound: A must be a proper subset");
  return a.size() - cw_function(dp, a);
}

namespace detail {

// Calls visit(blocks) for every partition of `elements` into exactly
// `block_count` nonempty blocks; stops early once visit returns true.
inline bool for_each_partition(const std::vector<int>& elements, int block_count,
                               const std::function<bool(const std::vector<Subset>&)>& visit) {
  std::vector<Subset> blocks;
  std::function<bool(std::size_t)> place = [&](std::size_t idx) -> bool {
    const std::size_t remaining = elements.size() - idx;
    const std::size_t missing = static_cast<std::size_t>(block_count) - blocks.size();
    if (remaining < missing) return false;
    if (idx == elements.size()) return visit(blocks);
    const int e = elements[idx];
    // Index, not reference: the recursion may grow `blocks`.
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      blocks[b].insert(e);
      if (place(idx + 1)) return true;
      blocks[b].erase(e);
    }
    if (blocks.size() < static_cast<std::size_t>(block_count)) {
      blocks.push_back(Subset{}.with(e));
      if (place(idx + 1)) return true;
      blocks.pop_back();
    }
    return false;
  };
  return place(0);
}

}  // namespace detail

/// Searches the set partitions A = A_1 | ... | A_t, fewest blocks first, for
/// one with rk(A) = sum_j (rk([n]) - ccw([n] \ A_j)). Needs a loop-free dp.
inline bool verify_ccw_rank_partition(const DecoratedPermutation& dp, Subset a) {
  require_valid(dp);
  detail::require(dp.loops().empty(), "verify_ccw_rank_partition: decorated permutation has a loop");
  const int n = dp.n();
  detail::require(a.within(n), "verify_ccw_rank_partition: subset not contained in [n]");
  const int target = rank_of(positroid_of(dp), a);
  if (a.empty()) return target == 0;
  const int total = rank(dp);
  const std::vector<Subset> ccw = ccw_arrows(dp).member_sets();
  const std::vector<int> elements = a.members();
  for (int t = 1; t <= a.size(); ++t) {
    const bool found = detail::for_each_partition(elements, t, [&](const std::vector<Subset>& blocks) {
      int sum = 0;
      for (Subset block : blocks) sum += total - detail::count_contained(ccw, complement(n, block));
      return sum == target;
    });
    if (found) return true;
  }
  return false;
}

}  // namespace positroid

#endif  // POSITROID_ARROWS_HPP
