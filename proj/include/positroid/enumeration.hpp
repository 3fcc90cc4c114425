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

// Exhaustive, deterministic generators for decorated permutations,
// positroids and elementary flag pairs on small ground sets.
//
// Every generator is a lazy stream: call next() until it returns nullopt,
// or iterate it with a range-for loop.

#ifndef POSITROID_ENUMERATION_HPP
#define POSITROID_ENUMERATION_HPP

#include <algorithm>
#include <iterator>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "positroid/decorated_permutation.hpp"
#include "positroid/error.hpp"
#include "positroid/matroid.hpp"
#include "positroid/quotient.hpp"

namespace positroid {

/// Default ceiling for exhaustive enumeration of decorated permutations and positroids.
inline constexpr int kMaxEnumerationN = 8;
/// Default ceiling for flag-pair enumeration (quadratic in the positroid count).
inline constexpr int kMaxFlagPairN = 6;

namespace detail {

template <typename Generator>
class StreamIterator {
 public:
  using value_type = typename Generator::value_type;
  using difference_type = std::ptrdiff_t;
  using iterator_category = std::input_iterator_tag;

  StreamIterator() = default;
  explicit StreamIterator(Generator* gen) : gen_(gen) { advance(); }

  const value_type& operator*() const { return *current_; }
  const value_type* operator->() const { return &*current_; }
  StreamIterator& operator++() {
    advance();
    return *this;
  }
  void operator++(int) { advance(); }
  friend bool operator==(const StreamIterator& it, std::default_sentinel_t) {
    return !it.current_.has_value();
  }

 private:
  void advance() { current_ = gen_->next(); }

  Generator* gen_ = nullptr;
  std::optional<value_type> current_;
};

}  // namespace detail

/// Mixin giving a next()-style generator begin()/end().
template <typename Derived>
class Stream {
 public:
  auto begin() { return detail::StreamIterator<Derived>(static_cast<Derived*>(this)); }
  std::default_sentinel_t end() { return {}; }
};

template <typename Generator>
std::vector<typename Generator::value_type> collect(Generator gen) {
  std::vector<typename Generator::value_type> out;
  while (auto item = gen.next()) out.push_back(std::move(*item));
  return out;
}

/// Every decorated permutation of [n] exactly once, ordered
/// lexicographically by (perm, col) with coloop (-1) before loop (+1).
class DecoratedPermutations : public Stream<DecoratedPermutations> {
 public:
  using value_type = DecoratedPermutation;

  explicit DecoratedPermutations(int n, int max_n = kMaxEnumerationN) : n_(n) {
    detail::require(n >= 1 && n <= max_n && n <= kMaxTableGround,
                    "decorated permutation enumeration supports 1 <= n <= " +
                        std::to_string(std::min(max_n, kMaxTableGround)) + ", got " +
                        std::to_string(n));
    perm_.resize(static_cast<std::size_t>(n));
    std::iota(perm_.begin(), perm_.end(), 1);
    load_fixed_points();
  }

  std::optional<DecoratedPermutation> next() {
    if (done_) return std::nullopt;
    DecoratedPermutation dp{perm_, std::vector<int>(perm_.size(), kNone)};
    const std::size_t m = fixed_.size();
    for (std::size_t t = 0; t < m; ++t) {
      const bool loop = ((decoration_ >> (m - 1 - t)) & 1U) != 0;
      dp.col[static_cast<std::size_t>(fixed_[t] - 1)] = loop ? kLoop : kColoop;
    }
    if (++decoration_ == (std::uint64_t{1} << m)) {
      if (std::next_permutation(perm_.begin(), perm_.end())) {
        load_fixed_points();
      } else {
        done_ = true;
      }
    }
    return dp;
  }

 private:
  void load_fixed_points() {
    fixed_.clear();
    for (int i = 1; i <= n_; ++i)
      if (perm_[static_cast<std::size_t>(i - 1)] == i) fixed_.push_back(i);
    decoration_ = 0;
  }

  int n_;
  std::vector<int> perm_;
  std::vector<int> fixed_;
  std::uint64_t decoration_ = 0;
  bool done_ = false;
};

inline DecoratedPermutations all_decorated_permutations(int n, int max_n = kMaxEnumerationN) {
  return DecoratedPermutations(n, max_n);
}

struct Positroid {
  DecoratedPermutation dp;
  Matroid matroid;
};

/// The positroid of every rank-k decorated permutation of [n], in the
/// canonical decorated-permutation order.
class Positroids : public Stream<Positroids> {
 public:
  using value_type = Positroid;

  Positroids(int k, int n, int max_n = kMaxEnumerationN) : k_(k), perms_(n, max_n) {
    detail::require(k >= 0 && k <= n, "positroid enumeration needs 0 <= k <= n");
  }

  std::optional<Positroid> next() {
    while (auto dp = perms_.next()) {
      if (rank(*dp) != k_) continue;
      Matroid m = positroid_of(*dp);
      return Positroid{std::move(*dp), std::move(m)};
    }
    return std::nullopt;
  }

 private:
  int k_;
  DecoratedPermutations perms_;
};

inline Positroids all_positroids(int k, int n, int max_n = kMaxEnumerationN) {
  return Positroids(k, n, max_n);
}

/// An elementary quotient pair: the positroid of `sigma` (rank k - 1) is a
/// quotient of that of `pi` (rank k), and cyclic_shift(pi, shift_set) = sigma.
struct FlagPair {
  DecoratedPermutation sigma;
  DecoratedPermutation pi;
  Subset shift_set;
};

/// All elementary flag positroid pairs with rank(pi) = k, found by testing
/// every (sigma, pi) of ranks (k - 1, k) with the rank-inequality oracle.
/// Ordered by pi, then sigma, in the canonical order.
class ElementaryFlagPairs : public Stream<ElementaryFlagPairs> {
 public:
  using value_type = FlagPair;

  ElementaryFlagPairs(int k, int n, int max_n = kMaxFlagPairN) : pis_(k, n, max_n) {
    detail::require(k >= 1 && k <= n, "flag pair enumeration needs 1 <= k <= n");
    for (auto& p : Positroids(k - 1, n, max_n)) {
      lower_.push_back(p.dp);
      lower_ranks_.emplace_back(p.matroid);
    }
  }

  std::optional<FlagPair> next() {
    while (true) {
      if (!current_) {
        auto p = pis_.next();
        if (!p) return std::nullopt;
        current_ = std::move(p->dp);
        current_ranks_.emplace(p->matroid);
        cursor_ = 0;
      }
      while (cursor_ < lower_.size()) {
        const std::size_t idx = cursor_++;
        if (is_quotient_rank(lower_ranks_[idx], *current_ranks_).is_quotient) {
          const auto& sigma = lower_[idx];
          return FlagPair{sigma, *current_, detail::shift_set_from_conecklaces(*current_, sigma)};
        }
      }
      current_.reset();
      current_ranks_.reset();
    }
  }

 private:
  Positroids pis_;
  std::vector<DecoratedPermutation> lower_;
  std::vector<RankTable> lower_ranks_;
  std::optional<DecoratedPermutation> current_;
  std::optional<RankTable> current_ranks_;
  std::size_t cursor_ = 0;
};

inline ElementaryFlagPairs elementary_flag_pairs(int k, int n, int max_n = kMaxFlagPairN) {
  return ElementaryFlagPairs(k, n, max_n);
}

/// One elementary quotient edge below a positroid.
struct QuotientEdge {
  DecoratedPermutation sigma;
  Subset shift_set;
};

/// One positroid of a census, with optional elementary-quotient edges.
struct CensusRecord {
  int n = 0;
  int k = 0;
  DecoratedPermutation dp;
  GrassmannNecklace necklace;
  int basis_count = 0;
  std::vector<QuotientEdge> quotients;
};

/// Canonically ordered census of the rank-k positroids on [n]; with
/// `with_edges`, every record lists its elementary quotients.
inline std::vector<CensusRecord> positroid_census(int k, int n, bool with_edges,
                                                  int max_n = kMaxEnumerationN) {
  std::vector<CensusRecord> out;
  for (auto& p : Positroids(k, n, max_n)) {
    out.push_back(CensusRecord{n, k, p.dp, to_necklace(p.dp),
                               static_cast<int>(p.matroid.bases().size()), {}});
  }
  if (with_edges && k >= 1) {
    std::size_t cursor = 0;
    for (auto& pair : ElementaryFlagPairs(k, n, max_n)) {
      while (out[cursor].dp != pair.pi) ++cursor;
      out[cursor].quotients.push_back(QuotientEdge{pair.sigma, pair.shift_set});
    }
  }
  return out;
}

}  // namespace positroid

#endif  // POSITROID_ENUMERATION_HPP
