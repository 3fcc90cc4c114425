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

// Matroids given by an explicit basis family. Everything here is brute
// force and serves as the reference every faster criterion is checked against.

#ifndef POSITROID_MATROID_HPP
#define POSITROID_MATROID_HPP

#include <algorithm>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "positroid/cyclic.hpp"
#include "positroid/decorated_permutation.hpp"
#include "positroid/error.hpp"

namespace positroid {

/// Largest ground set for which exhaustive subset tables are built.
inline constexpr int kMaxTableGround = 20;

/// Ground set [n] plus a nonempty family of bases, kept sorted
/// lexicographically and free of duplicates. Construction does not check the
/// exchange axiom; see validate_matroid().
class Matroid {
 public:
  Matroid(int n, std::vector<Subset> bases) : n_(n), bases_(std::move(bases)) {
    check_ground(n);
    detail::require(!bases_.empty(), "a matroid needs at least one basis");
    for (Subset b : bases_) detail::require(b.within(n), "basis not contained in [n]");
    std::sort(bases_.begin(), bases_.end(), lex_less);
    bases_.erase(std::unique(bases_.begin(), bases_.end()), bases_.end());
  }

  int ground() const { return n_; }
  const std::vector<Subset>& bases() const { return bases_; }

  /// rk(M); meaningful once the family is known to be equicardinal.
  int rank() const { return bases_.front().size(); }

  bool has_basis(Subset s) const {
    return std::binary_search(bases_.begin(), bases_.end(), s, lex_less);
  }

  friend bool operator==(const Matroid&, const Matroid&) = default;

 private:
  int n_;
  std::vector<Subset> bases_;
};

inline Matroid uniform_matroid(int k, int n) {
  detail::require(k >= 0 && k <= n, "uniform_matroid: rank must lie in 0..n");
  return Matroid(n, k_subsets(n, k));
}

/// Equicardinality plus the basis exchange axiom, checked over all pairs.
inline bool validate_matroid(const Matroid& m) {
  const auto& bases = m.bases();
  const int k = bases.front().size();
  for (Subset b : bases)
    if (b.size() != k) return false;
  for (Subset b : bases) {
    for (Subset other : bases) {
      for (int x : (b - other).members()) {
        bool found = false;
        for (int y : (other - b).members()) {
          if (m.has_basis(b.without(x).with(y))) {
            found = true;
            break;
          }
        }
        if (!found) return false;
      }
    }
  }
  return true;
}

/// rk_M(S) = max |S & B| over bases B.
inline int rank_of(const Matroid& m, Subset s) {
  int best = 0;
  for (Subset b : m.bases()) best = std::max(best, (s & b).size());
  return best;
}

/// Rank of every subset of [n], indexed by bitmask.
class RankTable {
 public:
  explicit RankTable(const Matroid& m) : n_(m.ground()) {
    detail::require(n_ <= kMaxTableGround, "rank table: ground set too large");
    ranks_.assign(std::size_t{1} << n_, 0);
    for (std::uint64_t s = 0; s < ranks_.size(); ++s) {
      int best = 0;
      for (Subset b : m.bases()) best = std::max(best, std::popcount(s & b.bits()));
      ranks_[s] = static_cast<std::uint8_t>(best);
    }
  }

  /// Table of the uniform matroid U_{k,n}: rk(S) = min(|S|, k).
  static RankTable uniform(int k, int n) {
    check_ground(n);
    detail::require(n <= kMaxTableGround, "rank table: ground set too large");
    RankTable t;
    t.n_ = n;
    t.ranks_.resize(std::size_t{1} << n);
    for (std::uint64_t s = 0; s < t.ranks_.size(); ++s)
      t.ranks_[s] = static_cast<std::uint8_t>(std::min(std::popcount(s), k));
    return t;
  }

  int ground() const { return n_; }
  int operator()(Subset s) const { return ranks_[s.bits()]; }
  int total() const { return ranks_.back(); }

 private:
  RankTable() = default;

  int n_ = 0;
  std::vector<std::uint8_t> ranks_;
};

inline Matroid dual(const Matroid& m) {
  std::vector<Subset> bases;
  bases.reserve(m.bases().size());
  for (Subset b : m.bases()) bases.push_back(complement(m.ground(), b));
  return Matroid(m.ground(), std::move(bases));
}

namespace detail {

inline std::vector<Subset> circuits_from_ranks(const RankTable& ranks) {
  const int n = ranks.ground();
  std::vector<Subset> out;
  for (std::uint64_t bits = 1; bits < (std::uint64_t{1} << n); ++bits) {
    const Subset s = Subset::from_bits(bits);
    if (ranks(s) == s.size()) continue;
    bool minimal = true;
    for (int x : s.members()) {
      const Subset t = s.without(x);
      if (ranks(t) != t.size()) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back(s);
  }
  std::sort(out.begin(), out.end(), lex_less);
  return out;
}

}  // namespace detail

/// All minimal dependent sets, sorted lexicographically.
inline std::vector<Subset> circuits(const Matroid& m) {
  return detail::circuits_from_ranks(RankTable(m));
}

/// (loops, coloops): elements in no basis and in every basis.
inline std::pair<Subset, Subset> loops_and_coloops(const Matroid& m) {
  Subset in_some;
  Subset in_all = Subset::full(m.ground());
  for (Subset b : m.bases()) {
    in_some = in_some | b;
    in_all = in_all & b;
  }
  return {complement(m.ground(), in_some), in_all};
}

/// B(I) = { B : I_i <=_i B for all i }.
inline Matroid bases_from_necklace(const GrassmannNecklace& necklace) {
  detail::require(satisfies_necklace_axioms(necklace),
                  "bases_from_necklace: sequence violates the Grassmann necklace axioms");
  const int n = necklace.n;
  std::vector<Subset> bases;
  for (Subset candidate : k_subsets(n, necklace.k)) {
    bool ok = true;
    for (int i = 1; i <= n && ok; ++i) ok = gale_leq(n, i, necklace.entry(i), candidate);
    if (ok) bases.push_back(candidate);
  }
  detail::require(!bases.empty(), "bases_from_necklace: no k-subset dominates the necklace");
  return Matroid(n, std::move(bases));
}

/// The positroid whose decorated permutation is `dp`.
inline Matroid positroid_of(const DecoratedPermutation& dp) {
  return bases_from_necklace(to_necklace(dp));
}

/// Entry i is the <=_i-minimum basis.
inline GrassmannNecklace necklace_of_matroid(const Matroid& m) {
  GrassmannNecklace out;
  out.n = m.ground();
  out.k = m.rank();
  for (int i = 1; i <= m.ground(); ++i) out.entries.push_back(gale_min(m.ground(), i, m.bases()));
  return out;
}

/// Entry i is the <=_i-maximum basis.
inline GrassmannNecklace conecklace_of_matroid(const Matroid& m) {
  GrassmannNecklace out;
  out.n = m.ground();
  out.k = m.rank();
  out.orientation = GrassmannNecklace::Orientation::kConecklace;
  for (int i = 1; i <= m.ground(); ++i) out.entries.push_back(gale_max(m.ground(), i, m.bases()));
  return out;
}

/// Whether the bases are exactly those dominating the matroid's own necklace.
inline bool is_positroid(const Matroid& m) {
  const GrassmannNecklace necklace = necklace_of_matroid(m);
  if (!satisfies_necklace_axioms(necklace)) return false;
  return bases_from_necklace(necklace).bases() == m.bases();
}

}  // namespace positroid

#endif  // POSITROID_MATROID_HPP
