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

// Quotient criteria. Two brute-force oracles (rank inequality, circuit
// unions) and the structural criteria checked against them: the CW-arrow
// test for quotients of uniform matroids, shift-set recovery for elementary
// quotients, necklace/conecklace containment and the CCW covering condition.

#ifndef POSITROID_QUOTIENT_HPP
#define POSITROID_QUOTIENT_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "positroid/arrows.hpp"
#include "positroid/cyclic.hpp"
#include "positroid/decorated_permutation.hpp"
#include "positroid/error.hpp"
#include "positroid/matroid.hpp"

namespace positroid {

/// rk_M(larger) - rk_M(smaller) > rk_N(larger) - rk_N(smaller) with smaller ⊆ larger.
struct RankViolation {
  Subset smaller;
  Subset larger;
  friend bool operator==(const RankViolation&, const RankViolation&) = default;
};

/// A circuit of N that is not a union of circuits of M.
struct CircuitViolation {
  Subset circuit;
  friend bool operator==(const CircuitViolation&, const CircuitViolation&) = default;
};

/// r + 1 CW-arrows (by start position) whose union has at most k elements.
struct ArrowViolation {
  std::vector<int> starts;
  Subset arrow_union;
  friend bool operator==(const ArrowViolation&, const ArrowViolation&) = default;
};

/// A coloop of the smaller positroid; coloops lie in no circuit.
struct ColoopViolation {
  int element = 0;
  friend bool operator==(const ColoopViolation&, const ColoopViolation&) = default;
};

/// The frozen set A of a cyclic shift relating an elementary quotient pair.
struct ShiftSetWitness {
  Subset frozen;
  friend bool operator==(const ShiftSetWitness&, const ShiftSetWitness&) = default;
};

/// First index at which I'_i ⊄ I_i (or J'_i ⊄ J_i).
struct ContainmentViolation {
  GrassmannNecklace::Orientation orientation;
  int index = 0;
  friend bool operator==(const ContainmentViolation&, const ContainmentViolation&) = default;
};

/// Failure of the lattice-path greedy pairing; `step` is 0 for the subset tests.
struct PairingViolation {
  std::string reason;
  int step = 0;
  friend bool operator==(const PairingViolation&, const PairingViolation&) = default;
};

using Witness = std::variant<RankViolation, CircuitViolation, ArrowViolation, ColoopViolation,
                             ShiftSetWitness, ContainmentViolation, PairingViolation>;

struct QuotientVerdict {
  bool is_quotient = false;
  std::optional<Witness> witness;

  explicit operator bool() const { return is_quotient; }
  friend bool operator==(const QuotientVerdict&, const QuotientVerdict&) = default;
};

namespace detail {

inline void require_same_ground(int a, int b, const char* op) {
  require(a == b, std::string(op) + ": ground sets differ");
}

// Larger sets are scanned from [n] downwards, smaller sets upwards within
// each larger one; the first violation in that order is reported.
inline std::optional<RankViolation> first_rank_violation(const RankTable& m, const RankTable& n) {
  const std::uint64_t full = Subset::full(m.ground()).bits();
  for (std::uint64_t b = full;; --b) {
    const int dm = m(Subset::from_bits(b));
    const int dn = n(Subset::from_bits(b));
    std::uint64_t a = 0;
    do {
      const Subset sa = Subset::from_bits(a);
      if (dm - m(sa) > dn - n(sa)) return RankViolation{sa, Subset::from_bits(b)};
      a = (a - b) & b;
    } while (a != 0);
    if (b == 0) break;
  }
  return std::nullopt;
}

// union_table[S] = union of the circuits contained in S.
inline std::vector<std::uint64_t> circuit_union_table(const RankTable& ranks) {
  const int n = ranks.ground();
  std::vector<std::uint64_t> table(std::size_t{1} << n, 0);
  for (std::uint64_t s = 1; s < table.size(); ++s) {
    const Subset set = Subset::from_bits(s);
    std::uint64_t acc = 0;
    bool minimal_dependent = ranks(set) < set.size();
    for (std::uint64_t rest = s; rest != 0; rest &= rest - 1) {
      const std::uint64_t sub = s & ~(rest & (~rest + 1));
      acc |= table[sub];
      if (ranks(Subset::from_bits(sub)) < std::popcount(sub)) minimal_dependent = false;
    }
    table[s] = minimal_dependent ? (acc | s) : acc;
  }
  return table;
}

}  // namespace detail

/// Rank-inequality oracle on precomputed rank tables.
inline QuotientVerdict is_quotient_rank(const RankTable& m, const RankTable& n) {
  detail::require_same_ground(m.ground(), n.ground(), "is_quotient_rank");
  if (auto v = detail::first_rank_violation(m, n)) return {false, Witness{*v}};
  return {true, std::nullopt};
}

/// M is a quotient of N iff rk_M(B) - rk_M(A) <= rk_N(B) - rk_N(A) for all A ⊆ B.
inline QuotientVerdict is_quotient_rank(const Matroid& m, const Matroid& n) {
  detail::require_same_ground(m.ground(), n.ground(), "is_quotient_rank");
  detail::require(validate_matroid(m) && validate_matroid(n), "is_quotient_rank: invalid matroid");
  return is_quotient_rank(RankTable(m), RankTable(n));
}

/// Circuit oracle: every circuit of N is the union of the M-circuits inside it.
inline QuotientVerdict is_quotient_circuits(const Matroid& m, const Matroid& n) {
  detail::require_same_ground(m.ground(), n.ground(), "is_quotient_circuits");
  detail::require(validate_matroid(m) && validate_matroid(n),
                  "is_quotient_circuits: invalid matroid");
  const auto unions = detail::circuit_union_table(RankTable(m));
  for (Subset c : circuits(n)) {
    if (unions[c.bits()] != c.bits()) return {false, Witness{CircuitViolation{c}}};
  }
  return {true, std::nullopt};
}

namespace detail {

// Lexicographically first (r+1)-subset of arrow positions whose union has
// fewer than k + 1 elements.
inline std::optional<ArrowViolation> first_arrow_violation(const std::vector<Subset>& arrows, int pick,
                                                           int k) {
  const int n = static_cast<int>(arrows.size());
  std::vector<int> idx(static_cast<std::size_t>(pick));
  for (int i = 0; i < pick; ++i) idx[static_cast<std::size_t>(i)] = i;
  while (true) {
    Subset u;
    for (int i : idx) u = u | arrows[static_cast<std::size_t>(i)];
    if (u.size() < k + 1) {
      ArrowViolation v{{}, u};
      for (int i : idx) v.starts.push_back(i + 1);
      return v;
    }
    int pos = pick - 1;
    while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == n - pick + pos) --pos;
    if (pos < 0) return std::nullopt;
    ++idx[static_cast<std::size_t>(pos)];
    for (int j = pos + 1; j < pick; ++j)
      idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  }
}

inline int uniform_slack(const DecoratedPermutation& dp, int k) {
  require_valid(dp);
  require(k >= 0 && k < dp.n(), "is_quotient_of_uniform: need 0 <= k < n");
  const int r = k - rank(dp);
  require(r >= 0, "is_quotient_of_uniform: rank of the positroid exceeds k");
  return r;
}

}  // namespace detail

/// The arrow-union condition alone: every r + 1 CW-arrows cover at least
/// k + 1 elements, r = k - rank(dp). Returns the first failing selection.
inline std::optional<ArrowViolation> arrow_union_violation(const DecoratedPermutation& dp, int k) {
  const int r = detail::uniform_slack(dp, k);
  return detail::first_arrow_violation(cw_arrows(dp).member_sets(), r + 1, k);
}

/// The equivalent counting form: cw(A) <= r for every k-subset A.
/// Needs a coloop-free dp.
inline bool cw_subset_condition(const DecoratedPermutation& dp, int k) {
  const int r = detail::uniform_slack(dp, k);
  for (Subset a : k_subsets(dp.n(), k))
    if (cw_function(dp, a) > r) return false;
  return true;
}

/// Whether the positroid of `dp` is a quotient of U_{k,n}, by the CW-arrow criterion.
inline QuotientVerdict is_quotient_of_uniform(const DecoratedPermutation& dp, int k) {
  detail::uniform_slack(dp, k);
  if (const Subset coloops = dp.coloops(); !coloops.empty()) {
    return {false, Witness{ColoopViolation{coloops.min_element()}}};
  }
  auto violation = arrow_union_violation(dp, k);
#ifdef POSITROID_CROSS_CHECK
  if (violation.has_value() == cw_subset_condition(dp, k)) {
    throw std::logic_error("is_quotient_of_uniform: arrow and cw formulations disagree");
  }
#endif
  if (violation) return {false, Witness{*violation}};
  return {true, std::nullopt};
}

namespace detail {

// [n] \ union_i (J^pi_i \ J^sigma_i).
inline Subset shift_set_from_conecklaces(const DecoratedPermutation& pi,
                                         const DecoratedPermutation& sigma) {
  const GrassmannNecklace jp = conecklace(pi);
  const GrassmannNecklace js = conecklace(sigma);
  Subset moved;
  for (int i = 1; i <= pi.n(); ++i) moved = moved | (jp.entry(i) - js.entry(i));
  return complement(pi.n(), moved);
}

inline Subset agreement_set(const DecoratedPermutation& pi, const DecoratedPermutation& sigma) {
  Subset same;
  for (int a = 1; a <= pi.n(); ++a)
    if (pi.image(a) == sigma.image(a) && pi.decoration(a) == sigma.decoration(a)) same.insert(a);
  return same;
}

inline bool necklace_contained(const GrassmannNecklace& smaller, const GrassmannNecklace& larger) {
  for (int i = 1; i <= smaller.n; ++i)
    if (!smaller.entry(i).is_subset_of(larger.entry(i))) return false;
  return true;
}

}  // namespace detail

/// For an elementary quotient pair (sigma below pi), the frozen set A with
/// cyclic_shift(pi, A) = sigma, read off the conecklaces. The pair is
/// verified with the rank oracle first.
inline Subset recover_shift_set(const DecoratedPermutation& pi, const DecoratedPermutation& sigma) {
  require_valid(pi);
  require_valid(sigma);
  detail::require_same_ground(pi.n(), sigma.n(), "recover_shift_set");
  detail::require(rank(sigma) + 1 == rank(pi),
                  "recover_shift_set: ranks do not differ by exactly one");
  detail::require(is_quotient_rank(positroid_of(sigma), positroid_of(pi)).is_quotient,
                  "recover_shift_set: not an elementary quotient pair");
  return detail::shift_set_from_conecklaces(pi, sigma);
}

/// Some A with cyclic_shift(pi, A) = sigma exists iff I^sigma_i ⊆ I^pi_i for
/// all i; returns the agreement set in that case.
inline std::optional<Subset> exists_shift(const DecoratedPermutation& pi,
                                          const DecoratedPermutation& sigma) {
  require_valid(pi);
  require_valid(sigma);
  detail::require_same_ground(pi.n(), sigma.n(), "exists_shift");
  detail::require(rank(sigma) + 1 == rank(pi), "exists_shift: ranks do not differ by exactly one");
  if (!detail::necklace_contained(to_necklace(sigma), to_necklace(pi))) return std::nullopt;
  return detail::agreement_set(pi, sigma);
}

struct Containment {
  bool necklace = false;
  bool conecklace = false;
  friend bool operator==(const Containment&, const Containment&) = default;
};

/// Entrywise necklace and conecklace containment of sigma in pi. Computed
/// on the necklaces and again on Grassmann intervals; the routes must agree.
inline Containment containment_check(const DecoratedPermutation& sigma,
                                     const DecoratedPermutation& pi) {
  require_valid(sigma);
  require_valid(pi);
  detail::require_same_ground(sigma.n(), pi.n(), "containment_check");
  const int n = pi.n();
  const Containment by_necklace{
      detail::necklace_contained(to_necklace(sigma), to_necklace(pi)),
      detail::necklace_contained(conecklace(sigma), conecklace(pi))};
  Containment by_interval{true, true};
  for (int i = 1; i <= n; ++i) {
    if (!grassmann_interval(sigma, i).members().is_subset_of(grassmann_interval(pi, i).members()))
      by_interval.necklace = false;
    if (!grassmann_interval(sigma, sigma.image(i))
             .members()
             .is_subset_of(grassmann_interval(pi, pi.image(i)).members()))
      by_interval.conecklace = false;
  }
  if (by_necklace != by_interval) {
    throw std::logic_error("containment_check: necklace and interval routes disagree");
  }
  return by_necklace;
}

/// Whether every pair of distinct cyclic components of A has at most k - 1
/// elements in total; with fewer than two components, each component alone
/// must have at most k - 1 elements.
inline bool uniform_elementary_check(Subset a, int k, int n) {
  check_ground(n);
  detail::require(k >= 1 && k <= n - 1, "uniform_elementary_check: need 1 <= k <= n - 1");
  detail::require(a.within(n) && a != Subset::full(n),
                  "uniform_elementary_check: A must be a proper subset of [n]");
  const auto parts = cyclic_components(n, a);
  if (parts.size() <= 1) return parts.empty() || parts.front().size() <= k - 1;
  for (std::size_t i = 0; i < parts.size(); ++i)
    for (std::size_t j = i + 1; j < parts.size(); ++j)
      if (parts[i].size() + parts[j].size() > k - 1) return false;
  return true;
}

/// Every CCW-arrow of M equals the union of the CCW-arrows of N it contains.
/// Both positroids must be free of loops and coloops.
inline bool oh_xiang_condition(const DecoratedPermutation& m_dp, const DecoratedPermutation& n_dp) {
  require_valid(m_dp);
  require_valid(n_dp);
  detail::require_same_ground(m_dp.n(), n_dp.n(), "oh_xiang_condition");
  detail::require(m_dp.loops().empty() && m_dp.coloops().empty() && n_dp.loops().empty() &&
                      n_dp.coloops().empty(),
                  "oh_xiang_condition: positroids must have no loops or coloops");
  const auto big = ccw_arrows(n_dp).member_sets();
  for (Subset arrow : ccw_arrows(m_dp).member_sets()) {
    Subset covered;
    for (Subset piece : big)
      if (piece.is_subset_of(arrow)) covered = covered | piece;
    if (covered != arrow) return false;
  }
  return true;
}

}  // namespace positroid

#endif  // POSITROID_QUOTIENT_HPP
