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

// Cyclic orders on [n] = {1, ..., n}, Gale orders on k-subsets, cyclic
// intervals and the cyclic-component decomposition of a proper subset.
//
// Elements are 1-indexed everywhere. A Subset is a 64-bit mask in which
// element e occupies bit e - 1, so ground sets are limited to n <= 64.

#ifndef POSITROID_CYCLIC_HPP
#define POSITROID_CYCLIC_HPP

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "positroid/error.hpp"

namespace positroid {

inline constexpr int kMaxGroundSize = 64;

inline void check_ground(int n) {
  detail::require(n >= 1 && n <= kMaxGroundSize,
                  "ground set size must lie in 1..64, got " + std::to_string(n));
}

inline void check_element(int n, int e) {
  detail::require(e >= 1 && e <= n, "element " + std::to_string(e) +
                                        " is outside [" + std::to_string(n) + "]");
}

/// Cyclic successor / predecessor in [n].
constexpr int cyclic_next(int n, int e) { return e == n ? 1 : e + 1; }
constexpr int cyclic_prev(int n, int e) { return e == 1 ? n : e - 1; }

class Subset {
 public:
  constexpr Subset() = default;

  static constexpr Subset from_bits(std::uint64_t bits) {
    Subset s;
    s.bits_ = bits;
    return s;
  }

  static Subset of(std::initializer_list<int> elements) {
    Subset s;
    for (int e : elements) s.insert(e);
    return s;
  }

  static Subset of(std::span<const int> elements) {
    Subset s;
    for (int e : elements) s.insert(e);
    return s;
  }

  static constexpr Subset full(int n) {
    return from_bits(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }

  constexpr bool contains(int e) const {
    return e >= 1 && e <= 64 && ((bits_ >> (e - 1)) & 1U) != 0;
  }

  Subset& insert(int e) {
    detail::require(e >= 1 && e <= kMaxGroundSize,
                    "subset element out of range: " + std::to_string(e));
    bits_ |= std::uint64_t{1} << (e - 1);
    return *this;
  }

  constexpr Subset& erase(int e) {
    if (e >= 1 && e <= 64) bits_ &= ~(std::uint64_t{1} << (e - 1));
    return *this;
  }

  constexpr Subset with(int e) const { return from_bits(bits_ | (std::uint64_t{1} << (e - 1))); }
  constexpr Subset without(int e) const {
    return from_bits(bits_ & ~(std::uint64_t{1} << (e - 1)));
  }

  constexpr bool is_subset_of(Subset other) const { return (bits_ & ~other.bits_) == 0; }

  /// Smallest / largest member in the usual order; 0 when empty.
  constexpr int min_element() const { return empty() ? 0 : std::countr_zero(bits_) + 1; }
  constexpr int max_element() const { return empty() ? 0 : 64 - std::countl_zero(bits_); }

  std::vector<int> members() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b) + 1);
    return out;
  }

  /// True when every member lies in [n].
  constexpr bool within(int n) const { return is_subset_of(full(n)); }

  friend constexpr Subset operator|(Subset a, Subset b) { return from_bits(a.bits_ | b.bits_); }
  friend constexpr Subset operator&(Subset a, Subset b) { return from_bits(a.bits_ & b.bits_); }
  friend constexpr Subset operator-(Subset a, Subset b) { return from_bits(a.bits_ & ~b.bits_); }
  friend constexpr bool operator==(Subset a, Subset b) = default;
  friend constexpr auto operator<=>(Subset a, Subset b) { return a.bits_ <=> b.bits_; }

 private:
  std::uint64_t bits_ = 0;
};

/// Complement of `s` inside [n].
constexpr Subset complement(int n, Subset s) { return Subset::full(n) - s; }

/// Lexicographic order on sorted member lists: {1,2,4} < {1,3} < {2}.
constexpr bool lex_less(Subset a, Subset b) {
  if (a == b) return false;
  const std::uint64_t diff = a.bits() ^ b.bits();
  const int pos = std::countr_zero(diff);
  const std::uint64_t above = pos == 63 ? 0 : ~std::uint64_t{0} << (pos + 1);
  if ((a.bits() >> pos) & 1U) {
    // a has the smaller element at the first difference unless b has ended.
    return (b.bits() & above) != 0;
  }
  return (a.bits() & above) == 0;
}

inline std::ostream& operator<<(std::ostream& os, Subset s) {
  os << '{';
  bool first = true;
  for (int e : s.members()) {
    if (!first) os << ',';
    os << e;
    first = false;
  }
  return os << '}';
}

/// All k-subsets of [n] in increasing bitmask order (Gosper's hack).
inline std::vector<Subset> k_subsets(int n, int k) {
  check_ground(n);
  detail::require(n < 64, "k_subsets: ground set too large to enumerate");
  std::vector<Subset> out;
  if (k < 0 || k > n) return out;
  if (k == 0) return {Subset{}};
  const std::uint64_t limit = std::uint64_t{1} << n;
  for (std::uint64_t x = (std::uint64_t{1} << k) - 1; x < limit;) {
    out.push_back(Subset::from_bits(x));
    const std::uint64_t c = x & (~x + 1);
    const std::uint64_t r = x + c;
    x = (((r ^ x) >> 2) / c) | r;
  }
  return out;
}

/// Position of x in the rotated order i <_i i+1 <_i ... <_i i-1 (0-based).
constexpr int cyclic_position(int n, int i, int x) { return (x - i + n) % n; }

/// a <=_i b in the cyclic order starting at i.
inline bool cyclic_leq(int n, int i, int a, int b) {
  check_ground(n);
  check_element(n, i);
  check_element(n, a);
  check_element(n, b);
  return cyclic_position(n, i, a) <= cyclic_position(n, i, b);
}

namespace detail {

// Relabels `s` so that bit p holds the element at position p of <_i.
constexpr std::uint64_t rotate_to(int n, int i, Subset s) {
  if (i == 1) return s.bits();
  const int shift = i - 1;
  const std::uint64_t lo = s.bits() >> shift;
  const std::uint64_t hi = s.bits() << (n - shift);
  return (lo | hi) & Subset::full(n).bits();
}

}  // namespace detail

/// Gale order induced by <_i. Equivalent to the componentwise comparison of
/// the <_i-sorted members: every <_i-prefix of [n] meets A at least as often
/// as it meets B.
inline bool gale_leq(int n, int i, Subset a, Subset b) {
  check_ground(n);
  check_element(n, i);
  detail::require(a.within(n) && b.within(n), "gale_leq: subset not contained in [n]");
  detail::require(a.size() == b.size(), "gale_leq: subsets have different cardinalities");
  const std::uint64_t ra = detail::rotate_to(n, i, a);
  const std::uint64_t rb = detail::rotate_to(n, i, b);
  int count_a = 0;
  int count_b = 0;
  for (int p = 0; p < n; ++p) {
    count_a += static_cast<int>((ra >> p) & 1U);
    count_b += static_cast<int>((rb >> p) & 1U);
    if (count_a < count_b) return false;
  }
  return true;
}

namespace detail {

template <bool Minimum>
Subset gale_extreme(int n, int i, std::span<const Subset> family) {
  require(!family.empty(), "Gale extremum of an empty family");
  const int k = family.front().size();
  for (Subset s : family) require(s.size() == k, "Gale extremum of a non-equicardinal family");
  auto below = [&](Subset x, Subset y) {
    return Minimum ? gale_leq(n, i, x, y) : gale_leq(n, i, y, x);
  };
  // A true extremum, if it exists, survives this scan.
  Subset best = family.front();
  for (Subset s : family) {
    if (below(s, best)) best = s;
  }
  for (Subset s : family) {
    require(below(best, s), std::string("family has no unique Gale ") +
                                (Minimum ? "minimum" : "maximum") + " under <_" +
                                std::to_string(i) + "; not a matroid basis family");
  }
  return best;
}

}  // namespace detail

/// The unique <=_{G,i}-minimum of a matroid's basis family.
inline Subset gale_min(int n, int i, std::span<const Subset> family) {
  return detail::gale_extreme<true>(n, i, family);
}

inline Subset gale_max(int n, int i, std::span<const Subset> family) {
  return detail::gale_extreme<false>(n, i, family);
}

/// An arc of the circle 1 -> 2 -> ... -> n -> 1. Arc(a, b) is
/// {a, a+1, ..., b} read cyclically and is never empty.
class CyclicInterval {
 public:
  enum class Kind { kEmpty, kFull, kArc };

  static CyclicInterval empty(int n) { return CyclicInterval(n, Kind::kEmpty, 0, 0); }
  static CyclicInterval full(int n) { return CyclicInterval(n, Kind::kFull, 0, 0); }

  static CyclicInterval arc(int n, int start, int end) {
    check_element(n, start);
    check_element(n, end);
    return CyclicInterval(n, Kind::kArc, start, end);
  }

  /// (a, b]; the convention (a, a] is empty.
  static CyclicInterval half_open(int n, int a, int b) {
    check_element(n, a);
    check_element(n, b);
    if (a == b) return empty(n);
    return arc(n, cyclic_next(n, a), b);
  }

  int ground() const { return n_; }
  Kind kind() const { return kind_; }
  int start() const { return start_; }
  int end() const { return end_; }

  int size() const {
    switch (kind_) {
      case Kind::kEmpty:
        return 0;
      case Kind::kFull:
        return n_;
      case Kind::kArc:
        break;
    }
    return (end_ - start_ + n_) % n_ + 1;
  }

  Subset members() const {
    if (kind_ == Kind::kEmpty) return {};
    if (kind_ == Kind::kFull) return Subset::full(n_);
    Subset out;
    for (int e = start_;; e = cyclic_next(n_, e)) {
      out.insert(e);
      if (e == end_) break;
    }
    return out;
  }

  friend bool operator==(const CyclicInterval&, const CyclicInterval&) = default;

 private:
  CyclicInterval(int n, Kind kind, int start, int end)
      : n_(n), kind_(kind), start_(start), end_(end) {
    check_ground(n);
  }

  int n_;
  Kind kind_;
  int start_;
  int end_;
};

inline std::ostream& operator<<(std::ostream& os, const CyclicInterval& interval) {
  switch (interval.kind()) {
    case CyclicInterval::Kind::kEmpty:
      return os << "Empty";
    case CyclicInterval::Kind::kFull:
      return os << "Full";
    case CyclicInterval::Kind::kArc:
      break;
  }
  return os << "Arc(" << interval.start() << ',' << interval.end() << ')';
}

inline Subset interval_members(const CyclicInterval& interval) { return interval.members(); }

/// Splits a proper subset of [n] into maximal, pairwise non-adjacent arcs,
/// ordered by increasing start element.
inline std::vector<CyclicInterval> cyclic_components(int n, Subset a) {
  check_ground(n);
  detail::require(a.within(n), "cyclic_components: subset not contained in [n]");
  detail::require(a != Subset::full(n),
                  "cyclic_components: the full ground set has no cyclic components");
  std::vector<CyclicInterval> parts;
  for (int s = 1; s <= n; ++s) {
    if (!a.contains(s) || a.contains(cyclic_prev(n, s))) continue;
    int e = s;
    while (a.contains(cyclic_next(n, e))) e = cyclic_next(n, e);
    parts.push_back(CyclicInterval::arc(n, s, e));
  }
  return parts;
}

}  // namespace positroid

#endif  // POSITROID_CYCLIC_HPP
