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

// Decorated permutations, Grassmann necklaces and conecklaces, Grassmann
// intervals and matrices, shift intervals and the cyclic shift operation.

#ifndef POSITROID_DECORATED_PERMUTATION_HPP
#define POSITROID_DECORATED_PERMUTATION_HPP

#include <cstdint>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "positroid/cyclic.hpp"
#include "positroid/error.hpp"

namespace positroid {

/// Decoration of a position: kNone on unfixed points, kLoop (overline) and
/// kColoop (underline) on fixed points.
enum Decoration : int { kColoop = -1, kNone = 0, kLoop = 1 };

/// A permutation of [n] together with a decoration of its fixed points.
/// `perm[i - 1]` is the image of i; `col[i - 1]` its decoration.
///
/// The struct is a plain value; it may hold invalid data (see validate()).
/// Every operation below other than validate() requires a valid input.
struct DecoratedPermutation {
  std::vector<int> perm;
  std::vector<int> col;

  int n() const { return static_cast<int>(perm.size()); }
  int image(int i) const { return perm[static_cast<std::size_t>(i - 1)]; }
  int decoration(int i) const { return col[static_cast<std::size_t>(i - 1)]; }
  bool is_loop(int i) const { return image(i) == i && decoration(i) == kLoop; }
  bool is_coloop(int i) const { return image(i) == i && decoration(i) == kColoop; }

  std::vector<int> inverse() const {
    std::vector<int> inv(perm.size());
    for (std::size_t i = 0; i < perm.size(); ++i) {
      inv[static_cast<std::size_t>(perm[i] - 1)] = static_cast<int>(i) + 1;
    }
    return inv;
  }

  Subset loops() const {
    Subset s;
    for (int i = 1; i <= n(); ++i)
      if (is_loop(i)) s.insert(i);
    return s;
  }

  Subset coloops() const {
    Subset s;
    for (int i = 1; i <= n(); ++i)
      if (is_coloop(i)) s.insert(i);
    return s;
  }

  friend bool operator==(const DecoratedPermutation&, const DecoratedPermutation&) = default;
};

/// Whether perm is a bijection of [n] and col vanishes exactly off the fixed points.
inline bool validate(const DecoratedPermutation& dp) {
  const int n = dp.n();
  if (n < 1 || n > kMaxGroundSize || dp.col.size() != dp.perm.size()) return false;
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (int i = 1; i <= n; ++i) {
    const int v = dp.image(i);
    if (v < 1 || v > n || seen[static_cast<std::size_t>(v)]) return false;
    seen[static_cast<std::size_t>(v)] = true;
    const int c = dp.decoration(i);
    if (v == i ? (c != kLoop && c != kColoop) : c != kNone) return false;
  }
  return true;
}

inline void require_valid(const DecoratedPermutation& dp) {
  detail::require(validate(dp), "invalid decorated permutation");
}

/// Builds a decorated permutation from images and decorations, rejecting invalid data.
inline DecoratedPermutation make_decorated_permutation(std::vector<int> perm, std::vector<int> col) {
  DecoratedPermutation dp{std::move(perm), std::move(col)};
  require_valid(dp);
  return dp;
}

/// Compact text form: images separated by spaces, suffix "o" on loops and
/// "c" on coloops, e.g. "1o 6 5 4o 2 3 7c".
inline std::string to_text(const DecoratedPermutation& dp) {
  std::string out;
  for (int i = 1; i <= dp.n(); ++i) {
    if (i > 1) out += ' ';
    out += std::to_string(dp.image(i));
    if (dp.decoration(i) == kLoop) out += 'o';
    if (dp.decoration(i) == kColoop) out += 'c';
  }
  return out;
}

inline std::ostream& operator<<(std::ostream& os, const DecoratedPermutation& dp) {
  return os << '[' << to_text(dp) << ']';
}

/// A Grassmann necklace (I_1, ..., I_n) of type (k, n), or a conecklace
/// stored in the same shape. Only necklaces are subject to the axioms.
struct GrassmannNecklace {
  enum class Orientation { kNecklace, kConecklace };

  int n = 0;
  int k = 0;
  std::vector<Subset> entries;
  Orientation orientation = Orientation::kNecklace;

  Subset entry(int i) const { return entries[static_cast<std::size_t>(i - 1)]; }

  friend bool operator==(const GrassmannNecklace&, const GrassmannNecklace&) = default;
};

inline std::ostream& operator<<(std::ostream& os, const GrassmannNecklace& necklace) {
  os << '(';
  for (std::size_t i = 0; i < necklace.entries.size(); ++i) {
    if (i > 0) os << ", ";
    os << necklace.entries[i];
  }
  return os << ')';
}

/// Checks the necklace axioms with I_{n+1} = I_1.
inline bool satisfies_necklace_axioms(const GrassmannNecklace& necklace) {
  const int n = necklace.n;
  if (n < 1 || n > kMaxGroundSize || static_cast<int>(necklace.entries.size()) != n) return false;
  if (necklace.k < 0 || necklace.k > n) return false;
  for (Subset s : necklace.entries) {
    if (!s.within(n) || s.size() != necklace.k) return false;
  }
  for (int i = 1; i <= n; ++i) {
    const Subset cur = necklace.entry(i);
    const Subset next = necklace.entry(cyclic_next(n, i));
    if (!cur.contains(i)) {
      if (next != cur) return false;
    } else if (!(cur.without(i)).is_subset_of(next)) {
      return false;
    }
  }
  return true;
}

namespace detail {

inline Subset anti_exceedances(const DecoratedPermutation& dp, const std::vector<int>& inv, int i) {
  const int n = dp.n();
  Subset w;
  for (int j = 1; j <= n; ++j) {
    const int pre = inv[static_cast<std::size_t>(j - 1)];
    if (cyclic_position(n, i, j) < cyclic_position(n, i, pre) || dp.is_coloop(j)) w.insert(j);
  }
  return w;
}

}  // namespace detail

/// W_i = { j : j <_i perm^{-1}(j) or j is a coloop }.
inline Subset anti_exceedances(const DecoratedPermutation& dp, int i) {
  require_valid(dp);
  check_element(dp.n(), i);
  return detail::anti_exceedances(dp, dp.inverse(), i);
}

inline int rank(const DecoratedPermutation& dp) { return anti_exceedances(dp, 1).size(); }

inline GrassmannNecklace to_necklace(const DecoratedPermutation& dp) {
  require_valid(dp);
  GrassmannNecklace necklace;
  necklace.n = dp.n();
  const std::vector<int> inv = dp.inverse();
  for (int i = 1; i <= dp.n(); ++i) necklace.entries.push_back(detail::anti_exceedances(dp, inv, i));
  necklace.k = necklace.entries.front().size();
  return necklace;
}

/// Inverse of to_necklace.
inline DecoratedPermutation from_necklace(const GrassmannNecklace& necklace) {
  detail::require(necklace.orientation == GrassmannNecklace::Orientation::kNecklace,
                  "from_necklace: input is tagged as a conecklace");
  detail::require(satisfies_necklace_axioms(necklace),
                  "from_necklace: sequence violates the Grassmann necklace axioms");
  const int n = necklace.n;
  DecoratedPermutation dp{std::vector<int>(static_cast<std::size_t>(n)),
                          std::vector<int>(static_cast<std::size_t>(n))};
  for (int i = 1; i <= n; ++i) {
    const Subset cur = necklace.entry(i);
    const Subset next = necklace.entry(cyclic_next(n, i));
    auto& image = dp.perm[static_cast<std::size_t>(i - 1)];
    auto& col = dp.col[static_cast<std::size_t>(i - 1)];
    if (next == cur) {
      image = i;
      col = cur.contains(i) ? kColoop : kLoop;
    } else {
      image = (next - cur).min_element();
      col = kNone;
    }
  }
  detail::require(validate(dp), "from_necklace: necklace does not encode a permutation");
  return dp;
}

/// J_i = perm^{-1}(I_i).
inline GrassmannNecklace conecklace(const DecoratedPermutation& dp) {
  GrassmannNecklace necklace = to_necklace(dp);
  const std::vector<int> inv = dp.inverse();
  for (Subset& entry : necklace.entries) {
    Subset mapped;
    for (int a : entry.members()) mapped.insert(inv[static_cast<std::size_t>(a - 1)]);
    entry = mapped;
  }
  necklace.orientation = GrassmannNecklace::Orientation::kConecklace;
  return necklace;
}

/// S_i = (perm^{-1}(i), i]; all of [n] when i is a coloop.
inline CyclicInterval grassmann_interval(const DecoratedPermutation& dp, int i) {
  require_valid(dp);
  const int n = dp.n();
  check_element(n, i);
  if (dp.is_coloop(i)) return CyclicInterval::full(n);
  const std::vector<int> inv = dp.inverse();
  return CyclicInterval::half_open(n, inv[static_cast<std::size_t>(i - 1)], i);
}

/// n x n 0/1 matrix whose row i is the indicator of S_i.
struct GrassmannMatrix {
  int n = 0;
  std::vector<std::uint8_t> cells;  // row-major

  int at(int row, int column) const {
    return cells[static_cast<std::size_t>((row - 1) * n + (column - 1))];
  }

  Subset row(int i) const {
    Subset s;
    for (int j = 1; j <= n; ++j)
      if (at(i, j) != 0) s.insert(j);
    return s;
  }

  Subset column(int j) const {
    Subset s;
    for (int i = 1; i <= n; ++i)
      if (at(i, j) != 0) s.insert(i);
    return s;
  }

  int column_sum(int j) const { return column(j).size(); }

  friend bool operator==(const GrassmannMatrix&, const GrassmannMatrix&) = default;
};

inline GrassmannMatrix grassmann_matrix(const DecoratedPermutation& dp) {
  require_valid(dp);
  const int n = dp.n();
  GrassmannMatrix m{n, std::vector<std::uint8_t>(static_cast<std::size_t>(n * n), 0)};
  for (int i = 1; i <= n; ++i) {
    const Subset row = grassmann_interval(dp, i).members();
    for (int j : row.members()) m.cells[static_cast<std::size_t>((i - 1) * n + (j - 1))] = 1;
  }
  return m;
}

/// (pi^{-1}(i), sigma^{-1}(i)]; all of [n] when i is a coloop of pi and a loop of sigma.
inline CyclicInterval shift_interval(const DecoratedPermutation& pi,
                                     const DecoratedPermutation& sigma, int i) {
  require_valid(pi);
  require_valid(sigma);
  detail::require(pi.n() == sigma.n(), "shift_interval: ground sets differ");
  const int n = pi.n();
  check_element(n, i);
  if (sigma.is_loop(i) && pi.is_coloop(i)) return CyclicInterval::full(n);
  return CyclicInterval::half_open(n, pi.inverse()[static_cast<std::size_t>(i - 1)],
                                   sigma.inverse()[static_cast<std::size_t>(i - 1)]);
}

/// Freezes the positions in `frozen`; every other position i takes the
/// value pi(j) of the <_i-largest unfrozen position j (the previous unfrozen
/// position around the circle). New fixed points outside `frozen` become loops.
inline DecoratedPermutation cyclic_shift(const DecoratedPermutation& pi, Subset frozen) {
  require_valid(pi);
  const int n = pi.n();
  detail::require(frozen.within(n), "cyclic_shift: frozen set not contained in [n]");
  DecoratedPermutation sigma = pi;
  for (int i = 1; i <= n; ++i) {
    if (frozen.contains(i)) continue;
    int j = cyclic_prev(n, i);
    while (frozen.contains(j)) j = cyclic_prev(n, j);
    const int value = pi.image(j);
    sigma.perm[static_cast<std::size_t>(i - 1)] = value;
    sigma.col[static_cast<std::size_t>(i - 1)] = value == i ? kLoop : kNone;
  }
  return sigma;
}

/// The decorated permutation of the uniform matroid U_{k,n}: i -> i + k (mod n),
/// all loops when k = 0 and all coloops when k = n.
inline DecoratedPermutation uniform_dp(int k, int n) {
  check_ground(n);
  detail::require(k >= 0 && k <= n, "uniform_dp: rank must lie in 0..n");
  DecoratedPermutation dp{std::vector<int>(static_cast<std::size_t>(n)),
                          std::vector<int>(static_cast<std::size_t>(n))};
  for (int i = 1; i <= n; ++i) {
    const int v = (i + k - 1) % n + 1;
    dp.perm[static_cast<std::size_t>(i - 1)] = v;
    dp.col[static_cast<std::size_t>(i - 1)] = v != i ? kNone : (k == 0 ? kLoop : kColoop);
  }
  return dp;
}

/// The decorated permutation (perm^{-1}, -col).
inline DecoratedPermutation dual_dp(const DecoratedPermutation& dp) {
  require_valid(dp);
  DecoratedPermutation out{dp.inverse(), dp.col};
  for (int& c : out.col) c = -c;
  return out;
}

}  // namespace positroid

#endif  // POSITROID_DECORATED_PERMUTATION_HPP
