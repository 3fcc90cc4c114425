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

#ifndef POSITROID_LPM_HPP
#define POSITROID_LPM_HPP

#include <string>
#include <utility>
#include <vector>

#include "positroid/cyclic.hpp"
#include "positroid/error.hpp"
#include "positroid/matroid.hpp"
#include "positroid/quotient.hpp"

namespace positroid {

/// Lattice path matroid M[U, L]: all k-subsets B with U <=_1 B <=_1 L.
struct Lpm {
  int n = 0;
  Subset upper;  // U
  Subset lower;  // L

  int rank() const { return upper.size(); }
  friend bool operator==(const Lpm&, const Lpm&) = default;
};

inline bool validate(const Lpm& p) {
  if (p.n < 1 || p.n > kMaxGroundSize) return false;
  if (!p.upper.within(p.n) || !p.lower.within(p.n)) return false;
  if (p.upper.size() != p.lower.size()) return false;
  return gale_leq(p.n, 1, p.upper, p.lower);
}

inline Lpm make_lpm(int n, Subset upper, Subset lower) {
  Lpm p{n, upper, lower};
  detail::require(validate(p), "invalid lattice path matroid: need |U| = |L| and U <=_1 L in [n]");
  return p;
}

inline Matroid lpm_bases(const Lpm& p) {
  detail::require(validate(p), "lpm_bases: invalid lattice path matroid");
  std::vector<Subset> bases;
  for (Subset b : k_subsets(p.n, p.rank()))
    if (gale_leq(p.n, 1, p.upper, b) && gale_leq(p.n, 1, b, p.lower)) bases.push_back(b);
  return Matroid(p.n, std::move(bases));
}

/// Greedy pairing test for M[U', L'] being a quotient of M[U, L]:
/// U' ⊆ U, L' ⊆ L, and pairing the s-th smallest elements u_{i_s} of U \ U'
/// and l_{j_s} of L \ L' gives j_s <= i_s and u_{i_s} - l_{j_s} <= i_s - j_s.
inline QuotientVerdict lpm_quotient_greedy(const Lpm& sub, const Lpm& super) {
  detail::require(validate(sub) && validate(super), "lpm_quotient_greedy: invalid lattice path matroid");
  detail::require_same_ground(sub.n, super.n, "lpm_quotient_greedy");
  if (!sub.upper.is_subset_of(super.upper))
    return {false, Witness{PairingViolation{"U' is not contained in U", 0}}};
  if (!sub.lower.is_subset_of(super.lower))
    return {false, Witness{PairingViolation{"L' is not contained in L", 0}}};
  const std::vector<int> u = super.upper.members();
  const std::vector<int> l = super.lower.members();
  std::vector<int> u_pos;  // 1-based positions i_s in sorted U
  std::vector<int> l_pos;
  for (std::size_t i = 0; i < u.size(); ++i)
    if (!sub.upper.contains(u[i])) u_pos.push_back(static_cast<int>(i) + 1);
  for (std::size_t j = 0; j < l.size(); ++j)
    if (!sub.lower.contains(l[j])) l_pos.push_back(static_cast<int>(j) + 1);
  // |U'| = |L'| and |U| = |L|, so both differences have the same size z.
  for (std::size_t s = 0; s < u_pos.size(); ++s) {
    const int i = u_pos[s];
    const int j = l_pos[s];
    const int step = static_cast<int>(s) + 1;
    if (j > i) return {false, Witness{PairingViolation{"j_s > i_s", step}}};
    if (u[static_cast<std::size_t>(i - 1)] - l[static_cast<std::size_t>(j - 1)] > i - j)
      return {false, Witness{PairingViolation{"u_{i_s} - l_{j_s} > i_s - j_s", step}}};
  }
  return {true, std::nullopt};
}

/// Necklace and conecklace containment of the induced positroids, computed
/// through the generic Gale-extremum route.
inline QuotientVerdict lpm_quotient_containment(const Lpm& sub, const Lpm& super) {
  detail::require_same_ground(sub.n, super.n, "lpm_quotient_containment");
  const Matroid small = lpm_bases(sub);
  const Matroid big = lpm_bases(super);
  const GrassmannNecklace is = necklace_of_matroid(small);
  const GrassmannNecklace ib = necklace_of_matroid(big);
  for (int i = 1; i <= sub.n; ++i) {
    if (!is.entry(i).is_subset_of(ib.entry(i)))
      return {false, Witness{ContainmentViolation{GrassmannNecklace::Orientation::kNecklace, i}}};
  }
  const GrassmannNecklace js = conecklace_of_matroid(small);
  const GrassmannNecklace jb = conecklace_of_matroid(big);
  for (int i = 1; i <= sub.n; ++i) {
    if (!js.entry(i).is_subset_of(jb.entry(i)))
      return {false, Witness{ContainmentViolation{GrassmannNecklace::Orientation::kConecklace, i}}};
  }
  return {true, std::nullopt};
}

}  // namespace positroid

#endif  // POSITROID_LPM_HPP
