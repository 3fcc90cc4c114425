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


#include <gtest/gtest.h>

#include <set>
#include <vector>

#include "oracles.hpp"
#include "positroid/decorated_permutation.hpp"
#include "positroid/io.hpp"

namespace positroid {
namespace {

using io::parse_dp_text;

std::vector<Subset> sets(std::initializer_list<std::initializer_list<int>> lists) {
  std::vector<Subset> out;
  for (auto l : lists) out.push_back(Subset::of(l));
  return out;
}

DecoratedPermutation identity(int n, int col) {
  DecoratedPermutation dp;
  for (int i = 1; i <= n; ++i) {
    dp.perm.push_back(i);
    dp.col.push_back(col);
  }
  return dp;
}

TEST(DecoratedPermutation, Validate) {
  const DecoratedPermutation d = parse_dp_text("4 1 3o 5 6 2 7c");
  EXPECT_TRUE(validate(d));
  EXPECT_EQ(d.loops(), Subset::of({3}));
  EXPECT_EQ(d.coloops(), Subset::of({7}));
  EXPECT_TRUE(validate(identity(4, kLoop)));
  DecoratedPermutation bad = identity(4, kLoop);
  bad.col[0] = 0;
  EXPECT_FALSE(validate(bad));
  EXPECT_FALSE(validate(DecoratedPermutation{{2, 2}, {0, 0}}));
  EXPECT_FALSE(validate(DecoratedPermutation{{2, 1}, {1, 0}}));
  EXPECT_FALSE(validate(DecoratedPermutation{{}, {}}));
  EXPECT_THROW(make_decorated_permutation({1, 2}, {0, 1}), InputError);
}

TEST(DecoratedPermutation, TextRoundTrip) {
  for (const char* text : {"1o 6 5 4o 2 3 7c", "4 1 3o 5 6 2 7c", "1c"}) {
    EXPECT_EQ(to_text(parse_dp_text(text)), text);
  }
  EXPECT_THROW(parse_dp_text("1 2"), InputError);    // undecorated fixed points
  EXPECT_THROW(parse_dp_text("2o 1"), InputError);   // decorated non-fixed point
  EXPECT_THROW(parse_dp_text("1x"), InputError);
  EXPECT_THROW(parse_dp_text("2 2"), InputError);
  EXPECT_THROW(parse_dp_text(""), InputError);
}

TEST(AntiExceedances, Examples) {
  EXPECT_EQ(anti_exceedances(parse_dp_text("1c 5 2 3 4"), 1), Subset::of({1, 2, 3, 4}));
  for (int i = 1; i <= 5; ++i) EXPECT_TRUE(anti_exceedances(identity(5, kLoop), i).empty());
  // Column 4 of the printed Grassmann matrix of this permutation reads
  // {5,6,7}; the prose states {4,5,6}, which contains the loop 4.
  EXPECT_EQ(anti_exceedances(parse_dp_text("1o 6 5 4o 2 3 7c"), 4), Subset::of({5, 6, 7}));
}

TEST(Necklace, Examples) {
  const GrassmannNecklace p = to_necklace(parse_dp_text("1c 5 2 3 4"));
  EXPECT_EQ(p.k, 4);
  EXPECT_EQ(p.entries, sets({{1, 2, 3, 4}, {2, 3, 4, 1}, {3, 4, 5, 1}, {4, 5, 1, 2}, {5, 1, 2, 3}}));
  const GrassmannNecklace loops = to_necklace(identity(4, kLoop));
  EXPECT_EQ(loops.k, 0);
  for (Subset s : loops.entries) EXPECT_TRUE(s.empty());
  EXPECT_EQ(to_necklace(parse_dp_text("2 6 1 5 3 4")).entries,
            sets({{1, 3, 4}, {2, 3, 4}, {3, 4, 6}, {4, 6, 1}, {5, 6, 1}, {6, 1, 3}}));
}

TEST(Necklace, FromNecklaceExamples) {
  const GrassmannNecklace p{5, 4, sets({{1, 2, 3, 4}, {2, 3, 4, 1}, {3, 4, 5, 1}, {4, 5, 1, 2}, {5, 1, 2, 3}})};
  EXPECT_EQ(from_necklace(p), parse_dp_text("1c 5 2 3 4"));
  EXPECT_EQ(from_necklace(to_necklace(identity(3, kLoop))), identity(3, kLoop));
  const GrassmannNecklace u24{4, 2, sets({{1, 2}, {2, 3}, {3, 4}, {4, 1}})};
  EXPECT_EQ(from_necklace(u24), parse_dp_text("3 4 1 2"));
}

TEST(Necklace, RejectsAxiomViolations) {
  const GrassmannNecklace bad{4, 2, sets({{1, 2}, {3, 4}, {3, 4}, {4, 1}})};
  EXPECT_FALSE(satisfies_necklace_axioms(bad));
  EXPECT_THROW(from_necklace(bad), InputError);
  const GrassmannNecklace mixed{3, 1, sets({{1}, {2, 3}, {3}})};
  EXPECT_THROW(from_necklace(mixed), InputError);
  GrassmannNecklace co = conecklace(parse_dp_text("1c 5 2 3 4"));
  EXPECT_THROW(from_necklace(co), InputError);  // orientation tag guards misuse
}

TEST(Conecklace, Examples) {
  EXPECT_EQ(conecklace(parse_dp_text("1c 5 2 3 4")).entries,
            sets({{1, 3, 4, 5}, {3, 4, 5, 1}, {4, 5, 1, 2}, {5, 1, 2, 3}, {1, 2, 3, 4}}));
  EXPECT_EQ(conecklace(parse_dp_text("2 6 1 5 3 4")).entries,
            sets({{3, 5, 6}, {5, 6, 1}, {5, 6, 2}, {6, 2, 3}, {2, 3, 4}, {2, 3, 5}}));
  for (Subset s : conecklace(identity(4, kColoop)).entries) EXPECT_EQ(s, Subset::full(4));
}

TEST(GrassmannInterval, Examples) {
  const DecoratedPermutation pi = parse_dp_text("1o 6 5 4o 2 3 7c");
  EXPECT_EQ(grassmann_interval(pi, 3), CyclicInterval::arc(7, 7, 3));
  EXPECT_EQ(grassmann_interval(pi, 3).members(), Subset::of({1, 2, 3, 7}));
  EXPECT_EQ(grassmann_interval(pi, 1), CyclicInterval::empty(7));
  EXPECT_EQ(grassmann_interval(pi, 7), CyclicInterval::full(7));
}

TEST(GrassmannMatrix, Examples) {
  const GrassmannMatrix m = grassmann_matrix(parse_dp_text("1o 6 5 4o 2 3 7c"));
  const std::vector<std::uint8_t> printed = {0, 0, 0, 0, 0, 0, 0,  //
                                    1, 1, 0, 0, 0, 1, 1,  //
                                    1, 1, 1, 0, 0, 0, 1,  //
                                    0, 0, 0, 0, 0, 0, 0,  //
                                    0, 0, 0, 1, 1, 0, 0,  //
                                    0, 0, 1, 1, 1, 1, 0,  //
                                    1, 1, 1, 1, 1, 1, 1};
  EXPECT_EQ(m.cells, printed);
  EXPECT_EQ(m.column(4), Subset::of({5, 6, 7}));
  const GrassmannMatrix zero = grassmann_matrix(identity(4, kLoop));
  for (int v : zero.cells) EXPECT_EQ(v, 0);
  const GrassmannMatrix p = grassmann_matrix(parse_dp_text("1c 5 2 3 4"));
  for (int j = 1; j <= 5; ++j) EXPECT_EQ(p.column_sum(j), 4);
}

TEST(Rank, Examples) {
  EXPECT_EQ(rank(parse_dp_text("1o 5 4 6 2 3")), 2);
  EXPECT_EQ(rank(parse_dp_text("6 2o 3o 4o 5o 1")), 1);
  EXPECT_EQ(rank(identity(6, kColoop)), 6);
}

TEST(ShiftInterval, Examples) {
  const DecoratedPermutation pi = parse_dp_text("4 5 6 1 2 3");
  const DecoratedPermutation sigma = parse_dp_text("2 4 6 1 5o 3");
  EXPECT_EQ(shift_interval(pi, sigma, 2).members(), Subset::of({6, 1}));
  EXPECT_EQ(grassmann_interval(pi, 2).members() - grassmann_interval(sigma, 2).members(), Subset::of({6, 1}));
  for (int i = 1; i <= 6; ++i) EXPECT_EQ(shift_interval(pi, pi, i), CyclicInterval::empty(6));
  EXPECT_EQ(shift_interval(parse_dp_text("1c 5 2 3 4"), parse_dp_text("1o 5 2 3 4"), 1), CyclicInterval::full(5));
  EXPECT_THROW(shift_interval(pi, parse_dp_text("1o"), 1), InputError);
}

TEST(CyclicShift, Examples) {
  const DecoratedPermutation pi = parse_dp_text("1o 6 5 4o 2 3 7c");
  EXPECT_EQ(cyclic_shift(pi, Subset::of({2, 4, 7})), parse_dp_text("3 6 1 4o 5o 2 7c"));
  EXPECT_EQ(cyclic_shift(pi, Subset::full(7)), pi);
  const DecoratedPermutation u48 = uniform_dp(4, 8);
  EXPECT_EQ(to_text(u48), "5 6 7 8 1 2 3 4");
  const DecoratedPermutation shifted = cyclic_shift(u48, Subset::of({1, 3, 5, 8}));
  EXPECT_TRUE(validate(shifted));
  EXPECT_EQ(rank(shifted), 3);
  EXPECT_THROW(cyclic_shift(pi, Subset::of({8})), InputError);
}

TEST(CyclicShift, MatchesDefinitionExhaustive) {
  // Independent reading: the unfrozen positions, listed in increasing order,
  // each take the image of the previous unfrozen position (cyclically).
  for (int n = 1; n <= 5; ++n) {
    for (const auto& pi : oracle::decorated_permutations(n)) {
      for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
        const Subset a = Subset::from_bits(bits);
        DecoratedPermutation want = pi;
        std::vector<int> free;
        for (int i = 1; i <= n; ++i)
          if (!a.contains(i)) free.push_back(i);
        for (std::size_t t = 0; t < free.size(); ++t) {
          const int pos = free[t];
          const int prev = free[(t + free.size() - 1) % free.size()];
          want.perm[static_cast<std::size_t>(pos - 1)] = pi.perm[static_cast<std::size_t>(prev - 1)];
        }
        for (int pos : free) {
          want.col[static_cast<std::size_t>(pos - 1)] = want.perm[static_cast<std::size_t>(pos - 1)] == pos ? kLoop : kNone;
        }
        if (free.empty()) want = pi;
        ASSERT_EQ(cyclic_shift(pi, a), want) << to_text(pi) << " A=" << a;
      }
    }
  }
}

TEST(UniformDp, Examples) {
  EXPECT_EQ(uniform_dp(0, 4), identity(4, kLoop));
  EXPECT_EQ(uniform_dp(4, 4), identity(4, kColoop));
  EXPECT_EQ(to_text(uniform_dp(4, 6)), "5 6 1 2 3 4");
  for (int n = 1; n <= 8; ++n) {
    for (int k = 0; k <= n; ++k) {
      const GrassmannNecklace nk = to_necklace(uniform_dp(k, n));
      EXPECT_EQ(nk.k, k);
      for (int i = 1; i <= n; ++i) {
        Subset expected;
        for (int t = 0; t < k; ++t) expected.insert((i - 1 + t) % n + 1);
        EXPECT_EQ(nk.entry(i), expected);
      }
    }
  }
  EXPECT_THROW(uniform_dp(5, 4), InputError);
  EXPECT_THROW(uniform_dp(-1, 4), InputError);
}

TEST(DualDp, Involution) {
  for (int n = 1; n <= 5; ++n) {
    for (const auto& dp : oracle::decorated_permutations(n)) {
      const DecoratedPermutation d = dual_dp(dp);
      EXPECT_TRUE(validate(d));
      EXPECT_EQ(rank(d), n - rank(dp));
      EXPECT_EQ(dual_dp(d), dp);
    }
  }
}

TEST(Necklace, AgreesWithDefinitionAndRoundTripsExhaustive) {
  for (int n = 1; n <= 6; ++n) {
    for (const auto& dp : oracle::decorated_permutations(n)) {
      const GrassmannNecklace nk = to_necklace(dp);
      const auto want = oracle::necklace(dp);
      for (int i = 1; i <= n; ++i) ASSERT_EQ(nk.entry(i).bits(), want[static_cast<std::size_t>(i - 1)]);
      ASSERT_TRUE(satisfies_necklace_axioms(nk));
      ASSERT_EQ(from_necklace(nk), dp);
      ASSERT_EQ(to_necklace(from_necklace(nk)), nk);
      const GrassmannNecklace co = conecklace(dp);
      const auto inv = dp.inverse();
      for (int i = 1; i <= n; ++i) {
        Subset image;
        for (int e : nk.entry(i).members()) image.insert(inv[static_cast<std::size_t>(e - 1)]);
        ASSERT_EQ(co.entry(i), image);
      }
    }
  }
}

TEST(GrassmannMatrix, ColumnLawExhaustive) {
  for (int n = 1; n <= 7; ++n) {
    for (const auto& dp : oracle::decorated_permutations(n)) {
      const GrassmannMatrix m = grassmann_matrix(dp);
      const GrassmannNecklace nk = to_necklace(dp);
      const int r = rank(dp);
      for (int j = 1; j <= n; ++j) {
        ASSERT_EQ(m.column(j), nk.entry(j));
        ASSERT_EQ(m.column_sum(j), r);
        ASSERT_EQ(m.row(j), grassmann_interval(dp, j).members());
      }
    }
  }
}

struct Prepared {
  DecoratedPermutation dp;
  int rank;
  std::vector<Subset> intervals;
  std::vector<Subset> conecklace;
};

std::vector<Prepared> prepare(int n) {
  std::vector<Prepared> out;
  for (auto& dp : oracle::decorated_permutations(n)) {
    Prepared p{dp, rank(dp), {}, conecklace(dp).entries};
    for (int i = 1; i <= n; ++i) p.intervals.push_back(grassmann_interval(dp, i).members());
    out.push_back(std::move(p));
  }
  return out;
}

bool contained(const std::vector<Subset>& small, const std::vector<Subset>& big) {
  for (std::size_t i = 0; i < small.size(); ++i)
    if (!small[i].is_subset_of(big[i])) return false;
  return true;
}

TEST(ShiftLaws, DifferenceCoverAndShiftExhaustive) {
  for (int n = 1; n <= 6; ++n) {
    const auto all = prepare(n);
    // Every shift of every pi, for the existence side of the shift law.
    std::vector<std::set<std::vector<int>>> shifts(all.size());
    auto key = [](const DecoratedPermutation& d) {
      std::vector<int> k = d.perm;
      k.insert(k.end(), d.col.begin(), d.col.end());
      return k;
    };
    for (std::size_t p = 0; p < all.size(); ++p)
      for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits)
        shifts[p].insert(key(cyclic_shift(all[p].dp, Subset::from_bits(bits))));

    for (std::size_t p = 0; p < all.size(); ++p) {
      const auto& pi = all[p];
      for (const auto& sigma : all) {
        const bool contains = contained(sigma.intervals, pi.intervals);
        if (contains) {
          for (int i = 1; i <= n; ++i) {
            ASSERT_EQ(shift_interval(pi.dp, sigma.dp, i).members(),
                      pi.intervals[static_cast<std::size_t>(i - 1)] - sigma.intervals[static_cast<std::size_t>(i - 1)]);
          }
        }
        if (contained(sigma.conecklace, pi.conecklace)) {
          Subset moved, differs;
          for (std::size_t i = 0; i < sigma.conecklace.size(); ++i) moved = moved | (pi.conecklace[i] - sigma.conecklace[i]);
          for (int a = 1; a <= n; ++a)
            if (pi.dp.image(a) != sigma.dp.image(a) || pi.dp.decoration(a) != sigma.dp.decoration(a)) differs.insert(a);
          ASSERT_EQ(moved, differs) << to_text(pi.dp) << " / " << to_text(sigma.dp);
        }
        if (sigma.rank + 1 != pi.rank) continue;
        Subset cover;
        int total = 0;
        for (int i = 1; i <= n; ++i) {
          const Subset s = shift_interval(pi.dp, sigma.dp, i).members();
          cover = cover | s;
          total += s.size();
        }
        const bool disjoint_cover = cover == Subset::full(n) && total == n;
        ASSERT_EQ(disjoint_cover, contains) << to_text(pi.dp) << " / " << to_text(sigma.dp);
        ASSERT_EQ(shifts[p].count(key(sigma.dp)) == 1, disjoint_cover) << to_text(pi.dp) << " / " << to_text(sigma.dp);
      }
    }
  }
}

}  // namespace
}  // namespace positroid
