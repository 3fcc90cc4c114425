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


// Acceptance runner: one PASS/FAIL line per criterion, exit status 1 if
// any criterion fails. Every sweep is exhaustive over its stated range.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "all_matroids.hpp"
#include "oracles.hpp"
#include "positroid/reference_examples.hpp"

namespace {

using namespace positroid;
using Bits = std::uint64_t;

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Counts checks and keeps the first few mismatches for the report.
class Tally {
 public:
  void check(bool ok, const std::function<std::string()>& what) {
    ++checks_;
    if (ok) return;
    ++failures_;
    if (failures_ <= 3) notes_ << (failures_ > 1 ? "; " : "") << what();
  }
  Outcome outcome(const std::string& extra = "") const {
    std::ostringstream os;
    os << checks_ << " checks, " << failures_ << " discrepancies";
    if (!extra.empty()) os << ", " << extra;
    if (failures_ > 0) os << " [" << notes_.str() << "]";
    return {failures_ == 0, os.str()};
  }

 private:
  std::size_t checks_ = 0;
  std::size_t failures_ = 0;
  std::ostringstream notes_;
};

std::vector<DecoratedPermutation> dps(int n) { return collect(DecoratedPermutations(n)); }

Outcome reference_examples() {
  const ExampleReport report = run_reference_examples();
  Tally t;
  for (const auto& r : report.results)
    t.check(r.passed, [&] { return r.name + ": expected " + r.expected + ", got " + r.actual; });
  return t.outcome();
}

Outcome uniform_quotient_sweep() {
  Tally t;
  for (int n = 1; n <= 7; ++n) {
    for (const auto& dp : dps(n)) {
      const RankTable table(positroid_of(dp));
      for (int k = rank(dp); k < n; ++k) {
        const bool brute = !detail::first_rank_violation(table, RankTable::uniform(k, n)).has_value();
        t.check(is_quotient_of_uniform(dp, k).is_quotient == brute,
                [&] { return to_text(dp) + " k=" + std::to_string(k); });
      }
    }
  }
  return t.outcome();
}

Outcome shift_sweep() {
  Tally t;
  std::size_t pairs = 0;
  for (int n = 1; n <= 6; ++n) {
    for (int k = 1; k <= n; ++k) {
      for (const auto& p : ElementaryFlagPairs(k, n)) {
        ++pairs;
        const Subset a = recover_shift_set(p.pi, p.sigma);
        t.check(cyclic_shift(p.pi, a) == p.sigma,
                [&] { return "replay " + to_text(p.pi) + " -> " + to_text(p.sigma); });
      }
    }
    // Every rank-gap-1 pair, quotient or not: compare with direct
    // necklace containment and with the set of all 2^n shifts of pi.
    const auto all = dps(n);
    std::vector<std::vector<Bits>> neck;
    for (const auto& dp : all) neck.push_back(oracle::necklace(dp));
    for (std::size_t p = 0; p < all.size(); ++p) {
      const DecoratedPermutation& pi = all[p];
      std::unordered_set<std::string> reachable;
      for (Bits s = 0; s < (Bits{1} << n); ++s) reachable.insert(to_text(cyclic_shift(pi, Subset::from_bits(s))));
      for (std::size_t s = 0; s < all.size(); ++s) {
        const DecoratedPermutation& sigma = all[s];
        if (rank(sigma) + 1 != rank(pi)) continue;
        bool contained = true;
        for (int i = 0; i < n; ++i)
          contained = contained && (neck[s][static_cast<std::size_t>(i)] & ~neck[p][static_cast<std::size_t>(i)]) == 0;
        const auto found = exists_shift(pi, sigma);
        const bool exists = reachable.count(to_text(sigma)) == 1;
        t.check(found.has_value() == contained && exists == contained,
                [&] { return "exists_shift " + to_text(pi) + " / " + to_text(sigma); });
        if (found) {
          t.check(cyclic_shift(pi, *found) == sigma,
                  [&] { return "agreement replay " + to_text(pi) + " / " + to_text(sigma); });
        }
      }
    }
  }
  return t.outcome(std::to_string(pairs) + " elementary flag pairs");
}

Outcome elementary_uniform_sweep() {
  Tally t;
  std::size_t skipped = 0;
  for (int n = 2; n <= 8; ++n) {
    for (int k = 1; k <= n - 1; ++k) {
      const DecoratedPermutation pi = uniform_dp(k, n);
      const RankTable top = RankTable::uniform(k, n);
      for (Bits bits = 0; bits + 1 < (Bits{1} << n); ++bits) {
        const Subset a = Subset::from_bits(bits);
        const DecoratedPermutation sigma = cyclic_shift(pi, a);
        if (rank(sigma) != k - 1) {
          ++skipped;
          continue;
        }
        const bool brute = !detail::first_rank_violation(RankTable(positroid_of(sigma)), top).has_value();
        t.check(uniform_elementary_check(a, k, n) == brute, [&] {
          std::ostringstream os;
          os << "n=" << n << " k=" << k << " A=" << a;
          return os.str();
        });
      }
    }
  }
  return t.outcome(std::to_string(skipped) + " shift sets skipped (rank of the shift is not k-1)");
}

Outcome lpm_sweep() {
  Tally t;
  for (int n = 1; n <= 7; ++n) {
    std::vector<Lpm> lpms;
    std::vector<RankTable> tables;
    for (int k = 0; k <= n; ++k)
      for (Subset u : k_subsets(n, k))
        for (Subset l : k_subsets(n, k))
          if (oracle::gale_leq(n, 1, u.bits(), l.bits())) {
            lpms.push_back(Lpm{n, u, l});
            tables.emplace_back(lpm_bases(lpms.back()));
          }
    for (std::size_t s = 0; s < lpms.size(); ++s) {
      for (std::size_t b = 0; b < lpms.size(); ++b) {
        const bool brute = !detail::first_rank_violation(tables[s], tables[b]).has_value();
        const bool greedy = lpm_quotient_greedy(lpms[s], lpms[b]).is_quotient;
        const bool containment = lpm_quotient_containment(lpms[s], lpms[b]).is_quotient;
        t.check(greedy == brute && containment == brute, [&] {
          std::ostringstream os;
          os << "M[" << lpms[s].upper << "," << lpms[s].lower << "] vs M[" << lpms[b].upper << ","
             << lpms[b].lower << "] on [" << n << "]";
          return os.str();
        });
      }
    }
  }
  return t.outcome();
}

Outcome bijection_sweep() {
  Tally t;
  for (int n = 1; n <= 7; ++n) {
    for (const auto& dp : dps(n)) {
      const GrassmannMatrix g = grassmann_matrix(dp);
      for (int j = 1; j <= n; ++j)
        t.check(g.column_sum(j) == rank(dp), [&] { return "column sum " + to_text(dp); });
      if (n > 6) continue;
      const GrassmannNecklace nk = to_necklace(dp);
      t.check(from_necklace(nk) == dp, [&] { return "round trip " + to_text(dp); });
      t.check(to_necklace(from_necklace(nk)) == nk, [&] { return "necklace round trip " + to_text(dp); });
      const auto co = oracle::conecklace(n, oracle::bases_bits(positroid_of(dp)));
      const GrassmannNecklace j = conecklace(dp);
      for (int i = 1; i <= n; ++i)
        t.check(j.entry(i).bits() == co[static_cast<std::size_t>(i - 1)], [&] { return "conecklace " + to_text(dp); });
    }
  }
  return t.outcome();
}

std::vector<Bits> sorted_bits(const std::vector<Subset>& sets) {
  std::vector<Bits> out;
  for (Subset s : sets) out.push_back(s.bits());
  std::sort(out.begin(), out.end());
  return out;
}

Outcome rank_machinery_sweep() {
  Tally t;
  for (int n = 1; n <= 7; ++n) {
    const Bits full = (Bits{1} << n) - 1;
    for (const auto& dp : dps(n)) {
      const Matroid m = positroid_of(dp);
      const RankTable r(m);
      if (dp.coloops().empty()) {
        for (int start = 1; start <= n; ++start)
          for (int end = 1; end <= n; ++end) {
            const CyclicInterval iv = CyclicInterval::arc(n, start, end);
            t.check(rank_cyclic_interval(dp, iv) == r(iv.members()), [&] { return "interval rank " + to_text(dp); });
          }
        t.check(rank_cyclic_interval(dp, CyclicInterval::full(n)) == r.total(), [&] { return "full " + to_text(dp); });
        t.check(rank_cyclic_interval(dp, CyclicInterval::empty(n)) == 0, [&] { return "empty " + to_text(dp); });
      }
      if (n > 6) continue;
      const RankTable rd(dual(m));
      for (Bits a = 0; a <= full; ++a) {
        const Subset sa = Subset::from_bits(a);
        if (dp.coloops().empty() && a != full) {
          t.check(rank_upper_bound(dp, sa) >= r(sa), [&] { return "upper bound " + to_text(dp); });
        }
        t.check(rd(sa) == r(Subset::from_bits(full & ~a)) + sa.size() - m.rank(), [&] { return "duality " + to_text(dp); });
        if (!dp.loops().empty()) continue;
        t.check(verify_ccw_rank_partition(dp, sa), [&] { return "partition " + to_text(dp); });
      }
      t.check(sorted_bits(ccw_arrows(dp).member_sets()) == sorted_bits(cw_arrows(dual_dp(dp)).member_sets()),
              [&] { return "ccw vs cw of dual " + to_text(dp); });
      if (dp.coloops().empty()) {
        std::vector<int> cw(full + 1);
        for (Bits s = 0; s <= full; ++s) cw[s] = cw_function(dp, Subset::from_bits(s));
        for (Bits s = 1; s <= full; ++s) {
          bool witness = false;
          for (int x : Subset::from_bits(s).members()) witness = witness || cw[s & ~(Bits{1} << (x - 1))] >= cw[s] - 1;
          t.check(witness, [&] { return "drop lemma " + to_text(dp); });
        }
      }
    }
  }
  // Submodularity over every matroid on at most six elements.
  for (int n = 1; n <= 6; ++n) {
    const Bits full = (Bits{1} << n) - 1;
    for (const Matroid& m : oracle::all_matroids(n)) {
      const RankTable r(m);
      const RankTable rd(dual(m));
      bool ok = true;
      for (Bits a = 0; a <= full && ok; ++a) {
        ok = rd(Subset::from_bits(a)) == r(Subset::from_bits(full & ~a)) + oracle::popcount(a) - m.rank();
        for (Bits b = 0; b <= full && ok; ++b)
          ok = r(Subset::from_bits(a)) + r(Subset::from_bits(b)) >=
               r(Subset::from_bits(a & b)) + r(Subset::from_bits(a | b));
      }
      t.check(ok, [&] { return "submodularity or duality on a matroid of [" + std::to_string(n) + "]"; });
    }
  }
  return t.outcome();
}

Outcome oracle_agreement_sweep() {
  Tally t;
  std::size_t quotients = 0;
  for (int n = 1; n <= 6; ++n) {
    const auto all = oracle::all_matroids(n);
    std::vector<RankTable> tables;
    std::vector<std::vector<Bits>> unions;
    std::vector<std::vector<Bits>> circs;
    for (const Matroid& m : all) {
      tables.emplace_back(m);
      unions.push_back(detail::circuit_union_table(tables.back()));
      std::vector<Bits> c;
      for (Subset s : circuits(m)) c.push_back(s.bits());
      circs.push_back(std::move(c));
    }
    for (std::size_t i = 0; i < all.size(); ++i) {
      for (std::size_t j = 0; j < all.size(); ++j) {
        const bool by_rank = !detail::first_rank_violation(tables[i], tables[j]).has_value();
        bool by_circuits = true;
        for (Bits c : circs[j]) by_circuits = by_circuits && unions[i][c] == c;
        quotients += by_rank ? 1 : 0;
        t.check(by_rank == by_circuits, [&] { return "matroid pair on [" + std::to_string(n) + "]"; });
      }
    }
  }
  return t.outcome(std::to_string(quotients) + " quotient pairs");
}

}  // namespace

// With arguments, only the listed criterion numbers run.
int main(int argc, char** argv) {
  std::vector<int> only;
  for (int i = 1; i < argc; ++i) only.push_back(std::atoi(argv[i]));
  struct Criterion {
    const char* name;
    Outcome (*run)();
  };
  const Criterion criteria[] = {
      {"reference worked examples", reference_examples},
      {"uniform quotient criterion vs rank oracle, n <= 7", uniform_quotient_sweep},
      {"shift recovery and shift existence, n <= 6", shift_sweep},
      {"elementary uniform quotients, n <= 8", elementary_uniform_sweep},
      {"lattice path matroid triple agreement, n <= 7", lpm_sweep},
      {"bijection and Grassmann matrix laws", bijection_sweep},
      {"rank machinery properties", rank_machinery_sweep},
      {"rank and circuit quotient oracles, n <= 6", oracle_agreement_sweep},
  };
  bool all_pass = true;
  int index = 0;
  for (const auto& c : criteria) {
    ++index;
    if (!only.empty() && std::find(only.begin(), only.end(), index) == only.end()) continue;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    all_pass = all_pass && o.pass;
    std::printf("criterion %d: %s  %s (%s; %.2fs)\n", index, o.pass ? "PASS" : "FAIL", c.name, o.detail.c_str(),
                secs);
    std::fflush(stdout);
  }
  return all_pass ? 0 : 1;
}
