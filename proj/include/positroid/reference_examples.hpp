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

// The published worked examples for positroids and flag positroids, each
// replayed against the library with its expected value. Used by the
// `verify-paper` CLI subcommand and the acceptance suite.

#ifndef POSITROID_REFERENCE_EXAMPLES_HPP
#define POSITROID_REFERENCE_EXAMPLES_HPP

#include <exception>
#include <functional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "positroid/arrows.hpp"
#include "positroid/cyclic.hpp"
#include "positroid/decorated_permutation.hpp"
#include "positroid/io.hpp"
#include "positroid/lpm.hpp"
#include "positroid/matroid.hpp"
#include "positroid/quotient.hpp"

namespace positroid {

struct ExampleResult {
  std::string name;
  std::string expected;
  std::string actual;
  bool passed = false;
};

struct ExampleReport {
  std::vector<ExampleResult> results;

  bool all_passed() const {
    for (const auto& r : results)
      if (!r.passed) return false;
    return !results.empty();
  }
};

namespace detail {

template <typename T>
std::string show(const T& value) {
  std::ostringstream os;
  os << std::boolalpha << value;
  return os.str();
}

template <typename T>
std::string show(const std::vector<T>& values) {
  std::ostringstream os;
  os << std::boolalpha << '[';
  for (std::size_t i = 0; i < values.size(); ++i) os << (i > 0 ? ", " : "") << values[i];
  os << ']';
  return os.str();
}

inline std::string show(const Matroid& m) { return io::to_json(m).dump(); }
inline std::string show(const GrassmannMatrix& m) {
  std::string out;
  for (int i = 1; i <= m.n; ++i) {
    if (i > 1) out += '/';
    for (int j = 1; j <= m.n; ++j) out += static_cast<char>('0' + m.at(i, j));
  }
  return out;
}
inline std::string show(const Containment& c) {
  return std::string("(") + (c.necklace ? "true" : "false") + ", " + (c.conecklace ? "true" : "false") + ")";
}
inline std::string show(const QuotientVerdict& v) { return io::to_json(v).dump(); }

class ExampleRunner {
 public:
  template <typename T>
  void expect(std::string name, const T& expected, const std::function<T()>& compute) {
    ExampleResult r{std::move(name), show(expected), {}, false};
    try {
      const T actual = compute();
      r.actual = show(actual);
      r.passed = actual == expected;
    } catch (const std::exception& e) {
      r.actual = std::string("error: ") + e.what();
    }
    report_.results.push_back(std::move(r));
  }

  ExampleReport take() { return std::move(report_); }

 private:
  ExampleReport report_;
};

inline std::vector<Subset> subsets(std::initializer_list<std::initializer_list<int>> lists) {
  std::vector<Subset> out;
  for (auto l : lists) out.push_back(Subset::of(l));
  return out;
}

inline GrassmannNecklace necklace(int n, int k, std::initializer_list<std::initializer_list<int>> lists,
                                  GrassmannNecklace::Orientation o = GrassmannNecklace::Orientation::kNecklace) {
  return GrassmannNecklace{n, k, subsets(lists), o};
}

}  // namespace detail

/// Replays every worked example and reports expected vs actual for each.
inline ExampleReport run_reference_examples() {
  using detail::necklace;
  using detail::subsets;
  using Orientation = GrassmannNecklace::Orientation;
  using Arc = CyclicInterval;
  detail::ExampleRunner run;

  const auto dp = [](const char* text) { return io::parse_dp_text(text); };
  const Matroid p_matroid(5, subsets({{1, 2, 3, 4}, {1, 2, 3, 5}, {1, 2, 4, 5}, {1, 3, 4, 5}}));
  const GrassmannNecklace p_necklace =
      necklace(5, 4, {{1, 2, 3, 4}, {2, 3, 4, 1}, {3, 4, 5, 1}, {4, 5, 1, 2}, {5, 1, 2, 3}});
  const GrassmannNecklace p_conecklace = necklace(
      5, 4, {{1, 3, 4, 5}, {3, 4, 5, 1}, {4, 5, 1, 2}, {5, 1, 2, 3}, {1, 2, 3, 4}}, Orientation::kConecklace);
  const DecoratedPermutation coloop_first = dp("1c 5 2 3 4");
  const DecoratedPermutation matrix_dp = dp("1o 6 5 4o 2 3 7c");
  const DecoratedPermutation arrow_p = dp("1o 5 4 6 2 3");
  const DecoratedPermutation arrow_q = dp("6 2o 3o 4o 5o 1");
  const DecoratedPermutation counter = dp("2 6 1 5 3 4");
  const DecoratedPermutation u46 = uniform_dp(4, 6);
  const Lpm lpm_small{7, Subset::of({1, 4}), Subset::of({5, 7})};
  const Lpm lpm_big{7, Subset::of({1, 4, 5}), Subset::of({4, 6, 7})};

  // Gale orders and cyclic intervals.
  run.expect<bool>("gale_leq 1234 <=_1 1345 on [5]", true, [] {
    return gale_leq(5, 1, Subset::of({1, 2, 3, 4}), Subset::of({1, 3, 4, 5}));
  });
  run.expect<Subset>("gale_min of P's bases under <_2", Subset::of({1, 2, 3, 4}),
                     [&] { return gale_min(5, 2, p_matroid.bases()); });
  run.expect<Subset>("Arc(9,2) on [9]", Subset::of({9, 1, 2}),
                     [] { return interval_members(Arc::arc(9, 9, 2)); });
  run.expect<std::vector<Arc>>("cyclic components of 124679 in [9]",
                               {Arc::arc(9, 4, 4), Arc::arc(9, 6, 7), Arc::arc(9, 9, 2)},
                               [] { return cyclic_components(9, Subset::of({1, 2, 4, 6, 7, 9})); });
  run.expect<std::vector<Arc>>("cyclic components of 1358 in [8]",
                               {Arc::arc(8, 3, 3), Arc::arc(8, 5, 5), Arc::arc(8, 8, 1)},
                               [] { return cyclic_components(8, Subset::of({1, 3, 5, 8})); });

  // Decorated permutations, necklaces, Grassmann intervals.
  run.expect<std::vector<Subset>>("41(3)562(7): valid, loop 3, coloop 7", subsets({{3}, {7}}), [&] {
    const DecoratedPermutation d = dp("4 1 3o 5 6 2 7c");
    detail::require(validate(d), "rejected");
    return std::vector<Subset>{d.loops(), d.coloops()};
  });
  run.expect<Subset>("W_1 of (1)5234", Subset::of({1, 2, 3, 4}),
                     [&] { return anti_exceedances(coloop_first, 1); });
  // The text states I_4 = {4,5,6}. That set holds the loop 4 and disagrees
  // with column 4 of the printed matrix, which reads {5,6,7}. Both are kept.
  run.expect<Subset>("I_4 of (1)65(4)23(7), as stated in the text", Subset::of({4, 5, 6}),
                     [&] { return anti_exceedances(matrix_dp, 4); });
  run.expect<Subset>("I_4 of (1)65(4)23(7), column 4 of the printed matrix", Subset::of({5, 6, 7}),
                     [&] { return anti_exceedances(matrix_dp, 4); });
  run.expect<GrassmannNecklace>("necklace of (1)5234", p_necklace, [&] { return to_necklace(coloop_first); });
  run.expect<GrassmannNecklace>(
      "necklace of 261534",
      necklace(6, 3, {{1, 3, 4}, {2, 3, 4}, {3, 4, 6}, {4, 6, 1}, {5, 6, 1}, {6, 1, 3}}),
      [&] { return to_necklace(counter); });
  run.expect<DecoratedPermutation>("(1)5234 round trip through its necklace", coloop_first,
                                   [&] { return from_necklace(p_necklace); });
  run.expect<GrassmannNecklace>("conecklace of (1)5234", p_conecklace, [&] { return conecklace(coloop_first); });
  run.expect<GrassmannNecklace>(
      "conecklace of 261534",
      necklace(6, 3, {{3, 5, 6}, {5, 6, 1}, {5, 6, 2}, {6, 2, 3}, {2, 3, 4}, {2, 3, 5}}, Orientation::kConecklace),
      [&] { return conecklace(counter); });
  run.expect<Subset>("S_3 of (1)65(4)23(7)", Subset::of({1, 2, 3, 7}),
                     [&] { return grassmann_interval(matrix_dp, 3).members(); });
  run.expect<Arc>("S_7 of (1)65(4)23(7) (coloop)", Arc::full(7), [&] { return grassmann_interval(matrix_dp, 7); });
  run.expect<GrassmannMatrix>(
      "Grassmann matrix of (1)65(4)23(7)",
      GrassmannMatrix{7, {0, 0, 0, 0, 0, 0, 0,  //
                          1, 1, 0, 0, 0, 1, 1,  //
                          1, 1, 1, 0, 0, 0, 1,  //
                          0, 0, 0, 0, 0, 0, 0,  //
                          0, 0, 0, 1, 1, 0, 0,  //
                          0, 0, 1, 1, 1, 1, 0,  //
                          1, 1, 1, 1, 1, 1, 1}},
      [&] { return grassmann_matrix(matrix_dp); });
  run.expect<int>("rank of (1)54623", 2, [&] { return rank(arrow_p); });
  run.expect<int>("rank of 6(2)(3)(4)(5)1", 1, [&] { return rank(arrow_q); });
  run.expect<Subset>("shift interval S_2 for (456123, 2461(5)3)", Subset::of({6, 1}),
                     [&] { return shift_interval(dp("4 5 6 1 2 3"), dp("2 4 6 1 5o 3"), 2).members(); });
  run.expect<DecoratedPermutation>("cyclic shift of (1)65(4)23(7) freezing 247", dp("3 6 1 4o 5o 2 7c"),
                                   [&] { return cyclic_shift(matrix_dp, Subset::of({2, 4, 7})); });
  run.expect<DecoratedPermutation>("uniform decorated permutation (4,8)", dp("5 6 7 8 1 2 3 4"),
                                   [] { return uniform_dp(4, 8); });

  // Matroids.
  run.expect<bool>("P is a matroid", true, [&] { return validate_matroid(p_matroid); });
  run.expect<std::vector<int>>("261534: rk(1245), rk([6]) - rk(1245)", {2, 1}, [&] {
    const Matroid m = positroid_of(counter);
    const int r = rank_of(m, Subset::of({1, 2, 4, 5}));
    return std::vector<int>{r, rank_of(m, Subset::full(6)) - r};
  });
  run.expect<std::vector<int>>("U_{4,6}: rk(1245), rk([6]) - rk(1245)", {4, 0}, [] {
    const Matroid m = uniform_matroid(4, 6);
    const int r = rank_of(m, Subset::of({1, 2, 4, 5}));
    return std::vector<int>{r, rank_of(m, Subset::full(6)) - r};
  });
  run.expect<std::vector<Subset>>("loops and coloops of 41(3)562(7)", subsets({{3}, {7}}), [&] {
    const auto [loops, coloops] = loops_and_coloops(positroid_of(dp("4 1 3o 5 6 2 7c")));
    return std::vector<Subset>{loops, coloops};
  });
  run.expect<Matroid>("bases from P's necklace", p_matroid, [&] { return bases_from_necklace(p_necklace); });
  run.expect<GrassmannNecklace>("necklace of P", p_necklace, [&] { return necklace_of_matroid(p_matroid); });
  run.expect<GrassmannNecklace>("conecklace of P", p_conecklace, [&] { return conecklace_of_matroid(p_matroid); });
  run.expect<bool>("P is a positroid", true, [&] { return is_positroid(p_matroid); });
  run.expect<GrassmannNecklace>(
      "necklace of M[14,57]",
      necklace(7, 2, {{1, 4}, {2, 4}, {3, 4}, {4, 5}, {5, 6}, {1, 6}, {1, 7}}),
      [&] { return necklace_of_matroid(lpm_bases(lpm_small)); });

  // Arrows.
  run.expect<std::vector<Subset>>(
      "CW-arrows of (1)54623", subsets({{1}, {2, 3, 4, 5}, {3, 4}, {4, 5, 6}, {5, 6, 1, 2}, {6, 1, 2, 3}}),
      [&] { return cw_arrows(arrow_p).member_sets(); });
  run.expect<std::vector<Subset>>("CW-arrows of 6(2)(3)(4)(5)1",
                                  subsets({{1, 2, 3, 4, 5, 6}, {2}, {3}, {4}, {5}, {6, 1}}),
                                  [&] { return cw_arrows(arrow_q).member_sets(); });
  run.expect<int>("cw_P(3456)", 2, [&] { return cw_function(arrow_p, Subset::of({3, 4, 5, 6})); });
  run.expect<int>("cw_Q(1456)", 3, [&] { return cw_function(arrow_q, Subset::of({1, 4, 5, 6})); });
  run.expect<int>("rank of [3,6] in P via arrows", 2,
                  [&] { return rank_cyclic_interval(arrow_p, Arc::arc(6, 3, 6)); });
  run.expect<std::vector<int>>("Q: |1456| - cw_Q(1456) and oracle rank", {1, 1}, [&] {
    const Subset a = Subset::of({1, 4, 5, 6});
    return std::vector<int>{rank_upper_bound(arrow_q, a), rank_of(positroid_of(arrow_q), a)};
  });

  // Quotients.
  run.expect<QuotientVerdict>(
      "261534 vs U_{4,6}, rank oracle",
      QuotientVerdict{false, Witness{RankViolation{Subset::of({1, 2, 4, 5}), Subset::full(6)}}},
      [&] { return is_quotient_rank(positroid_of(counter), uniform_matroid(4, 6)); });
  run.expect<bool>("P vs U_{4,6}, rank oracle", true,
                   [&] { return is_quotient_rank(positroid_of(arrow_p), uniform_matroid(4, 6)).is_quotient; });
  run.expect<bool>("P vs U_{4,6}, CW-arrow criterion", true,
                   [&] { return is_quotient_of_uniform(arrow_p, 4).is_quotient; });
  run.expect<QuotientVerdict>(
      "Q vs U_{4,6}, CW-arrow criterion",
      QuotientVerdict{false, Witness{ArrowViolation{{2, 3, 4, 5}, Subset::of({2, 3, 4, 5})}}},
      [&] { return is_quotient_of_uniform(arrow_q, 4); });
  run.expect<bool>("Q vs U_{4,6}, rank oracle", false,
                   [&] { return is_quotient_rank(positroid_of(arrow_q), uniform_matroid(4, 6)).is_quotient; });
  run.expect<bool>("shift exists from 456123 to 2461(5)3", true,
                   [&] { return exists_shift(dp("4 5 6 1 2 3"), dp("2 4 6 1 5o 3")).has_value(); });
  run.expect<bool>("uniform elementary check 1358, k=4, n=8", true,
                   [] { return uniform_elementary_check(Subset::of({1, 3, 5, 8}), 4, 8); });
  run.expect<bool>("uniform elementary check 1258, k=4, n=8", false,
                   [] { return uniform_elementary_check(Subset::of({1, 2, 5, 8}), 4, 8); });
  run.expect<std::vector<bool>>("shifts of (4,8) freezing 1358 / 1258, rank oracle", {true, false}, [] {
    const DecoratedPermutation pi = uniform_dp(4, 8);
    const Matroid top = positroid_of(pi);
    std::vector<bool> out;
    for (Subset a : {Subset::of({1, 3, 5, 8}), Subset::of({1, 2, 5, 8})}) {
      const DecoratedPermutation sigma = cyclic_shift(pi, a);
      out.push_back(rank(sigma) == 3 && is_quotient_rank(positroid_of(sigma), top).is_quotient);
    }
    return out;
  });

  // The containment counterexample and the CCW covering condition.
  run.expect<Containment>("261534 in U_{4,6}: necklace and conecklace containment", Containment{true, true},
                          [&] { return containment_check(counter, u46); });
  run.expect<std::vector<bool>>("261534 vs U_{4,6}: containment holds, quotient fails", {true, true, false}, [&] {
    const Containment c = containment_check(counter, u46);
    return std::vector<bool>{c.necklace, c.conecklace,
                             is_quotient_rank(positroid_of(counter), positroid_of(u46)).is_quotient};
  });
  run.expect<std::vector<bool>>("CCW covering holds for (261534, U_{4,6}) but quotient fails", {true, false}, [&] {
    return std::vector<bool>{oh_xiang_condition(counter, u46),
                             is_quotient_rank(positroid_of(counter), positroid_of(u46)).is_quotient};
  });

  // Lattice path matroids.
  run.expect<Containment>("M[14,57] in M[145,467]: containment", Containment{true, false}, [&] {
    return containment_check(from_necklace(necklace_of_matroid(lpm_bases(lpm_small))),
                             from_necklace(necklace_of_matroid(lpm_bases(lpm_big))));
  });
  run.expect<GrassmannNecklace>(
      "necklace of M[145,467]",
      necklace(7, 3, {{1, 4, 5}, {2, 4, 5}, {3, 4, 5}, {4, 5, 6}, {1, 5, 6}, {1, 6, 7}, {1, 4, 7}}),
      [&] { return necklace_of_matroid(lpm_bases(lpm_big)); });
  run.expect<bool>("M[14,57] vs M[145,467], greedy pairing", false,
                   [&] { return lpm_quotient_greedy(lpm_small, lpm_big).is_quotient; });
  run.expect<QuotientVerdict>(
      "M[14,57] vs M[145,467], containment fails at J_1",
      QuotientVerdict{false, Witness{ContainmentViolation{Orientation::kConecklace, 1}}},
      [&] { return lpm_quotient_containment(lpm_small, lpm_big); });
  run.expect<std::vector<Subset>>("J'_1 and J_1 of the LPM pair", subsets({{5, 7}, {4, 6, 7}}), [&] {
    return std::vector<Subset>{conecklace_of_matroid(lpm_bases(lpm_small)).entry(1),
                               conecklace_of_matroid(lpm_bases(lpm_big)).entry(1)};
  });
  run.expect<bool>("M[14,57] vs M[145,467], rank oracle", false,
                   [&] { return is_quotient_rank(lpm_bases(lpm_small), lpm_bases(lpm_big)).is_quotient; });

  return run.take();
}

}  // namespace positroid

#endif  // POSITROID_REFERENCE_EXAMPLES_HPP
