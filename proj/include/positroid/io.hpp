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

// Text and JSON encodings of every value type.
//
//   subset              [1,2,3,4]
//   cyclic interval     {"kind":"arc","start":6,"end":3} | {"kind":"empty"} | {"kind":"full"}
//   decorated perm      "1o 6 5 4o 2 3 7c"  or  {"n":7,"perm":[...],"col":[...]}
//   necklace            {"k":4,"entries":[[1,2,3,4],...]}
//   matroid             {"n":5,"bases":[[1,2,3,4],...]}   (bases sorted lexicographically)
//   lattice path        {"n":7,"U":[1,4],"L":[5,7]}

#ifndef POSITROID_IO_HPP
#define POSITROID_IO_HPP

#include <cctype>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "positroid/arrows.hpp"
#include "positroid/cyclic.hpp"
#include "positroid/decorated_permutation.hpp"
#include "positroid/enumeration.hpp"
#include "positroid/error.hpp"
#include "positroid/lpm.hpp"
#include "positroid/matroid.hpp"
#include "positroid/quotient.hpp"

namespace positroid::io {

using nlohmann::json;

inline json to_json(Subset s) { return json(s.members()); }

inline Subset subset_from_json(const json& j, int n) {
  detail::require(j.is_array(), "subset must be a JSON array of integers");
  Subset s;
  for (const auto& v : j) {
    detail::require(v.is_number_integer(), "subset entries must be integers");
    const int e = v.get<int>();
    check_element(n, e);
    detail::require(!s.contains(e), "subset lists element " + std::to_string(e) + " twice");
    s.insert(e);
  }
  return s;
}

inline json to_json(const CyclicInterval& interval) {
  switch (interval.kind()) {
    case CyclicInterval::Kind::kEmpty:
      return {{"kind", "empty"}};
    case CyclicInterval::Kind::kFull:
      return {{"kind", "full"}};
    case CyclicInterval::Kind::kArc:
      break;
  }
  return {{"kind", "arc"}, {"start", interval.start()}, {"end", interval.end()}};
}

inline json to_json(const DecoratedPermutation& dp) {
  return {{"n", dp.n()}, {"perm", dp.perm}, {"col", dp.col}};
}

inline DecoratedPermutation dp_from_json(const json& j) {
  detail::require(j.is_object() && j.contains("perm") && j.contains("col"),
                  "decorated permutation JSON needs \"perm\" and \"col\"");
  DecoratedPermutation dp;
  try {
    dp.perm = j.at("perm").get<std::vector<int>>();
    dp.col = j.at("col").get<std::vector<int>>();
  } catch (const json::exception&) {
    throw InputError("decorated permutation JSON: perm and col must be integer arrays");
  }
  if (j.contains("n")) {
    detail::require(j.at("n").is_number_integer() && j.at("n").get<int>() == dp.n(),
                    "decorated permutation JSON: n does not match perm length");
  }
  require_valid(dp);
  return dp;
}

/// Parses "1o 6 5 4o 2 3 7c": bare numbers are unfixed, "o" marks a loop, "c" a coloop.
inline DecoratedPermutation parse_dp_text(const std::string& text) {
  std::istringstream in(text);
  std::string token;
  DecoratedPermutation dp;
  while (in >> token) {
    std::size_t digits = 0;
    while (digits < token.size() && std::isdigit(static_cast<unsigned char>(token[digits]))) ++digits;
    detail::require(digits > 0 && digits <= 2 && token.size() - digits <= 1,
                    "bad decorated permutation token '" + token + "'");
    dp.perm.push_back(std::stoi(token.substr(0, digits)));
    int col = kNone;
    if (digits < token.size()) {
      const char mark = token[digits];
      detail::require(mark == 'o' || mark == 'c',
                      "bad decoration '" + std::string(1, mark) + "' (use o or c)");
      col = mark == 'o' ? kLoop : kColoop;
    }
    dp.col.push_back(col);
  }
  detail::require(!dp.perm.empty(), "empty decorated permutation");
  for (int i = 1; i <= dp.n(); ++i) {
    const bool fixed = dp.image(i) == i;
    detail::require(!fixed || dp.decoration(i) != kNone,
                    "fixed point " + std::to_string(i) + " needs an o (loop) or c (coloop) mark");
    detail::require(fixed || dp.decoration(i) == kNone,
                    "position " + std::to_string(i) + " is not fixed and cannot be decorated");
  }
  require_valid(dp);
  return dp;
}

inline json to_json(const GrassmannNecklace& necklace) {
  json entries = json::array();
  for (Subset s : necklace.entries) entries.push_back(to_json(s));
  return {{"k", necklace.k}, {"entries", entries}};
}

/// Reads a necklace; n is the number of entries. Axioms are checked by consumers.
inline GrassmannNecklace necklace_from_json(const json& j) {
  detail::require(j.is_object() && j.contains("entries") && j.at("entries").is_array(),
                  "necklace JSON needs an \"entries\" array");
  GrassmannNecklace out;
  out.n = static_cast<int>(j.at("entries").size());
  check_ground(out.n);
  for (const auto& e : j.at("entries")) out.entries.push_back(subset_from_json(e, out.n));
  out.k = out.entries.front().size();
  if (j.contains("k")) {
    detail::require(j.at("k").is_number_integer(), "necklace JSON: k must be an integer");
    out.k = j.at("k").get<int>();
  }
  return out;
}

inline json to_json(const Matroid& m) {
  json bases = json::array();
  for (Subset b : m.bases()) bases.push_back(to_json(b));
  return {{"n", m.ground()}, {"bases", bases}};
}

inline Matroid matroid_from_json(const json& j) {
  detail::require(j.is_object() && j.contains("n") && j.contains("bases") && j.at("bases").is_array(),
                  "matroid JSON needs \"n\" and a \"bases\" array");
  detail::require(j.at("n").is_number_integer(), "matroid JSON: n must be an integer");
  const int n = j.at("n").get<int>();
  check_ground(n);
  std::vector<Subset> bases;
  for (const auto& b : j.at("bases")) bases.push_back(subset_from_json(b, n));
  return Matroid(n, std::move(bases));
}

inline json to_json(const Lpm& p) { return {{"n", p.n}, {"U", to_json(p.upper)}, {"L", to_json(p.lower)}}; }

inline Lpm lpm_from_json(const json& j) {
  detail::require(j.is_object() && j.contains("n") && j.contains("U") && j.contains("L"),
                  "lattice path matroid JSON needs \"n\", \"U\" and \"L\"");
  detail::require(j.at("n").is_number_integer(), "lattice path matroid JSON: n must be an integer");
  const int n = j.at("n").get<int>();
  check_ground(n);
  return make_lpm(n, subset_from_json(j.at("U"), n), subset_from_json(j.at("L"), n));
}

inline json to_json(const ArrowSet& arrows) {
  json out = json::array();
  for (const auto& a : arrows.arrows) out.push_back(to_json(a));
  return out;
}

inline json to_json(const Witness& w) {
  return std::visit(
      [](const auto& v) -> json {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, RankViolation>) {
          return {{"type", "rank_inequality"}, {"A", to_json(v.smaller)}, {"B", to_json(v.larger)}};
        } else if constexpr (std::is_same_v<T, CircuitViolation>) {
          return {{"type", "circuit"}, {"circuit", to_json(v.circuit)}};
        } else if constexpr (std::is_same_v<T, ArrowViolation>) {
          return {{"type", "cw_arrows"}, {"starts", v.starts}, {"union", to_json(v.arrow_union)}};
        } else if constexpr (std::is_same_v<T, ColoopViolation>) {
          return {{"type", "coloop"}, {"element", v.element}};
        } else if constexpr (std::is_same_v<T, ShiftSetWitness>) {
          return {{"type", "shift_set"}, {"A", to_json(v.frozen)}};
        } else if constexpr (std::is_same_v<T, ContainmentViolation>) {
          const bool neck = v.orientation == GrassmannNecklace::Orientation::kNecklace;
          return {{"type", neck ? "necklace_containment" : "conecklace_containment"},
                  {"index", v.index}};
        } else {
          return {{"type", "greedy_pairing"}, {"reason", v.reason}, {"step", v.step}};
        }
      },
      w);
}

inline json to_json(const QuotientVerdict& v) {
  json out = {{"is_quotient", v.is_quotient}};
  out["witness"] = v.witness ? to_json(*v.witness) : json(nullptr);
  return out;
}

inline json to_json(const CensusRecord& r) {
  json out = {{"n", r.n},
              {"k", r.k},
              {"dp", to_text(r.dp)},
              {"necklace", to_json(r.necklace)},
              {"basis_count", r.basis_count}};
  if (!r.quotients.empty()) {
    json edges = json::array();
    for (const auto& e : r.quotients)
      edges.push_back({{"sigma", to_text(e.sigma)}, {"shift_set", to_json(e.shift_set)}});
    out["quotients"] = edges;
  }
  return out;
}

}  // namespace positroid::io

#endif  // POSITROID_IO_HPP
