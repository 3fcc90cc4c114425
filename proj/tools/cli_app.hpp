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

// Command-line front end. Kept in a header so the test suite can drive it
// in-process with string streams.
//
// Exit codes: 0 verdict true or success, 1 verdict false, 2 usage or input
// error, 3 internal consistency failure.

#ifndef POSITROID_TOOLS_CLI_APP_HPP
#define POSITROID_TOOLS_CLI_APP_HPP

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "positroid/io.hpp"
#include "positroid/positroid.hpp"
#include "positroid/reference_examples.hpp"

namespace positroid::cli {

using nlohmann::json;

inline constexpr int kExitTrue = 0;
inline constexpr int kExitFalse = 1;
inline constexpr int kExitInput = 2;
inline constexpr int kExitInternal = 3;

using Representation = std::variant<DecoratedPermutation, GrassmannNecklace, Matroid, Lpm>;

/// "-" reads stdin, an existing file path reads the file, anything else is
/// the payload itself.
inline std::string load_payload(const std::string& source, std::istream& in) {
  if (source == "-") return std::string(std::istreambuf_iterator<char>(in), {});
  std::error_code ec;
  if (!source.empty() && std::filesystem::is_regular_file(source, ec)) {
    std::ifstream file(source);
    detail::require(static_cast<bool>(file), "cannot read " + source);
    return std::string(std::istreambuf_iterator<char>(file), {});
  }
  return source;
}

inline std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return {};
  return s.substr(first, s.find_last_not_of(" \t\r\n") - first + 1);
}

/// Decorated permutation text, or JSON for a decorated permutation,
/// necklace, matroid or lattice path matroid.
inline Representation parse_representation(const std::string& payload) {
  const std::string text = trim(payload);
  detail::require(!text.empty(), "empty input");
  if (text.front() != '{' && text.front() != '"') return io::parse_dp_text(text);
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
  if (j.is_string()) return io::parse_dp_text(j.get<std::string>());
  if (j.contains("perm")) return io::dp_from_json(j);
  if (j.contains("entries")) return io::necklace_from_json(j);
  if (j.contains("bases")) return io::matroid_from_json(j);
  if (j.contains("U") || j.contains("L")) return io::lpm_from_json(j);
  throw InputError("unrecognized JSON payload (expected perm/col, entries, bases or U/L)");
}

inline DecoratedPermutation from_necklace_checked(const GrassmannNecklace& necklace) {
  detail::require(satisfies_necklace_axioms(necklace), "input is not a Grassmann necklace");
  return from_necklace(necklace);
}

inline Matroid as_matroid(const Representation& rep) {
  return std::visit(
      [](const auto& v) -> Matroid {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, DecoratedPermutation>) {
          return positroid_of(v);
        } else if constexpr (std::is_same_v<T, GrassmannNecklace>) {
          return positroid_of(from_necklace_checked(v));
        } else if constexpr (std::is_same_v<T, Matroid>) {
          detail::require(validate_matroid(v), "basis family fails the exchange axiom");
          return v;
        } else {
          return lpm_bases(v);
        }
      },
      rep);
}

inline DecoratedPermutation as_dp(const Representation& rep) {
  if (const auto* dp = std::get_if<DecoratedPermutation>(&rep)) return *dp;
  if (const auto* necklace = std::get_if<GrassmannNecklace>(&rep)) return from_necklace_checked(*necklace);
  const Matroid m = as_matroid(rep);
  detail::require(is_positroid(m), "matroid is not a positroid");
  return from_necklace(necklace_of_matroid(m));
}

inline DecoratedPermutation parse_dp_payload(const std::string& source, std::istream& in) {
  const Representation rep = parse_representation(load_payload(source, in));
  detail::require(std::holds_alternative<DecoratedPermutation>(rep) ||
                      std::holds_alternative<GrassmannNecklace>(rep),
                  "expected a decorated permutation");
  return as_dp(rep);
}

inline Lpm parse_lpm_payload(const std::string& source, std::istream& in) {
  const Representation rep = parse_representation(load_payload(source, in));
  const auto* lpm = std::get_if<Lpm>(&rep);
  detail::require(lpm != nullptr, "expected lattice path matroid JSON {\"n\",\"U\",\"L\"}");
  return *lpm;
}

/// "1,3,5,8" (spaces allowed, empty means the empty set).
inline Subset parse_element_list(const std::string& text, int n) {
  Subset s;
  std::string token;
  std::istringstream in(text);
  while (std::getline(in, token, ',')) {
    token = trim(token);
    if (token.empty()) continue;
    detail::require(std::all_of(token.begin(), token.end(), [](unsigned char c) { return std::isdigit(c); }),
                    "bad element '" + token + "' in list");
    detail::require(token.size() <= 3, "element '" + token + "' out of range");
    const int e = std::stoi(token);
    check_element(n, e);
    s.insert(e);
  }
  return s;
}

inline std::string subset_text(Subset s) {
  std::ostringstream os;
  os << s;
  return os.str();
}

inline std::string describe(const Witness& w) {
  std::ostringstream os;
  std::visit(
      [&os](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, RankViolation>) {
          os << "rank inequality fails for A=" << v.smaller << " within B=" << v.larger;
        } else if constexpr (std::is_same_v<T, CircuitViolation>) {
          os << "circuit " << v.circuit << " of the larger matroid is not a union of circuits";
        } else if constexpr (std::is_same_v<T, ArrowViolation>) {
          os << "CW-arrows starting at";
          for (int s : v.starts) os << ' ' << s;
          os << " have union " << v.arrow_union;
        } else if constexpr (std::is_same_v<T, ColoopViolation>) {
          os << "element " << v.element << " is a coloop";
        } else if constexpr (std::is_same_v<T, ShiftSetWitness>) {
          os << "shift set " << v.frozen;
        } else if constexpr (std::is_same_v<T, ContainmentViolation>) {
          os << (v.orientation == GrassmannNecklace::Orientation::kNecklace ? "necklace" : "conecklace")
             << " containment fails at index " << v.index;
        } else {
          os << "greedy pairing fails: " << v.reason;
          if (v.step > 0) os << " (step " << v.step << ")";
        }
      },
      w);
  return os.str();
}

inline int emit_verdict(const QuotientVerdict& v, bool as_json, std::ostream& out) {
  if (as_json) {
    out << io::to_json(v).dump() << '\n';
  } else {
    out << "quotient: " << (v.is_quotient ? "true" : "false") << '\n';
    if (v.witness) out << "witness: " << describe(*v.witness) << '\n';
  }
  return v.is_quotient ? kExitTrue : kExitFalse;
}

/// Enumeration bound: --max-n, else POSITROID_MAX_N, else the module default.
inline int resolve_max_n(std::optional<int> flag, int fallback, std::ostream& err) {
  std::optional<int> bound = flag;
  if (!bound) {
    if (const char* env = std::getenv("POSITROID_MAX_N"); env != nullptr && *env != '\0') {
      try {
        std::size_t used = 0;
        bound = std::stoi(env, &used);
        detail::require(used == std::string(env).size(), "");
      } catch (const std::exception&) {
        throw InputError(std::string("POSITROID_MAX_N is not an integer: ") + env);
      }
    }
  }
  if (!bound) return fallback;
  detail::require(*bound >= 1 && *bound <= kMaxGroundSize, "enumeration bound must lie in [1, 64]");
  if (*bound > kMaxEnumerationN) {
    err << "warning: enumeration bound raised to " << *bound << " (default " << kMaxEnumerationN
        << "); exhaustive runs grow factorially\n";
  }
  return *bound;
}

inline void write_output(const std::string& path, const std::string& body, std::ostream& out) {
  if (path == "-") {
    out << body;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  detail::require(static_cast<bool>(file), "cannot open " + path + " for writing");
  file << body;
  detail::require(static_cast<bool>(file), "failed writing " + path);
}

/// Runs one command line. `args` excludes the program name.
inline int run_cli(std::vector<std::string> args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Positroids, their representations, and quotient checks."};
  app.name("positroid");
  app.require_subcommand(1, 1);
  app.fallthrough();
  bool as_json = false;
  app.add_flag("--json", as_json, "Print JSON on stdout");

  std::string input, target = "necklace";
  auto* convert = app.add_subcommand("convert", "Convert between dp text/JSON, necklace, conecklace, matroid");
  convert->add_option("--input", input, "Payload, file path, or - for stdin")->required();
  convert->add_option("--to", target, "Target representation")
      ->check(CLI::IsMember({"dp", "necklace", "conecklace", "matroid"}));

  std::string m_spec, n_spec, oracle = "rank";
  auto* check_quotient = app.add_subcommand("check-quotient", "Is M a quotient of N (brute force)");
  check_quotient->add_option("--m", m_spec, "Smaller matroid (any representation)")->required();
  check_quotient->add_option("--n", n_spec, "Larger matroid (any representation)")->required();
  check_quotient->add_option("--oracle", oracle, "rank or circuits")->check(CLI::IsMember({"rank", "circuits"}));

  std::string dp_spec;
  int k = 0;
  auto* check_uniform = app.add_subcommand("check-uniform", "Is the positroid a quotient of U(k,n) (CW-arrows)");
  check_uniform->add_option("--dp", dp_spec, "Decorated permutation")->required();
  check_uniform->add_option("--k", k, "Rank of the uniform matroid")->required();

  std::string sub_spec, super_spec, lpm_method = "greedy";
  auto* check_lpm = app.add_subcommand("check-lpm-quotient", "Quotient test for lattice path matroids");
  check_lpm->add_option("--sub", sub_spec, "Smaller LPM JSON")->required();
  check_lpm->add_option("--super", super_spec, "Larger LPM JSON")->required();
  check_lpm->add_option("--method", lpm_method, "greedy, containment or rank")
      ->check(CLI::IsMember({"greedy", "containment", "rank"}));

  std::string freeze;
  auto* shift = app.add_subcommand("shift", "Cyclic shift freezing the given positions");
  shift->add_option("--dp", dp_spec, "Decorated permutation")->required();
  shift->add_option("--freeze", freeze, "Comma-separated frozen positions")->required();

  std::string pi_spec, sigma_spec;
  auto* recover = app.add_subcommand("recover-shift", "Shift set of an elementary quotient pair");
  recover->add_option("--pi", pi_spec, "Rank-k decorated permutation")->required();
  recover->add_option("--sigma", sigma_spec, "Rank-(k-1) decorated permutation")->required();

  bool ccw = false;
  auto* arrows = app.add_subcommand("arrows", "CW-arrows (or CCW-arrows) of a decorated permutation");
  arrows->add_option("--dp", dp_spec, "Decorated permutation")->required();
  arrows->add_flag("--ccw", ccw, "Counterclockwise arrows");

  std::string what, out_path = "-";
  std::optional<int> enum_k, max_n;
  int enum_n = 0;
  bool edges = false;
  auto* enumerate = app.add_subcommand("enumerate", "Exhaustive JSON-lines enumeration");
  enumerate->add_option("--what", what, "What to enumerate")
      ->required()
      ->check(CLI::IsMember({"decorated-permutations", "positroids", "flag-pairs"}));
  enumerate->add_option("--n", enum_n, "Ground set size")->required();
  enumerate->add_option("--k", enum_k, "Rank (required for positroids and flag-pairs)");
  enumerate->add_option("--out", out_path, "Output file, - for stdout");
  enumerate->add_flag("--edges", edges, "Attach elementary quotient edges to positroid records");
  enumerate->add_option("--max-n", max_n, "Override the enumeration bound (also POSITROID_MAX_N)");

  auto* verify = app.add_subcommand("verify-paper", "Replay the reference worked examples");

  std::ostringstream buf;
  try {
    std::reverse(args.begin(), args.end());
    app.parse(args);

    if (*convert) {
      const Representation rep = parse_representation(load_payload(input, in));
      if (target == "matroid") {
        const Matroid m = as_matroid(rep);
        if (as_json) {
          buf << io::to_json(m).dump() << '\n';
        } else {
          for (Subset b : m.bases()) buf << b << '\n';
        }
      } else {
        const DecoratedPermutation dp = as_dp(rep);
        if (target == "dp") {
          buf << (as_json ? io::to_json(dp).dump() : to_text(dp)) << '\n';
        } else {
          const GrassmannNecklace nk = target == "necklace" ? to_necklace(dp) : conecklace(dp);
          if (as_json) {
            buf << io::to_json(nk).dump() << '\n';
          } else {
            buf << nk << '\n';
          }
        }
      }
      out << buf.str();
      return kExitTrue;
    }

    if (*check_quotient) {
      const Matroid m = as_matroid(parse_representation(load_payload(m_spec, in)));
      const Matroid n = as_matroid(parse_representation(load_payload(n_spec, in)));
      const QuotientVerdict v = oracle == "rank" ? is_quotient_rank(m, n) : is_quotient_circuits(m, n);
      const int code = emit_verdict(v, as_json, buf);
      out << buf.str();
      return code;
    }

    if (*check_uniform) {
      const DecoratedPermutation dp = parse_dp_payload(dp_spec, in);
      const int code = emit_verdict(is_quotient_of_uniform(dp, k), as_json, buf);
      out << buf.str();
      return code;
    }

    if (*check_lpm) {
      const Lpm sub = parse_lpm_payload(sub_spec, in);
      const Lpm super = parse_lpm_payload(super_spec, in);
      QuotientVerdict v;
      if (lpm_method == "greedy") {
        v = lpm_quotient_greedy(sub, super);
      } else if (lpm_method == "containment") {
        v = lpm_quotient_containment(sub, super);
      } else {
        v = is_quotient_rank(lpm_bases(sub), lpm_bases(super));
      }
      const int code = emit_verdict(v, as_json, buf);
      out << buf.str();
      return code;
    }

    if (*shift) {
      const DecoratedPermutation dp = parse_dp_payload(dp_spec, in);
      const Subset frozen = parse_element_list(freeze, dp.n());
      const DecoratedPermutation result = cyclic_shift(dp, frozen);
      if (as_json) {
        json j = io::to_json(result);
        j["text"] = to_text(result);
        j["rank"] = rank(result);
        buf << j.dump() << '\n';
      } else {
        buf << to_text(result) << '\n';
      }
      out << buf.str();
      return kExitTrue;
    }

    if (*recover) {
      const DecoratedPermutation pi = parse_dp_payload(pi_spec, in);
      const DecoratedPermutation sigma = parse_dp_payload(sigma_spec, in);
      detail::require(pi.n() == sigma.n(), "pi and sigma have different ground sets");
      detail::require(rank(sigma) + 1 == rank(pi), "rank(sigma) must be rank(pi) - 1");
      const QuotientVerdict v = is_quotient_rank(positroid_of(sigma), positroid_of(pi));
      if (!v.is_quotient) {
        const int code = emit_verdict(v, as_json, buf);
        out << buf.str();
        return code;
      }
      const Subset a = recover_shift_set(pi, sigma);
      if (as_json) {
        buf << json{{"is_quotient", true}, {"shift_set", io::to_json(a)}}.dump() << '\n';
      } else {
        buf << "shift set: " << a << '\n';
      }
      out << buf.str();
      return kExitTrue;
    }

    if (*arrows) {
      const DecoratedPermutation dp = parse_dp_payload(dp_spec, in);
      const ArrowSet set = ccw ? ccw_arrows(dp) : cw_arrows(dp);
      if (as_json) {
        buf << io::to_json(set).dump() << '\n';
      } else {
        for (int i = 1; i <= dp.n(); ++i) buf << i << ": " << set.at(i) << '\n';
      }
      out << buf.str();
      return kExitTrue;
    }

    if (*enumerate) {
      std::size_t count = 0;
      if (what == "decorated-permutations") {
        const int bound = resolve_max_n(max_n, kMaxEnumerationN, err);
        for (const auto& dp : all_decorated_permutations(enum_n, bound)) {
          if (enum_k && rank(dp) != *enum_k) continue;
          buf << json{{"n", dp.n()}, {"dp", to_text(dp)}, {"rank", rank(dp)}}.dump() << '\n';
          ++count;
        }
      } else {
        detail::require(enum_k.has_value(), "--k is required for " + what);
        if (what == "positroids") {
          const int bound = resolve_max_n(max_n, kMaxEnumerationN, err);
          for (const auto& record : positroid_census(*enum_k, enum_n, edges, bound)) {
            buf << io::to_json(record).dump() << '\n';
            ++count;
          }
        } else {
          const int bound = resolve_max_n(max_n, kMaxFlagPairN, err);
          for (const auto& pair : elementary_flag_pairs(*enum_k, enum_n, bound)) {
            buf << json{{"sigma", to_text(pair.sigma)},
                        {"pi", to_text(pair.pi)},
                        {"shift_set", io::to_json(pair.shift_set)}}
                       .dump()
                << '\n';
            ++count;
          }
        }
      }
      write_output(out_path, buf.str(), out);
      if (out_path != "-") out << "wrote " << count << " records to " << out_path << '\n';
      return kExitTrue;
    }

    if (*verify) {
      const ExampleReport report = run_reference_examples();
      std::size_t passed = 0;
      json rows = json::array();
      for (const auto& r : report.results) {
        passed += r.passed ? 1 : 0;
        if (as_json) {
          rows.push_back({{"name", r.name}, {"expected", r.expected}, {"actual", r.actual}, {"passed", r.passed}});
        } else {
          buf << (r.passed ? "PASS  " : "FAIL  ") << r.name;
          if (!r.passed) buf << "\n      expected " << r.expected << "\n      actual   " << r.actual;
          buf << '\n';
        }
      }
      if (as_json) {
        buf << json{{"passed", passed}, {"total", report.results.size()}, {"examples", rows}}.dump() << '\n';
      } else {
        buf << passed << '/' << report.results.size() << " examples reproduced\n";
      }
      out << buf.str();
      return report.all_passed() ? kExitTrue : kExitFalse;
    }
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitTrue;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitTrue;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
  err << "error: no subcommand given\n";
  return kExitInput;
}

}  // namespace positroid::cli

#endif  // POSITROID_TOOLS_CLI_APP_HPP
