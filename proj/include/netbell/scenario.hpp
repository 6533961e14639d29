// Copyright 2026 The netbell Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <string>
#include <vector>

#include "netbell/errors.hpp"

namespace netbell {

enum class Kind { kStandardBilocal, kBilocalI, kBilocalII, kTrilocalI, kTrilocalII };

inline const std::vector<Kind>& all_kinds() {
  static const std::vector<Kind> kinds = {Kind::kStandardBilocal, Kind::kBilocalI,
                                          Kind::kBilocalII, Kind::kTrilocalI,
                                          Kind::kTrilocalII};
  return kinds;
}

inline std::string kind_name(Kind k) {
  switch (k) {
    case Kind::kStandardBilocal: return "standard-bilocal";
    case Kind::kBilocalI: return "bilocal-I";
    case Kind::kBilocalII: return "bilocal-II";
    case Kind::kTrilocalI: return "trilocal-I";
    case Kind::kTrilocalII: return "trilocal-II";
  }
  return "?";
}

inline Kind parse_kind(const std::string& s) {
  for (Kind k : all_kinds()) {
    if (kind_name(k) == s) return k;
  }
  throw ParseError("unknown scenario '" + s + "'");
}

/// How a party's combination rows are generated.
enum class RowPattern {
  kChain,       // row j = O_j + O_{j+1}, wrap row O_m - O_1
  kRacColumns,  // n rows over 2^(n-1) settings, row j reads bit j of each y^x
  kRacRows,     // 2^(n-1) rows over n settings, row x reads y^x
  kExplicit,    // fixed rows listed in the scheme
};

struct EdgeRole {
  std::string party;
  int settings;
  int pairs;  // Bell pairs shared with Bob, one qubit per pair on each side
  RowPattern pattern;
};

struct ScenarioSpec {
  Kind kind;
  int n;
  int big_n;  // floor(n/2)
  int root;   // 2 bilocal, 3 trilocal
  int terms;
  int bob_settings;
  std::vector<EdgeRole> edges;
  bool matrix_level;

  int total_pairs() const {
    int p = 0;
    for (const auto& e : edges) p += e.pairs;
    return p;
  }
  int total_qubits() const { return 2 * total_pairs(); }
  bool trilocal() const { return root == 3; }
};

inline constexpr int kMaxScenarioN = 24;

inline ScenarioSpec make_spec(Kind kind, int n) {
  if (kind == Kind::kStandardBilocal && n != 2) {
    throw DomainError("standard-bilocal is defined for n = 2 only");
  }
  if (n < 2 || n > kMaxScenarioN) {
    throw DomainError("n must lie in [2, " + std::to_string(kMaxScenarioN) + "]");
  }
  const int big = 1 << (n - 1);
  const int half = n / 2;
  ScenarioSpec s{kind, n, half, 2, 0, 0, {}, true};
  switch (kind) {
    case Kind::kStandardBilocal:
    case Kind::kBilocalI:
      s.edges = {{"A", big, half, RowPattern::kRacColumns},
                 {"C", n, 1, RowPattern::kChain}};
      s.terms = n;
      break;
    case Kind::kBilocalII:
      s.edges = {{"A", big, 1, RowPattern::kChain},
                 {"C", n, half, RowPattern::kRacRows}};
      s.terms = big;
      break;
    case Kind::kTrilocalI:
      s.root = 3;
      s.edges = {{"A", big, 1, RowPattern::kChain},
                 {"C", n, half, RowPattern::kRacRows},
                 {"D", big, 1, RowPattern::kExplicit}};
      s.terms = big;
      s.matrix_level = (n == 3);
      break;
    case Kind::kTrilocalII:
      s.root = 3;
      s.edges = {{"A", big, half, RowPattern::kRacColumns},
                 {"C", n, 1, RowPattern::kChain},
                 {"D", n, 1, RowPattern::kExplicit}};
      s.terms = n;
      s.matrix_level = (n == 3);
      break;
  }
  s.bob_settings = s.terms;
  return s;
}

inline ScenarioSpec make_spec(const std::string& kind, int n) {
  return make_spec(parse_kind(kind), n);
}

}  // namespace netbell
