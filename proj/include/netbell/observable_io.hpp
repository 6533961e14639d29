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

#include <cerrno>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "netbell/errors.hpp"
#include "netbell/scenario.hpp"
#include "netbell/schemes.hpp"

// Text format for observable sets:
//
//   # comment
//   scenario bilocal-I
//   n 3
//   party A 4 2        label, observable count, matrix dimension
//   0.57735 0.816497-0.471405i
//   ...                count * dimension rows of dimension entries
//
// Entries are complex literals such as 1, -0.5, i, -i, 0.5i, 1+2i, 1e-3-2i.
// The hub party "B" is optional.

namespace netbell {

namespace detail {

inline double parse_real(const std::string& s, const std::string& whole) {
  if (s.empty()) throw ParseError("malformed complex literal '" + whole + "'");
  char* end = nullptr;
  errno = 0;
  const double v = std::strtod(s.c_str(), &end);
  if (end != s.c_str() + s.size() || errno == ERANGE) {
    throw ParseError("malformed complex literal '" + whole + "'");
  }
  return v;
}

inline double parse_unit_imag(const std::string& s, const std::string& whole) {
  if (s.empty() || s == "+") return 1.0;
  if (s == "-") return -1.0;
  return parse_real(s, whole);
}

}  // namespace detail

inline Complex parse_complex(const std::string& text) {
  if (text.empty()) throw ParseError("empty complex literal");
  if (text.back() != 'i') return {detail::parse_real(text, text), 0.0};
  const std::string body = text.substr(0, text.size() - 1);
  std::size_t split = std::string::npos;
  for (std::size_t k = body.size(); k-- > 1;) {
    if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  if (split == std::string::npos) return {0.0, detail::parse_unit_imag(body, text)};
  return {detail::parse_real(body.substr(0, split), text),
          detail::parse_unit_imag(body.substr(split), text)};
}

inline std::string format_complex(Complex z) {
  char buf[80];
  const double re = z.real() == 0.0 ? 0.0 : z.real();
  const double im = z.imag() == 0.0 ? 0.0 : z.imag();
  if (im == 0.0) {
    std::snprintf(buf, sizeof buf, "%.17g", re);
  } else if (re == 0.0) {
    std::snprintf(buf, sizeof buf, "%.17gi", im);
  } else {
    std::snprintf(buf, sizeof buf, "%.17g%+.17gi", re, im);
  }
  return buf;
}

struct ObservableDocument {
  ScenarioSpec spec;
  ObservableSet observables;
};

inline void write_observables(std::ostream& os, const ScenarioSpec& spec,
                              const ObservableSet& obs) {
  os << "scenario " << kind_name(spec.kind) << "\n";
  os << "n " << spec.n << "\n";
  auto party = [&](const PartyObservables& p) {
    os << "party " << p.party << " " << p.ops.size() << " " << p.dim() << "\n";
    for (const auto& m : p.ops) {
      for (Index r = 0; r < m.rows(); ++r) {
        for (Index c = 0; c < m.cols(); ++c) os << (c ? " " : "") << format_complex(m(r, c));
        os << "\n";
      }
    }
  };
  for (const auto& p : obs.edges) party(p);
  if (obs.bob) party(*obs.bob);
}

/// Parses and validates a document against the scenario it names.
inline ObservableDocument read_observables(std::istream& is) {
  std::vector<std::vector<std::string>> lines;
  std::vector<int> numbers;
  std::string raw;
  for (int no = 1; std::getline(is, raw); ++no) {
    if (auto h = raw.find('#'); h != std::string::npos) raw.erase(h);
    std::istringstream ls(raw);
    std::vector<std::string> tok;
    for (std::string t; ls >> t;) tok.push_back(t);
    if (tok.empty()) continue;
    lines.push_back(std::move(tok));
    numbers.push_back(no);
  }
  std::size_t at = 0;
  auto fail = [&](const std::string& msg) -> ParseError {
    const int no = at < numbers.size() ? numbers[at] : (numbers.empty() ? 0 : numbers.back());
    return ParseError("line " + std::to_string(no) + ": " + msg);
  };
  auto to_int = [&](const std::string& s) {
    char* end = nullptr;
    const long v = std::strtol(s.c_str(), &end, 10);
    if (end != s.c_str() + s.size() || v <= 0 || v > (1L << 20)) throw fail("bad integer '" + s + "'");
    return static_cast<int>(v);
  };
  if (at >= lines.size() || lines[at].size() != 2 || lines[at][0] != "scenario") {
    throw fail("expected 'scenario <kind>'");
  }
  const Kind kind = parse_kind(lines[at][1]);
  ++at;
  if (at >= lines.size() || lines[at].size() != 2 || lines[at][0] != "n") throw fail("expected 'n <n>'");
  const int n = to_int(lines[at][1]);
  ++at;
  ObservableDocument doc{make_spec(kind, n), {}};
  std::map<std::string, PartyObservables> parties;
  while (at < lines.size()) {
    const auto& h = lines[at];
    if (h.size() != 4 || h[0] != "party") throw fail("expected 'party <label> <count> <dim>'");
    PartyObservables p;
    p.party = h[1];
    const int count = to_int(h[2]);
    const int dim = to_int(h[3]);
    if (!is_power_of_two(dim)) throw fail("dimension must be a power of two");
    p.qubits = qubit_count(dim);
    if (parties.count(p.party)) throw fail("party " + p.party + " listed twice");
    ++at;
    for (int k = 0; k < count; ++k) {
      CMatrix m(dim, dim);
      for (int r = 0; r < dim; ++r, ++at) {
        if (at >= lines.size()) throw fail("unexpected end of matrix data");
        if (static_cast<int>(lines[at].size()) != dim) {
          throw fail("expected " + std::to_string(dim) + " entries");
        }
        for (int c = 0; c < dim; ++c) {
          try {
            m(r, c) = parse_complex(lines[at][c]);
          } catch (const ParseError& e) {
            throw fail(e.what());
          }
        }
      }
      p.ops.push_back(std::move(m));
    }
    parties.emplace(p.party, std::move(p));
  }
  for (const auto& role : doc.spec.edges) {
    auto it = parties.find(role.party);
    if (it == parties.end()) throw ParseError("party " + role.party + " missing");
    validate_observables(it->second);
    doc.observables.edges.push_back(std::move(it->second));
    parties.erase(it);
  }
  if (auto it = parties.find("B"); it != parties.end()) {
    validate_observables(it->second);
    doc.observables.bob = std::move(it->second);
    parties.erase(it);
  }
  if (!parties.empty()) throw ParseError("unknown party " + parties.begin()->first);
  return doc;
}

inline ObservableDocument read_observables_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ParseError("cannot open " + path);
  return read_observables(f);
}

}  // namespace netbell
