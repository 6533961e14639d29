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

#include <cstdio>
#include <cstdlib>
#include <ostream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "netbell/bounds.hpp"
#include "netbell/functionals.hpp"
#include "netbell/noise.hpp"
#include "netbell/sos.hpp"

namespace netbell {

using Json = nlohmann::ordered_json;

/// Rounds to 12 significant digits.
inline double sig12(double x) {
  if (!std::isfinite(x)) return x;
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  const double r = std::strtod(buf, nullptr);
  return r == 0.0 ? 0.0 : r;
}

inline std::string fixed9(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9f", x);
  return buf;
}

inline Json json_numbers(const std::vector<double>& v) {
  Json a = Json::array();
  for (double x : v) a.push_back(sig12(x));
  return a;
}

inline Json to_json(const ScenarioSpec& s) {
  Json j;
  j["kind"] = kind_name(s.kind);
  j["n"] = s.n;
  j["root"] = s.root;
  j["terms"] = s.terms;
  Json parties = Json::array();
  for (const auto& e : s.edges) {
    parties.push_back({{"party", e.party}, {"settings", e.settings}, {"pairs", e.pairs}});
  }
  j["edges"] = parties;
  return j;
}

inline Json to_json(const FunctionalResult& r) {
  return {{"spec", to_json(r.spec)},
          {"terms", json_numbers(r.terms)},
          {"magnitudes", json_numbers(r.magnitudes)},
          {"total", sig12(r.total)}};
}

inline Json to_json(const BoundReport& r) {
  Json j;
  j["spec"] = to_json(r.spec);
  j["formula"] = sig12(r.formula);
  if (r.deterministic) {
    const auto& d = *r.deterministic;
    j["deterministic"] = {{"value", sig12(d.value)},
                          {"strategies", d.strategies},
                          {"profiles", d.profiles},
                          {"enumerated", d.enumerated}};
  } else {
    j["deterministic"] = nullptr;
  }
  if (r.mixed) {
    const auto& m = *r.mixed;
    Json ex = Json::array();
    for (const auto& u : m.expected_profiles) ex.push_back(json_numbers(u));
    j["mixed"] = {{"value", sig12(m.value)},
                  {"gap", sig12(m.gap)},
                  {"iterations", m.iterations},
                  {"expected_profiles", ex}};
  } else {
    j["mixed"] = nullptr;
  }
  j["delta_max"] = r.delta_max;
  j["mixed_short_of_formula"] = r.mixed_short_of_formula;
  j["ordering_holds"] = r.ordering_holds;
  return j;
}

inline Json to_json(const ConstraintCheck& c) {
  return {{"party", c.party},
          {"identity", c.identity},
          {"deviation", sig12(c.deviation)},
          {"tolerance", c.tolerance},
          {"holds", c.holds()}};
}

inline Json to_json(const SOSReport& r) {
  Json om = Json::array();
  for (const auto& row : r.omegas) om.push_back(json_numbers(row));
  Json checks = Json::array();
  for (const auto& c : r.constraints.checks) checks.push_back(to_json(c));
  Json printed = Json::array();
  for (const auto& c : r.constraints.printed_forms) printed.push_back(to_json(c));
  return {{"spec", to_json(r.spec)},
          {"omegas", om},
          {"omega_square_sums", json_numbers(r.omega_square_sums)},
          {"predicted", sig12(r.predicted)},
          {"value", sig12(r.value)},
          {"gamma", sig12(r.gamma)},
          {"residuals", json_numbers(r.residuals)},
          {"max_residual", sig12(r.max_residual)},
          {"formula_optimum", sig12(r.formula_optimum)},
          {"constraints_hold", r.constraints.all_hold()},
          {"constraints", checks},
          {"printed_forms", printed}};
}

inline Json to_json(const NoiseCurve& c) {
  Json samples = Json::array();
  for (const auto& s : c.samples) {
    samples.push_back({{"v", sig12(s.v)},
                       {"value", sig12(s.value)},
                       {"bound", sig12(s.bound)},
                       {"violated", s.violated}});
  }
  Json j;
  j["spec"] = to_json(c.spec);
  j["v_critical_empirical"] =
      c.v_critical_empirical ? Json(sig12(*c.v_critical_empirical)) : Json(nullptr);
  j["v_critical_formula"] = sig12(c.v_critical_formula);
  j["exponents"] = c.exponents;
  j["samples"] = samples;
  return j;
}

inline void write_csv(std::ostream& os, const NoiseCurve& c) {
  os << "v,value,bound,violated\n";
  char buf[128];
  for (const auto& s : c.samples) {
    std::snprintf(buf, sizeof buf, "%.12g,%.12g,%.12g,%d\n", s.v, sig12(s.value), s.bound,
                  s.violated ? 1 : 0);
    os << buf;
  }
}

inline void write_text(std::ostream& os, const FunctionalResult& r) {
  os << "scenario " << kind_name(r.spec.kind) << " n " << r.spec.n << "\n";
  for (std::size_t j = 0; j < r.terms.size(); ++j) {
    os << "I" << j + 1 << " " << fixed9(r.terms[j]) << "\n";
  }
  os << "total " << fixed9(r.total) << "\n";
}

inline void write_text(std::ostream& os, const BoundReport& r) {
  os << "scenario " << kind_name(r.spec.kind) << " n " << r.spec.n << "\n";
  os << "formula " << fixed9(r.formula) << "\n";
  if (r.mixed) {
    os << "mixed " << fixed9(r.mixed->value) << " gap " << sig12(r.mixed->gap) << "\n";
  }
  if (r.deterministic) os << "deterministic " << fixed9(r.deterministic->value) << "\n";
  if (r.mixed_short_of_formula) os << "flag mixed bound short of formula\n";
  if (!r.ordering_holds) os << "flag ordering deterministic <= mixed <= formula violated\n";
}

inline void write_text(std::ostream& os, const SOSReport& r) {
  os << "scenario " << kind_name(r.spec.kind) << " n " << r.spec.n << "\n";
  os << "value " << fixed9(r.value) << "\n";
  os << "predicted " << fixed9(r.predicted) << "\n";
  os << "gamma " << sig12(r.gamma) << "\n";
  os << "max_residual " << sig12(r.max_residual) << "\n";
  for (const auto& c : r.constraints.checks) {
    os << (c.holds() ? "ok   " : "FAIL ") << c.identity << "  deviation " << sig12(c.deviation)
       << "\n";
  }
  for (const auto& c : r.constraints.printed_forms) {
    os << "printed form " << c.identity << "  deviation " << sig12(c.deviation) << "\n";
  }
}

inline void write_text(std::ostream& os, const NoiseCurve& c) {
  os << "scenario " << kind_name(c.spec.kind) << " n " << c.spec.n << "\n";
  if (c.v_critical_empirical) {
    os << "v_critical_empirical " << fixed9(*c.v_critical_empirical) << "\n";
  } else {
    os << "v_critical_empirical none\n";
  }
  os << "v_critical_formula " << fixed9(c.v_critical_formula) << "\n";
}

}  // namespace netbell
