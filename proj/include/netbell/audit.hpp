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

#include <cmath>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "netbell/bounds.hpp"
#include "netbell/functionals.hpp"
#include "netbell/noise.hpp"
#include "netbell/serialize.hpp"
#include "netbell/sos.hpp"

namespace netbell {

/// Tolerances of the acceptance table.
namespace tol {
inline constexpr double kValue = 1e-9;
inline constexpr double kClosedForm = 1e-6;
inline constexpr double kTrilocalValue = 1e-4;
inline constexpr double kMixed = 1e-6;
inline constexpr double kGeneralN = 1e-8;
inline constexpr double kResidual = 1e-9;
inline constexpr double kGamma = 1e-9;
inline constexpr double kThreshold = 2e-6;
inline constexpr double kScaling = 1e-9;
inline constexpr double kProbability = 1e-12;
inline constexpr double kAlternativeGap = 0.5;
inline constexpr double kMixedSolver = 1e-9;
inline constexpr double kRefine = 1e-6;
}  // namespace tol

inline constexpr int kGammaSamples = 1000;
inline constexpr int kScalingSamples = 20;
inline constexpr double kAlternativeTrilocalValue = 7.23;

struct Measurement {
  std::string name;
  double value = 0.0;
  double target = 0.0;
  double tolerance = 0.0;  // 0 for exact comparisons
  bool pass = false;
};

struct CriterionResult {
  int id = 0;
  std::string title;
  std::vector<Measurement> measurements;

  bool pass() const {
    for (const auto& m : measurements) {
      if (!m.pass) return false;
    }
    return !measurements.empty();
  }
  void near(const std::string& name, double value, double target, double tolerance) {
    measurements.push_back({name, value, target, tolerance, std::abs(value - target) <= tolerance});
  }
  void at_most(const std::string& name, double value, double limit) {
    measurements.push_back({name, value, limit, 0.0, value <= limit});
  }
  void at_least(const std::string& name, double value, double limit) {
    measurements.push_back({name, value, limit, 0.0, value >= limit});
  }
  void check(const std::string& name, bool ok) {
    measurements.push_back({name, ok ? 1.0 : 0.0, 1.0, 0.0, ok});
  }
};

struct Discrepancy {
  std::string item;
  double reference = 0.0;
  double computed = 0.0;
  std::string note;
};

namespace detail {

inline ScenarioSpec n3(Kind k) { return make_spec(k, k == Kind::kStandardBilocal ? 2 : 3); }

inline void bound_checks(CriterionResult& c, const ScenarioSpec& spec, double formula_target,
                         bool check_det, double det_target, double det_tol) {
  const auto r = bound_report(spec, BoundMethod::kAll, tol::kMixedSolver);
  c.near("formula bound", r.formula, formula_target, tol::kValue);
  c.near("mixed bound", r.mixed->value, formula_target, tol::kMixed);
  if (check_det) c.near("deterministic max", r.deterministic->value, det_target, det_tol);
  c.check("deterministic <= mixed <= formula", r.ordering_holds);
}

}  // namespace detail

inline CriterionResult criterion_standard() {
  CriterionResult c{1, "standard bilocal value and bounds", {}};
  const auto spec = detail::n3(Kind::kStandardBilocal);
  const auto a = reference_assembly(spec);
  c.near("value, derived hub observables", functional_value(a).total, 2.0 * std::sqrt(2.0),
         tol::kValue);
  ObservableSet obs = reference_observables(spec);
  obs.bob = reference_standard_hub();
  c.near("value, Z(x)Z and X(x)X hub", functional_value(assemble(spec, obs)).total,
         2.0 * std::sqrt(2.0), tol::kValue);
  const auto r = bound_report(spec, BoundMethod::kAll, tol::kMixedSolver);
  c.near("formula bound", r.formula, 2.0, tol::kValue);
  c.near("mixed bound", r.mixed->value, 2.0, tol::kValue);
  c.near("deterministic max", r.deterministic->value, 2.0, tol::kValue);
  return c;
}

inline CriterionResult criterion_bilocal_one() {
  CriterionResult c{2, "bilocal-I n=3 value and bounds", {}};
  const auto spec = detail::n3(Kind::kBilocalI);
  c.near("value", functional_value(reference_assembly(spec)).total, 6.0, tol::kValue);
  detail::bound_checks(c, spec, 2.0 * std::sqrt(6.0), true, 4.0, 0.0);
  c.near("strategy tuples enumerated", static_cast<double>(deterministic_max(spec).enumerated),
         128.0, 0.0);
  return c;
}

inline CriterionResult criterion_bilocal_two() {
  CriterionResult c{3, "bilocal-II n=3 value and bounds", {}};
  const auto spec = detail::n3(Kind::kBilocalII);
  c.near("value", functional_value(reference_assembly(spec)).total,
         4.0 * std::pow(3.0 * (2.0 + std::sqrt(2.0)), 0.25), tol::kClosedForm);
  detail::bound_checks(c, spec, 6.0, false, 0.0, 0.0);
  return c;
}

inline CriterionResult criterion_trilocal_one() {
  CriterionResult c{4, "trilocal-I n=3 value and bounds", {}};
  const auto spec = detail::n3(Kind::kTrilocalI);
  const double v = functional_value(reference_assembly(spec)).total;
  c.near("value", v, 4.0 * std::cbrt(2.0 * std::sqrt(3.0) * (1.0 + std::sqrt(2.0))),
         tol::kTrilocalValue);
  c.at_least("distance to alternative 7.23", std::abs(v - kAlternativeTrilocalValue),
             tol::kAlternativeGap);
  detail::bound_checks(c, spec, 2.0 * std::pow(6.0, 2.0 / 3.0), false, 0.0, 0.0);
  return c;
}

inline CriterionResult criterion_trilocal_two() {
  CriterionResult c{5, "trilocal-II n=3 value and bounds", {}};
  const auto spec = detail::n3(Kind::kTrilocalII);
  c.near("value", functional_value(reference_assembly(spec)).total, 6.0, tol::kValue);
  detail::bound_checks(c, spec, 2.0 * std::cbrt(15.0), true, std::cbrt(12.0) + std::cbrt(4.0),
                       tol::kValue);
  c.near("strategy tuples enumerated", static_cast<double>(deterministic_max(spec).enumerated),
         1024.0, 0.0);
  return c;
}

inline CriterionResult criterion_general_n() {
  CriterionResult c{6, "general-n matrix values match closed forms", {}};
  for (int n = 2; n <= 6; ++n) {
    const auto spec = make_spec(Kind::kBilocalI, n);
    const double target = std::sqrt(std::ldexp(1.0, n) * std::pow(n, 1.5) * std::cos(M_PI / (2.0 * n)));
    c.near("bilocal-I n=" + std::to_string(n), functional_value(generated_assembly(spec)).total,
           target, tol::kGeneralN);
  }
  for (int n = 2; n <= 4; ++n) {
    const auto spec = make_spec(Kind::kBilocalII, n);
    const double target = std::sqrt(std::ldexp(1.0, 2 * n - 1) * std::sqrt(static_cast<double>(n)) *
                                     std::cos(M_PI / std::ldexp(1.0, n)));
    c.near("bilocal-II n=" + std::to_string(n), functional_value(generated_assembly(spec)).total,
           target, tol::kGeneralN);
  }
  return c;
}

inline CriterionResult criterion_certificates(std::uint64_t seed) {
  CriterionResult c{7, "sum-of-squares certificates", {}};
  for (Kind k : all_kinds()) {
    const auto spec = detail::n3(k);
    const auto a = reference_assembly(spec);
    const auto r = sos_report(a);
    const std::string tag = kind_name(k) + " ";
    c.at_most(tag + "max residual", r.max_residual, tol::kResidual);
    c.near(tag + "gamma", r.gamma, 0.0, tol::kGamma);
    c.at_most(tag + "max constraint deviation", r.constraints.max_deviation(),
              kAnticommutatorTol);
    c.check(tag + "constraint table holds", r.constraints.all_hold());
    c.at_least(tag + "min gamma over perturbations",
               gamma_audit(a, kGammaSamples, seed).min_gamma, -tol::kGamma);
  }
  const PartyObservables p = chain_observables(4);
  const double r2 = std::sqrt(2.0);
  c.at_most("four-setting chain identity 1",
            max_abs(p.ops[0] - r2 * p.ops[1] + p.ops[2]), kLinearTol);
  c.at_most("four-setting chain identity 2",
            max_abs(-p.ops[0] + p.ops[2] - r2 * p.ops[3]), kLinearTol);
  return c;
}

inline CriterionResult criterion_noise(std::uint64_t seed) {
  CriterionResult c{8, "noise thresholds and scaling law", {}};
  const double targets[] = {1.0 / std::sqrt(2.0), std::sqrt(2.0 / 3.0),
                            6.0 / (4.0 * std::pow(3.0 * (2.0 + std::sqrt(2.0)), 0.25)),
                            2.0 * std::pow(6.0, 2.0 / 3.0) /
                                (4.0 * std::cbrt(2.0 * std::sqrt(3.0) * (1.0 + std::sqrt(2.0)))),
                            std::cbrt(5.0 / 9.0)};
  int i = 0;
  for (Kind k : all_kinds()) {
    const auto spec = detail::n3(k);
    const auto v = critical_visibility_empirical(spec, tol::kRefine);
    c.near(kind_name(k) + " critical visibility", v.value_or(2.0), targets[i++], tol::kThreshold);
    c.at_most(kind_name(k) + " scaling deviation", scaling_check(spec, kScalingSamples, seed),
              tol::kScaling);
  }
  return c;
}

inline CriterionResult criterion_probabilities() {
  CriterionResult c{9, "probability normalization and correlators", {}};
  for (Kind k : {Kind::kBilocalI, Kind::kBilocalII, Kind::kTrilocalI, Kind::kTrilocalII}) {
    const auto a = reference_assembly(make_spec(k, 3));
    std::vector<int> sizes;
    for (const auto& p : a.observables.edges) sizes.push_back(static_cast<int>(p.ops.size()));
    sizes.push_back(static_cast<int>(a.observables.bob->ops.size()));
    std::vector<int> s(sizes.size(), 0);
    double norm_dev = 0.0, corr_dev = 0.0;
    int tuples = 0;
    for (;;) {
      const auto t = joint_probability_tensor(a, s);
      norm_dev = std::max(norm_dev, std::abs(t.total() - 1.0));
      corr_dev = std::max(corr_dev, std::abs(t.correlator() - correlator(a, s)));
      ++tuples;
      std::size_t d = s.size();
      while (d > 0 && ++s[d - 1] == sizes[d - 1]) s[--d] = 0;
      if (d == 0) break;
    }
    c.at_most(kind_name(k) + " normalization deviation", norm_dev, tol::kProbability);
    c.at_most(kind_name(k) + " correlator deviation", corr_dev, tol::kProbability);
  }
  return c;
}

/// Reference decimals and printed forms that do not match the computation.
inline std::vector<Discrepancy> discrepancies() {
  std::vector<Discrepancy> d;
  const auto a2 = reference_assembly(detail::n3(Kind::kBilocalII));
  const auto t1 = reference_assembly(detail::n3(Kind::kTrilocalI));
  const auto t2 = reference_assembly(detail::n3(Kind::kTrilocalII));
  const double v2 = functional_value(a2).total;
  const double vt1 = functional_value(t1).total;
  d.push_back({"bilocal-II optimum decimal", 7.155938, v2,
               "closed form 4[3(2+sqrt2)]^(1/4) evaluates to the computed value"});
  d.push_back({"trilocal-I optimum decimal", 8.1196, vt1,
               "closed form 4[2sqrt3(1+sqrt2)]^(1/3) evaluates to the computed value"});
  d.push_back({"trilocal-I alternative optimum", kAlternativeTrilocalValue, vt1,
               "alternative form 4(2sqrt3+sqrt6)^(1/3) = " +
                   std::to_string(4.0 * std::cbrt(2.0 * std::sqrt(3.0) + std::sqrt(6.0))) +
                   " does not match the computed value"});
  const auto vc = [](Kind k) { return *critical_visibility_empirical(detail::n3(k), tol::kRefine); };
  const double c2 = vc(Kind::kBilocalII);
  const double ct1 = vc(Kind::kTrilocalI);
  d.push_back({"bilocal-II critical visibility closed form",
               0.75 * std::sqrt(3.0 - 3.0 / std::sqrt(2.0)), c2,
               "the closed form equals the square of the computed threshold"});
  d.push_back({"bilocal-II critical visibility decimal", 0.838527, c2,
               "computed threshold is 6 divided by the optimum"});
  d.push_back({"trilocal-I critical visibility", 0.92, ct1,
               "closed form sqrt3/(2(sqrt2+2))^(1/3) = " +
                   std::to_string(std::sqrt(3.0) / std::cbrt(2.0 * (std::sqrt(2.0) + 2.0))) +
                   " is inconsistent with the optimum and the scaling law"});
  d.push_back({"trilocal-I critical visibility decimal", 0.813330, ct1,
               "decimal derived from the 8.1196 optimum"});
  d.push_back({"trilocal-II critical visibility decimal", 0.822034, vc(Kind::kTrilocalII),
               "(5/9)^(1/3) evaluates to the computed threshold"});
  const auto omega = omega_norms(reference_assembly(detail::n3(Kind::kBilocalI)));
  d.push_back({"bilocal-I Alice combination norm", 2.0, omega[0][0],
               "norms are 4/sqrt3 with squared sum 16"});
  for (const auto* a : {&t1, &t2}) {
    const auto table = constraint_table(a->spec, a->observables.edges);
    for (const auto& p : table.printed_forms) {
      d.push_back({kind_name(a->spec.kind) + " printed identity " + p.identity, 0.0, p.deviation,
                   "deviation of the printed form on the reference observables"});
    }
  }
  d.push_back({"bilocal-I n=4 visibility scaling law", 0.0,
               scaling_check(make_spec(Kind::kBilocalI, 4), kScalingSamples, 42),
               "generated observables act trivially on some Alice qubits"});
  return d;
}

inline Json to_json(const CriterionResult& c) {
  Json m = Json::array();
  for (const auto& x : c.measurements) {
    m.push_back({{"name", x.name},
                 {"value", sig12(x.value)},
                 {"target", sig12(x.target)},
                 {"tolerance", x.tolerance},
                 {"pass", x.pass}});
  }
  return {{"id", c.id}, {"title", c.title}, {"pass", c.pass()}, {"measurements", m}};
}

inline Json to_json(const Discrepancy& d) {
  return {{"item", d.item},
          {"reference", sig12(d.reference)},
          {"computed", sig12(d.computed)},
          {"note", d.note}};
}

inline std::vector<CriterionResult> audit_criteria(std::uint64_t seed) {
  return {criterion_standard(),     criterion_bilocal_one(),       criterion_bilocal_two(),
          criterion_trilocal_one(), criterion_trilocal_two(),      criterion_general_n(),
          criterion_certificates(seed), criterion_noise(seed), criterion_probabilities()};
}

/// Criteria 1-9 and the discrepancy list.
inline Json audit_body(std::uint64_t seed) {
  Json crit = Json::array();
  for (const auto& c : audit_criteria(seed)) crit.push_back(to_json(c));
  Json disc = Json::array();
  for (const auto& d : discrepancies()) disc.push_back(to_json(d));
  return {{"seed", seed}, {"criteria", crit}, {"discrepancies", disc}};
}

/// Full report; criterion 10 compares two independent serializations.
inline Json audit_report(std::uint64_t seed) {
  Json body = audit_body(seed);
  const std::string first = body.dump(2);
  const std::string second = audit_body(seed).dump(2);
  CriterionResult c10{10, "repeated report serialization is byte-identical", {}};
  c10.check("two serializations identical", first == second);
  body["criteria"].push_back(to_json(c10));
  bool all = true;
  for (const auto& c : body["criteria"]) all = all && c["pass"].get<bool>();
  body["all_pass"] = all;
  return body;
}

}  // namespace netbell
