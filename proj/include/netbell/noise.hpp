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
#include <optional>
#include <random>
#include <vector>

#include "netbell/assembly.hpp"
#include "netbell/bounds.hpp"
#include "netbell/functionals.hpp"

namespace netbell {

inline constexpr int kCurvePoints = 101;
inline constexpr double kDefaultRefine = 1e-6;
inline constexpr double kMinRefine = 1e-10;

/// Reference observables on Werner sources, one visibility per source.
inline NetworkAssembly noisy_assembly(const ScenarioSpec& spec,
                                      const std::vector<double>& visibilities) {
  if (visibilities.size() != spec.edges.size()) {
    throw ShapeError("expected " + std::to_string(spec.edges.size()) + " visibilities");
  }
  for (double v : visibilities) {
    if (!(v >= 0.0 && v <= 1.0)) throw DomainError("visibility outside [0, 1]");
  }
  return reference_assembly(spec, visibilities);
}

/// Exponent of v in the uniform-visibility threshold.
inline int noise_exponent(const ScenarioSpec& spec) {
  return spec.big_n + (spec.trilocal() ? 2 : 1);
}

/// (prod_k v_k^pairs_k)^(1/r) * value(1).
inline double scaled_prediction(const ScenarioSpec& spec, const std::vector<double>& v,
                                double ideal_value) {
  double p = 1.0;
  for (std::size_t k = 0; k < spec.edges.size(); ++k) p *= std::pow(v[k], spec.edges[k].pairs);
  return root_magnitude(p, spec.root) * ideal_value;
}

/// Largest |value(v) - scaled_prediction| over `samples` seeded tuples in [0,1].
inline double scaling_check(const ScenarioSpec& spec, int samples, std::uint64_t seed) {
  const double ideal = functional_value(reference_assembly(spec)).total;
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  double worst = 0.0;
  for (int s = 0; s < samples; ++s) {
    std::vector<double> v(spec.edges.size());
    for (double& x : v) x = unit(rng);
    const double got = functional_value(noisy_assembly(spec, v)).total;
    worst = std::max(worst, std::abs(got - scaled_prediction(spec, v, ideal)));
  }
  return worst;
}

/// Closed-form right-hand side R of the uniform threshold v^E > R.
inline double critical_visibility_rhs(const ScenarioSpec& spec) {
  const double n = spec.n;
  const double c = central_binomial(spec.n);
  const double h = std::ldexp(1.0, 1 - spec.n);  // 2^(1-n)
  switch (spec.kind) {
    case Kind::kStandardBilocal:
    case Kind::kBilocalI:
      return h * std::sqrt(n) * (1.0 - 1.0 / n) * c / std::cos(M_PI / (2.0 * n));
    case Kind::kBilocalII:
      return std::sqrt(n) * h * (1.0 - h) * c / std::cos(M_PI / std::ldexp(1.0, spec.n));
    case Kind::kTrilocalI: {
      const double fl = std::floor(std::ldexp(1.0, 2 * spec.n - 3) + 0.5);
      return std::sqrt(n) * h * h * (1.0 - h) * c * fl * std::tan(M_PI / std::ldexp(1.0, spec.n));
    }
    case Kind::kTrilocalII: {
      const double fl = std::floor((n * n + 1.0) / 2.0);
      return h / std::sqrt(n) * (1.0 - 1.0 / n) * c * fl * std::tan(M_PI / (2.0 * n));
    }
  }
  return 0.0;
}

/// R^(1/E); a result above 1 means no visibility violates.
inline double critical_visibility_formula(const ScenarioSpec& spec) {
  return std::pow(critical_visibility_rhs(spec), 1.0 / noise_exponent(spec));
}

/// Uniform v where the functional crosses the classical bound, by bisection.
/// Empty when value(1) does not exceed the bound.
inline std::optional<double> critical_visibility_empirical(const ScenarioSpec& spec,
                                                           double tol = kDefaultRefine) {
  if (!(tol >= kMinRefine)) throw DomainError("refine tolerance must be at least 1e-10");
  const double bound = classical_bound_formula(spec);
  auto value_at = [&](double v) {
    return functional_value(noisy_assembly(spec, std::vector<double>(spec.edges.size(), v))).total;
  };
  if (value_at(1.0) <= bound) return std::nullopt;
  double lo = 0.0, hi = 1.0;
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    (value_at(mid) > bound ? hi : lo) = mid;
  }
  return 0.5 * (lo + hi);
}

struct NoiseSample {
  double v = 0.0;
  double value = 0.0;
  double bound = 0.0;
  bool violated = false;
};

struct NoiseCurve {
  ScenarioSpec spec;
  std::vector<NoiseSample> samples;
  std::optional<double> v_critical_empirical;
  double v_critical_formula = 0.0;
  std::vector<int> exponents;  // Bell pairs per source
};

/// Uniform sweep over `points` visibilities on [0,1] plus a refined threshold.
inline NoiseCurve noise_curve(const ScenarioSpec& spec, double refine = kDefaultRefine,
                              int points = kCurvePoints) {
  if (points < 2) throw DomainError("a curve needs at least two points");
  NoiseCurve c;
  c.spec = spec;
  const double bound = classical_bound_formula(spec);
  for (int k = 0; k < points; ++k) {
    const double v = static_cast<double>(k) / (points - 1);
    const double val =
        functional_value(noisy_assembly(spec, std::vector<double>(spec.edges.size(), v))).total;
    c.samples.push_back({v, val, bound, val > bound});
  }
  c.v_critical_empirical = critical_visibility_empirical(spec, refine);
  c.v_critical_formula = critical_visibility_formula(spec);
  for (const auto& e : spec.edges) c.exponents.push_back(e.pairs);
  return c;
}

}  // namespace netbell
