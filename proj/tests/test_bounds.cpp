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

#include <cmath>
#include <numeric>

#include <gtest/gtest.h>

#include "netbell/bounds.hpp"

namespace netbell {
namespace {

ScenarioSpec spec_of(Kind k) { return make_spec(k, k == Kind::kStandardBilocal ? 2 : 3); }

// Plain enumeration over every +-1 strategy tuple, without profile reduction.
double brute_force_max(const ScenarioSpec& spec) {
  const auto scheme = coefficient_scheme(spec);
  std::vector<int> widths;
  int total = 0;
  for (const auto& e : spec.edges) {
    widths.push_back(e.settings);
    total += e.settings;
  }
  double best = 0.0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << total); ++mask) {
    double v = 0.0;
    for (int j = 0; j < spec.terms; ++j) {
      double prod = 1.0;
      int bit = 0;
      for (std::size_t e = 0; e < spec.edges.size(); ++e) {
        int s = 0;
        for (int x = 0; x < widths[e]; ++x, ++bit) {
          s += scheme.rows[e][j][x] * ((mask >> bit) & 1 ? -1 : 1);
        }
        prod *= std::abs(s);
      }
      v += std::pow(prod, 1.0 / spec.root);
    }
    best = std::max(best, v);
  }
  return best;
}

TEST(Formula, ReferenceBounds) {
  EXPECT_NEAR(classical_bound_formula(spec_of(Kind::kStandardBilocal)), 2.0, 1e-12);
  EXPECT_NEAR(classical_bound_formula(spec_of(Kind::kBilocalI)), 2.0 * std::sqrt(6.0), 1e-12);
  EXPECT_NEAR(classical_bound_formula(spec_of(Kind::kBilocalII)), 6.0, 1e-12);
  EXPECT_NEAR(classical_bound_formula(spec_of(Kind::kTrilocalI)), 2.0 * std::pow(6.0, 2.0 / 3.0),
              1e-12);
  EXPECT_NEAR(classical_bound_formula(spec_of(Kind::kTrilocalII)), 2.0 * std::cbrt(15.0), 1e-12);
}

TEST(Formula, AvailableForLargeN) {
  for (Kind k : {Kind::kBilocalI, Kind::kBilocalII, Kind::kTrilocalI, Kind::kTrilocalII}) {
    for (int n = 2; n <= kMaxScenarioN; ++n) {
      const auto s = make_spec(k, n);
      EXPECT_GT(classical_bound_formula(s), 0.0);
      EXPECT_LT(classical_bound_formula(s), quantum_optimum_formula(s)) << kind_name(k) << n;
    }
  }
}

TEST(Binomial, SmallValues) {
  EXPECT_EQ(binomial(4, 2), 6u);
  EXPECT_EQ(binomial(10, 3), 120u);
  EXPECT_EQ(binomial(3, 5), 0u);
  EXPECT_EQ(central_binomial(5), 6.0);
}

TEST(Deterministic, ReferenceMaxima) {
  EXPECT_DOUBLE_EQ(deterministic_max(spec_of(Kind::kStandardBilocal)).value, 2.0);
  const auto b1 = deterministic_max(spec_of(Kind::kBilocalI));
  EXPECT_DOUBLE_EQ(b1.value, 4.0);
  EXPECT_EQ(b1.enumerated, 128u);
  const auto t2 = deterministic_max(spec_of(Kind::kTrilocalII));
  EXPECT_NEAR(t2.value, std::cbrt(12.0) + std::cbrt(4.0), 1e-12);
  EXPECT_EQ(t2.enumerated, 1024u);
}

TEST(Deterministic, MatchesBruteForce) {
  for (Kind k : all_kinds()) {
    const auto spec = spec_of(k);
    EXPECT_NEAR(deterministic_max(spec).value, brute_force_max(spec), 1e-12) << kind_name(k);
  }
  for (Kind k : {Kind::kBilocalI, Kind::kBilocalII}) {
    const auto spec = make_spec(k, 4);
    EXPECT_NEAR(deterministic_max(spec).value, brute_force_max(spec), 1e-12) << kind_name(k);
  }
}

TEST(Deterministic, ArgmaxReproducesValueAndPrefersPlus) {
  for (Kind k : all_kinds()) {
    const auto spec = spec_of(k);
    const auto d = deterministic_max(spec);
    const auto scheme = coefficient_scheme(spec);
    double v = 0.0;
    for (int j = 0; j < spec.terms; ++j) {
      double prod = 1.0;
      for (std::size_t e = 0; e < spec.edges.size(); ++e) {
        const auto& row = scheme.rows[e][j];
        prod *= std::abs(std::inner_product(row.begin(), row.end(), d.strategies[e].begin(), 0));
      }
      v += std::pow(prod, 1.0 / spec.root);
    }
    EXPECT_NEAR(v, d.value, 1e-12);
    EXPECT_EQ(d.strategies[0][0], 1);
  }
}

TEST(Deterministic, SettingCapIsEnforced) {
  EXPECT_THROW(deterministic_max(make_spec(Kind::kBilocalI, 6)), CapacityError);
}

TEST(Mixed, AttainsFormulaAtReferenceSizes) {
  for (Kind k : all_kinds()) {
    const auto spec = spec_of(k);
    const auto m = mixed_bound(spec, 1e-9);
    EXPECT_NEAR(m.value, classical_bound_formula(spec), 1e-6) << kind_name(k);
    EXPECT_LE(m.gap, 1e-9);
  }
}

TEST(Mixed, WeightsFormDistributions) {
  const auto spec = spec_of(Kind::kTrilocalI);
  const auto m = mixed_bound(spec, 1e-9);
  ASSERT_EQ(m.weights.size(), spec.edges.size());
  for (std::size_t e = 0; e < m.weights.size(); ++e) {
    double total = 0.0;
    std::vector<double> mean(spec.terms, 0.0);
    for (const auto& [profile, w] : m.weights[e]) {
      EXPECT_GE(w, 0.0);
      total += w;
      for (int j = 0; j < spec.terms; ++j) mean[j] += w * profile[j];
    }
    EXPECT_NEAR(total, 1.0, 1e-12);
    for (int j = 0; j < spec.terms; ++j) EXPECT_NEAR(mean[j], m.expected_profiles[e][j], 1e-12);
  }
}

TEST(Mixed, IterationCapRaisesConvergenceError) {
  try {
    mixed_bound(spec_of(Kind::kTrilocalI), 1e-12, 2);
    FAIL() << "expected ConvergenceError";
  } catch (const ConvergenceError& e) {
    EXPECT_GT(e.last_gap(), 0.0);
  }
  EXPECT_THROW(mixed_bound(spec_of(Kind::kBilocalI), 0.0), DomainError);
}

TEST(Report, OrderingHoldsAcrossSizes) {
  for (Kind k : {Kind::kBilocalI, Kind::kBilocalII}) {
    for (int n = 2; n <= 4; ++n) {
      const auto r = bound_report(make_spec(k, n), BoundMethod::kAll, 1e-9);
      EXPECT_TRUE(r.ordering_holds) << kind_name(k) << " n=" << n;
      EXPECT_LE(r.deterministic->value, r.mixed->value + 1e-9);
      EXPECT_LE(r.mixed->value, r.formula + 1e-9);
    }
  }
}

TEST(Report, MethodSelection) {
  const auto f = bound_report(spec_of(Kind::kBilocalI), BoundMethod::kFormula);
  EXPECT_FALSE(f.deterministic.has_value());
  EXPECT_FALSE(f.mixed.has_value());
  const auto e = bound_report(spec_of(Kind::kBilocalI), BoundMethod::kEnumerate);
  EXPECT_TRUE(e.deterministic.has_value());
  EXPECT_FALSE(e.mixed.has_value());
  EXPECT_EQ(parse_bound_method("mixed"), BoundMethod::kMixed);
  EXPECT_THROW(parse_bound_method("exact"), ParseError);
}

}  // namespace
}  // namespace netbell
