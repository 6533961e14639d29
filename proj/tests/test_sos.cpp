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

#include <gtest/gtest.h>

#include "netbell/sos.hpp"

namespace netbell {
namespace {

ScenarioSpec spec_of(Kind k) { return make_spec(k, k == Kind::kStandardBilocal ? 2 : 3); }

TEST(Omega, BilocalOneNorms) {
  const auto om = omega_norms(reference_assembly(spec_of(Kind::kBilocalI)));
  double sq = 0.0;
  for (double w : om[0]) {
    EXPECT_NEAR(w, 4.0 / std::sqrt(3.0), 1e-12);
    sq += w * w;
  }
  EXPECT_NEAR(sq, 16.0, 1e-12);
  for (double w : om[1]) EXPECT_NEAR(w, std::sqrt(3.0), 1e-12);
}

TEST(Certificate, TightAtEveryReferenceOptimum) {
  for (Kind k : all_kinds()) {
    const auto r = sos_report(reference_assembly(spec_of(k)));
    EXPECT_NEAR(r.gamma, 0.0, 1e-9) << kind_name(k);
    EXPECT_LT(r.max_residual, 1e-9) << kind_name(k);
    EXPECT_NEAR(r.predicted, r.formula_optimum, 1e-9) << kind_name(k);
    EXPECT_TRUE(r.constraints.all_hold()) << kind_name(k);
  }
}

TEST(Certificate, TightForGeneratedObservables) {
  for (int n = 2; n <= 5; ++n) {
    const auto r = sos_report(generated_assembly(make_spec(Kind::kBilocalI, n)));
    EXPECT_NEAR(r.gamma, 0.0, 1e-9);
    EXPECT_LT(r.max_residual, 1e-9);
    EXPECT_TRUE(r.constraints.all_hold());
  }
  for (int n = 2; n <= 4; ++n) {
    const auto r = sos_report(generated_assembly(make_spec(Kind::kBilocalII, n)));
    EXPECT_NEAR(r.gamma, 0.0, 1e-9);
    EXPECT_LT(r.max_residual, 1e-9);
    EXPECT_TRUE(r.constraints.all_hold());
  }
}

TEST(Certificate, MixedStatesAreUnsupported) {
  const auto a = reference_assembly(spec_of(Kind::kBilocalI), {0.9, 0.9});
  EXPECT_THROW(omega_norms(a), CapabilityError);
  EXPECT_THROW(sos_report(a), CapabilityError);
}

TEST(GammaAudit, NonnegativeUnderRandomRotations) {
  const auto a = reference_assembly(spec_of(Kind::kStandardBilocal));
  const auto g = gamma_audit(a, 1000, 42);
  EXPECT_EQ(g.samples, 1000);
  EXPECT_GE(g.min_gamma, -1e-9);
  EXPECT_GT(g.max_gamma, 0.0);
  EXPECT_EQ(gamma_audit(a, 50, 7).min_gamma, gamma_audit(a, 50, 7).min_gamma);
}

TEST(GammaAudit, NonnegativeForEveryScenario) {
  for (Kind k : all_kinds()) {
    EXPECT_GE(gamma_audit(reference_assembly(spec_of(k)), 200, 1).min_gamma, -1e-9);
  }
}

TEST(HubPerturbation, ResidualTracksAngle) {
  for (Kind k : all_kinds()) {
    const double r = hub_perturbation_residual(reference_assembly(spec_of(k)), 0, 1e-3, 42);
    EXPECT_GE(r, 1e-4) << kind_name(k);
    EXPECT_LE(r, 1e-2) << kind_name(k);
  }
}

TEST(Constraints, ReferenceIdentities) {
  const auto spec = spec_of(Kind::kBilocalI);
  const auto t = constraint_table(spec, reference_observables(spec).edges);
  // Four settings give six anticommutators, three settings give three, plus two linear identities.
  EXPECT_EQ(t.checks.size(), 11u);
  EXPECT_TRUE(t.all_hold());
  EXPECT_TRUE(t.printed_forms.empty());
}

TEST(Constraints, PrintedFormsAreReportedNotRequired) {
  const auto t1 = spec_of(Kind::kTrilocalI);
  const auto table = constraint_table(t1, reference_observables(t1).edges);
  EXPECT_TRUE(table.all_hold());
  ASSERT_EQ(table.printed_forms.size(), 4u);
  for (const auto& p : table.printed_forms) EXPECT_GT(p.deviation, 0.5) << p.identity;
  const auto t2 = spec_of(Kind::kTrilocalII);
  const auto table2 = constraint_table(t2, reference_observables(t2).edges);
  ASSERT_EQ(table2.printed_forms.size(), 1u);
  EXPECT_NEAR(table2.printed_forms[0].deviation, 2.0, 1e-12);
}

TEST(Constraints, PerturbedObservablesViolate) {
  const auto spec = spec_of(Kind::kBilocalI);
  auto obs = reference_observables(spec);
  const CMatrix u = rotation(0.2, 0.5, -0.3, 0.1);
  obs.edges[0].ops[1] = u * obs.edges[0].ops[1] * u.adjoint();
  const auto t = constraint_table(spec, obs.edges);
  EXPECT_FALSE(t.all_hold());
  EXPECT_GT(t.max_deviation(), 1e-3);
  const auto r = sos_report(assemble(spec, obs));
  EXPECT_NEAR(r.gamma, 0.0, 1e-9);
  EXPECT_LT(r.value, r.formula_optimum - 1e-6);
}

TEST(Constraints, ShapeChecked) {
  const auto spec = spec_of(Kind::kBilocalI);
  auto obs = reference_observables(spec);
  obs.edges.pop_back();
  EXPECT_THROW(constraint_table(spec, obs.edges), ShapeError);
}

}  // namespace
}  // namespace netbell
