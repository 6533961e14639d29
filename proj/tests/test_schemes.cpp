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

#include <algorithm>
#include <cmath>
#include <set>

#include <gtest/gtest.h>

#include "netbell/assembly.hpp"
#include "netbell/schemes.hpp"

namespace netbell {
namespace {

TEST(Scenario, RejectsUnsupportedSizes) {
  EXPECT_THROW(make_spec(Kind::kStandardBilocal, 3), DomainError);
  EXPECT_THROW(make_spec(Kind::kBilocalI, 1), DomainError);
  EXPECT_THROW(make_spec(Kind::kBilocalI, kMaxScenarioN + 1), DomainError);
  EXPECT_THROW(parse_kind("bilocal-III"), ParseError);
  for (Kind k : all_kinds()) EXPECT_EQ(parse_kind(kind_name(k)), k);
}

TEST(Scenario, PairCountsPerEdge) {
  const auto b1 = make_spec(Kind::kBilocalI, 6);
  EXPECT_EQ(b1.edges[0].pairs, 3);
  EXPECT_EQ(b1.edges[1].pairs, 1);
  EXPECT_EQ(b1.total_qubits(), 8);
  const auto t1 = make_spec(Kind::kTrilocalI, 3);
  EXPECT_EQ(t1.total_pairs(), 3);
  EXPECT_EQ(t1.terms, 4);
  EXPECT_FALSE(make_spec(Kind::kTrilocalII, 4).matrix_level);
}

TEST(Layout, CapacityAndCapabilityLimits) {
  EXPECT_THROW(network_layout(make_spec(Kind::kBilocalI, 9)), CapacityError);
  EXPECT_THROW(network_layout(make_spec(Kind::kTrilocalI, 4)), CapabilityError);
  const auto l = network_layout(make_spec(Kind::kTrilocalI, 3));
  EXPECT_EQ(l.total_qubits(), 6);
  EXPECT_EQ(hub_qubits(l), (std::vector<int>{1, 3, 5}));
}

TEST(RacStrings, ThreeBitReferenceStrings) {
  const std::vector<std::vector<int>> want = {{0, 0, 0}, {0, 0, 1}, {0, 1, 0}, {1, 0, 0}};
  EXPECT_EQ(rac_strings(3), want);
  const SignMatrix rows = rac_column_rows(3);
  EXPECT_EQ(rows[0], (std::vector<int>{1, 1, 1, -1}));
}

class RacStringProperties : public ::testing::TestWithParam<int> {};

TEST_P(RacStringProperties, OnePerComplementPair) {
  const int n = GetParam();
  const auto ys = rac_strings(n);
  ASSERT_EQ(ys.size(), std::size_t{1} << (n - 1));
  std::set<std::vector<int>> seen;
  for (const auto& y : ys) {
    EXPECT_LE(2 * std::count(y.begin(), y.end(), 1), n);
    std::vector<int> c = y;
    for (int& b : c) b ^= 1;
    EXPECT_EQ(seen.count(c), 0u);
    EXPECT_TRUE(seen.insert(y).second);
  }
}

INSTANTIATE_TEST_SUITE_P(Sizes, RacStringProperties, ::testing::Range(2, 9));

TEST(ChainRows, WrapRowChangesSign) {
  const SignMatrix s = chain_rows(3);
  EXPECT_EQ(s[0], (std::vector<int>{1, 1, 0}));
  EXPECT_EQ(s[1], (std::vector<int>{0, 1, 1}));
  EXPECT_EQ(s[2], (std::vector<int>{-1, 0, 1}));
}

TEST(CoefficientScheme, TrilocalBeyondThreeIsUnsupported) {
  EXPECT_THROW(coefficient_scheme(make_spec(Kind::kTrilocalII, 5)), CapabilityError);
  EXPECT_EQ(coefficient_scheme(make_spec(Kind::kTrilocalI, 3)).rows[2].size(), 4u);
}

class Generators : public ::testing::TestWithParam<int> {};

TEST_P(Generators, PairwiseAnticommutingInvolutions) {
  const int n = GetParam();
  const auto g = anticommuting_set(n);
  ASSERT_EQ(static_cast<int>(g.ops.size()), n);
  EXPECT_EQ(g.qubits, n / 2);
  EXPECT_NO_THROW(validate_observables(g));
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) EXPECT_LT(max_abs(anticommutator(g.ops[i], g.ops[j])), 1e-14);
  }
}

TEST_P(Generators, RacObservablesAreInvolutions) {
  const auto a = rac_observables(GetParam());
  EXPECT_NO_THROW(validate_observables(a));
}

INSTANTIATE_TEST_SUITE_P(Sizes, Generators, ::testing::Range(2, 9));

TEST(ChainObservables, AnticommutatorsFollowAngles) {
  for (int m : {3, 4, 5, 8}) {
    const auto c = chain_observables(m);
    EXPECT_NO_THROW(validate_observables(c));
    for (int k = 0; k < m; ++k) {
      for (int l = k + 1; l < m; ++l) {
        const double want = 2.0 * std::cos(M_PI * (l - k) / m);
        EXPECT_LT(max_abs(anticommutator(c.ops[k], c.ops[l]) - want * identity(2)), 1e-14);
      }
    }
  }
}

TEST(ReferenceObservables, ValidInvolutionsForEveryScenario) {
  for (Kind k : all_kinds()) {
    const auto spec = make_spec(k, k == Kind::kStandardBilocal ? 2 : 3);
    const auto obs = reference_observables(spec);
    ASSERT_EQ(obs.edges.size(), spec.edges.size());
    for (std::size_t e = 0; e < obs.edges.size(); ++e) {
      EXPECT_EQ(obs.edges[e].party, spec.edges[e].party);
      EXPECT_EQ(static_cast<int>(obs.edges[e].ops.size()), spec.edges[e].settings);
      EXPECT_NO_THROW(validate_observables(obs.edges[e]));
    }
  }
}

TEST(HubObservables, DerivedSetAreInvolutions) {
  for (Kind k : all_kinds()) {
    const auto a = reference_assembly(make_spec(k, k == Kind::kStandardBilocal ? 2 : 3));
    ASSERT_TRUE(a.observables.bob.has_value());
    EXPECT_EQ(static_cast<int>(a.observables.bob->ops.size()), a.spec.terms);
    EXPECT_NO_THROW(validate_observables(*a.observables.bob, kDerivedInvolutionTol));
  }
}

TEST(HubObservables, StandardNetworkMatchesReferencePairUpToSign) {
  const auto a = reference_assembly(make_spec(Kind::kStandardBilocal, 2));
  const auto ref = reference_standard_hub();
  for (int j = 0; j < 2; ++j) {
    const double overlap = (a.observables.bob->ops[j] * ref.ops[j]).trace().real() / 4.0;
    EXPECT_NEAR(std::abs(overlap), 1.0, 1e-12);
  }
}

TEST(HubObservables, AnnihilatedCombinationIsDegenerate) {
  const auto spec = make_spec(Kind::kStandardBilocal, 2);
  ObservableSet obs = reference_observables(spec);
  obs.edges[0].ops = {pauli_z(), -pauli_z()};
  EXPECT_THROW(assemble(spec, obs), DegenerateError);
}

TEST(HubObservables, CommutingGeneratorsBreakInvolution) {
  const auto spec = make_spec(Kind::kBilocalI, 4);
  ObservableSet obs = generated_observables(spec);
  const CMatrix zi = kron(pauli_z(), identity(2));
  const CMatrix iz = kron(identity(2), pauli_z());
  for (std::size_t k = 0; k < obs.edges[0].ops.size(); ++k) obs.edges[0].ops[k] = k % 2 ? iz : zi;
  EXPECT_THROW(assemble(spec, obs), ConstraintError);
}

TEST(Assembly, RejectsMismatchedObservables) {
  const auto spec = make_spec(Kind::kBilocalI, 3);
  ObservableSet obs = reference_observables(spec);
  obs.edges[1].ops.pop_back();
  EXPECT_THROW(assemble(spec, obs), ShapeError);
  EXPECT_THROW(reference_assembly(spec, {0.5}), ShapeError);
}

TEST(CombinationOperator, WidthMustMatch) {
  EXPECT_THROW(combination_operator({1, 1}, chain_observables(3)), ShapeError);
  const CMatrix c = combination_operator({-1, 0, 1}, chain_observables(3));
  EXPECT_LT(max_abs(c - (chain_observables(3).ops[2] - chain_observables(3).ops[0])), 1e-15);
}

}  // namespace
}  // namespace netbell
