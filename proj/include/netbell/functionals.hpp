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
#include <vector>

#include "netbell/assembly.hpp"

namespace netbell {

struct FunctionalResult {
  ScenarioSpec spec;
  std::vector<double> terms;       // signed I_j
  std::vector<double> magnitudes;  // |I_j|
  double total = 0.0;              // sum_j |I_j|^(1/r)
};

/// |x|^(1/r), with exact zeros mapped to zero.
inline double root_magnitude(double x, int r) {
  const double m = std::abs(x);
  return m == 0.0 ? 0.0 : std::pow(m, 1.0 / r);
}

inline std::vector<int> term_qubits(const NetworkAssembly& a) {
  std::vector<int> q;
  for (std::size_t e = 0; e < a.spec.edges.size(); ++e) {
    for (int x : a.layout.qubits_of(edge_block(e))) q.push_back(x);
  }
  for (int x : hub_qubits(a.layout)) q.push_back(x);
  return q;
}

/// comb_j(edge 1) (x) ... (x) B_j on the full register.
inline CMatrix term_operator(const NetworkAssembly& a, int j) {
  if (j < 0 || j >= a.spec.terms) throw ShapeError("term index out of range");
  std::vector<CMatrix> f;
  for (std::size_t e = 0; e < a.spec.edges.size(); ++e) {
    f.push_back(combination_operator(a.scheme.rows[e][j], a.observables.edges[e]));
  }
  f.push_back(a.observables.bob->ops[j]);
  return embed_qubits(kron_all(f), a.layout.total_qubits(), term_qubits(a));
}

inline double term_value(const NetworkAssembly& a, int j) {
  return expectation(a.rho, term_operator(a, j));
}

inline FunctionalResult functional_value(const NetworkAssembly& a) {
  FunctionalResult out{a.spec, {}, {}, 0.0};
  for (int j = 0; j < a.spec.terms; ++j) {
    const double v = term_value(a, j);
    out.terms.push_back(v);
    out.magnitudes.push_back(std::abs(v));
    out.total += root_magnitude(v, a.spec.root);
  }
  return out;
}

/// Settings are given edge by edge with Bob's setting last; outcome bit k of
/// the table index (party 0 most significant) is 1 for the -1 outcome.
struct JointTable {
  std::vector<int> settings;
  std::vector<double> probabilities;

  double total() const {
    double s = 0.0;
    for (double p : probabilities) s += p;
    return s;
  }

  /// sum over outcomes of (-1)^(a+b+c...) P.
  double correlator() const {
    double s = 0.0;
    for (std::size_t o = 0; o < probabilities.size(); ++o) {
      s += (__builtin_popcountll(o) % 2 ? -1.0 : 1.0) * probabilities[o];
    }
    return s;
  }
};

inline std::vector<const CMatrix*> setting_observables(const NetworkAssembly& a,
                                                       const std::vector<int>& settings) {
  const std::size_t k = a.spec.edges.size();
  if (settings.size() != k + 1) throw ShapeError("one setting per party is required");
  std::vector<const CMatrix*> ops;
  for (std::size_t e = 0; e <= k; ++e) {
    const auto& party = e < k ? a.observables.edges[e] : *a.observables.bob;
    if (settings[e] < 0 || settings[e] >= static_cast<int>(party.ops.size())) {
      throw ShapeError("setting out of range for party " + party.party);
    }
    ops.push_back(&party.ops[settings[e]]);
  }
  return ops;
}

/// Full correlator <A_x (x) ... (x) B_j> from the operator product.
inline double correlator(const NetworkAssembly& a, const std::vector<int>& settings) {
  std::vector<CMatrix> f;
  for (const CMatrix* o : setting_observables(a, settings)) f.push_back(*o);
  return expectation(a.rho, embed_qubits(kron_all(f), a.layout.total_qubits(), term_qubits(a)));
}

/// P(outcomes | settings) = Tr(rho (x)_k (I + (-1)^o_k O_k)/2).
inline JointTable joint_probability_tensor(const NetworkAssembly& a,
                                           const std::vector<int>& settings) {
  const auto ops = setting_observables(a, settings);
  const std::size_t parties = ops.size();
  JointTable t{settings, {}};
  const auto qubits = term_qubits(a);
  for (std::size_t o = 0; o < (std::size_t{1} << parties); ++o) {
    std::vector<CMatrix> f;
    for (std::size_t k = 0; k < parties; ++k) {
      const double sign = (o >> (parties - 1 - k)) & 1 ? -1.0 : 1.0;
      f.push_back(0.5 * (identity(ops[k]->rows()) + sign * *ops[k]));
    }
    t.probabilities.push_back(
        expectation(a.rho, embed_qubits(kron_all(f), a.layout.total_qubits(), qubits)));
  }
  return t;
}

}  // namespace netbell
