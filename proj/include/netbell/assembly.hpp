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

#include <optional>
#include <string>
#include <vector>

#include "netbell/linalg.hpp"
#include "netbell/network.hpp"
#include "netbell/scenario.hpp"
#include "netbell/schemes.hpp"

namespace netbell {

/// Scenario, layout, state and the observables of every party.
struct NetworkAssembly {
  ScenarioSpec spec;
  CoefficientScheme scheme;
  QubitLayout layout;
  ObservableSet observables;  // bob is always present here
  std::optional<Ket> pure;
  DensityOp rho;
  std::vector<double> visibilities;  // per source

  /// Same observables, different pure state.
  NetworkAssembly with_state(const Ket& state) const {
    if (state.dim() != layout.dim()) throw ShapeError("state does not fit the layout");
    NetworkAssembly a{spec, scheme, layout, observables, state, state.projector(),
                      std::vector<double>(spec.edges.size(), 1.0)};
    return a;
  }
};

inline void check_edge_observables(const ScenarioSpec& spec, const ObservableSet& obs) {
  if (obs.edges.size() != spec.edges.size()) {
    throw ShapeError(kind_name(spec.kind) + " expects " + std::to_string(spec.edges.size()) +
                     " edge parties");
  }
  for (std::size_t e = 0; e < spec.edges.size(); ++e) {
    const auto& p = obs.edges[e];
    const auto& role = spec.edges[e];
    if (static_cast<int>(p.ops.size()) != role.settings) {
      throw ShapeError("party " + role.party + " needs " + std::to_string(role.settings) +
                       " observables, got " + std::to_string(p.ops.size()));
    }
    if (p.qubits != role.pairs) {
      throw ShapeError("party " + role.party + " acts on " + std::to_string(role.pairs) +
                       " qubits, got " + std::to_string(p.qubits));
    }
    validate_observables(p);
  }
  if (obs.bob) {
    if (static_cast<int>(obs.bob->ops.size()) != spec.bob_settings ||
        obs.bob->qubits != spec.total_pairs()) {
      throw ShapeError("hub observables do not match the scenario");
    }
    validate_observables(*obs.bob);
  }
}

/// Bell pairs on every edge, or Werner sources when visibilities are given.
/// Missing hub observables are derived from the pure Bell-pair state.
inline NetworkAssembly assemble(const ScenarioSpec& spec, ObservableSet obs,
                                std::vector<double> source_visibility = {}) {
  QubitLayout layout = network_layout(spec);
  CoefficientScheme scheme = coefficient_scheme(spec);
  check_edge_observables(spec, obs);
  Ket ket = network_ket(layout);
  if (!obs.bob) obs.bob = bob_product_observables(spec, scheme, obs.edges, layout, ket);
  if (source_visibility.empty()) source_visibility.assign(spec.edges.size(), 1.0);
  if (source_visibility.size() != spec.edges.size()) {
    throw ShapeError("expected " + std::to_string(spec.edges.size()) + " source visibilities");
  }
  bool ideal = true;
  for (double v : source_visibility) ideal = ideal && v == 1.0;
  if (ideal) {
    DensityOp rho = ket.projector();
    return NetworkAssembly{spec, std::move(scheme), std::move(layout), std::move(obs),
                           std::move(ket), std::move(rho), std::move(source_visibility)};
  }
  DensityOp rho = network_density(spec, layout, source_visibility);
  return NetworkAssembly{spec, std::move(scheme), std::move(layout), std::move(obs),
                         std::nullopt, std::move(rho), std::move(source_visibility)};
}

inline NetworkAssembly reference_assembly(const ScenarioSpec& spec,
                                          std::vector<double> source_visibility = {}) {
  return assemble(spec, reference_observables(spec), std::move(source_visibility));
}

inline NetworkAssembly generated_assembly(const ScenarioSpec& spec,
                                          std::vector<double> source_visibility = {}) {
  return assemble(spec, generated_observables(spec), std::move(source_visibility));
}

}  // namespace netbell
