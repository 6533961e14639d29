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

#include "netbell/linalg.hpp"
#include "netbell/scenario.hpp"

namespace netbell {

inline constexpr Index kMaxAssemblyDim = 256;

/// Blocks are ordered edge by edge: [A, B:A, C, B:C, (D, B:D)].
inline QubitLayout network_layout(const ScenarioSpec& spec,
                                  Index max_dim = kMaxAssemblyDim) {
  if (!spec.matrix_level) {
    throw CapabilityError(kind_name(spec.kind) + " at n = " + std::to_string(spec.n) +
                          " is supported at formula level only");
  }
  const int q = spec.total_qubits();
  if (q > 30 || (Index{1} << q) > max_dim) {
    throw CapacityError(kind_name(spec.kind) + " at n = " + std::to_string(spec.n) +
                        " needs " + std::to_string(q) + " qubits; the assembly limit is " +
                        std::to_string(max_dim) + " dimensions");
  }
  std::vector<QubitLayout::Block> blocks;
  for (const auto& e : spec.edges) {
    blocks.push_back({e.party, "edge", e.pairs});
    blocks.push_back({"B", "hub:" + e.party, e.pairs});
  }
  return QubitLayout(std::move(blocks));
}

inline std::size_t edge_block(std::size_t edge) { return 2 * edge; }
inline std::size_t hub_block(std::size_t edge) { return 2 * edge + 1; }

inline std::vector<QubitPair> network_pairs(const QubitLayout& layout) {
  std::vector<QubitPair> pairs;
  for (std::size_t e = 0; 2 * e < layout.blocks().size(); ++e) {
    const auto a = layout.qubits_of(edge_block(e));
    const auto b = layout.qubits_of(hub_block(e));
    for (std::size_t i = 0; i < a.size(); ++i) pairs.emplace_back(a[i], b[i]);
  }
  return pairs;
}

/// Bob's qubits, in edge order.
inline std::vector<int> hub_qubits(const QubitLayout& layout) {
  std::vector<int> q;
  for (std::size_t e = 0; 2 * e < layout.blocks().size(); ++e) {
    for (int x : layout.qubits_of(hub_block(e))) q.push_back(x);
  }
  return q;
}

inline Ket network_ket(const QubitLayout& layout) {
  return paired_ket(layout.total_qubits(), network_pairs(layout));
}

/// One visibility per source; multi-pair edges take its tensor power.
inline DensityOp network_density(const ScenarioSpec& spec, const QubitLayout& layout,
                                 const std::vector<double>& source_visibility) {
  if (source_visibility.size() != spec.edges.size()) {
    throw ShapeError("expected " + std::to_string(spec.edges.size()) +
                     " source visibilities");
  }
  std::vector<double> per_pair;
  for (std::size_t e = 0; e < spec.edges.size(); ++e) {
    for (int i = 0; i < spec.edges[e].pairs; ++i) per_pair.push_back(source_visibility[e]);
  }
  return paired_density(layout.total_qubits(), network_pairs(layout), per_pair);
}

}  // namespace netbell
