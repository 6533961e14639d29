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

#include <array>
#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "netbell/linalg.hpp"
#include "netbell/network.hpp"
#include "netbell/scenario.hpp"

namespace netbell {

inline constexpr double kInvolutionTol = 1e-10;
inline constexpr double kDerivedInvolutionTol = 1e-8;
inline constexpr double kDegenerateNorm = 1e-12;

/// Rows are functional terms, columns are a party's settings.
using SignMatrix = std::vector<std::vector<int>>;

struct CoefficientScheme {
  std::vector<SignMatrix> rows;  // one per edge party, in edge order
};

/// One n-bit string per complement pair: binary(x-1) with a leading zero,
/// complemented when its weight exceeds n/2. Bit 0 is the first character.
inline std::vector<std::vector<int>> rac_strings(int n) {
  if (n < 1 || n > kMaxScenarioN) throw DomainError("rac_strings: n out of range");
  const long count = 1L << (n - 1);
  std::vector<std::vector<int>> out;
  for (long x = 0; x < count; ++x) {
    std::vector<int> bits(n, 0);
    int weight = 0;
    for (int j = 0; j < n; ++j) {
      bits[j] = static_cast<int>((x >> (n - 1 - j)) & 1L);
      weight += bits[j];
    }
    if (2 * weight > n) {
      for (int& b : bits) b ^= 1;
    }
    out.push_back(std::move(bits));
  }
  return out;
}

inline SignMatrix chain_rows(int m) {
  if (m < 2) throw DomainError("chain needs at least two settings");
  SignMatrix s(m, std::vector<int>(m, 0));
  for (int j = 0; j + 1 < m; ++j) {
    s[j][j] = 1;
    s[j][j + 1] = 1;
  }
  s[m - 1][0] = -1;
  s[m - 1][m - 1] = 1;
  return s;
}

inline SignMatrix rac_column_rows(int n) {
  const auto ys = rac_strings(n);
  SignMatrix s(n, std::vector<int>(ys.size(), 0));
  for (int j = 0; j < n; ++j) {
    for (std::size_t x = 0; x < ys.size(); ++x) s[j][x] = ys[x][j] ? -1 : 1;
  }
  return s;
}

inline SignMatrix rac_row_rows(int n) {
  SignMatrix s;
  for (const auto& y : rac_strings(n)) {
    std::vector<int> row;
    for (int b : y) row.push_back(b ? -1 : 1);
    s.push_back(std::move(row));
  }
  return s;
}

inline SignMatrix explicit_rows(Kind kind) {
  if (kind == Kind::kTrilocalI) {
    return {{1, 1, 1, 1}, {1, 1, 1, -1}, {1, 1, -1, -1}, {1, -1, -1, -1}};
  }
  return {{1, 1, 1}, {1, 1, -1}, {1, -1, -1}};
}

inline CoefficientScheme coefficient_scheme(const ScenarioSpec& spec) {
  if (spec.trilocal() && spec.n != 3) {
    throw CapabilityError(kind_name(spec.kind) + " combination rows exist for n = 3 only; "
                          "use the closed-form bounds for other n");
  }
  CoefficientScheme scheme;
  for (const auto& e : spec.edges) {
    switch (e.pattern) {
      case RowPattern::kChain: scheme.rows.push_back(chain_rows(e.settings)); break;
      case RowPattern::kRacColumns: scheme.rows.push_back(rac_column_rows(spec.n)); break;
      case RowPattern::kRacRows: scheme.rows.push_back(rac_row_rows(spec.n)); break;
      case RowPattern::kExplicit: scheme.rows.push_back(explicit_rows(spec.kind)); break;
    }
  }
  return scheme;
}

struct PartyObservables {
  std::string party;
  int qubits = 0;
  std::vector<CMatrix> ops;

  Index dim() const { return Index{1} << qubits; }
};

/// Hermitian involutions of the declared block dimension.
inline void validate_observables(const PartyObservables& p, double tol = kInvolutionTol) {
  for (std::size_t k = 0; k < p.ops.size(); ++k) {
    const auto& o = p.ops[k];
    const std::string tag = p.party + "[" + std::to_string(k + 1) + "]";
    require_square(o, tag.c_str());
    if (o.rows() != p.dim()) throw ShapeError(tag + " does not match its block dimension");
    if (hermiticity_defect(o) > tol) throw ContractError(tag + " is not Hermitian");
    if (max_abs(o * o - identity(o.rows())) > tol) {
      throw ContractError(tag + " does not square to the identity");
    }
  }
}

/// Pauli-string ladder: Z..Z X I..I, Z..Z Y I..I, and Z..Z when n is odd.
inline PartyObservables anticommuting_set(int n) {
  if (n < 1) throw DomainError("anticommuting_set needs n >= 1");
  const int k = n / 2;
  if (k > 13) throw CapacityError("anticommuting_set: dimension too large");
  PartyObservables p{"O", k, {}};
  if (k == 0) {
    p.ops.push_back(identity(1));
    return p;
  }
  for (int i = 0; i < k && static_cast<int>(p.ops.size()) < n; ++i) {
    for (const CMatrix& s : {pauli_x(), pauli_y()}) {
      std::vector<CMatrix> f;
      for (int q = 0; q < k; ++q) f.push_back(q < i ? pauli_z() : q == i ? s : identity(2));
      p.ops.push_back(kron_all(f));
    }
  }
  if (n % 2 == 1) p.ops.push_back(kron_all(std::vector<CMatrix>(k, pauli_z())));
  return p;
}

/// A_x = n^(-1/2) sum_j (-1)^(y^x_j) O_j over the anticommuting set.
inline PartyObservables rac_observables(int n) {
  if (n < 2) throw DomainError("rac_observables needs n >= 2");
  const auto gens = anticommuting_set(n);
  PartyObservables p{"A", gens.qubits, {}};
  for (const auto& y : rac_strings(n)) {
    CMatrix a = CMatrix::Zero(gens.dim(), gens.dim());
    for (int j = 0; j < n; ++j) a += (y[j] ? -1.0 : 1.0) * gens.ops[j];
    p.ops.push_back(a / std::sqrt(static_cast<double>(n)));
  }
  return p;
}

/// cos(t) Z + sin(t) X with t = (k-1) pi / m.
inline PartyObservables chain_observables(int m) {
  if (m < 2) throw DomainError("chain_observables needs at least two settings");
  PartyObservables p{"C", 1, {}};
  for (int k = 0; k < m; ++k) {
    const double t = M_PI * k / m;
    p.ops.push_back(std::cos(t) * pauli_z() + std::sin(t) * pauli_x());
  }
  return p;
}

struct ObservableSet {
  std::vector<PartyObservables> edges;
  std::optional<PartyObservables> bob;  // on Bob's qubits in edge order
};

inline PartyObservables relabel(PartyObservables p, const std::string& party) {
  p.party = party;
  return p;
}

/// r = sqrt(2 - sqrt2)/2, t = sqrt(2 + sqrt2)/2.
struct ChainAngles {
  static double r() { return 0.5 * std::sqrt(2.0 - std::sqrt(2.0)); }
  static double t() { return 0.5 * std::sqrt(2.0 + std::sqrt(2.0)); }
};

namespace detail {

inline PartyObservables single_qubit_set(const std::string& party,
                                         const std::vector<std::array<double, 3>>& xyz) {
  PartyObservables p{party, 1, {}};
  for (const auto& c : xyz) p.ops.push_back(c[0] * pauli_x() + c[1] * pauli_y() + c[2] * pauli_z());
  return p;
}

inline PartyObservables tetra_set(const std::string& party) {
  const double s = 1.0 / std::sqrt(3.0);
  return single_qubit_set(party, {{s, s, s}, {s, s, -s}, {s, -s, s}, {-s, s, s}});
}

inline PartyObservables three_chain_set(const std::string& party) {
  const double h = std::sqrt(3.0) / 2.0;
  return single_qubit_set(party, {{0, 0, 1}, {h, 0, 0.5}, {h, 0, -0.5}});
}

inline PartyObservables four_chain_set(const std::string& party) {
  const double r = ChainAngles::r(), t = ChainAngles::t();
  return single_qubit_set(party, {{r, 0, t}, {t, 0, r}, {t, 0, -r}, {r, 0, -t}});
}

inline PartyObservables pauli_set(const std::string& party) {
  return single_qubit_set(party, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
}

}  // namespace detail

/// Observables built from the general-n constructors for each party role.
inline ObservableSet generated_observables(const ScenarioSpec& spec);

/// The explicit optimal sets for n = 3 (and n = 2 for the standard network).
inline ObservableSet reference_observables(const ScenarioSpec& spec) {
  ObservableSet set;
  const double s = 1.0 / std::sqrt(2.0);
  switch (spec.kind) {
    case Kind::kStandardBilocal: {
      const auto two = [&](const std::string& p) {
        return detail::single_qubit_set(p, {{s, 0, s}, {-s, 0, s}});
      };
      set.edges = {two("A"), two("C")};
      return set;
    }
    case Kind::kBilocalI:
      if (spec.n != 3) break;
      set.edges = {detail::tetra_set("A"), detail::three_chain_set("C")};
      return set;
    case Kind::kBilocalII:
      if (spec.n != 3) break;
      set.edges = {detail::four_chain_set("A"), detail::pauli_set("C")};
      return set;
    case Kind::kTrilocalI: {
      if (spec.n != 3) break;
      const double r = ChainAngles::r(), t = ChainAngles::t();
      set.edges = {detail::four_chain_set("A"), detail::pauli_set("C"),
                   detail::single_qubit_set("D", {{-t, 0, r}, {-t, 0, -r}, {-r, 0, -t}, {r, 0, -t}})};
      return set;
    }
    case Kind::kTrilocalII: {
      if (spec.n != 3) break;
      const double h = std::sqrt(3.0) / 2.0;
      set.edges = {detail::tetra_set("A"), detail::three_chain_set("C"),
                   detail::single_qubit_set("D", {{-h, 0, 0.5}, {-h, 0, -0.5}, {0, 0, -1}})};
      return set;
    }
  }
  return generated_observables(spec);
}

/// Bob's pair Z(x)Z, X(x)X for the standard network.
inline PartyObservables reference_standard_hub() {
  return PartyObservables{"B", 2, {kron(pauli_z(), pauli_z()), kron(pauli_x(), pauli_x())}};
}

inline ObservableSet generated_observables(const ScenarioSpec& spec) {
  ObservableSet set;
  if (spec.trilocal()) {
    if (spec.n != 3) {
      throw CapabilityError(kind_name(spec.kind) + " observables exist for n = 3 only");
    }
    return reference_observables(spec);
  }
  for (const auto& e : spec.edges) {
    switch (e.pattern) {
      case RowPattern::kChain: set.edges.push_back(relabel(chain_observables(e.settings), e.party)); break;
      case RowPattern::kRacColumns: set.edges.push_back(relabel(rac_observables(spec.n), e.party)); break;
      case RowPattern::kRacRows: set.edges.push_back(relabel(anticommuting_set(spec.n), e.party)); break;
      case RowPattern::kExplicit: throw CapabilityError("explicit rows have no generator");
    }
  }
  return set;
}

/// sum_k row[k] O_k.
inline CMatrix combination_operator(const std::vector<int>& row, const PartyObservables& p) {
  if (row.size() != p.ops.size()) {
    throw ShapeError("row of width " + std::to_string(row.size()) + " for " +
                     std::to_string(p.ops.size()) + " observables of " + p.party);
  }
  CMatrix out = CMatrix::Zero(p.dim(), p.dim());
  for (std::size_t k = 0; k < row.size(); ++k) {
    if (row[k] != 0) out += static_cast<double>(row[k]) * p.ops[k];
  }
  return out;
}

/// B_j = (x)_edges (comb_j^T / omega_j), with omega_j = ||comb_j |psi>||.
inline PartyObservables bob_product_observables(const ScenarioSpec& spec,
                                                const CoefficientScheme& scheme,
                                                const std::vector<PartyObservables>& edges,
                                                const QubitLayout& layout, const Ket& state) {
  if (edges.size() != spec.edges.size() || scheme.rows.size() != edges.size()) {
    throw ShapeError("edge observables do not match the scenario");
  }
  PartyObservables bob{"B", spec.total_pairs(), {}};
  for (int j = 0; j < spec.terms; ++j) {
    std::vector<CMatrix> factors;
    for (std::size_t e = 0; e < edges.size(); ++e) {
      const CMatrix comb = combination_operator(scheme.rows[e][j], edges[e]);
      const double omega = action_norm(state, embed(comb, layout, edge_block(e)));
      if (omega < kDegenerateNorm) {
        throw DegenerateError("combination " + std::to_string(j + 1) + " of party " +
                              edges[e].party + " annihilates the state");
      }
      factors.push_back(comb.transpose() / omega);
    }
    CMatrix b = kron_all(factors);
    if (max_abs(b * b - identity(b.rows())) > kDerivedInvolutionTol) {
      throw ConstraintError("derived hub observable " + std::to_string(j + 1) +
                            " is not an involution");
    }
    bob.ops.push_back(std::move(b));
  }
  return bob;
}

}  // namespace netbell
