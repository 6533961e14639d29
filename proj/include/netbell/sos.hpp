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
#include <limits>
#include <random>
#include <string>
#include <vector>

#include "netbell/assembly.hpp"
#include "netbell/bounds.hpp"
#include "netbell/functionals.hpp"

namespace netbell {

inline constexpr double kAnticommutatorTol = 1e-9;
inline constexpr double kLinearTol = 1e-10;

inline const Ket& require_pure(const NetworkAssembly& a) {
  if (!a.pure) throw CapabilityError("certificates are defined for pure states only");
  return *a.pure;
}

/// omega[e][j] = ||comb_j(e) |psi>||.
inline std::vector<std::vector<double>> omega_norms(const NetworkAssembly& a) {
  const Ket& psi = require_pure(a);
  std::vector<std::vector<double>> out;
  for (std::size_t e = 0; e < a.spec.edges.size(); ++e) {
    std::vector<double> row;
    for (int j = 0; j < a.spec.terms; ++j) {
      const CMatrix c = combination_operator(a.scheme.rows[e][j], a.observables.edges[e]);
      row.push_back(action_norm(psi, embed(c, a.layout, edge_block(e))));
    }
    out.push_back(std::move(row));
  }
  return out;
}

/// sum_j (prod_e omega[e][j])^(1/r).
inline double predicted_optimum(const std::vector<std::vector<double>>& omega, int root) {
  double s = 0.0;
  for (std::size_t j = 0; j < omega.at(0).size(); ++j) {
    double p = 1.0;
    for (const auto& row : omega) p *= row[j];
    s += root_magnitude(p, root);
  }
  return s;
}

/// ||((x)_e comb_j(e)/omega_j(e)) |psi> - B_j |psi>|| for every j.
inline std::vector<double> residuals(const NetworkAssembly& a) {
  const Ket& psi = require_pure(a);
  const auto omega = omega_norms(a);
  std::vector<int> edge_q;
  for (std::size_t e = 0; e < a.spec.edges.size(); ++e) {
    for (int q : a.layout.qubits_of(edge_block(e))) edge_q.push_back(q);
  }
  const auto hub_q = hub_qubits(a.layout);
  std::vector<double> out;
  for (int j = 0; j < a.spec.terms; ++j) {
    std::vector<CMatrix> f;
    for (std::size_t e = 0; e < a.spec.edges.size(); ++e) {
      if (omega[e][j] < kDegenerateNorm) {
        throw DegenerateError("combination " + std::to_string(j + 1) + " of party " +
                              a.spec.edges[e].party + " annihilates the state");
      }
      f.push_back(combination_operator(a.scheme.rows[e][j], a.observables.edges[e]) /
                  omega[e][j]);
    }
    const CMatrix lhs = embed_qubits(kron_all(f), a.layout.total_qubits(), edge_q);
    const CMatrix rhs =
        embed_qubits(a.observables.bob->ops[j], a.layout.total_qubits(), hub_q);
    out.push_back(((lhs - rhs) * psi.amplitudes()).norm());
  }
  return out;
}

/// <gamma> = sum_j (prod omega)^(1/r) - functional value.
inline double gamma_expectation(const NetworkAssembly& a) {
  return predicted_optimum(omega_norms(a), a.spec.root) - functional_value(a).total;
}

struct ConstraintCheck {
  std::string party;
  std::string identity;
  double deviation = 0.0;
  double tolerance = 0.0;
  bool holds() const { return deviation < tolerance; }
};

struct ConstraintTable {
  std::vector<ConstraintCheck> checks;
  /// Alternative printed forms of identities; reported, never required.
  std::vector<ConstraintCheck> printed_forms;

  bool all_hold() const {
    for (const auto& c : checks) {
      if (!c.holds()) return false;
    }
    return true;
  }
  double max_deviation() const {
    double m = 0.0;
    for (const auto& c : checks) m = std::max(m, c.deviation);
    return m;
  }
};

namespace detail {

inline std::string fmt_coeff(double c) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", c);
  return buf;
}

inline ConstraintCheck anticommutator_check(const PartyObservables& p, int i, int j,
                                            double c) {
  const CMatrix d = anticommutator(p.ops.at(i), p.ops.at(j)) - c * identity(p.dim());
  return {p.party,
          "{" + p.party + std::to_string(i + 1) + "," + p.party + std::to_string(j + 1) +
              "} = " + fmt_coeff(c) + " I",
          max_abs(d), kAnticommutatorTol};
}

inline ConstraintCheck linear_check(const PartyObservables& p, const std::vector<double>& c,
                                    const std::string& label) {
  CMatrix s = CMatrix::Zero(p.dim(), p.dim());
  for (std::size_t k = 0; k < c.size(); ++k) s += c[k] * p.ops.at(k);
  return {p.party, label + " = 0", max_abs(s), kLinearTol};
}

inline double expected_anticommutator(const ScenarioSpec& spec, std::size_t e, int i, int j) {
  const auto& role = spec.edges[e];
  switch (role.pattern) {
    case RowPattern::kChain: {
      const double c = 2.0 * std::cos(M_PI * (j - i) / role.settings);
      return std::abs(c) < 1e-12 ? 0.0 : c;
    }
    case RowPattern::kRacRows:
      return 0.0;
    case RowPattern::kRacColumns: {
      const auto ys = rac_strings(spec.n);
      int dot = 0;
      for (int b = 0; b < spec.n; ++b) dot += ys[i][b] == ys[j][b] ? 1 : -1;
      return 2.0 * dot / spec.n;
    }
    case RowPattern::kExplicit:
      if (spec.kind == Kind::kTrilocalI) {
        if ((i == 0 && j == 2) || (i == 1 && j == 3)) return 0.0;
        return (i == 0 && j == 3) ? -std::sqrt(2.0) : std::sqrt(2.0);
      }
      return (i == 0 && j == 2) ? -1.0 : 1.0;
  }
  return 0.0;
}

}  // namespace detail

/// Anticommutator pattern of every party plus the linear identities that
/// hold at the n = 3 optimum.
inline ConstraintTable constraint_table(const ScenarioSpec& spec,
                                        const std::vector<PartyObservables>& edges) {
  if (edges.size() != spec.edges.size()) throw ShapeError("edge parties do not match");
  ConstraintTable t;
  const double r2 = std::sqrt(2.0);
  for (std::size_t e = 0; e < spec.edges.size(); ++e) {
    const auto& p = edges[e];
    const int m = static_cast<int>(p.ops.size());
    if (m != spec.edges[e].settings) throw ShapeError("settings count mismatch for " + p.party);
    for (int i = 0; i < m; ++i) {
      for (int j = i + 1; j < m; ++j) {
        t.checks.push_back(
            detail::anticommutator_check(p, i, j, detail::expected_anticommutator(spec, e, i, j)));
      }
    }
    if (spec.n != 3) continue;
    const auto pat = spec.edges[e].pattern;
    const std::string P = p.party;
    auto name = [&](int k) { return P + std::to_string(k); };
    if (pat == RowPattern::kRacColumns) {
      t.checks.push_back(detail::linear_check(
          p, {1, -1, -1, -1}, name(1) + " - " + name(2) + " - " + name(3) + " - " + name(4)));
    } else if (pat == RowPattern::kChain && m == 3) {
      t.checks.push_back(
          detail::linear_check(p, {1, -1, 1}, name(1) + " - " + name(2) + " + " + name(3)));
    } else if (pat == RowPattern::kChain && m == 4) {
      t.checks.push_back(detail::linear_check(
          p, {1, -r2, 1, 0}, name(1) + " - sqrt2 " + name(2) + " + " + name(3)));
      t.checks.push_back(detail::linear_check(
          p, {-1, 0, 1, -r2}, "-" + name(1) + " + " + name(3) + " - sqrt2 " + name(4)));
    } else if (pat == RowPattern::kExplicit && spec.kind == Kind::kTrilocalI) {
      t.checks.push_back(detail::linear_check(
          p, {r2, -1, 0, 1}, "sqrt2 " + name(1) + " - " + name(2) + " + " + name(4)));
      t.checks.push_back(detail::linear_check(
          p, {0, 1, -r2, 1}, name(2) + " + " + name(4) + " - sqrt2 " + name(3)));
      t.printed_forms.push_back(detail::linear_check(
          p, {-r2, -1, 0, 1}, name(4) + " - sqrt2 " + name(1) + " - " + name(2)));
    } else if (pat == RowPattern::kExplicit && spec.kind == Kind::kTrilocalII) {
      t.checks.push_back(
          detail::linear_check(p, {1, -1, 1}, name(1) + " - " + name(2) + " + " + name(3)));
    }
    if (spec.kind == Kind::kTrilocalI && pat == RowPattern::kRacRows) {
      t.printed_forms.push_back(detail::anticommutator_check(p, 0, 1, 1.0));
      t.printed_forms.push_back(detail::anticommutator_check(p, 1, 2, 1.0));
      t.printed_forms.push_back(detail::anticommutator_check(p, 0, 2, -1.0));
    }
  }
  if (spec.kind == Kind::kTrilocalII && spec.n == 3) {
    const auto& d = edges[2];
    const auto& c = edges[1];
    const CMatrix ac = anticommutator(d.ops[0], c.ops[1]) - identity(d.dim());
    t.printed_forms.push_back({"D,C", "{D1,C2} = 1 I", max_abs(ac), kAnticommutatorTol});
  }
  return t;
}

struct SOSReport {
  ScenarioSpec spec;
  std::vector<std::vector<double>> omegas;  // [edge][j]
  std::vector<double> omega_square_sums;    // per edge
  double predicted = 0.0;
  double value = 0.0;
  double gamma = 0.0;
  std::vector<double> residuals;
  double max_residual = 0.0;
  double formula_optimum = 0.0;
  ConstraintTable constraints;
};

inline SOSReport sos_report(const NetworkAssembly& a) {
  SOSReport r;
  r.spec = a.spec;
  r.omegas = omega_norms(a);
  for (const auto& row : r.omegas) {
    double s = 0.0;
    for (double w : row) s += w * w;
    r.omega_square_sums.push_back(s);
  }
  r.predicted = predicted_optimum(r.omegas, a.spec.root);
  r.value = functional_value(a).total;
  r.gamma = r.predicted - r.value;
  r.residuals = residuals(a);
  for (double x : r.residuals) r.max_residual = std::max(r.max_residual, x);
  r.formula_optimum = quantum_optimum_formula(a.spec);
  r.constraints = constraint_table(a.spec, a.observables.edges);
  return r;
}

namespace detail {

inline CMatrix random_local_rotation(int qubits, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::uniform_real_distribution<double> angle(0.0, M_PI);
  std::vector<CMatrix> f;
  for (int q = 0; q < qubits; ++q) {
    double x = gauss(rng), y = gauss(rng), z = gauss(rng);
    if (x == 0.0 && y == 0.0 && z == 0.0) z = 1.0;
    f.push_back(rotation(x, y, z, angle(rng)));
  }
  return kron_all(f);
}

}  // namespace detail

struct GammaAudit {
  std::uint64_t seed = 0;
  int samples = 0;
  double min_gamma = std::numeric_limits<double>::infinity();
  double max_gamma = -std::numeric_limits<double>::infinity();
};

/// Rotates every edge observable independently while Bob stays fixed.
inline GammaAudit gamma_audit(const NetworkAssembly& a, int samples, std::uint64_t seed) {
  require_pure(a);
  std::mt19937_64 rng(seed);
  GammaAudit out{seed, samples};
  for (int s = 0; s < samples; ++s) {
    ObservableSet obs = a.observables;
    for (auto& p : obs.edges) {
      for (auto& o : p.ops) {
        const CMatrix u = detail::random_local_rotation(p.qubits, rng);
        o = u * o * u.adjoint();
      }
    }
    const NetworkAssembly b = assemble(a.spec, std::move(obs));
    const double g = gamma_expectation(b);
    out.min_gamma = std::min(out.min_gamma, g);
    out.max_gamma = std::max(out.max_gamma, g);
  }
  return out;
}

/// Rotates hub observable `j` by `angle` about a random axis on Bob's first
/// qubit and returns the largest residual.
inline double hub_perturbation_residual(const NetworkAssembly& a, int j, double angle,
                                        std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  const double x = gauss(rng), y = gauss(rng), z = gauss(rng);
  ObservableSet obs = a.observables;
  auto& b = obs.bob->ops.at(j);
  const int q = obs.bob->qubits;
  const CMatrix u = embed_qubits(rotation(x, y, z, angle), q, {0});
  b = u * b * u.adjoint();
  const NetworkAssembly p = assemble(a.spec, std::move(obs));
  double m = 0.0;
  for (double r : residuals(p)) m = std::max(m, r);
  return m;
}

}  // namespace netbell
