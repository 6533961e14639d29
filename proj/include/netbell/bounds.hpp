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

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "netbell/errors.hpp"
#include "netbell/scenario.hpp"
#include "netbell/schemes.hpp"

namespace netbell {

inline constexpr int kMaxEnumeratedSettings = 24;
inline constexpr std::uint64_t kMaxStrategyTuples = std::uint64_t{1} << 26;
inline constexpr double kGradientSmoothing = 1e-12;
inline constexpr double kTieTol = 1e-12;
inline constexpr double kGapFlagTol = 1e-6;

inline std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t b = 1;
  for (int i = 1; i <= k; ++i) b = b * static_cast<std::uint64_t>(n - k + i) / i;
  return b;
}

inline double central_binomial(int n) {
  return static_cast<double>(binomial(n - 1, (n - 1) / 2));
}

inline double classical_bound_formula(const ScenarioSpec& s) {
  const double n = s.n;
  const double c = central_binomial(s.n);
  const double m1 = std::ldexp(1.0, s.n - 1) - 1.0;  // 2^(n-1) - 1
  switch (s.kind) {
    case Kind::kStandardBilocal:
      return 2.0;
    case Kind::kBilocalI:
      return std::sqrt(2.0 * n * (n - 1.0) * c);
    case Kind::kBilocalII:
      return std::sqrt(2.0 * n * m1 * c);
    case Kind::kTrilocalI: {
      const double fl = static_cast<double>(std::uint64_t{1} << (2 * s.n - 3));
      return std::cbrt(2.0 * n * m1 * c * fl);
    }
    case Kind::kTrilocalII: {
      const double fl = static_cast<double>((s.n * s.n + 1) / 2);
      return std::cbrt(2.0 * n * (n - 1.0) * c * fl);
    }
  }
  return 0.0;
}

inline double quantum_optimum_formula(const ScenarioSpec& s) {
  const double n = s.n;
  const double p2n = std::ldexp(1.0, s.n);  // 2^n
  switch (s.kind) {
    case Kind::kStandardBilocal:
    case Kind::kBilocalI:
      return std::sqrt(p2n * std::pow(n, 1.5) * std::cos(M_PI / (2.0 * n)));
    case Kind::kBilocalII:
      return std::sqrt(std::ldexp(1.0, 2 * s.n - 1) * std::sqrt(n) * std::cos(M_PI / p2n));
    case Kind::kTrilocalI:
      return std::ldexp(1.0, s.n - 1) * std::cbrt(2.0 * std::sqrt(n) / std::tan(M_PI / p2n));
    case Kind::kTrilocalII:
      return std::cbrt(p2n * std::pow(n, 2.5) / std::tan(M_PI / (2.0 * n)));
  }
  return 0.0;
}

using Profile = std::vector<int>;

/// Distinct |row . a| vectors over all +-1 assignments a of one party.
struct PartyProfiles {
  std::string party;
  std::vector<Profile> profiles;              // sorted
  std::vector<std::vector<int>> strategies;  // first assignment reaching each profile
  int delta_max = 0;                          // largest row sum
};

/// Lexicographic order with +1 ahead of -1.
inline bool strategy_less(const std::vector<int>& a, const std::vector<int>& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                      [](int x, int y) { return x > y; });
}

inline PartyProfiles deterministic_profiles(const ScenarioSpec& spec, std::size_t party) {
  if (party >= spec.edges.size()) throw ShapeError("no such edge party");
  const int m = spec.edges[party].settings;
  if (m > kMaxEnumeratedSettings) {
    throw CapacityError("party " + spec.edges[party].party + " has " + std::to_string(m) +
                        " settings; enumeration is limited to " +
                        std::to_string(kMaxEnumeratedSettings));
  }
  const SignMatrix rows = coefficient_scheme(spec).rows[party];
  std::vector<std::vector<std::pair<int, int>>> sparse(rows.size());
  for (std::size_t j = 0; j < rows.size(); ++j) {
    for (int k = 0; k < m; ++k) {
      if (rows[j][k] != 0) sparse[j].emplace_back(k, rows[j][k]);
    }
  }
  std::map<Profile, std::uint64_t> first;
  std::vector<int> a(m);
  Profile p(rows.size());
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    for (int k = 0; k < m; ++k) a[k] = (mask >> (m - 1 - k)) & 1 ? -1 : 1;
    for (std::size_t j = 0; j < rows.size(); ++j) {
      int v = 0;
      for (const auto& [k, c] : sparse[j]) v += c * a[k];
      p[j] = std::abs(v);
    }
    first.emplace(p, mask);
  }
  PartyProfiles out{spec.edges[party].party, {}, {}, 0};
  for (const auto& [prof, mask] : first) {
    std::vector<int> s(m);
    for (int k = 0; k < m; ++k) s[k] = (mask >> (m - 1 - k)) & 1 ? -1 : 1;
    int sum = 0;
    for (int v : prof) sum += v;
    out.delta_max = std::max(out.delta_max, sum);
    out.profiles.push_back(prof);
    out.strategies.push_back(std::move(s));
  }
  return out;
}

inline std::vector<PartyProfiles> all_profiles(const ScenarioSpec& spec) {
  std::vector<PartyProfiles> out;
  for (std::size_t e = 0; e < spec.edges.size(); ++e) out.push_back(deterministic_profiles(spec, e));
  return out;
}

struct DeterministicResult {
  double value = 0.0;
  std::vector<std::vector<int>> strategies;  // per edge party
  std::vector<Profile> profiles;             // per edge party
  std::uint64_t enumerated = 0;              // raw strategy tuples covered
};

inline double profile_value(const std::vector<const Profile*>& picks, int root) {
  double v = 0.0;
  for (std::size_t j = 0; j < picks[0]->size(); ++j) {
    double prod = 1.0;
    for (const Profile* p : picks) prod *= (*p)[j];
    v += prod == 0.0 ? 0.0 : std::pow(prod, 1.0 / root);
  }
  return v;
}

/// Best pure strategy tuple; ties go to the lexicographically smallest tuple.
inline DeterministicResult deterministic_max(const ScenarioSpec& spec) {
  std::uint64_t raw = 1;
  for (const auto& e : spec.edges) {
    if (e.settings > 26) throw CapacityError("strategy space too large to enumerate");
    raw <<= e.settings;
    if (raw > kMaxStrategyTuples) {
      throw CapacityError("deterministic enumeration exceeds 2^26 strategy tuples");
    }
  }
  const auto parties = all_profiles(spec);
  const std::size_t k = parties.size();
  std::vector<std::size_t> idx(k, 0);
  DeterministicResult best;
  best.value = -1.0;
  best.enumerated = raw;
  std::vector<int> best_concat;
  while (true) {
    std::vector<const Profile*> picks;
    for (std::size_t e = 0; e < k; ++e) picks.push_back(&parties[e].profiles[idx[e]]);
    const double v = profile_value(picks, spec.root);
    std::vector<int> concat;
    for (std::size_t e = 0; e < k; ++e) {
      const auto& s = parties[e].strategies[idx[e]];
      concat.insert(concat.end(), s.begin(), s.end());
    }
    const bool better = v > best.value + kTieTol;
    const bool tie = !better && std::abs(v - best.value) <= kTieTol;
    if (better || (tie && strategy_less(concat, best_concat))) {
      if (better) best.value = v;
      best_concat = concat;
      best.strategies.clear();
      best.profiles.clear();
      for (std::size_t e = 0; e < k; ++e) {
        best.strategies.push_back(parties[e].strategies[idx[e]]);
        best.profiles.push_back(parties[e].profiles[idx[e]]);
      }
    }
    std::size_t e = k;
    while (e > 0) {
      --e;
      if (++idx[e] < parties[e].profiles.size()) break;
      idx[e] = 0;
      if (e == 0) return best;
    }
  }
}

struct MixedResult {
  double value = 0.0;
  double gap = 0.0;
  int iterations = 0;
  /// Per party, (profile, weight) pairs with nonzero weight.
  std::vector<std::vector<std::pair<Profile, double>>> weights;
  std::vector<std::vector<double>> expected_profiles;
};

namespace detail {

inline double mixed_objective(const std::vector<Eigen::VectorXd>& u, int root) {
  double f = 0.0;
  for (Eigen::Index j = 0; j < u[0].size(); ++j) {
    double prod = 1.0;
    for (const auto& uk : u) prod *= std::max(uk(j), 0.0);
    f += prod == 0.0 ? 0.0 : std::pow(prod, 1.0 / root);
  }
  return f;
}

inline Eigen::VectorXd term_partials(const std::vector<Eigen::VectorXd>& u, std::size_t e,
                                     int root) {
  const Eigen::Index terms = u[0].size();
  Eigen::VectorXd gu(terms);
  for (Eigen::Index j = 0; j < terms; ++j) {
    double prod = 1.0;
    for (const auto& uk : u) prod *= std::max(uk(j), 0.0);
    gu(j) = prod == 0.0 ? 0.0 : std::pow(prod, 1.0 / root) / (root * (u[e](j) + kGradientSmoothing));
  }
  return gu;
}

inline double directional_derivative(const std::vector<Eigen::MatrixXd>& vert,
                                     const std::vector<Eigen::VectorXd>& u,
                                     const std::vector<Eigen::VectorXd>& dir, int root) {
  double d = 0.0;
  for (std::size_t e = 0; e < vert.size(); ++e) {
    d += dir[e].dot(vert[e] * term_partials(u, e, root));
  }
  return d;
}

}  // namespace detail

/// Maximizes sum_j (prod_k u_k[j])^(1/r) over independent mixtures u_k of each
/// party's profiles by pairwise conditional gradient; the step solves for a
/// zero of the directional derivative.
inline MixedResult mixed_bound(const ScenarioSpec& spec, double tolerance = 1e-8,
                               int max_iterations = 500000) {
  if (!(tolerance > 0.0)) throw DomainError("tolerance must be positive");
  const auto parties = all_profiles(spec);
  const std::size_t k = parties.size();
  const int terms = spec.terms;
  std::vector<Eigen::MatrixXd> vert(k);
  std::vector<Eigen::VectorXd> w(k);
  for (std::size_t e = 0; e < k; ++e) {
    const auto& ps = parties[e].profiles;
    vert[e].resize(static_cast<Eigen::Index>(ps.size()), terms);
    for (std::size_t s = 0; s < ps.size(); ++s) {
      for (int j = 0; j < terms; ++j) vert[e](s, j) = ps[s][j];
    }
    w[e] = Eigen::VectorXd::Constant(vert[e].rows(), 1.0 / vert[e].rows());
  }
  auto expected = [&](const std::vector<Eigen::VectorXd>& wt) {
    std::vector<Eigen::VectorXd> u(k);
    for (std::size_t e = 0; e < k; ++e) u[e] = vert[e].transpose() * wt[e];
    return u;
  };
  double gap = 0.0;
  for (int it = 0; it < max_iterations; ++it) {
    const auto u = expected(w);
    gap = 0.0;
    std::vector<Eigen::VectorXd> dir(k);
    double step_max = 1.0;
    bool moving = false;
    for (std::size_t e = 0; e < k; ++e) {
      const Eigen::VectorXd g = vert[e] * detail::term_partials(u, e, spec.root);
      Eigen::Index s = 0, a = -1;
      for (Eigen::Index v = 0; v < g.size(); ++v) {
        if (g(v) > g(s)) s = v;
        if (w[e](v) > 0.0 && (a < 0 || g(v) < g(a))) a = v;
      }
      gap += g(s) - g.dot(w[e]);
      dir[e] = Eigen::VectorXd::Zero(g.size());
      if (s != a) {
        dir[e](s) += 1.0;
        dir[e](a) -= 1.0;
        step_max = std::min(step_max, w[e](a));
        moving = true;
      }
    }
    if (gap < tolerance || !moving) {
      MixedResult out;
      out.value = detail::mixed_objective(u, spec.root);
      out.gap = gap;
      out.iterations = it;
      for (std::size_t e = 0; e < k; ++e) {
        std::vector<std::pair<Profile, double>> pw;
        for (Eigen::Index v = 0; v < w[e].size(); ++v) {
          if (w[e](v) > 0.0) pw.emplace_back(parties[e].profiles[v], w[e](v));
        }
        out.weights.push_back(std::move(pw));
        out.expected_profiles.emplace_back(u[e].data(), u[e].data() + u[e].size());
      }
      return out;
    }
    auto slope = [&](double t) {
      std::vector<Eigen::VectorXd> wt(k);
      for (std::size_t e = 0; e < k; ++e) wt[e] = w[e] + t * dir[e];
      return detail::directional_derivative(vert, expected(wt), dir, spec.root);
    };
    double t = step_max;
    if (slope(step_max) < 0.0) {
      double lo = 0.0, hi = step_max;
      for (int ls = 0; ls < 100 && hi - lo > 1e-17; ++ls) {
        const double mid = 0.5 * (lo + hi);
        (slope(mid) > 0.0 ? lo : hi) = mid;
      }
      t = 0.5 * (lo + hi);
    }
    for (std::size_t e = 0; e < k; ++e) {
      w[e] = (w[e] + t * dir[e]).cwiseMax(0.0);
      w[e] /= w[e].sum();
    }
  }
  throw ConvergenceError("mixed bound did not reach the requested gap", gap);
}

enum class BoundMethod { kFormula, kEnumerate, kMixed, kAll };

inline BoundMethod parse_bound_method(const std::string& s) {
  if (s == "formula") return BoundMethod::kFormula;
  if (s == "enumerate") return BoundMethod::kEnumerate;
  if (s == "mixed") return BoundMethod::kMixed;
  if (s == "all") return BoundMethod::kAll;
  throw ParseError("unknown bound method '" + s + "'");
}

struct BoundReport {
  ScenarioSpec spec;
  double formula = 0.0;
  std::optional<DeterministicResult> deterministic;
  std::optional<MixedResult> mixed;
  std::vector<int> delta_max;  // per edge party, empty for formula-only runs
  bool mixed_short_of_formula = false;
  bool ordering_holds = true;  // deterministic <= mixed <= formula + 1e-9
};

inline BoundReport bound_report(const ScenarioSpec& spec, BoundMethod method,
                                double tolerance = 1e-8) {
  BoundReport r{spec, classical_bound_formula(spec), std::nullopt, std::nullopt, {}, false, true};
  if (method == BoundMethod::kFormula) return r;
  for (const auto& p : all_profiles(spec)) r.delta_max.push_back(p.delta_max);
  if (method == BoundMethod::kEnumerate || method == BoundMethod::kAll) {
    r.deterministic = deterministic_max(spec);
  }
  if (method == BoundMethod::kMixed || method == BoundMethod::kAll) {
    r.mixed = mixed_bound(spec, tolerance);
    r.mixed_short_of_formula = r.mixed->value < r.formula - kGapFlagTol;
    r.ordering_holds = r.mixed->value <= r.formula + 1e-9;
  }
  if (r.deterministic && r.mixed) {
    r.ordering_holds = r.ordering_holds && r.deterministic->value <= r.mixed->value + 1e-9;
  }
  if (r.deterministic) r.ordering_holds = r.ordering_holds && r.deterministic->value <= r.formula + 1e-9;
  return r;
}

}  // namespace netbell
