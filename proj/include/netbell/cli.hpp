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

#include <cstdint>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "netbell/audit.hpp"
#include "netbell/observable_io.hpp"
#include "netbell/serialize.hpp"

namespace netbell {

enum ExitCode : int { kExitOk = 0, kExitUsage = 2, kExitCapability = 3, kExitContract = 4 };

struct RunConfig {
  std::string scenario;
  std::optional<int> n;
  std::string method = "all";
  double tol = 1e-9;
  std::uint64_t seed = 42;
  std::string out;
  std::string format = "json";
  std::string observables;
  double refine = kDefaultRefine;
};

namespace detail {

class UsageError : public Error {
 public:
  using Error::Error;
};

inline ScenarioSpec config_spec(const RunConfig& c) {
  if (c.scenario.empty()) throw UsageError("--scenario is required");
  const Kind k = parse_kind(c.scenario);
  return make_spec(k, c.n.value_or(k == Kind::kStandardBilocal ? 2 : 3));
}

/// Assembly from --observables when given, otherwise the reference set.
inline NetworkAssembly config_assembly(const RunConfig& c) {
  if (c.observables.empty()) return reference_assembly(config_spec(c));
  ObservableDocument doc = read_observables_file(c.observables);
  if (!c.scenario.empty() && parse_kind(c.scenario) != doc.spec.kind) {
    throw UsageError("--scenario disagrees with the observable file");
  }
  if (c.n && *c.n != doc.spec.n) throw UsageError("--n disagrees with the observable file");
  return assemble(doc.spec, std::move(doc.observables));
}

inline void emit(const RunConfig& c, std::ostream& out, const std::string& text) {
  if (c.out.empty()) {
    out << text;
    return;
  }
  std::ofstream f(c.out, std::ios::binary);
  if (!f) throw UsageError("cannot write " + c.out);
  f << text;
}

template <class T>
std::string render(const RunConfig& c, const T& value) {
  if (c.format == "csv") throw UsageError("csv output is available for noise only");
  if (c.format == "text") {
    std::ostringstream os;
    write_text(os, value);
    return os.str();
  }
  return to_json(value).dump(2) + "\n";
}

inline void add_common(CLI::App* s, RunConfig& c) {
  s->add_option("--scenario", c.scenario,
                "standard-bilocal, bilocal-I, bilocal-II, trilocal-I or trilocal-II");
  s->add_option("--n", c.n, "number of settings parameter (default 3, or 2 for standard-bilocal)");
  s->add_option("--method", c.method, "formula, enumerate, mixed or all")
      ->check(CLI::IsMember({"formula", "enumerate", "mixed", "all"}));
  s->add_option("--tol", c.tol, "mixed-bound duality gap tolerance")->check(CLI::PositiveNumber);
  s->add_option("--seed", c.seed, "seed for randomized audits");
  s->add_option("--out", c.out, "output path");
  s->add_option("--format", c.format, "json, text or csv")
      ->check(CLI::IsMember({"json", "text", "csv"}));
  s->add_option("--observables", c.observables, "observable set file");
  s->add_option("--refine", c.refine, "bisection tolerance for critical visibilities");
}

inline int cmd_evaluate(const RunConfig& c, std::ostream& out) {
  emit(c, out, render(c, functional_value(config_assembly(c))));
  return kExitOk;
}

inline int cmd_bounds(const RunConfig& c, std::ostream& out) {
  emit(c, out, render(c, bound_report(config_spec(c), parse_bound_method(c.method), c.tol)));
  return kExitOk;
}

inline int cmd_sos(const RunConfig& c, std::ostream& out) {
  emit(c, out, render(c, sos_report(config_assembly(c))));
  return kExitOk;
}

inline int cmd_noise(const RunConfig& c, std::ostream& out) {
  const NoiseCurve curve = noise_curve(config_spec(c), c.refine);
  std::ostringstream csv;
  write_csv(csv, curve);
  if (c.format == "csv") {
    emit(c, out, csv.str());
    return kExitOk;
  }
  if (!c.out.empty()) emit(c, out, csv.str());
  RunConfig summary = c;
  summary.out.clear();
  emit(summary, out, render(summary, curve));
  return kExitOk;
}

inline int cmd_report(const RunConfig& c, std::ostream& out) {
  const Json r = audit_report(c.seed);
  std::string text;
  if (c.format == "text") {
    for (const auto& k : r["criteria"]) {
      text += "criterion " + std::to_string(k["id"].get<int>()) +
              (k["pass"].get<bool>() ? " PASS " : " FAIL ") + k["title"].get<std::string>() + "\n";
    }
    for (const auto& d : r["discrepancies"]) {
      text += "discrepancy " + d["item"].get<std::string>() + ": " + d["note"].get<std::string>() + "\n";
    }
  } else if (c.format == "csv") {
    throw UsageError("csv output is available for noise only");
  } else {
    text = r.dump(2) + "\n";
  }
  emit(c, out, text);
  return r["all_pass"].get<bool>() ? kExitOk : kExitContract;
}

}  // namespace detail

/// Runs the command line; returns the process exit status.
inline int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Bell functionals, classical bounds and noise thresholds for star networks",
               "netbell"};
  app.require_subcommand(1);
  RunConfig cfg;
  struct Command {
    const char* name;
    const char* help;
    int (*run)(const RunConfig&, std::ostream&);
  };
  const Command commands[] = {
      {"evaluate", "functional value of a network assembly", detail::cmd_evaluate},
      {"bounds", "classical bounds by formula, enumeration and mixed strategies", detail::cmd_bounds},
      {"sos", "sum-of-squares certificate and constraint table", detail::cmd_sos},
      {"noise", "Werner-noise sweep and critical visibilities", detail::cmd_noise},
      {"report", "full acceptance table with discrepancy list", detail::cmd_report},
  };
  std::vector<std::pair<CLI::App*, const Command*>> subs;
  for (const auto& c : commands) {
    CLI::App* s = app.add_subcommand(c.name, c.help);
    detail::add_common(s, cfg);
    subs.emplace_back(s, &c);
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }
  try {
    for (const auto& [s, c] : subs) {
      if (s->parsed()) return c->run(cfg, out);
    }
    return kExitUsage;
  } catch (const detail::UsageError& e) {
    err << "usage error: " << e.what() << "\n" << app.help();
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "invalid argument: " << e.what() << "\n";
    return kExitUsage;
  } catch (const CapacityError& e) {
    err << "capacity: " << e.what() << "\n";
    return kExitCapability;
  } catch (const CapabilityError& e) {
    err << "unsupported: " << e.what() << "\n";
    return kExitCapability;
  } catch (const Error& e) {
    err << "numerical contract violated: " << e.what() << "\n";
    return kExitContract;
  }
}

}  // namespace netbell
