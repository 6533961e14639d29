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

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include "netbell/assembly.hpp"
#include "netbell/observable_io.hpp"

namespace netbell {
namespace {

struct Run {
  int status = -1;
  std::string out;
  std::string err;
};

std::string slurp(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

std::string unique_path(const std::string& stem) {
  static int counter = 0;
  const auto* info = ::testing::UnitTest::GetInstance()->current_test_info();
  return ::testing::TempDir() + "netbell_" + info->test_suite_name() + "_" + info->name() + "_" +
         std::to_string(counter++) + "_" + stem;
}

Run run(const std::string& args) {
  const std::string out = unique_path("out.txt");
  const std::string err = unique_path("err.txt");
  const std::string cmd = std::string("\"") + NETBELL_CLI_PATH + "\" " + args + " >\"" + out +
                          "\" 2>\"" + err + "\"";
  const int raw = std::system(cmd.c_str());
  Run r;
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  r.out = slurp(out);
  r.err = slurp(err);
  return r;
}

nlohmann::json json_of(const Run& r) { return nlohmann::json::parse(r.out); }

TEST(Evaluate, TextTotals) {
  auto r = run("evaluate --scenario bilocal-I --n 3 --format text");
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("total 6.000000000"), std::string::npos) << r.out;
  r = run("evaluate --scenario trilocal-II --n 3 --format text");
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("total 6.000000000"), std::string::npos) << r.out;
}

TEST(Evaluate, JsonIsDefault) {
  const auto r = run("evaluate --scenario standard-bilocal");
  ASSERT_EQ(r.status, 0) << r.err;
  EXPECT_NEAR(json_of(r)["total"].get<double>(), 2.0 * std::sqrt(2.0), 1e-11);
}

TEST(Evaluate, CapacityAndCapabilityExitThree) {
  auto r = run("evaluate --scenario bilocal-I --n 9");
  EXPECT_EQ(r.status, 3);
  EXPECT_NE(r.err.find("capacity"), std::string::npos) << r.err;
  r = run("evaluate --scenario trilocal-I --n 4");
  EXPECT_EQ(r.status, 3);
}

TEST(Bounds, AllMethods) {
  auto r = run("bounds --scenario bilocal-I --n 3 --method all");
  ASSERT_EQ(r.status, 0) << r.err;
  auto j = json_of(r);
  EXPECT_NEAR(j["formula"].get<double>(), 4.898979, 1e-6);
  EXPECT_NEAR(j["mixed"]["value"].get<double>(), 4.898979, 1e-6);
  EXPECT_EQ(j["deterministic"]["value"].get<double>(), 4.0);
  r = run("bounds --scenario standard-bilocal --method all");
  j = json_of(r);
  EXPECT_NEAR(j["formula"].get<double>(), 2.0, 1e-9);
  EXPECT_NEAR(j["mixed"]["value"].get<double>(), 2.0, 1e-9);
  EXPECT_NEAR(j["deterministic"]["value"].get<double>(), 2.0, 1e-9);
}

TEST(Bounds, FormulaOnly) {
  const auto r = run("bounds --scenario trilocal-I --n 3 --method formula");
  ASSERT_EQ(r.status, 0);
  const auto j = json_of(r);
  EXPECT_NEAR(j["formula"].get<double>(), 6.603854, 1e-6);
  EXPECT_TRUE(j["mixed"].is_null());
}

TEST(Bounds, EnumerationCapExitsThree) {
  EXPECT_EQ(run("bounds --scenario bilocal-I --n 9 --method enumerate").status, 3);
  EXPECT_EQ(run("bounds --scenario bilocal-I --n 9 --method formula").status, 0);
}

TEST(Sos, ReferenceCertificates) {
  auto r = run("sos --scenario bilocal-II --n 3");
  ASSERT_EQ(r.status, 0) << r.err;
  auto j = json_of(r);
  EXPECT_LT(j["max_residual"].get<double>(), 1e-9);
  EXPECT_NEAR(j["gamma"].get<double>(), 0.0, 1e-9);
  EXPECT_NEAR(j["predicted"].get<double>(), 4.0 * std::pow(3.0 * (2.0 + std::sqrt(2.0)), 0.25),
              1e-9);
  r = run("sos --scenario trilocal-I --n 3");
  j = json_of(r);
  EXPECT_NEAR(j["predicted"].get<double>(), 8.119240904, 1e-8);
  EXPECT_EQ(j["printed_forms"].size(), 4u);
}

TEST(Sos, PerturbedFileReportsViolations) {
  const auto spec = make_spec(Kind::kBilocalI, 3);
  ObservableSet obs = reference_observables(spec);
  const CMatrix u = rotation(0.1, 0.7, 0.2, 0.15);
  obs.edges[0].ops[2] = u * obs.edges[0].ops[2] * u.adjoint();
  const std::string path = unique_path("perturbed.obs");
  {
    std::ofstream f(path);
    write_observables(f, spec, obs);
  }
  const auto r = run("sos --scenario bilocal-I --n 3 --observables \"" + path + "\"");
  ASSERT_EQ(r.status, 0) << r.err;
  const auto j = json_of(r);
  EXPECT_FALSE(j["constraints_hold"].get<bool>());
  EXPECT_LT(j["value"].get<double>(), 6.0 - 1e-6);
  EXPECT_EQ(run("sos --scenario bilocal-II --observables \"" + path + "\"").status, 2);
  EXPECT_EQ(run("sos --observables /nonexistent/file.obs").status, 2);
}

TEST(Noise, Thresholds) {
  auto r = run("noise --scenario standard-bilocal --refine 1e-6");
  ASSERT_EQ(r.status, 0) << r.err;
  EXPECT_NEAR(json_of(r)["v_critical_empirical"].get<double>(), 0.707107, 1e-6);
  r = run("noise --scenario trilocal-II --n 3");
  EXPECT_NEAR(json_of(r)["v_critical_empirical"].get<double>(), 0.822, 1e-4);
}

TEST(Noise, CsvFile) {
  const std::string path = unique_path("curve.csv");
  const auto r = run("noise --scenario bilocal-I --n 3 --out \"" + path + "\"");
  ASSERT_EQ(r.status, 0) << r.err;
  std::ifstream f(path);
  std::string line;
  int lines = 0;
  std::getline(f, line);
  EXPECT_EQ(line, "v,value,bound,violated");
  while (std::getline(f, line)) ++lines;
  EXPECT_EQ(lines, 101);
}

TEST(Usage, BadInputExitsTwo) {
  EXPECT_EQ(run("").status, 2);
  EXPECT_EQ(run("evaluate --scenario bilocal-I --bogus").status, 2);
  EXPECT_EQ(run("evaluate --scenario bilocal-V").status, 2);
  EXPECT_EQ(run("evaluate").status, 2);
  EXPECT_EQ(run("evaluate --scenario bilocal-I --n 1").status, 2);
  EXPECT_EQ(run("evaluate --scenario bilocal-I --format csv").status, 2);
  EXPECT_EQ(run("bounds --scenario bilocal-I --method exact").status, 2);
  EXPECT_EQ(run("--help").status, 0);
}

TEST(Determinism, RepeatedRunsAreIdentical) {
  const auto a = run("bounds --scenario trilocal-I --n 3 --method all");
  const auto b = run("bounds --scenario trilocal-I --n 3 --method all");
  EXPECT_EQ(a.out, b.out);
  const auto c = run("noise --scenario bilocal-II --format csv");
  const auto d = run("noise --scenario bilocal-II --format csv");
  EXPECT_EQ(c.out, d.out);
}

}  // namespace
}  // namespace netbell
