// Copyright 2026 The nmlln Authors. All rights reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

#include "commands.hpp"
#include "config.hpp"
#include "nmlln/error.hpp"

namespace nmlln::cli {
namespace {

using nlohmann::json;

json reference_doc() {
  return json::parse(R"({
    "points": ["a", "b", "c", "d"],
    "weights": ["1/4", "1/4", "1/4", "1/4"],
    "field": [["a", "b"], ["c", "d"]],
    "psi": ["0", "1", "1", "2"],
    "plan": {"variant": "constant-mixture", "target": "1"},
    "run": {"n_max": 2000, "trials": 5, "seed": 11},
    "weaklaw": {"a": "1", "epsilon": "1/4", "n_min": 1, "n_max": 4},
    "certify": {"A": ["1"]}
  })");
}

std::string error_path(const json& doc) {
  try {
    parse_config(doc);
  } catch (const ConfigError& e) {
    return e.path();
  }
  return "<no error>";
}

TEST(ParseConfig, Reference) {
  const auto c = parse_config(reference_doc());
  EXPECT_EQ(c.scenario.lower(), Rational(1, 2));
  EXPECT_EQ(c.scenario.upper(), Rational(3, 2));
  ASSERT_TRUE(c.plan.has_value());
  EXPECT_EQ(c.plan->target, Rational(1));
  EXPECT_EQ(c.run.n_max, 2000u);
  EXPECT_EQ(c.run.seed, 11u);
  EXPECT_EQ(build_plan(c).weight(), Rational(1, 2));
}

TEST(ParseConfig, ErrorPaths) {
  auto doc = reference_doc();
  doc["weights"][2] = 0.25;
  EXPECT_EQ(error_path(doc), "/weights/2");

  doc = reference_doc();
  doc["weights"][0] = "1/2";
  EXPECT_EQ(error_path(doc), "/weights");

  doc = reference_doc();
  doc["field"][1][0] = "z";
  EXPECT_EQ(error_path(doc), "/field/1/0");

  doc = reference_doc();
  doc["psi"].erase(3);
  EXPECT_EQ(error_path(doc), "/psi");

  doc = reference_doc();
  doc["plan"]["variant"] = "bogus";
  EXPECT_EQ(error_path(doc), "/plan/variant");

  doc = reference_doc();
  doc["plan"]["target"] = "5";
  EXPECT_EQ(error_path(doc), "/plan/target");

  doc = reference_doc();
  doc.erase("points");
  EXPECT_EQ(error_path(doc), "/points");

  doc = reference_doc();
  doc["certify"]["A"][0] = json::array({"3/2", "1/2"});
  EXPECT_EQ(error_path(doc), "/certify/A/0");
}

TEST(DumpConfig, RoundTrips) {
  auto doc = reference_doc();
  doc["plan"] = json::parse(R"({"variant": "block-alternating",
                                "schedule": "geometric-escalating"})");
  doc["run"]["checkpoints"] = json::array({10, 100});
  doc["certify"]["A"] = json::array({json::array({"1/2", "3/4"}), "5/4"});
  doc["certify"]["events"] = json::array({"lim-exists"});
  const auto c = parse_config(doc);
  EXPECT_EQ(parse_config(dump_config(c)), c);
}

TEST(Commands, Analyze) {
  std::ostringstream out;
  cmd_analyze(parse_config(reference_doc()), out);
  EXPECT_NE(out.str().find("E_*[psi] = 1/2"), std::string::npos) << out.str();
  EXPECT_NE(out.str().find("E^*[psi] = 3/2"), std::string::npos) << out.str();
}

TEST(Commands, SimulateCsv) {
  auto doc = reference_doc();
  doc["run"]["checkpoints"] = json::array({10, 2000});
  std::ostringstream out;
  cmd_simulate(parse_config(doc), out);
  std::istringstream in(out.str());
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "trajectory_id,seed,n,mean");
  std::size_t rows = 0;
  while (std::getline(in, line)) ++rows;
  EXPECT_EQ(rows, 10u);
}

TEST(Commands, WeakLawRows) {
  std::ostringstream out;
  cmd_weaklaw(parse_config(reference_doc()), out);
  const std::string text = out.str();
  EXPECT_NE(text.find("n,inner,inner_decimal,outer,outer_decimal,plan,plan_decimal"),
            std::string::npos);
  EXPECT_NE(text.find("\n1,0,0.000000,1,1.000000,1/2,0.500000"), std::string::npos) << text;
}

TEST(Commands, WeakLawBudget) {
  auto doc = reference_doc();
  doc["weaklaw"]["n_max"] = 30;
  std::ostringstream out;
  EXPECT_THROW(cmd_weaklaw(parse_config(doc), out), BudgetExceeded);
}

TEST(Commands, CertifyRejectsFullHull) {
  auto doc = reference_doc();
  doc["certify"]["A"] = json::array({json::array({"1/2", "3/2"})});
  std::ostringstream out;
  try {
    cmd_certify(parse_config(doc), out);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kHypothesisViolated);
  }
}

// ----------------------------------------------------------- binary

class Binary : public ::testing::Test {
 protected:
  std::filesystem::path dir_ =
      std::filesystem::temp_directory_path() /
      ("nmlln_cli_test_" + std::to_string(::getpid()));

  void SetUp() override { std::filesystem::create_directories(dir_); }
  void TearDown() override { std::filesystem::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& text) {
    const auto path = dir_ / name;
    std::ofstream(path) << text;
    return path.string();
  }

  int run(const std::string& args) {
    const std::string cmd = std::string(NMLLN_CLI_PATH) + " " + args + " > " +
                            (dir_ / "stdout").string() + " 2> " +
                            (dir_ / "stderr").string();
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  }

  std::string read(const std::string& name) {
    std::ifstream in(dir_ / name);
    return {std::istreambuf_iterator<char>(in), {}};
  }
};

TEST_F(Binary, ExitCodes) {
  const auto good = write("good.json", reference_doc().dump());
  EXPECT_EQ(run("analyze " + good), 0);
  EXPECT_NE(read("stdout").find("E^*[psi] = 3/2"), std::string::npos);

  EXPECT_EQ(run("frobnicate " + good), 1);

  auto doc = reference_doc();
  doc["weights"][1] = 0.25;
  EXPECT_EQ(run("analyze " + write("bad.json", doc.dump())), 2);
  EXPECT_NE(read("stderr").find("/weights/1"), std::string::npos) << read("stderr");
  EXPECT_EQ(run("analyze " + write("broken.json", "{\"points\": [")), 2);

  EXPECT_EQ(run("weaklaw " + good + " --budget 16"), 3);

  doc = reference_doc();
  doc["certify"]["A"] = json::array({"2"});
  EXPECT_EQ(run("certify " + write("outside.json", doc.dump())), 4);
}

TEST_F(Binary, DumpConfigAndSeedOverride) {
  const auto good = write("good.json", reference_doc().dump());
  EXPECT_EQ(run("analyze " + good + " --dump-config --seed 5 --n-max 300"), 0);
  const auto dumped = json::parse(read("stdout"));
  EXPECT_EQ(dumped["run"]["seed"], 5);
  EXPECT_EQ(dumped["run"]["n_max"], 300);

  const auto out = (dir_ / "a.csv").string();
  ASSERT_EQ(run("simulate " + good + " --out " + out), 0);
  const std::string first = read("a.csv");
  ASSERT_EQ(run("simulate " + good + " --out " + out), 0);
  EXPECT_EQ(read("a.csv"), first);
  ASSERT_EQ(run("simulate " + good + " --seed 12 --out " + out), 0);
  EXPECT_NE(read("a.csv"), first);
}

}  // namespace
}  // namespace nmlln::cli
