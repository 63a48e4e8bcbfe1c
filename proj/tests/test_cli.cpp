// Copyright 2026 The floquetkit Authors
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

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "floquetkit/commands.hpp"

namespace fk = floquetkit;
using fk::cli::dispatch;
using fk::cli::RunConfig;

namespace {

std::string sample(const std::string& name) { return std::string(FLOQUETKIT_SAMPLES_DIR) + "/" + name; }

RunConfig config(const std::string& command, std::vector<std::string> inputs = {}) {
  RunConfig c;
  c.command = command;
  c.inputs = std::move(inputs);
  return c;
}

std::filesystem::path temp_file(const std::string& name, const std::string& text) {
  const auto p = std::filesystem::temp_directory_path() / ("floquetkit_test_" + name);
  std::ofstream(p) << text;
  return p;
}

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

TEST(Dispatch, VerifyPairPassesOnZX) {
  const auto r = dispatch(config("verify-pair", {sample("pair_zx.json")}));
  EXPECT_EQ(r.exit_code, 0) << r.report.dump();
  EXPECT_TRUE(r.report.at("reversible").get<bool>());
  EXPECT_EQ(r.report.at("pair").at("n_m"), 1);
}

TEST(Dispatch, VerifyPairReportsWitness) {
  const auto r = dispatch(config("verify-pair", {sample("pair_zz_xx.json")}));
  EXPECT_EQ(r.exit_code, 1);
  EXPECT_FALSE(r.report.at("reversible").get<bool>());
  EXPECT_TRUE(r.report.contains("witness"));
}

TEST(Dispatch, RunWithForcedOutcomes) {
  auto c = config("run", {sample("repetition.json")});
  c.forced_outcomes = "0110";
  const auto r = dispatch(c);
  EXPECT_EQ(r.exit_code, 0) << r.report.dump();
  EXPECT_EQ(r.report.at("source").at("forced"), "0110");
}

TEST(Dispatch, CheckLocalityOnHoneycomb) {
  EXPECT_EQ(dispatch(config("check-locality", {sample("honeycomb.json")})).exit_code, 0);
  EXPECT_EQ(dispatch(config("check-locality", {sample("pair_zz_xx.json")})).exit_code, 2);
}

TEST(Dispatch, OracleVerify) {
  EXPECT_EQ(dispatch(config("oracle verify", {sample("repetition.json")})).exit_code, 0);
}

TEST(Dispatch, GenuCheckAndDecompose) {
  EXPECT_EQ(dispatch(config("genu check", {sample("genu_worked.json")})).exit_code, 0);
  const auto d = dispatch(config("genu decompose", {sample("genu_clifford.json")}));
  EXPECT_EQ(d.exit_code, 0) << d.report.dump();
  EXPECT_LT(d.report.at("phase_function_distance").get<double>(), 1e-6);
}

TEST(Dispatch, GenuCheckFailsOnNonUnitary) {
  const auto p = temp_file("nonunitary.json", R"({"pair": {"group_a": {"generators": ["Z"]}, "group_b": {"generators": ["X"]}},
    "unitary": {"real": [[2, 0], [0, 2]], "imag": [[0, 0], [0, 0]]}})");
  EXPECT_EQ(dispatch(config("genu check", {p.string()})).exit_code, 1);
  std::filesystem::remove(p);
}

TEST(Dispatch, CatalogListAndExport) {
  const auto l = dispatch(config("catalog list"));
  EXPECT_EQ(l.exit_code, 0);
  EXPECT_EQ(l.report.at("entries").size(), 4u);
  auto c = config("catalog export");
  c.name = "honeycomb";
  c.params = {{"Lx", 6}, {"Ly", 2}};
  const auto e = dispatch(c);
  EXPECT_EQ(e.exit_code, 0);
  EXPECT_EQ(e.report.at("isgs").size(), 4u);
  // The export re-reads as a valid sequence.
  const auto in = fk::io::sequence_input_from_json(e.report);
  EXPECT_TRUE(fk::validate_sequence(in.isgs, in.lattice, in.l).valid);
}

TEST(Dispatch, UsageAndFormatErrorsExitTwo) {
  EXPECT_EQ(dispatch(config("frobnicate")).exit_code, 2);
  EXPECT_EQ(dispatch(config("run")).exit_code, 2);
  auto both = config("run", {sample("repetition.json")});
  both.seed = 1;
  both.forced_outcomes = "0";
  EXPECT_EQ(dispatch(both).exit_code, 2);
  auto bad_tol = config("run", {sample("repetition.json")});
  bad_tol.tol = 0;
  EXPECT_EQ(dispatch(bad_tol).exit_code, 2);
  EXPECT_EQ(dispatch(config("run", {"/nonexistent/file.json"})).exit_code, 2);
  const auto garbled = temp_file("garbled.json", "{ not json");
  EXPECT_EQ(dispatch(config("run", {garbled.string()})).exit_code, 2);
  const auto bad_pauli = temp_file("bad_pauli.json", R"({"isgs": [{"generators": ["ZQ"]}, {"generators": ["XI"]}]})");
  EXPECT_EQ(dispatch(config("run", {bad_pauli.string()})).exit_code, 2);
  const auto anti = temp_file("anti.json", R"({"isgs": [{"generators": ["Z", "X"]}, {"generators": ["X"]}]})");
  EXPECT_EQ(dispatch(config("run", {anti.string()})).exit_code, 2);
  for (const auto& p : {garbled, bad_pauli, anti}) std::filesystem::remove(p);
}

TEST(Dispatch, ExhaustedForcedStreamIsACheckFailure) {
  auto c = config("run", {sample("repetition.json")});
  c.forced_outcomes = "01";
  EXPECT_EQ(dispatch(c).exit_code, 1);
}

int run_binary(const std::string& args, const std::string& out) {
  const std::string cmd = std::string(FLOQUETKIT_CLI) + " " + args + " > " + out + " 2>/dev/null";
  const int status = std::system(cmd.c_str());
  return WEXITSTATUS(status);
}

TEST(Binary, ExitCodes) {
  const auto out = (std::filesystem::temp_directory_path() / "floquetkit_test_out.json").string();
  EXPECT_EQ(run_binary("verify-pair -i " + sample("pair_zx.json"), out), 0);
  EXPECT_EQ(run_binary("verify-pair -i " + sample("pair_zz_xx.json"), out), 1);
  EXPECT_EQ(run_binary("verify-pair", out), 2);
  EXPECT_EQ(run_binary("run -i " + sample("repetition.json") + " --seed 3 --forced-outcomes 0000", out), 2);
  std::filesystem::remove(out);
}

TEST(Binary, IdenticalConfigGivesIdenticalBytes) {
  const auto dir = std::filesystem::temp_directory_path();
  const auto a = (dir / "floquetkit_test_a.json").string();
  const auto b = (dir / "floquetkit_test_b.json").string();
  const std::string args = "run -i " + sample("honeycomb.json") + " --seed 17";
  ASSERT_EQ(run_binary(args, a), 0);
  ASSERT_EQ(run_binary(args, b), 0);
  const auto ta = read_file(a);
  EXPECT_FALSE(ta.empty());
  EXPECT_EQ(ta, read_file(b));
  ASSERT_EQ(run_binary(args + " -o " + b, "/dev/null"), 0);
  EXPECT_EQ(ta, read_file(b));
  std::filesystem::remove(a);
  std::filesystem::remove(b);
}

}  // namespace
