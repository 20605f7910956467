// Copyright 2026 The ryser-transfer Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Runs the built binary and checks exit codes and JSON output.

#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "ryser/ryser.hpp"

namespace ryser {
namespace {

struct Run {
  int code = -1;
  std::string out;
  Json json() const { return Json::parse(out); }
};

Run run(const std::string& args) {
  const std::string cmd = std::string(RYSER_CLI_PATH) + " " + args + " 2>/dev/null";
  Run r;
  FILE* p = ::popen(cmd.c_str(), "r");
  if (!p) return r;
  char buf[4096];
  for (std::size_t n; (n = std::fread(buf, 1, sizeof buf, p)) > 0;) r.out.append(buf, n);
  int status = ::pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string data(const std::string& rel) { return std::string(RYSER_DATA_DIR) + "/" + rel; }

std::string tmp(const std::string& name) { return (std::filesystem::temp_directory_path() / name).string(); }

TEST(Cli, VerifyBundledSequences) {
  for (auto f : {"sequences/r2_nu1.json", "sequences/r3_nu1.json"}) {
    auto r = run("verify --sequence " + data(f) + " --format json");
    ASSERT_EQ(r.code, 0) << r.out;
    EXPECT_TRUE(r.json()["transcripts"]["certified"].get<bool>());
  }
}

TEST(Cli, EndToEndWritesValidCertificate) {
  auto cert = tmp("ryser-cli-cert.json");
  auto r = run("end-to-end --graph " + data("examples/k6_two_colors.json") + " --out " + cert + " --format json");
  ASSERT_EQ(r.code, 0) << r.out;
  EXPECT_EQ(read_json_file(cert)["count"], 1);
  auto v = run("verify --certificate " + cert + " --graph " + data("examples/k6_two_colors.json") + " --format json");
  EXPECT_EQ(v.code, 0) << v.out;
  std::filesystem::remove(cert);
}

TEST(Cli, CoverExitCodes) {
  // alpha = 2 with the (2,1) sequence: premise violation.
  auto pv = run("cover --graph " + data("examples/edgeless_pair.json") + " --sequence " + data("sequences/r2_nu1.json") +
                " --format json");
  EXPECT_EQ(pv.code, 2) << pv.out;
  // No bundled sequence for (2,2) or for r = 4.
  EXPECT_EQ(run("end-to-end --graph " + data("examples/edgeless_pair.json")).code, 3);
  EXPECT_EQ(run("cover --graph " + data("examples/k5_four_colors.json")).code, 3);
  EXPECT_EQ(run("cover --graph " + data("examples/k6_two_colors.json") + " --schedule adaptive").code, 0);
}

TEST(Cli, BadInputFails) {
  EXPECT_NE(run("cover --graph /nonexistent.json").code, 0);
  EXPECT_NE(run("no-such-command").code, 0);
}

TEST(Cli, GlobalFlagsAfterSubcommand) {
  auto r = run("oracle matching --hypergraph " + data("examples/m22.json") + " --format json");
  ASSERT_EQ(r.code, 0) << r.out;
  EXPECT_EQ(r.json()["value"], 2);
}

TEST(Cli, ConvertRoundTrip) {
  auto g = tmp("ryser-cli-conv.json");
  ASSERT_EQ(run("convert --hypergraph " + data("examples/p22.json") + " --out " + g).code, 0);
  auto back = run("convert --graph " + g + " --format json");
  ASSERT_EQ(back.code, 0);
  auto h = hypergraph_from_json(back.json());
  EXPECT_EQ(h.edge_count(), 2u);
  std::filesystem::remove(g);
}

TEST(Cli, GenSequence) {
  auto r = run("gen-sequence --r 2 --nu 1 --format json");
  ASSERT_EQ(r.code, 0) << r.out;
  EXPECT_TRUE(r.json()["transcripts"]["certified"].get<bool>());
}

TEST(Cli, ExperimentNdjson) {
  auto out = tmp("ryser-cli-exp.ndjson");
  auto r = run("experiment --r 2 --trials 3 --n-min 3 --n-max 6 --schedule adaptive --output " + out + " --seed 9");
  ASSERT_EQ(r.code, 0);
  std::ifstream in(out);
  std::size_t lines = 0;
  for (std::string line; std::getline(in, line);) ++lines;
  EXPECT_EQ(lines, 4u);
  std::filesystem::remove(out);
}

TEST(Cli, FindDualAndMetric) {
  auto d = run("find-dual --hypergraph " + data("examples/m22.json") + " --graph " + data("examples/edgeless_pair.json") +
               " -a 1 -b 2 --format json");
  EXPECT_EQ(d.code, 0) << d.out;
  auto m = run("metric --graph " + data("examples/k6_two_colors.json") + " --format json");
  EXPECT_EQ(m.code, 0) << m.out;
}

}  // namespace
}  // namespace ryser
