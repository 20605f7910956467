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

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "test_support.hpp"

namespace ryser {
namespace {

ExperimentConfig base_config() {
  ExperimentConfig cfg;
  cfg.seed = 5;
  cfg.n_min = 4;
  cfg.n_max = 10;
  cfg.trials = 6;
  cfg.mode = ScheduleMode::adaptive;
  cfg.workers = 3;
  return cfg;
}

TEST(Experiment, InstancesDependOnlyOnSeedAndTrial) {
  auto cfg = base_config();
  auto a = graph_to_json(gen_instance(cfg, 3));
  EXPECT_EQ(graph_to_json(gen_instance(cfg, 3)), a);
  EXPECT_NE(graph_to_json(gen_instance(cfg, 4)), a);
  cfg.seed = 6;
  EXPECT_NE(graph_to_json(gen_instance(cfg, 3)), a);
}

TEST(Experiment, CliqueUnionIndependenceAtMostNu) {
  auto cfg = base_config();
  cfg.kind = InstanceKind::clique_union;
  for (std::size_t nu : {1, 2, 3}) {
    cfg.nu = nu;
    for (std::size_t t = 0; t < 10; ++t) {
      auto g = gen_instance(cfg, t);
      ASSERT_EQ(independence_number(g), nu);  // n >= nu and no cross edges
    }
  }
}

TEST(Experiment, RunIsDeterministicAndValid) {
  auto cfg = base_config();
  auto a = run_experiment(cfg);
  cfg.workers = 1;
  auto b = run_experiment(cfg);
  ASSERT_EQ(a.trials.size(), 6u);
  EXPECT_TRUE(a.all_valid());
  for (std::size_t t = 0; t < a.trials.size(); ++t) {
    EXPECT_EQ(a.trials[t].trial, t);
    EXPECT_EQ(a.trials[t].status, "cover");
    EXPECT_EQ(a.trials[t].n, b.trials[t].n);
    EXPECT_EQ(a.trials[t].diameters, b.trials[t].diameters);
  }
}

TEST(Experiment, NdjsonOutput) {
  auto cfg = base_config();
  cfg.r = 3;
  cfg.trials = 4;
  cfg.output = (std::filesystem::temp_directory_path() / "ryser-experiment-test.ndjson").string();
  auto rep = run_experiment(cfg);
  std::ifstream in(cfg.output);
  std::vector<Json> lines;
  for (std::string line; std::getline(in, line);) lines.push_back(Json::parse(line));
  std::filesystem::remove(cfg.output);
  ASSERT_EQ(lines.size(), 5u);
  for (std::size_t t = 0; t < 4; ++t) {
    EXPECT_EQ(lines[t]["trial"], t);
    EXPECT_TRUE(lines[t]["valid"].get<bool>());
  }
  EXPECT_TRUE(lines.back()["summary"].get<bool>());
  EXPECT_EQ(lines.back()["trials"], 4);
  EXPECT_EQ(rep.summary()["covers"], 4);
}

TEST(Experiment, ZeroTrials) {
  auto cfg = base_config();
  cfg.trials = 0;
  cfg.output = (std::filesystem::temp_directory_path() / "ryser-experiment-empty.ndjson").string();
  auto rep = run_experiment(cfg);
  EXPECT_TRUE(rep.trials.empty());
  EXPECT_TRUE(std::filesystem::exists(cfg.output));
  EXPECT_EQ(std::filesystem::file_size(cfg.output), 0u);
  std::filesystem::remove(cfg.output);
}

TEST(Experiment, UnsupportedAndViolationsAreRecorded) {
  auto cfg = base_config();
  cfg.kind = InstanceKind::clique_union;
  cfg.nu = 2;
  cfg.trials = 2;
  auto rep = run_experiment(cfg);
  for (const auto& t : rep.trials) EXPECT_EQ(t.status, "unsupported");
  EXPECT_FALSE(rep.trials[0].valid);
}

TEST(Experiment, BadConfigs) {
  auto cfg = base_config();
  cfg.n_min = 12;
  EXPECT_THROW(run_experiment(cfg), InvalidInput);
  cfg = base_config();
  cfg.kind = InstanceKind::file;
  EXPECT_THROW(run_experiment(cfg), InvalidInput);
  EXPECT_THROW(parse_instance_kind("grid"), InvalidInput);
}

}  // namespace
}  // namespace ryser
