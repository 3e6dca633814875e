/* Copyright 2026 The RPCP Augment Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#include "rpcp/cli.h"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "rpcp/dataset_io.h"
#include "rpcp/synthetic.h"
#include "test_util.h"

namespace rpcp {
namespace {

namespace fs = std::filesystem;
using testing::TempDir;

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun Cli(std::vector<std::string> args) {
  args.insert(args.begin(), "rpcp");
  std::ostringstream out, err;
  const int code = RunCli(args, out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override { WriteSyntheticDataset(data_.str(), SyntheticSpec{3, 48, 5}); }
  std::string images() const { return data_.str("images"); }
  std::string masks() const { return data_.str("masks"); }
  TempDir data_{"cli_data"};
};

TEST_F(CliTest, NoSubcommandIsUsageError) {
  EXPECT_EQ(Cli({}).code, kExitUsage);
  EXPECT_EQ(Cli({"bogus"}).code, kExitUsage);
}

TEST_F(CliTest, BadConfigExitsTwo) {
  TempDir tmp("cli_cfg");
  std::ofstream(tmp.str("c.json")) << R"({"alpha": 2})";
  const CliRun r = Cli({"augment", "--images", images(), "--masks", masks(), "--out",
                     tmp.str("o"), "--config", tmp.str("c.json")});
  EXPECT_EQ(r.code, kExitConfig);
  EXPECT_NE(r.err.find("alpha"), std::string::npos) << r.err;
}

TEST_F(CliTest, MissingDirectoryExitsThree) {
  TempDir tmp("cli_io");
  EXPECT_EQ(Cli({"extract", "--images", tmp.str("nope"), "--masks", masks(),
                 "--out", tmp.str("bank")})
                .code,
            kExitIo);
  fs::create_directories(tmp.path() / "empty");
  EXPECT_EQ(Cli({"stats", "--masks", tmp.str("empty")}).code, kExitIo);
}

TEST_F(CliTest, DimensionMismatchExitsFour) {
  TempDir tmp("cli_dims");
  fs::create_directories(tmp.path() / "images");
  fs::create_directories(tmp.path() / "masks");
  WriteImage(tmp.str("images/a.png"), ImageRgb(16, 16));
  WriteLabelMap(tmp.str("masks/a.png"), LabelMap(8, 8, 1));
  EXPECT_EQ(Cli({"augment", "--images", tmp.str("images"), "--masks",
                 tmp.str("masks"), "--out", tmp.str("o")})
                .code,
            kExitDataMismatch);
}

TEST_F(CliTest, EvalDimensionMismatchNamesPair) {
  TempDir tmp("cli_eval_dims");
  fs::create_directories(tmp.path() / "pred");
  fs::create_directories(tmp.path() / "gt");
  WriteLabelMap(tmp.str("pred/plant7.png"), LabelMap(8, 8, 1));
  WriteLabelMap(tmp.str("gt/plant7.png"), LabelMap(8, 6, 1));
  const CliRun r = Cli({"eval", "--pred", tmp.str("pred"), "--gt", tmp.str("gt")});
  EXPECT_EQ(r.code, kExitDataMismatch);
  EXPECT_NE(r.err.find("plant7"), std::string::npos) << r.err;
}

TEST_F(CliTest, ExtractWithoutRareClassWarns) {
  TempDir tmp("cli_norare");
  WritePair(ImageRgb(16, 16, 0.5), LabelMap(16, 16, 1),
            {tmp.str("images"), tmp.str("masks")}, "plain");
  const CliRun r = Cli({"extract", "--images", tmp.str("images"), "--masks",
                        tmp.str("masks"), "--out", tmp.str("bank")});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NE(r.err.find("warning"), std::string::npos);
  EXPECT_NE(r.out.find("extracted 0 patches"), std::string::npos) << r.out;
}

TEST_F(CliTest, ExtractThenAugmentWithBank) {
  TempDir tmp("cli_bank");
  const CliRun e = Cli({"extract", "--images", images(), "--masks", masks(), "--out",
                     tmp.str("bank")});
  ASSERT_EQ(e.code, kExitOk) << e.err;
  EXPECT_TRUE(fs::exists(tmp.path() / "bank" / "index.json"));
  const CliRun a = Cli({"augment", "--images", images(), "--masks", masks(), "--out",
                     tmp.str("aug"), "--bank", tmp.str("bank"), "--seed", "7"});
  ASSERT_EQ(a.code, kExitOk) << a.err;
  EXPECT_TRUE(fs::exists(tmp.path() / "aug" / "manifest.jsonl"));
  EXPECT_TRUE(fs::exists(tmp.path() / "aug" / "images" / (SyntheticId(0) + "_aug.png")));
}

TEST_F(CliTest, EvalOnIdenticalMasksIsPerfect) {
  TempDir tmp("cli_eval");
  const CliRun r = Cli({"eval", "--pred", masks(), "--gt", masks(), "--out", tmp.str()});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  std::ifstream in(tmp.path() / "metrics.json");
  const std::string json((std::istreambuf_iterator<char>(in)), {});
  EXPECT_NE(json.find("\"miou\": 1.0"), std::string::npos) << json;
  EXPECT_NE(json.find("\"macc\": 1.0"), std::string::npos) << json;
}

TEST_F(CliTest, EvalAggregationMode) {
  const CliRun r = Cli({"eval", "--per-class-iou", "97.38,82.73,68.16",
                     "--per-class-acc", "98.01,90.12,79.87"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(r.out, "mIoU 82.76\nmAcc 89.33\n");
  EXPECT_EQ(Cli({"eval", "--per-class-iou", "1,x", "--per-class-acc", "1"}).code,
            kExitConfig);
  EXPECT_EQ(Cli({"eval", "--per-class-iou", "1"}).code, kExitConfig);
}

TEST_F(CliTest, StatsWithPixelSampling) {
  TempDir tmp("cli_stats");
  const CliRun r = Cli({"stats", "--masks", masks(), "--images", images(), "--out",
                     tmp.str(), "--sample-pixels", "10", "--seed", "3"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_TRUE(fs::exists(tmp.path() / "distribution.json"));
  std::ifstream in(tmp.path() / "pixels.csv");
  int lines = 0;
  for (std::string l; std::getline(in, l);) ++lines;
  // Header plus min(10, pixels of class) rows per class.
  std::vector<std::int64_t> per_class(4, 0);
  for (const auto& stem : ListPngStems(masks())) {
    for (ClassId v : LoadLabelMap(masks() + "/" + stem + ".png", {}).data()) ++per_class[v];
  }
  std::int64_t expected = 1;
  for (auto n : per_class) expected += std::min<std::int64_t>(n, 10);
  EXPECT_EQ(lines, expected);
}

}  // namespace
}  // namespace rpcp
