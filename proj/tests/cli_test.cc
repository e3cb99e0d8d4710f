// Copyright 2026 The SEV Codec Authors. All Rights Reserved.
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

#include <filesystem>

#include "cli_runner.h"
#include "json.hpp"
#include "sev/container.h"
#include "sev/sem.h"
#include "sev/synthetic.h"
#include "sev/video_io.h"

namespace fs = std::filesystem;

namespace sev {
namespace {

using ::sev::testing::RunCli;

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::path(::testing::TempDir()) /
           ("sev_cli_" + std::string(::testing::UnitTest::GetInstance()
                                         ->current_test_info()
                                         ->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string P(const std::string& name) const {
    return "'" + (dir_ / name).string() + "'";
  }

  VideoSequence WriteClip(const std::string& name) {
    VideoSequence video = MakeMovingRectangleVideo(48, 32, 10, 4);
    std::vector<uint32_t> idx;
    for (uint32_t i = 0; i < video.size(); ++i) idx.push_back(i);
    SaveFrameSequence(video.frames(), idx, dir_ / name);
    return video;
  }

  fs::path dir_;
};

TEST_F(CliTest, EncodeInspectDecode) {
  const VideoSequence video = WriteClip("in");
  auto r = RunCli("encode --input " + P("in") + " --fps 30 --output " +
                  P("a.sev") +
                  " --alpha 0.2 --scale 2 --k 8 --canny-low 20 --canny-high 60");
  ASSERT_EQ(r.exit_code, 0) << r.output;

  r = RunCli("inspect --input " + P("a.sev"));
  ASSERT_EQ(r.exit_code, 0) << r.output;
  const auto j = nlohmann::json::parse(r.output);
  EXPECT_EQ(j["frame_count"], 10);
  EXPECT_EQ(j["fps"]["num"], 30);
  EXPECT_EQ(j["key_indices"], nlohmann::json({0, 5}));
  EXPECT_EQ(j["map_width"], 24);

  r = RunCli("decode --input " + P("a.sev") + " --emit-keyframes " + P("keys") +
             " --emit-sem " + P("maps.sem") + " --emit-maps " + P("maps"));
  ASSERT_EQ(r.exit_code, 0) << r.output;
  EXPECT_EQ(LoadPng(dir_ / "keys" / "000000.png"), video.frame(0));
  EXPECT_EQ(LoadPng(dir_ / "keys" / "000005.png"), video.frame(5));
  EXPECT_EQ(std::distance(fs::directory_iterator(dir_ / "keys"),
                          fs::directory_iterator()),
            2);
  EXPECT_EQ(std::distance(fs::directory_iterator(dir_ / "maps"),
                          fs::directory_iterator()),
            10);

  const SevFile file = ParseContainer(ReadFileBytes(dir_ / "a.sev"));
  RawPngCodec codec;
  EXPECT_EQ(ParseSem(ReadFileBytes(dir_ / "maps.sem")),
            MakeSem(DecodeSev(file, codec)));
}

TEST_F(CliTest, DecodeRejectsForeignFile) {
  WriteFileBytes(dir_ / "x.sev", std::vector<uint8_t>{'X', 'X', 'X', 'X', 1});
  const auto r = RunCli("decode --input " + P("x.sev") + " --emit-sem " +
                        P("m.sem"));
  EXPECT_EQ(r.exit_code, 1);
  EXPECT_NE(r.output.find("bad magic"), std::string::npos) << r.output;
  EXPECT_FALSE(fs::exists(dir_ / "m.sem"));
}

TEST_F(CliTest, MissingInputFails) {
  const auto r = RunCli("encode --input " + P("nope") + " --output " +
                        P("a.sev"));
  EXPECT_EQ(r.exit_code, 1);
  EXPECT_FALSE(fs::exists(dir_ / "a.sev"));
  EXPECT_NE(RunCli("encode").exit_code, 0);
}

TEST_F(CliTest, MetricsCsv) {
  WriteClip("ref");
  const auto r = RunCli("metrics --ref " + P("ref") + " --dist " + P("ref") +
                        " --metrics psnr,ssim --out " + P("m.csv"));
  ASSERT_EQ(r.exit_code, 0) << r.output;
  const auto bytes = ReadFileBytes(dir_ / "m.csv");
  const std::string csv(bytes.begin(), bytes.end());
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "frame_index,psnr_db,ssim,msssim,vmaf");
  EXPECT_NE(csv.find("\n0,100.000000,1.000000,,\n"), std::string::npos) << csv;
  EXPECT_NE(csv.find("\nmean,100.000000,1.000000,,\n"), std::string::npos);
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 12);
}

TEST_F(CliTest, MetricsRejectsSmallMsSsim) {
  WriteClip("ref");
  const auto r = RunCli("metrics --ref " + P("ref") + " --dist " + P("ref") +
                        " --metrics msssim --out " + P("m.csv"));
  EXPECT_EQ(r.exit_code, 1);
  EXPECT_NE(r.output.find("176"), std::string::npos) << r.output;
}

TEST_F(CliTest, RdSweepCsv) {
  WriteClip("in");
  const auto r = RunCli("rd-sweep --input " + P("in") +
                        " --alphas 0.2,1 --scales 2 --ks 2,8 --canny-low 20 "
                        "--canny-high 60 --out " + P("s.csv") + " --gnuplot " +
                        P("s.dat"));
  ASSERT_EQ(r.exit_code, 0) << r.output;
  const auto bytes = ReadFileBytes(dir_ / "s.csv");
  const std::string csv(bytes.begin(), bytes.end());
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 5);
  EXPECT_NE(csv.find("\n1,2,8,23,"), std::string::npos) << csv;
  EXPECT_TRUE(fs::exists(dir_ / "s.dat"));
}

}  // namespace
}  // namespace sev
