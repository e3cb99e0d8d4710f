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

#include "sev/metrics.h"

#include <gtest/gtest.h>

#include <cmath>

#include "metric_fixtures.h"
#include "oracles.h"
#include "sev/errors.h"
#include "sev/synthetic.h"

namespace sev {
namespace {

// 20 log10(255) and 10 log10(3), to 13 decimals.
constexpr double kPsnrDiffOne = 48.1308036086791;
constexpr double kTenLogThree = 4.7712125471966;

Frame Constant(int w, int h, uint8_t v) {
  return Frame(w, h, std::vector<uint8_t>(static_cast<size_t>(w) * h * 3, v));
}

TEST(PsnrTest, ClosedForms) {
  EXPECT_EQ(Psnr(Constant(16, 16, 7), Constant(16, 16, 7)), kPsnrCapDb);
  EXPECT_NEAR(Psnr(Constant(16, 16, 0), Constant(16, 16, 1)), kPsnrDiffOne,
              1e-6);
  EXPECT_NEAR(Psnr(Constant(16, 16, 200), Constant(16, 16, 199)), kPsnrDiffOne,
              1e-6);
  EXPECT_NEAR(Psnr(Constant(16, 16, 0), Constant(16, 16, 255)), 0.0, 1e-6);
  // One sample of three off by one: MSE 1/3.
  Frame a = Constant(1, 1, 50);
  Frame b = a;
  b.mutable_pixels()[1] = 51;
  EXPECT_NEAR(Psnr(a, b), kPsnrDiffOne + kTenLogThree, 1e-6);
}

TEST(PsnrTest, CapAppliesToTinyErrors) {
  // One unit error in 2^24 samples is about 120.9 dB.
  Frame a = Constant(4096, 1366, 9);
  Frame b = a;
  b.mutable_pixels()[0] = 10;
  EXPECT_EQ(Psnr(a, b), kPsnrCapDb);
}

TEST(MetricsTest, SizeMismatch) {
  EXPECT_THROW(Psnr(Constant(4, 4, 0), Constant(4, 5, 0)), ArgumentError);
  EXPECT_THROW(Ssim(Constant(20, 20, 0), Constant(21, 20, 0)), ArgumentError);
  EXPECT_THROW(MsSsim(Constant(200, 200, 0), Constant(200, 201, 0)),
               ArgumentError);
}

TEST(SsimTest, WindowPrecondition) {
  EXPECT_THROW(Ssim(Constant(10, 40, 0), Constant(10, 40, 0)), ArgumentError);
  EXPECT_NO_THROW(Ssim(Constant(11, 11, 0), Constant(11, 11, 0)));
}

TEST(MsSsimTest, ResolutionPrecondition) {
  EXPECT_EQ(kMsSsimMinSide, 176);
  const Frame f = MakeTexturedFrame(64, 64, 1);
  EXPECT_THROW(MsSsim(f, f), ArgumentError);
  const Frame g = MakeTexturedFrame(175, 300, 1);
  EXPECT_THROW(MsSsim(g, g), ArgumentError);
}

TEST(MetricsTest, IdenticalInputsAreExact) {
  for (int seed = 1; seed <= 3; ++seed) {
    const Frame f = MakeTexturedFrame(180, 176, seed);
    EXPECT_EQ(Psnr(f, f), 100.0);
    EXPECT_EQ(Ssim(f, f), 1.0);
    EXPECT_EQ(MsSsim(f, f), 1.0);
  }
}

TEST(SsimTest, MatchesDirectReferenceAt64) {
  const Frame ref = MakeTexturedFrame(64, 64, 4);
  for (int amp : {3, 12, 40}) {
    const Frame dist = AddNoise(ref, amp, amp);
    EXPECT_NEAR(Ssim(ref, dist), oracle::Ssim(ref, dist), 1e-4) << amp;
  }
}

TEST(SsimTest, ComponentsMatchReference) {
  const Frame ref = MakeTexturedFrame(40, 30, 2);
  const Frame dist = AddNoise(ref, 30, 1);
  const auto a = oracle::Luma(ref);
  const auto b = oracle::Luma(dist);
  const SsimComponents c = SsimPlane(a, b, 40, 30);
  const oracle::SsimStats o = oracle::DirectSsim(a, b, 40, 30);
  EXPECT_NEAR(c.ssim, o.ssim, 1e-9);
  EXPECT_NEAR(c.cs, o.cs, 1e-9);
}

TEST(MetricsTest, FixturePairsMatchReference) {
  for (const auto& p : testing::MetricFixturePairs()) {
    const double ssim = Ssim(p.ref, p.dist);
    EXPECT_NEAR(ssim, oracle::Ssim(p.ref, p.dist), 1e-4) << p.name;
    EXPECT_NEAR(MsSsim(p.ref, p.dist), oracle::MsSsim(p.ref, p.dist), 1e-3)
        << p.name;
    EXPECT_GE(ssim, -1.0);
    EXPECT_LE(ssim, 1.0);
  }
}

TEST(MsSsimTest, MatchesReferenceAt256) {
  const Frame ref = MakeTexturedFrame(256, 256, 8);
  const Frame dist = AddNoise(ref, 20, 3);
  EXPECT_NEAR(MsSsim(ref, dist), oracle::MsSsim(ref, dist), 1e-3);
}

TEST(MsSsimTest, OddSizesDropTrailingSamples) {
  const Frame ref = MakeTexturedFrame(181, 179, 8);
  const Frame dist = AddNoise(ref, 10, 3);
  EXPECT_NEAR(MsSsim(ref, dist), oracle::MsSsim(ref, dist), 1e-3);
}

TEST(MetricsTest, Symmetry) {
  const Frame a = MakeTexturedFrame(176, 176, 1);
  const Frame b = AddNoise(a, 25, 9);
  EXPECT_EQ(Psnr(a, b), Psnr(b, a));
  EXPECT_NEAR(Ssim(a, b), Ssim(b, a), 1e-12);
  EXPECT_NEAR(MsSsim(a, b), MsSsim(b, a), 1e-12);
}

TEST(MetricsTest, MonotoneUnderNoise) {
  const Frame ref = MakeTexturedFrame(48, 48, 21);
  for (uint64_t seed = 0; seed < 20; ++seed) {
    double prev_psnr = Psnr(ref, ref);
    double prev_ssim = Ssim(ref, ref);
    for (int amp = 2; amp <= 80; amp += 6) {
      const Frame dist = AddNoise(ref, amp, seed);
      const double psnr = Psnr(ref, dist);
      const double ssim = Ssim(ref, dist);
      EXPECT_LE(psnr, prev_psnr) << seed << " " << amp;
      EXPECT_LE(ssim, prev_ssim + 1e-6) << seed << " " << amp;
      prev_psnr = psnr;
      prev_ssim = ssim;
    }
  }
}

TEST(MetricsTest, Deterministic) {
  const auto pairs = testing::MetricFixturePairs(176);
  for (const auto& p : {pairs[1], pairs[7]}) {
    EXPECT_EQ(Ssim(p.ref, p.dist), Ssim(p.ref, p.dist));
    EXPECT_EQ(MsSsim(p.ref, p.dist), MsSsim(p.ref, p.dist));
  }
}

TEST(MetricsTest, Summarize) {
  const MetricResult r = Summarize({1.0, 2.0, 6.0});
  EXPECT_EQ(r.per_frame.size(), 3u);
  EXPECT_DOUBLE_EQ(r.mean, 3.0);
  EXPECT_EQ(Summarize({}).mean, 0.0);
}

}  // namespace
}  // namespace sev
