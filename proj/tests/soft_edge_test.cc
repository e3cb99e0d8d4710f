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

#include "sev/soft_edge.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <set>

#include "sev/downsample.h"
#include "sev/errors.h"
#include "sev/synthetic.h"

namespace sev {
namespace {

double Dist2(const Rgb& a, double r, double g, double b) {
  return (a.r - r) * (a.r - r) + (a.g - g) * (a.g - g) + (a.b - b) * (a.b - b);
}

// Exhaustive search over every assignment of `points` to at most `clusters`
// groups; returns the rounded means of the lowest-distortion grouping.
std::vector<Rgb> BruteForceKMeans(const std::vector<Rgb>& points,
                                  int clusters) {
  const size_t n = points.size();
  std::vector<int> assign(n, 0);
  double best = std::numeric_limits<double>::infinity();
  std::vector<Rgb> best_means;
  while (true) {
    double sum[8][3] = {}, cnt[8] = {};
    for (size_t i = 0; i < n; ++i) {
      sum[assign[i]][0] += points[i].r;
      sum[assign[i]][1] += points[i].g;
      sum[assign[i]][2] += points[i].b;
      cnt[assign[i]] += 1;
    }
    double cost = 0;
    for (size_t i = 0; i < n; ++i) {
      const int c = assign[i];
      cost += Dist2(points[i], sum[c][0] / cnt[c], sum[c][1] / cnt[c],
                    sum[c][2] / cnt[c]);
    }
    if (cost < best - 1e-9) {
      best = cost;
      best_means.clear();
      for (int c = 0; c < clusters; ++c) {
        if (cnt[c] == 0) continue;
        best_means.push_back(
            {static_cast<uint8_t>(std::floor(sum[c][0] / cnt[c] + 0.5)),
             static_cast<uint8_t>(std::floor(sum[c][1] / cnt[c] + 0.5)),
             static_cast<uint8_t>(std::floor(sum[c][2] / cnt[c] + 0.5))});
      }
    }
    size_t i = 0;
    while (i < n && ++assign[i] == clusters) assign[i++] = 0;
    if (i == n) break;
  }
  std::sort(best_means.begin(), best_means.end(), [](Rgb a, Rgb b) {
    const uint32_t la = WeightedLuma(a), lb = WeightedLuma(b);
    return la != lb ? la < lb : a < b;
  });
  return best_means;
}

double Distortion(std::span<const Rgb> points, const Codebook& book) {
  double total = 0;
  for (const Rgb& p : points) {
    const Rgb& c = book.centroids()[book.Nearest(p)];
    total += Dist2(p, c.r, c.g, c.b);
  }
  return total;
}

TEST(CodebookTest, SortsByLumaThenRgb) {
  const Codebook book(8, {{255, 255, 255}, {255, 0, 0}, {0, 0, 0},
                          {0, 0, 255}, {10, 10, 10}});
  ASSERT_EQ(book.effective_count(), 5);
  EXPECT_EQ(book.centroids()[0], (Rgb{0, 0, 0}));
  EXPECT_EQ(book.centroids()[1], (Rgb{10, 10, 10}));
  EXPECT_EQ(book.centroids()[2], (Rgb{0, 0, 255}));
  EXPECT_EQ(book.centroids()[3], (Rgb{255, 0, 0}));
  EXPECT_EQ(book.centroids()[4], (Rgb{255, 255, 255}));
}

TEST(CodebookTest, LumaTiesOrderedByRgb) {
  // 587 * 9 = 299 * 15 + 114 * 7 = 5283.
  static_assert(WeightedLuma({0, 9, 0}) == WeightedLuma({15, 0, 7}));
  const Codebook book(4, {{15, 0, 7}, {0, 9, 0}});
  EXPECT_EQ(book.centroids()[0], (Rgb{0, 9, 0}));
  EXPECT_EQ(book.centroids()[1], (Rgb{15, 0, 7}));
}

TEST(CodebookTest, Validation) {
  EXPECT_THROW(Codebook(1, {}), ArgumentError);
  EXPECT_THROW(Codebook(257, {}), ArgumentError);
  EXPECT_THROW(Codebook(2, {{1, 1, 1}, {2, 2, 2}}), ArgumentError);
  EXPECT_NO_THROW(Codebook(256, {}));
}

TEST(FitCodebookTest, SingleColor) {
  const std::vector<Rgb> colors(50, Rgb{12, 34, 56});
  const Codebook book = FitCodebook(colors, 8, 0);
  ASSERT_EQ(book.effective_count(), 1);
  EXPECT_EQ(book.centroids()[0], (Rgb{12, 34, 56}));
  EXPECT_EQ(book.k(), 8);
}

TEST(FitCodebookTest, TwoGroupsThreeSymbols) {
  std::vector<Rgb> colors(10, Rgb{0, 0, 0});
  colors.insert(colors.end(), 10, Rgb{250, 250, 250});
  const Codebook book = FitCodebook(colors, 3, 7);
  ASSERT_EQ(book.effective_count(), 2);
  EXPECT_EQ(book.centroids()[0], (Rgb{0, 0, 0}));
  EXPECT_EQ(book.centroids()[1], (Rgb{250, 250, 250}));
  // Same answer from the exhaustive oracle.
  EXPECT_EQ(BruteForceKMeans({{0, 0, 0}, {0, 0, 0}, {250, 250, 250},
                              {250, 250, 250}},
                             2),
            book.centroids());
}

TEST(FitCodebookTest, EmptyInput) {
  const Codebook book = FitCodebook({}, 16, 3);
  EXPECT_EQ(book.effective_count(), 0);
  EXPECT_EQ(book.k(), 16);
}

TEST(FitCodebookTest, FewerDistinctColorsThanClusters) {
  std::vector<Rgb> colors;
  for (int i = 0; i < 30; ++i) colors.push_back({static_cast<uint8_t>(i % 3 * 80), 5, 5});
  const Codebook book = FitCodebook(colors, 8, 1);
  EXPECT_EQ(book.effective_count(), 3);
}

TEST(FitCodebookTest, RejectsBadK) {
  const std::vector<Rgb> colors(3, Rgb{1, 2, 3});
  EXPECT_THROW(FitCodebook(colors, 1, 0), ArgumentError);
  EXPECT_THROW(FitCodebook(colors, 257, 0), ArgumentError);
}

// Well-separated clusters: seeded k-means must find the exhaustive optimum.
TEST(FitCodebookTest, MatchesBruteForceOnSeparatedClusters) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 25; ++trial) {
    const int clusters = 2 + trial % 2;
    std::vector<Rgb> points;
    for (int c = 0; c < clusters; ++c) {
      const int base = 20 + 100 * c;
      const int count = 2 + static_cast<int>(UniformBelow(rng, 3));
      for (int i = 0; i < count; ++i) {
        points.push_back({static_cast<uint8_t>(base + UniformBelow(rng, 9)),
                          static_cast<uint8_t>(base + UniformBelow(rng, 9)),
                          static_cast<uint8_t>(255 - base - UniformBelow(rng, 9))});
      }
    }
    const Codebook book = FitCodebook(points, clusters + 1, trial);
    ASSERT_EQ(book.centroids(), BruteForceKMeans(points, clusters))
        << "trial " << trial;
  }
}

// Small random sets have local minima, so check the properties Lloyd
// guarantees: each centroid sits at the mean of its cell, nothing beats the
// exhaustive optimum, and some seed reaches it.
TEST(FitCodebookTest, LloydFixedPointAndBruteForceBound) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<Rgb> points;
    const int n = 4 + static_cast<int>(UniformBelow(rng, 4));
    for (int i = 0; i < n; ++i) {
      points.push_back({static_cast<uint8_t>(UniformBelow(rng, 256)),
                        static_cast<uint8_t>(UniformBelow(rng, 256)),
                        static_cast<uint8_t>(UniformBelow(rng, 256))});
    }
    const Codebook best(3, BruteForceKMeans(points, 2));
    const double optimum = Distortion(points, best);
    double best_seen = 1e18;
    for (uint64_t seed = 0; seed < 10; ++seed) {
      const Codebook book = FitCodebook(points, 3, seed);
      ASSERT_EQ(book.effective_count(), 2);
      const double d = Distortion(points, book);
      // Rounding centroids to integers costs at most 3 * 0.25 per point.
      ASSERT_GE(d, optimum - 0.75 * n) << trial;
      best_seen = std::min(best_seen, d);
      double sum[2][3] = {}, cnt[2] = {};
      for (const Rgb& p : points) {
        const int c = book.Nearest(p);
        sum[c][0] += p.r, sum[c][1] += p.g, sum[c][2] += p.b;
        cnt[c] += 1;
      }
      for (int c = 0; c < 2; ++c) {
        ASSERT_GT(cnt[c], 0);
        const Rgb& got = book.centroids()[c];
        ASSERT_NEAR(got.r, sum[c][0] / cnt[c], 1.0) << trial;
        ASSERT_NEAR(got.g, sum[c][1] / cnt[c], 1.0) << trial;
        ASSERT_NEAR(got.b, sum[c][2] / cnt[c], 1.0) << trial;
      }
    }
    EXPECT_LE(best_seen, optimum + 0.75 * n) << trial;
  }
}

TEST(FitCodebookTest, DistortionNeverIncreases) {
  int runs = 0;
  for (uint64_t seed = 0; seed < 10; ++seed) {
    const Frame f = Downsample(
        AddNoise(MakeMovingRectangleVideo(160, 120, 1, seed).frame(0), 12,
                 seed),
        2);
    const std::vector<Rgb> colors =
        EdgeColors(f, DetectFrameEdges(f, {20, 60}));
    for (int k : {4, 8, 32}) {
      KMeansTrace trace;
      FitCodebook(colors, k, seed, &trace);
      if (!trace.distortion.empty()) ++runs;
      for (size_t i = 1; i < trace.distortion.size(); ++i) {
        ASSERT_LE(trace.distortion[i], trace.distortion[i - 1] + 1e-6)
            << "seed " << seed << " k " << k << " iter " << i;
      }
      EXPECT_LE(trace.iterations, 50);
    }
  }
  EXPECT_GE(runs, 20);
}

TEST(FitCodebookTest, DeterministicPerSeed) {
  const Frame f = MakeTexturedFrame(96, 64, 11);
  const std::vector<Rgb> colors = EdgeColors(f, DetectFrameEdges(f, {20, 60}));
  EXPECT_EQ(FitCodebook(colors, 8, 42), FitCodebook(colors, 8, 42));
  EXPECT_EQ(FitCodebook(colors, 16, 0), FitCodebook(colors, 16, 0));
}

TEST(QuantizeTest, NonEdgeIsZeroAndExactMatch) {
  Frame f(3, 1);
  f.set(0, 0, {9, 9, 9});
  f.set(1, 0, {200, 10, 10});
  f.set(2, 0, {200, 10, 10});
  EdgeMap e(3, 1);
  e.set(1, 0, true);
  const Codebook book(8, {{0, 0, 0}, {200, 10, 10}, {90, 90, 90}});
  ASSERT_EQ(book.centroids()[1], (Rgb{200, 10, 10}));  // luma 66.81
  const SoftEdgeMap m = QuantizeSoftEdges(f, e, book);
  EXPECT_EQ(m.at(0, 0), 0);
  EXPECT_EQ(m.at(1, 0), 2);
  EXPECT_EQ(m.at(2, 0), 0);
  // A pixel equal to centroid index 2 gets label 3.
  f.set(0, 0, {200, 200, 200});
  const Codebook four(8, {{0, 0, 0}, {10, 10, 10}, {200, 200, 200}});
  ASSERT_EQ(four.centroids()[2], (Rgb{200, 200, 200}));
  EdgeMap first(3, 1);
  first.set(0, 0, true);
  EXPECT_EQ(QuantizeSoftEdges(f, first, four).at(0, 0), 3);
}

TEST(QuantizeTest, TieGoesToLowerIndex) {
  Frame f(1, 1);
  f.set(0, 0, {1, 1, 1});
  EdgeMap e(1, 1);
  e.set(0, 0, true);
  const Codebook book(4, {{0, 0, 0}, {2, 2, 2}});
  EXPECT_EQ(QuantizeSoftEdges(f, e, book).at(0, 0), 1);
  EXPECT_EQ(book.Nearest({1, 1, 1}), 0);
}

TEST(QuantizeTest, Errors) {
  EXPECT_THROW(QuantizeSoftEdges(Frame(3, 3), EdgeMap(3, 2), Codebook(4, {})),
               ArgumentError);
  EdgeMap e(2, 2);
  e.set(1, 1, true);
  EXPECT_THROW(QuantizeSoftEdges(Frame(2, 2), e, Codebook(4, {})),
               FormatError);
  // No edges, no palette: fine.
  const SoftEdgeMap m = QuantizeSoftEdges(Frame(2, 2), EdgeMap(2, 2),
                                          Codebook(4, {}));
  for (uint8_t l : m.labels()) EXPECT_EQ(l, 0);
}

TEST(SoftEdgePropertyTest, AssignmentIsNearestAndLabelsBounded) {
  for (uint64_t seed = 0; seed < 6; ++seed) {
    const Frame f = Downsample(
        AddNoise(MakeTexturedFrame(256, 256, seed), 10, seed), 4);
    const EdgeMap edges = DetectFrameEdges(f, {20, 60});
    const std::vector<Rgb> colors = EdgeColors(f, edges);
    for (int k : {2, 3, 8, 16}) {
      const Codebook book = FitCodebook(colors, k, seed);
      const SoftEdgeMap m = QuantizeSoftEdges(f, edges, book);
      std::set<int> distinct;
      for (int y = 0; y < f.height(); ++y) {
        for (int x = 0; x < f.width(); ++x) {
          const int l = m.at(x, y);
          if (!edges.at(x, y)) {
            ASSERT_EQ(l, 0);
            continue;
          }
          ASSERT_GE(l, 1);
          distinct.insert(l);
          const Rgb c = f.at(x, y);
          double best = 1e18;
          int arg = -1;
          for (int i = 0; i < book.effective_count(); ++i) {
            const Rgb& p = book.centroids()[i];
            const double d = Dist2(c, p.r, p.g, p.b);
            if (d < best) best = d, arg = i;
          }
          ASSERT_EQ(l, arg + 1);
        }
      }
      EXPECT_LE(static_cast<int>(distinct.size()), k - 1);
      EXPECT_LE(LabelEntropy(m), std::log2(k) + 1e-12);
    }
  }
}

SoftEdgeMap MapFromProportions(const std::vector<int>& counts, int k) {
  std::vector<uint8_t> labels;
  for (size_t l = 0; l < counts.size(); ++l)
    labels.insert(labels.end(), counts[l], static_cast<uint8_t>(l));
  const int n = static_cast<int>(labels.size());
  return SoftEdgeMap(n, 1, k, labels);
}

TEST(EntropyTest, ClosedForms) {
  EXPECT_EQ(LabelEntropy(MapFromProportions({10}, 4)), 0.0);
  EXPECT_DOUBLE_EQ(LabelEntropy(MapFromProportions({5, 5}, 4)), 1.0);
  EXPECT_DOUBLE_EQ(LabelEntropy(MapFromProportions({2, 1, 1}, 4)), 1.5);
  EXPECT_DOUBLE_EQ(LabelEntropy(MapFromProportions({0, 3, 0, 3}, 4)), 1.0);
  EXPECT_NEAR(LabelEntropy(MapFromProportions({1, 1, 1, 1, 1, 1, 1, 1}, 8)),
              3.0, 1e-12);
}

TEST(RenderTest, GrayscaleValues) {
  const Codebook book(4, {{255, 0, 0}, {255, 255, 255}});
  const SoftEdgeMap m(3, 1, 4, {0, 1, 2});
  const LumaPlane p = RenderGrayscale(m, book);
  EXPECT_EQ(p.at(0, 0), 0);
  EXPECT_EQ(p.at(1, 0), 76);
  EXPECT_EQ(p.at(2, 0), 255);
  const SoftEdgeMap zero(5, 5, 4);
  const LumaPlane black = RenderGrayscale(zero, book);
  for (uint8_t v : black.values()) EXPECT_EQ(v, 0);
  EXPECT_THROW(RenderGrayscale(SoftEdgeMap(1, 1, 4, {3}), book),
               ArgumentError);
}

TEST(SoftEdgeMapTest, Validation) {
  EXPECT_THROW(SoftEdgeMap(0, 1, 4), ArgumentError);
  EXPECT_THROW(SoftEdgeMap(1, 1, 1), ArgumentError);
  EXPECT_THROW(SoftEdgeMap(2, 1, 4, {0}), ArgumentError);
  EXPECT_THROW(SoftEdgeMap(1, 1, 4, {4}), ArgumentError);
  EXPECT_NO_THROW(SoftEdgeMap(1, 1, 256, {255}));
}

}  // namespace
}  // namespace sev
