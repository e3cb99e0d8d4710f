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

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <map>
#include <random>
#include <string>
#include <utility>

#include "sev/errors.h"
#include "sev/synthetic.h"

namespace sev {
namespace {

bool LumaOrder(const Rgb& a, const Rgb& b) {
  const uint32_t la = WeightedLuma(a);
  const uint32_t lb = WeightedLuma(b);
  if (la != lb) return la < lb;
  return a < b;
}

int64_t Dist2(Rgb a, Rgb b) {
  const int64_t dr = int64_t{a.r} - b.r;
  const int64_t dg = int64_t{a.g} - b.g;
  const int64_t db = int64_t{a.b} - b.b;
  return dr * dr + dg * dg + db * db;
}

using Point = std::array<double, 3>;

double Dist2(const Point& a, const Point& b) {
  const double d0 = a[0] - b[0];
  const double d1 = a[1] - b[1];
  const double d2 = a[2] - b[2];
  return d0 * d0 + d1 * d1 + d2 * d2;
}

Point ToPoint(Rgb c) { return {double(c.r), double(c.g), double(c.b)}; }

uint8_t RoundChannel(double v) {
  return static_cast<uint8_t>(std::clamp(std::floor(v + 0.5), 0.0, 255.0));
}

// Picks an index with probability proportional to weights[i]; `total` is
// their sum and must be positive.
size_t WeightedPick(std::mt19937_64& rng, const std::vector<uint64_t>& weights,
                    uint64_t total) {
  const uint64_t target = std::min(UniformBelow(rng, total), total - 1);
  uint64_t acc = 0;
  for (size_t i = 0; i < weights.size(); ++i) {
    acc += weights[i];
    if (acc > target) return i;
  }
  return weights.size() - 1;
}

}  // namespace

Codebook::Codebook(int k, std::vector<Rgb> centroids)
    : k_(k), centroids_(std::move(centroids)) {
  if (k < kMinSymbols || k > kMaxSymbols) {
    throw ArgumentError("k must lie in [2, 256], got " + std::to_string(k));
  }
  std::sort(centroids_.begin(), centroids_.end(), LumaOrder);
  centroids_.erase(std::unique(centroids_.begin(), centroids_.end()),
                   centroids_.end());
  if (static_cast<int>(centroids_.size()) > k - 1) {
    throw ArgumentError("codebook with k=" + std::to_string(k) + " holds " +
                        std::to_string(centroids_.size()) +
                        " centroids, at most k-1 allowed");
  }
}

int Codebook::Nearest(Rgb c) const {
  int best = 0;
  int64_t best_d = std::numeric_limits<int64_t>::max();
  for (size_t i = 0; i < centroids_.size(); ++i) {
    const int64_t d = Dist2(c, centroids_[i]);
    if (d < best_d) {
      best_d = d;
      best = static_cast<int>(i);
    }
  }
  return best;
}

SoftEdgeMap::SoftEdgeMap(int width, int height, int k)
    : SoftEdgeMap(width, height, k,
                  std::vector<uint8_t>(static_cast<size_t>(width) * height,
                                       0)) {}

SoftEdgeMap::SoftEdgeMap(int width, int height, int k,
                         std::vector<uint8_t> labels)
    : width_(width), height_(height), k_(k), labels_(std::move(labels)) {
  if (width <= 0 || height <= 0) {
    throw ArgumentError("soft edge map dimensions must be positive");
  }
  if (k < kMinSymbols || k > kMaxSymbols) {
    throw ArgumentError("k must lie in [2, 256], got " + std::to_string(k));
  }
  if (labels_.size() != static_cast<size_t>(width) * height) {
    throw ArgumentError("label buffer size does not match dimensions");
  }
  for (uint8_t l : labels_) {
    if (l >= k) {
      throw ArgumentError("label " + std::to_string(l) +
                          " out of range for k=" + std::to_string(k));
    }
  }
}

Codebook FitCodebook(std::span<const Rgb> edge_colors, int k, uint64_t seed,
                     KMeansTrace* trace, const KMeansOptions& options) {
  if (k < kMinSymbols || k > kMaxSymbols) {
    throw ArgumentError("k must lie in [2, 256], got " + std::to_string(k));
  }
  const size_t clusters = static_cast<size_t>(k - 1);

  // Weighted distinct colors, in (R, G, B) order.
  std::map<Rgb, uint64_t> histogram;
  for (Rgb c : edge_colors) ++histogram[c];
  std::vector<Rgb> colors;
  std::vector<uint64_t> weights;
  colors.reserve(histogram.size());
  weights.reserve(histogram.size());
  for (const auto& [c, w] : histogram) {
    colors.push_back(c);
    weights.push_back(w);
  }
  if (colors.size() <= clusters) return Codebook(k, colors);

  // k-means++ seeding. Seeds are data points, so distances stay integral.
  std::mt19937_64 rng(seed);
  const uint64_t total_weight = edge_colors.size();
  std::vector<size_t> seeds = {WeightedPick(rng, weights, total_weight)};
  std::vector<uint64_t> nearest(colors.size());
  for (size_t i = 0; i < colors.size(); ++i) {
    nearest[i] = static_cast<uint64_t>(Dist2(colors[i], colors[seeds[0]]));
  }
  std::vector<uint64_t> scores(colors.size());
  while (seeds.size() < clusters) {
    uint64_t total = 0;
    for (size_t i = 0; i < colors.size(); ++i) {
      scores[i] = weights[i] * nearest[i];
      total += scores[i];
    }
    const size_t pick = WeightedPick(rng, scores, total);
    seeds.push_back(pick);
    for (size_t i = 0; i < colors.size(); ++i) {
      nearest[i] = std::min<uint64_t>(
          nearest[i], static_cast<uint64_t>(Dist2(colors[i], colors[pick])));
    }
  }

  std::vector<Point> centers;
  centers.reserve(clusters);
  for (size_t s : seeds) centers.push_back(ToPoint(colors[s]));

  std::vector<Point> points;
  points.reserve(colors.size());
  for (Rgb c : colors) points.push_back(ToPoint(c));

  std::vector<size_t> assignment(points.size());
  std::vector<double> dist(points.size());
  int iteration = 0;
  int reseeds = 0;
  for (; iteration < options.max_iterations; ++iteration) {
    double distortion = 0;
    for (size_t i = 0; i < points.size(); ++i) {
      size_t best = 0;
      double best_d = std::numeric_limits<double>::infinity();
      for (size_t c = 0; c < centers.size(); ++c) {
        const double d = Dist2(points[i], centers[c]);
        if (d < best_d) {
          best_d = d;
          best = c;
        }
      }
      assignment[i] = best;
      dist[i] = best_d;
      distortion += static_cast<double>(weights[i]) * best_d;
    }
    if (trace) trace->distortion.push_back(distortion);

    std::vector<Point> sums(centers.size(), Point{0, 0, 0});
    std::vector<uint64_t> mass(centers.size(), 0);
    for (size_t i = 0; i < points.size(); ++i) {
      const double w = static_cast<double>(weights[i]);
      for (int ch = 0; ch < 3; ++ch) {
        sums[assignment[i]][ch] += w * points[i][ch];
      }
      mass[assignment[i]] += weights[i];
    }

    double max_shift = 0;
    std::vector<Point> updated(centers.size());
    for (size_t c = 0; c < centers.size(); ++c) {
      if (mass[c] == 0) {
        // Re-seed at the point currently farthest from its centroid.
        size_t far = 0;
        for (size_t i = 1; i < points.size(); ++i) {
          if (dist[i] > dist[far]) far = i;
        }
        updated[c] = points[far];
        dist[far] = 0;
        ++reseeds;
      } else {
        const double m = static_cast<double>(mass[c]);
        updated[c] = {sums[c][0] / m, sums[c][1] / m, sums[c][2] / m};
      }
      max_shift = std::max(max_shift, std::sqrt(Dist2(updated[c], centers[c])));
    }
    centers = std::move(updated);
    if (max_shift < options.shift_tolerance) {
      ++iteration;
      break;
    }
  }
  if (trace) {
    trace->iterations = iteration;
    trace->reseeds = reseeds;
  }

  std::vector<Rgb> rounded;
  rounded.reserve(centers.size());
  for (const Point& p : centers) {
    rounded.push_back({RoundChannel(p[0]), RoundChannel(p[1]),
                       RoundChannel(p[2])});
  }
  return Codebook(k, std::move(rounded));
}

std::vector<Rgb> EdgeColors(const Frame& frame, const EdgeMap& edges) {
  if (frame.width() != edges.width() || frame.height() != edges.height()) {
    throw ArgumentError("frame and edge map dimensions differ");
  }
  std::vector<Rgb> colors;
  for (int y = 0; y < frame.height(); ++y) {
    for (int x = 0; x < frame.width(); ++x) {
      if (edges.at(x, y)) colors.push_back(frame.at(x, y));
    }
  }
  return colors;
}

SoftEdgeMap QuantizeSoftEdges(const Frame& frame, const EdgeMap& edges,
                              const Codebook& book) {
  if (frame.width() != edges.width() || frame.height() != edges.height()) {
    throw ArgumentError("frame is " + std::to_string(frame.width()) + "x" +
                        std::to_string(frame.height()) + " but edge map is " +
                        std::to_string(edges.width()) + "x" +
                        std::to_string(edges.height()));
  }
  if (book.effective_count() == 0 && edges.edge_count() > 0) {
    throw FormatError(
        "codebook has no centroids but the edge map marks edge pixels");
  }
  SoftEdgeMap map(frame.width(), frame.height(), book.k());
  auto labels = map.mutable_labels();
  for (int y = 0; y < frame.height(); ++y) {
    for (int x = 0; x < frame.width(); ++x) {
      if (!edges.at(x, y)) continue;
      labels[static_cast<size_t>(y) * frame.width() + x] =
          static_cast<uint8_t>(1 + book.Nearest(frame.at(x, y)));
    }
  }
  return map;
}

double LabelEntropy(const SoftEdgeMap& map) {
  std::array<uint64_t, 256> histogram{};
  for (uint8_t l : map.labels()) ++histogram[l];
  const double n = static_cast<double>(map.pixel_count());
  double h = 0;
  for (uint64_t count : histogram) {
    if (count == 0) continue;
    const double p = static_cast<double>(count) / n;
    h -= p * std::log2(p);
  }
  return h;
}

LumaPlane RenderGrayscale(const SoftEdgeMap& map, const Codebook& book) {
  LumaPlane out(map.width(), map.height());
  auto dst = out.mutable_values();
  auto labels = map.labels();
  for (size_t i = 0; i < labels.size(); ++i) {
    const int l = labels[i];
    if (l == 0) continue;
    if (l > book.effective_count()) {
      throw ArgumentError("label " + std::to_string(l) +
                          " has no centroid in a codebook of " +
                          std::to_string(book.effective_count()));
    }
    dst[i] = LumaOf(book.centroids()[l - 1]);
  }
  return out;
}

EdgeMap DetectFrameEdges(const Frame& downsampled,
                         CannyThresholds thresholds) {
  return DetectEdges(RgbToLuma(downsampled), thresholds);
}

}  // namespace sev
