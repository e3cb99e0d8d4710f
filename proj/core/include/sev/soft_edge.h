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

// Soft edge maps: edge pixels of a (downsampled) frame, vector-quantized
// against a palette of k-1 colors. Label 0 is reserved for non-edge pixels.

#ifndef SEV_SOFT_EDGE_H_
#define SEV_SOFT_EDGE_H_

#include <cstdint>
#include <span>
#include <vector>

#include "sev/canny.h"
#include "sev/frame.h"

namespace sev {

inline constexpr int kMinSymbols = 2;
inline constexpr int kMaxSymbols = 256;

// Palette for a k-symbol soft edge map. Holds at most k-1 centroids, sorted by
// BT.601 luminance and then (R, G, B).
class Codebook {
 public:
  Codebook() = default;
  // Validates k and the centroid count; sorts and deduplicates centroids.
  Codebook(int k, std::vector<Rgb> centroids);

  int k() const { return k_; }
  int effective_count() const { return static_cast<int>(centroids_.size()); }
  const std::vector<Rgb>& centroids() const { return centroids_; }

  // Index of the nearest centroid (squared RGB distance, lowest index on
  // ties). Requires effective_count() > 0.
  int Nearest(Rgb c) const;

  friend bool operator==(const Codebook&, const Codebook&) = default;

 private:
  int k_ = 2;
  std::vector<Rgb> centroids_;
};

class SoftEdgeMap {
 public:
  SoftEdgeMap() = default;
  SoftEdgeMap(int width, int height, int k);
  SoftEdgeMap(int width, int height, int k, std::vector<uint8_t> labels);

  int width() const { return width_; }
  int height() const { return height_; }
  int k() const { return k_; }
  size_t pixel_count() const { return labels_.size(); }
  std::span<const uint8_t> labels() const { return labels_; }
  std::span<uint8_t> mutable_labels() { return labels_; }
  uint8_t at(int x, int y) const {
    return labels_[static_cast<size_t>(y) * width_ + x];
  }

  friend bool operator==(const SoftEdgeMap&, const SoftEdgeMap&) = default;

 private:
  int width_ = 0;
  int height_ = 0;
  int k_ = 2;
  std::vector<uint8_t> labels_;
};

// Per-iteration record of a k-means run, for tests and diagnostics.
struct KMeansTrace {
  // Total within-cluster squared distance after each assignment step.
  std::vector<double> distortion;
  int iterations = 0;
  int reseeds = 0;
};

struct KMeansOptions {
  int max_iterations = 50;
  double shift_tolerance = 0.5;
};

// Clusters the edge colors into k-1 groups with seeded k-means++ and Lloyd
// iterations. Fewer distinct colors than k-1 yields one centroid per color.
Codebook FitCodebook(std::span<const Rgb> edge_colors, int k, uint64_t seed,
                     KMeansTrace* trace = nullptr,
                     const KMeansOptions& options = {});

// Colors of the pixels marked in `edges`, in raster order.
std::vector<Rgb> EdgeColors(const Frame& frame, const EdgeMap& edges);

// Non-edge pixels get label 0; edge pixels get 1 + nearest centroid index.
SoftEdgeMap QuantizeSoftEdges(const Frame& frame, const EdgeMap& edges,
                              const Codebook& book);

// Shannon entropy of the label histogram in bits per symbol.
double LabelEntropy(const SoftEdgeMap& map);

// Label 0 renders black, label l renders the luminance of centroid l-1.
LumaPlane RenderGrayscale(const SoftEdgeMap& map, const Codebook& book);

// Downsampled frame -> luma -> Canny. Shared by encoder and decoder.
EdgeMap DetectFrameEdges(const Frame& downsampled, CannyThresholds thresholds);

}  // namespace sev

#endif  // SEV_SOFT_EDGE_H_
