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

// Integer-only Canny edge detector. Every stage is exact so that encoder and
// decoder produce identical edge maps on any platform:
//
//   1. 5x5 Gaussian (sigma 1.4) with the integer kernel below, sum 159,
//      rounded to 8 bits, replicated borders.
//   2. 3x3 Sobel gradients on the blurred plane, replicated borders.
//   3. Non-maximum suppression over four direction bins. Magnitudes are
//      compared squared; a pixel survives if it is strictly greater than its
//      backward neighbour and not smaller than its forward neighbour, so a
//      two-pixel plateau thins to one pixel.
//   4. Hysteresis: |g| > high seeds an edge, |g| > low extends it through
//      8-connected neighbours.

#ifndef SEV_CANNY_H_
#define SEV_CANNY_H_

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "sev/frame.h"

namespace sev {

inline constexpr std::array<int, 25> kGaussian5x5 = {
    2, 4,  5,  4,  2,  //
    4, 9,  12, 9,  4,  //
    5, 12, 15, 12, 5,  //
    4, 9,  12, 9,  4,  //
    2, 4,  5,  4,  2,
};
inline constexpr int kGaussian5x5Sum = 159;

struct CannyThresholds {
  uint8_t low = 50;
  uint8_t high = 150;

  friend bool operator==(const CannyThresholds&,
                         const CannyThresholds&) = default;
};

// Binary edge mask; 1 marks an edge pixel.
class EdgeMap {
 public:
  EdgeMap() = default;
  EdgeMap(int width, int height)
      : width_(width),
        height_(height),
        mask_(static_cast<size_t>(width) * height, 0) {}

  int width() const { return width_; }
  int height() const { return height_; }
  std::span<const uint8_t> mask() const { return mask_; }
  uint8_t at(int x, int y) const {
    return mask_[static_cast<size_t>(y) * width_ + x];
  }
  void set(int x, int y, bool edge) {
    mask_[static_cast<size_t>(y) * width_ + x] = edge ? 1 : 0;
  }
  size_t edge_count() const;

  friend bool operator==(const EdgeMap&, const EdgeMap&) = default;

 private:
  int width_ = 0;
  int height_ = 0;
  std::vector<uint8_t> mask_;
};

// Throws ArgumentError unless low < high.
EdgeMap DetectEdges(const LumaPlane& luma, CannyThresholds thresholds);

// Exposed for tests: the blurred plane from stage 1.
LumaPlane GaussianBlur5x5(const LumaPlane& luma);

}  // namespace sev

#endif  // SEV_CANNY_H_
