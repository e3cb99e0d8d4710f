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

#include "sev/downsample.h"

#include <algorithm>
#include <cstdint>
#include <string>

#include "sev/errors.h"

namespace sev {

Frame Downsample(const Frame& frame, int scale) {
  if (scale < 1) {
    throw ArgumentError("scale factor must be >= 1, got " +
                        std::to_string(scale));
  }
  if (scale == 1) return frame;

  const int out_w = DownsampledExtent(frame.width(), scale);
  const int out_h = DownsampledExtent(frame.height(), scale);
  const uint32_t area = static_cast<uint32_t>(scale) * scale;
  Frame out(out_w, out_h);
  auto src = frame.pixels();
  auto dst = out.mutable_pixels();

  for (int oy = 0; oy < out_h; ++oy) {
    for (int ox = 0; ox < out_w; ++ox) {
      uint32_t sum[3] = {0, 0, 0};
      for (int dy = 0; dy < scale; ++dy) {
        const int y = std::min(oy * scale + dy, frame.height() - 1);
        const uint8_t* row = &src[3 * static_cast<size_t>(y) * frame.width()];
        for (int dx = 0; dx < scale; ++dx) {
          const int x = std::min(ox * scale + dx, frame.width() - 1);
          sum[0] += row[3 * x];
          sum[1] += row[3 * x + 1];
          sum[2] += row[3 * x + 2];
        }
      }
      uint8_t* o = &dst[3 * (static_cast<size_t>(oy) * out_w + ox)];
      for (int c = 0; c < 3; ++c) {
        o[c] = static_cast<uint8_t>((sum[c] + area / 2) / area);
      }
    }
  }
  return out;
}

}  // namespace sev
