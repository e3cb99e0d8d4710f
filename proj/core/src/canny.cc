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

#include "sev/canny.h"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "sev/errors.h"

namespace sev {
namespace {

// tan(22.5 deg) in Q15.
constexpr int64_t kTan22Q15 = 13573;

}  // namespace

size_t EdgeMap::edge_count() const {
  return static_cast<size_t>(std::count(mask_.begin(), mask_.end(), 1));
}

LumaPlane GaussianBlur5x5(const LumaPlane& luma) {
  const int w = luma.width();
  const int h = luma.height();
  LumaPlane out(w, h);
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      int acc = 0;
      for (int dy = -2; dy <= 2; ++dy) {
        const int sy = std::clamp(y + dy, 0, h - 1);
        for (int dx = -2; dx <= 2; ++dx) {
          const int sx = std::clamp(x + dx, 0, w - 1);
          acc += kGaussian5x5[(dy + 2) * 5 + (dx + 2)] * luma.at(sx, sy);
        }
      }
      out.set(x, y,
              static_cast<uint8_t>((acc + kGaussian5x5Sum / 2) /
                                   kGaussian5x5Sum));
    }
  }
  return out;
}

EdgeMap DetectEdges(const LumaPlane& luma, CannyThresholds thresholds) {
  if (thresholds.low >= thresholds.high) {
    throw ArgumentError("canny low threshold (" +
                        std::to_string(thresholds.low) +
                        ") must be below high threshold (" +
                        std::to_string(thresholds.high) + ")");
  }
  const int w = luma.width();
  const int h = luma.height();
  const LumaPlane blurred = GaussianBlur5x5(luma);

  const size_t n = static_cast<size_t>(w) * h;
  std::vector<int> gx(n), gy(n), mag2(n);
  auto px = [&](int x, int y) {
    return static_cast<int>(
        blurred.at(std::clamp(x, 0, w - 1), std::clamp(y, 0, h - 1)));
  };
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      const int dx = (px(x + 1, y - 1) + 2 * px(x + 1, y) + px(x + 1, y + 1)) -
                     (px(x - 1, y - 1) + 2 * px(x - 1, y) + px(x - 1, y + 1));
      const int dy = (px(x - 1, y + 1) + 2 * px(x, y + 1) + px(x + 1, y + 1)) -
                     (px(x - 1, y - 1) + 2 * px(x, y - 1) + px(x + 1, y - 1));
      const size_t i = static_cast<size_t>(y) * w + x;
      gx[i] = dx;
      gy[i] = dy;
      mag2[i] = dx * dx + dy * dy;
    }
  }

  auto mag_at = [&](int x, int y) {
    if (x < 0 || y < 0 || x >= w || y >= h) return 0;
    return mag2[static_cast<size_t>(y) * w + x];
  };

  const int low2 = static_cast<int>(thresholds.low) * thresholds.low;
  const int high2 = static_cast<int>(thresholds.high) * thresholds.high;

  // 0 = suppressed, 1 = weak candidate, 2 = strong.
  std::vector<uint8_t> klass(n, 0);
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      const size_t i = static_cast<size_t>(y) * w + x;
      const int m = mag2[i];
      if (m <= low2) continue;
      const int64_t ax = std::abs(gx[i]);
      const int64_t ay = std::abs(gy[i]);
      const int64_t ay_q15 = ay << 15;
      const int64_t tan22 = ax * kTan22Q15;
      int bx, by, fx, fy;  // backward and forward neighbours
      if (ay_q15 < tan22) {
        bx = x - 1, by = y, fx = x + 1, fy = y;
      } else if (ay_q15 > tan22 + (ax << 16)) {
        bx = x, by = y - 1, fx = x, fy = y + 1;
      } else {
        const int s = ((gx[i] < 0) != (gy[i] < 0)) ? -1 : 1;
        bx = x - s, by = y - 1, fx = x + s, fy = y + 1;
      }
      if (m > mag_at(bx, by) && m >= mag_at(fx, fy)) {
        klass[i] = m > high2 ? 2 : 1;
      }
    }
  }

  EdgeMap edges(w, h);
  std::vector<int> stack;
  for (size_t i = 0; i < n; ++i) {
    if (klass[i] == 2) stack.push_back(static_cast<int>(i));
  }
  while (!stack.empty()) {
    const int i = stack.back();
    stack.pop_back();
    const int x = i % w;
    const int y = i / w;
    if (edges.at(x, y)) continue;
    edges.set(x, y, true);
    for (int dy = -1; dy <= 1; ++dy) {
      for (int dx = -1; dx <= 1; ++dx) {
        const int nx = x + dx, ny = y + dy;
        if (nx < 0 || ny < 0 || nx >= w || ny >= h) continue;
        const int j = ny * w + nx;
        if (klass[j] != 0 && !edges.at(nx, ny)) stack.push_back(j);
      }
    }
  }
  return edges;
}

}  // namespace sev
