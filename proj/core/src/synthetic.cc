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

#include "sev/synthetic.h"

#include <algorithm>
#include <cmath>
#include <utility>

namespace sev {
namespace {

uint8_t Clamp8(int v) { return static_cast<uint8_t>(std::clamp(v, 0, 255)); }

}  // namespace

Frame MakeTexturedFrame(int width, int height, uint64_t seed) {
  std::mt19937_64 rng(seed);
  struct Blob {
    double cx, cy, radius;
    double r, g, b;
  };
  std::vector<Blob> blobs(4);
  for (Blob& blob : blobs) {
    blob.cx = UnitDouble(rng) * width;
    blob.cy = UnitDouble(rng) * height;
    blob.radius = (0.15 + 0.35 * UnitDouble(rng)) * std::min(width, height);
    blob.r = 255 * UnitDouble(rng) - 128;
    blob.g = 255 * UnitDouble(rng) - 128;
    blob.b = 255 * UnitDouble(rng) - 128;
  }
  Frame f(width, height);
  for (int y = 0; y < height; ++y) {
    for (int x = 0; x < width; ++x) {
      double r = 60 + 120.0 * x / width;
      double g = 80 + 100.0 * y / height;
      double b = 128;
      for (const Blob& blob : blobs) {
        const double dx = (x - blob.cx) / blob.radius;
        const double dy = (y - blob.cy) / blob.radius;
        const double w = std::exp(-(dx * dx + dy * dy));
        r += w * blob.r;
        g += w * blob.g;
        b += w * blob.b;
      }
      f.set(x, y,
            {Clamp8(static_cast<int>(std::lround(r))),
             Clamp8(static_cast<int>(std::lround(g))),
             Clamp8(static_cast<int>(std::lround(b)))});
    }
  }
  return f;
}

VideoSequence MakeMovingRectangleVideo(int width, int height, int frames,
                                       uint64_t seed, Rational fps) {
  std::mt19937_64 rng(seed);
  const Frame background = MakeTexturedFrame(width, height, seed ^ 0x5eedu);
  const Rgb color = {static_cast<uint8_t>(UniformBelow(rng, 256)),
                     static_cast<uint8_t>(UniformBelow(rng, 256)),
                     static_cast<uint8_t>(UniformBelow(rng, 256))};
  const Rgb border = {static_cast<uint8_t>(255 - color.r),
                      static_cast<uint8_t>(255 - color.g),
                      static_cast<uint8_t>(255 - color.b)};
  const int rect_w = std::max(4, width / 4);
  const int rect_h = std::max(4, height / 4);
  const int start_x = static_cast<int>(UniformBelow(rng, width / 2 + 1));
  const int start_y = static_cast<int>(UniformBelow(rng, height / 2 + 1));
  const int span_x = std::max(1, width - rect_w);
  const int span_y = std::max(1, height - rect_h);

  std::vector<Frame> out;
  out.reserve(frames);
  for (int t = 0; t < frames; ++t) {
    Frame f = background;
    // Bounce back and forth along both axes.
    auto bounce = [](int p, int span) {
      const int period = 2 * span;
      const int m = ((p % period) + period) % period;
      return m < span ? m : period - m;
    };
    const int x0 = bounce(start_x + 2 * t, span_x);
    const int y0 = bounce(start_y + t, span_y);
    for (int y = y0; y < std::min(height, y0 + rect_h); ++y) {
      for (int x = x0; x < std::min(width, x0 + rect_w); ++x) {
        const bool edge = y - y0 < 2 || x - x0 < 2 || y0 + rect_h - y <= 2 ||
                          x0 + rect_w - x <= 2;
        f.set(x, y, edge ? border : color);
      }
    }
    out.push_back(std::move(f));
  }
  return VideoSequence(std::move(out), fps);
}

std::vector<SoftEdgeMap> RandomLabelMaps(int width, int height, int frames,
                                         int k, double zero_density,
                                         uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<SoftEdgeMap> maps;
  maps.reserve(frames);
  for (int t = 0; t < frames; ++t) {
    std::vector<uint8_t> labels(static_cast<size_t>(width) * height);
    for (uint8_t& l : labels) {
      if (UnitDouble(rng) < zero_density) {
        l = 0;
      } else {
        l = static_cast<uint8_t>(1 + UniformBelow(rng, k - 1));
      }
    }
    maps.emplace_back(width, height, k, std::move(labels));
  }
  return maps;
}

Frame AddNoise(const Frame& frame, int amplitude, uint64_t seed) {
  std::mt19937_64 rng(seed);
  Frame out = frame;
  for (uint8_t& v : out.mutable_pixels()) {
    const double u = 2.0 * UnitDouble(rng) - 1.0;
    v = Clamp8(v + static_cast<int>(std::lround(amplitude * u)));
  }
  return out;
}

}  // namespace sev
