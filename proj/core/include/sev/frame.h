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

// Core raster types shared by every stage of the codec.

#ifndef SEV_FRAME_H_
#define SEV_FRAME_H_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace sev {

struct Rgb {
  uint8_t r = 0;
  uint8_t g = 0;
  uint8_t b = 0;

  friend auto operator<=>(const Rgb&, const Rgb&) = default;
};

// 1000 * BT.601 luminance, exact in integers.
constexpr uint32_t WeightedLuma(Rgb c) {
  return 299u * c.r + 587u * c.g + 114u * c.b;
}

// round(0.299R + 0.587G + 0.114B), half-up. Never exceeds 255 because the
// weights sum to one.
constexpr uint8_t LumaOf(Rgb c) {
  return static_cast<uint8_t>((WeightedLuma(c) + 500u) / 1000u);
}

// Interleaved 8-bit RGB raster, row-major.
class Frame {
 public:
  Frame() = default;
  Frame(int width, int height);  // zero-filled
  Frame(int width, int height, std::vector<uint8_t> pixels);

  int width() const { return width_; }
  int height() const { return height_; }
  bool empty() const { return pixels_.empty(); }

  std::span<const uint8_t> pixels() const { return pixels_; }
  std::span<uint8_t> mutable_pixels() { return pixels_; }

  Rgb at(int x, int y) const {
    const uint8_t* p = &pixels_[3 * (static_cast<size_t>(y) * width_ + x)];
    return {p[0], p[1], p[2]};
  }
  void set(int x, int y, Rgb c) {
    uint8_t* p = &pixels_[3 * (static_cast<size_t>(y) * width_ + x)];
    p[0] = c.r;
    p[1] = c.g;
    p[2] = c.b;
  }

  friend bool operator==(const Frame&, const Frame&) = default;

 private:
  int width_ = 0;
  int height_ = 0;
  std::vector<uint8_t> pixels_;
};

// Single-channel 8-bit plane.
class LumaPlane {
 public:
  LumaPlane() = default;
  LumaPlane(int width, int height);
  LumaPlane(int width, int height, std::vector<uint8_t> values);

  int width() const { return width_; }
  int height() const { return height_; }
  std::span<const uint8_t> values() const { return values_; }
  std::span<uint8_t> mutable_values() { return values_; }

  uint8_t at(int x, int y) const {
    return values_[static_cast<size_t>(y) * width_ + x];
  }
  void set(int x, int y, uint8_t v) {
    values_[static_cast<size_t>(y) * width_ + x] = v;
  }

  friend bool operator==(const LumaPlane&, const LumaPlane&) = default;

 private:
  int width_ = 0;
  int height_ = 0;
  std::vector<uint8_t> values_;
};

struct Rational {
  uint32_t num = 25;
  uint32_t den = 1;

  double value() const { return static_cast<double>(num) / den; }
  friend bool operator==(const Rational&, const Rational&) = default;
};

// Frames sharing one size, plus a positive frame rate. At least one frame.
class VideoSequence {
 public:
  VideoSequence(std::vector<Frame> frames, Rational fps);

  const std::vector<Frame>& frames() const { return frames_; }
  const Frame& frame(size_t i) const { return frames_[i]; }
  size_t size() const { return frames_.size(); }
  int width() const { return frames_.front().width(); }
  int height() const { return frames_.front().height(); }
  Rational fps() const { return fps_; }

 private:
  std::vector<Frame> frames_;
  Rational fps_;
};

LumaPlane RgbToLuma(const Frame& frame);

}  // namespace sev

#endif  // SEV_FRAME_H_
