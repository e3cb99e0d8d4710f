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

#include "sev/frame.h"

#include <string>
#include <utility>

#include "sev/errors.h"

namespace sev {
namespace {

void CheckExtent(int width, int height) {
  if (width <= 0 || height <= 0) {
    throw ArgumentError("raster dimensions must be positive, got " +
                        std::to_string(width) + "x" + std::to_string(height));
  }
}

}  // namespace

Frame::Frame(int width, int height)
    : width_(width), height_(height) {
  CheckExtent(width, height);
  pixels_.assign(static_cast<size_t>(width) * height * 3, 0);
}

Frame::Frame(int width, int height, std::vector<uint8_t> pixels)
    : width_(width), height_(height), pixels_(std::move(pixels)) {
  CheckExtent(width, height);
  if (pixels_.size() != static_cast<size_t>(width) * height * 3) {
    throw ArgumentError("frame buffer holds " + std::to_string(pixels_.size()) +
                        " samples, expected " +
                        std::to_string(static_cast<size_t>(width) * height * 3));
  }
}

LumaPlane::LumaPlane(int width, int height) : width_(width), height_(height) {
  CheckExtent(width, height);
  values_.assign(static_cast<size_t>(width) * height, 0);
}

LumaPlane::LumaPlane(int width, int height, std::vector<uint8_t> values)
    : width_(width), height_(height), values_(std::move(values)) {
  CheckExtent(width, height);
  if (values_.size() != static_cast<size_t>(width) * height) {
    throw ArgumentError("luma buffer size does not match dimensions");
  }
}

VideoSequence::VideoSequence(std::vector<Frame> frames, Rational fps)
    : frames_(std::move(frames)), fps_(fps) {
  if (frames_.empty()) throw ArgumentError("video has no frames");
  if (fps_.num == 0 || fps_.den == 0) {
    throw ArgumentError("frame rate must be positive");
  }
  for (size_t i = 1; i < frames_.size(); ++i) {
    if (frames_[i].width() != frames_[0].width() ||
        frames_[i].height() != frames_[0].height()) {
      throw ArgumentError("frame " + std::to_string(i) + " is " +
                          std::to_string(frames_[i].width()) + "x" +
                          std::to_string(frames_[i].height()) +
                          ", expected " + std::to_string(frames_[0].width()) +
                          "x" + std::to_string(frames_[0].height()));
    }
  }
}

LumaPlane RgbToLuma(const Frame& frame) {
  LumaPlane out(frame.width(), frame.height());
  auto src = frame.pixels();
  auto dst = out.mutable_values();
  for (size_t i = 0; i < dst.size(); ++i) {
    dst[i] = LumaOf({src[3 * i], src[3 * i + 1], src[3 * i + 2]});
  }
  return out;
}

}  // namespace sev
