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

// Video ingestion: numbered PNG directories and 4:2:0 Y4M streams.

#ifndef SEV_VIDEO_IO_H_
#define SEV_VIDEO_IO_H_

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "sev/frame.h"

namespace sev {

// Loads either a directory of numbered PNG files (sorted by the numeric value
// of the file stem) or a single .y4m file. For Y4M input `fps` is ignored and
// the header rate is used.
VideoSequence LoadVideo(const std::filesystem::path& path, Rational fps);

// Parses a complete Y4M stream held in memory. Only 4:2:0 chroma (C420,
// C420jpeg, C420paldv, C420mpeg2 or no C tag) is accepted. YCbCr is treated
// as BT.601 full range; chroma is upsampled bilinearly assuming samples
// centred between luma pairs.
VideoSequence ParseY4m(std::span<const uint8_t> bytes);

// Converts one full-range BT.601 sample triple to RGB, rounding half-up.
Rgb YCbCrToRgb(double y, double cb, double cr);

Frame LoadPng(const std::filesystem::path& path);
void SavePng(const Frame& frame, const std::filesystem::path& path);
std::vector<uint8_t> EncodePng(const Frame& frame);
Frame DecodePng(std::span<const uint8_t> bytes);

// Writes frames[i] as dir/<indices[i]>.png, zero-padded to `digits`.
void SaveFrameSequence(const std::vector<Frame>& frames,
                       const std::vector<uint32_t>& indices,
                       const std::filesystem::path& dir, int digits = 6);

std::vector<uint8_t> ReadFileBytes(const std::filesystem::path& path);
void WriteFileBytes(const std::filesystem::path& path,
                    std::span<const uint8_t> bytes);

enum class ResizeMode {
  kStretch,     // scale each axis independently
  kCenterCrop,  // crop to the target aspect ratio, then scale
};

// Bilinear resampling to width x height.
Frame ResizeFrame(const Frame& frame, int width, int height, ResizeMode mode);
VideoSequence ResizeVideo(const VideoSequence& video, int width, int height,
                          ResizeMode mode);

}  // namespace sev

#endif  // SEV_VIDEO_IO_H_
