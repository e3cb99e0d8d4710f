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

// The .sev bitstream and the two-stage encoder/decoder around it.
//
// Only the key-frame blob and the G-frame edge chunks are transmitted. Key
// frame soft edge maps are regenerated by the receiver from the decoded key
// frames using the palette and thresholds carried in the header, so the
// encoder derives everything from decoded (not original) key frames.
//
// Layout, little-endian:
//
//   "SEVC" | version:u8 = 1 | width:u16 | height:u16 | fps_num:u32 |
//   fps_den:u32 | frame_count:u32 | scale:u8 | k:u8 (0 = 256) |
//   effective_count:u8 | kmeans_seed:u64 | canny_low:u8 | canny_high:u8 |
//   key_codec_id:u8 | key_frame_count:u32 | key index deltas: LEB128 varints
//   (first is the index itself, i.e. 0) | palette: effective_count x RGB
//   key_payload_size:u32 | key payload
//   chunk_count:u32 | per chunk: size:u32, chunk bytes (see chunk.h)
//
// There is one chunk per key frame that is followed by at least one G-frame,
// in key-frame order.

#ifndef SEV_CONTAINER_H_
#define SEV_CONTAINER_H_

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "sev/canny.h"
#include "sev/chunk.h"
#include "sev/frame.h"
#include "sev/key_codec.h"
#include "sev/partition.h"
#include "sev/soft_edge.h"

namespace sev {

inline constexpr std::array<char, 4> kSevMagic = {'S', 'E', 'V', 'C'};
inline constexpr uint8_t kSevVersion = 1;

struct SevHeader {
  uint16_t width = 0;
  uint16_t height = 0;
  Rational fps;
  uint32_t frame_count = 0;
  uint8_t scale = 8;
  int k = 8;
  uint64_t kmeans_seed = 0;
  CannyThresholds canny;
  KeyCodecId key_codec = KeyCodecId::kRawPng;
  std::vector<uint32_t> key_indices;
  std::vector<Rgb> palette;

  int map_width() const;
  int map_height() const;
  Codebook codebook() const { return Codebook(k, palette); }

  friend bool operator==(const SevHeader&, const SevHeader&) = default;
};

struct SevFile {
  SevHeader header;
  std::vector<uint8_t> key_payload;
  std::vector<CompressedChunk> chunks;

  friend bool operator==(const SevFile&, const SevFile&) = default;
};

struct EncoderConfig {
  double alpha = 0.01;
  // Overrides alpha when non-empty.
  std::vector<uint32_t> key_indices;
  int scale = 8;
  int k = 8;
  CannyThresholds canny;
  uint64_t kmeans_seed = 0;
  int quality = 23;
};

// Intermediate products of EncodeVideo, kept for verification.
struct EncoderTap {
  std::vector<Frame> decoded_key_frames;
  std::vector<SoftEdgeMap> key_maps;
  std::vector<SoftEdgeMap> g_maps;
  std::vector<uint32_t> g_indices;
};

SevFile EncodeVideo(const VideoSequence& video, const EncoderConfig& config,
                    const KeyFrameCodec& codec, EncoderTap* tap = nullptr);

struct DecodedSev {
  std::vector<uint32_t> key_indices;
  std::vector<Frame> key_frames;
  std::vector<SoftEdgeMap> key_maps;
  std::vector<uint32_t> g_indices;
  std::vector<SoftEdgeMap> g_maps;
  Codebook codebook;
};

// Throws KeyCodecError if `codec` does not match the header, FormatError on
// header inconsistencies, CorruptStreamError (prefixed with the GOP index)
// on chunk damage.
DecodedSev DecodeSev(const SevFile& file, const KeyFrameCodec& codec);

std::vector<uint8_t> SerializeContainer(const SevFile& file);
SevFile ParseContainer(std::span<const uint8_t> bytes);

// Byte sizes of the serialized sections. header_bytes covers everything that
// is neither key payload nor chunk data (including length prefixes).
struct SectionSizes {
  uint64_t header_bytes = 0;
  uint64_t key_bytes = 0;
  uint64_t g_bytes = 0;
  uint64_t total() const { return header_bytes + key_bytes + g_bytes; }
};
SectionSizes ComputeSectionSizes(const SevFile& file);

struct BitrateReport {
  double kbps_total = 0;
  double kbps_key = 0;
  double kbps_g = 0;
  double kbps_header = 0;
  uint64_t bits_total = 0;
  uint64_t bits_key = 0;
  uint64_t bits_g = 0;
  uint64_t bits_header = 0;
  // key / (key + G); 1 when there is no G data.
  double key_share = 1.0;
};

// bits * fps / frame_count / 1000.
double BitrateKbps(uint64_t bits, uint32_t frame_count, Rational fps);
BitrateReport ComputeBitrate(const SevFile& file);

// Header fields as JSON text (pretty printed).
std::string HeaderToJson(const SevFile& file);

}  // namespace sev

#endif  // SEV_CONTAINER_H_
