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

// Lossless coding of a run of soft edge maps (one GOP).
//
// The maps are flattened in two orders: spatial (frame, row, column) and
// temporal (row, column, frame). Whichever yields fewer run tokens is kept,
// with ties going to spatial. Token labels and run lengths are then coded
// with two separate canonical Huffman tables.
//
// Serialized layout, little-endian:
//
//   scan_mode         u8      0 spatial, 1 temporal
//   frame_count       u32
//   k                 u8      symbol count; 0 encodes 256
//   label lengths     k x u8
//   run lengths       256 x u8  (index = run length, entry 0 unused)
//   payload_bit_count u64
//   payload           ceil(payload_bit_count / 8) bytes, MSB first,
//                     zero padded
//
// Each token is coded as its label code followed by its run code. Width and
// height are not stored; the container supplies them.

#ifndef SEV_CHUNK_H_
#define SEV_CHUNK_H_

#include <cstdint>
#include <span>
#include <vector>

#include "sev/huffman.h"
#include "sev/rle.h"
#include "sev/soft_edge.h"

namespace sev {

enum class ScanMode : uint8_t { kSpatial = 0, kTemporal = 1 };

inline constexpr int kRunAlphabetSize = 256;

struct CompressedChunk {
  ScanMode scan_mode = ScanMode::kSpatial;
  uint32_t frame_count = 0;
  int width = 0;
  int height = 0;
  int k = 2;
  std::vector<uint8_t> label_lengths;  // k entries
  std::vector<uint8_t> run_lengths;    // kRunAlphabetSize entries
  uint64_t payload_bit_count = 0;
  std::vector<uint8_t> payload;        // ceil(payload_bit_count / 8) bytes

  // Size of the serialized form.
  size_t byte_size() const;

  friend bool operator==(const CompressedChunk&,
                         const CompressedChunk&) = default;
};

// Flattening orders used by the two scan modes.
std::vector<uint8_t> SpatialScan(std::span<const SoftEdgeMap> maps);
std::vector<uint8_t> TemporalScan(std::span<const SoftEdgeMap> maps);

// Throws ArgumentError for an empty list or mismatched sizes / k.
CompressedChunk CompressChunk(std::span<const SoftEdgeMap> maps);

// Throws CorruptStreamError naming the failing check.
std::vector<SoftEdgeMap> DecompressChunk(const CompressedChunk& chunk);

std::vector<uint8_t> SerializeChunk(const CompressedChunk& chunk);

// Parses exactly `bytes` (no trailing data allowed) as a chunk of
// width x height maps.
CompressedChunk ParseChunk(std::span<const uint8_t> bytes, int width,
                           int height);

// Bits per pixel of the whole serialized chunk.
double ChunkBitsPerPixel(const CompressedChunk& chunk);

}  // namespace sev

#endif  // SEV_CHUNK_H_
