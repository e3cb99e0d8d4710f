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

// SEM: uncompressed soft edge maps plus palette, handed to the generative
// decoder. Layout, little-endian:
//
//   "SEM1" | width:u16 | height:u16 | k:u8 (0 = 256) | effective_count:u8 |
//   palette: effective_count x RGB | frame_count:u32 |
//   per frame: frame_index:u32, is_key:u8, width*height label bytes
//
// Entries are ordered by frame index.

#ifndef SEV_SEM_H_
#define SEV_SEM_H_

#include <cstdint>
#include <span>
#include <vector>

#include "sev/container.h"
#include "sev/soft_edge.h"

namespace sev {

struct SemEntry {
  uint32_t frame_index = 0;
  bool is_key = false;
  SoftEdgeMap map;

  friend bool operator==(const SemEntry&, const SemEntry&) = default;
};

struct SemFile {
  int width = 0;
  int height = 0;
  Codebook codebook;
  std::vector<SemEntry> entries;

  friend bool operator==(const SemFile&, const SemFile&) = default;
};

SemFile MakeSem(const DecodedSev& decoded);
std::vector<uint8_t> SerializeSem(const SemFile& sem);
SemFile ParseSem(std::span<const uint8_t> bytes);

}  // namespace sev

#endif  // SEV_SEM_H_
