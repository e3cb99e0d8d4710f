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

#include "sev/sem.h"

#include <algorithm>
#include <string>

#include "sev/bit_io.h"
#include "sev/errors.h"

namespace sev {

SemFile MakeSem(const DecodedSev& decoded) {
  SemFile sem;
  sem.codebook = decoded.codebook;
  const SoftEdgeMap& any = !decoded.key_maps.empty() ? decoded.key_maps[0]
                                                     : decoded.g_maps.at(0);
  sem.width = any.width();
  sem.height = any.height();
  for (size_t i = 0; i < decoded.key_maps.size(); ++i) {
    sem.entries.push_back({decoded.key_indices[i], true, decoded.key_maps[i]});
  }
  for (size_t i = 0; i < decoded.g_maps.size(); ++i) {
    sem.entries.push_back({decoded.g_indices[i], false, decoded.g_maps[i]});
  }
  std::sort(sem.entries.begin(), sem.entries.end(),
            [](const SemEntry& a, const SemEntry& b) {
              return a.frame_index < b.frame_index;
            });
  return sem;
}

std::vector<uint8_t> SerializeSem(const SemFile& sem) {
  ByteWriter out;
  for (char c : {'S', 'E', 'M', '1'}) out.U8(static_cast<uint8_t>(c));
  out.U16(static_cast<uint16_t>(sem.width));
  out.U16(static_cast<uint16_t>(sem.height));
  out.U8(static_cast<uint8_t>(sem.codebook.k() & 0xFF));
  out.U8(static_cast<uint8_t>(sem.codebook.effective_count()));
  for (Rgb c : sem.codebook.centroids()) {
    out.U8(c.r);
    out.U8(c.g);
    out.U8(c.b);
  }
  out.U32(static_cast<uint32_t>(sem.entries.size()));
  for (const SemEntry& e : sem.entries) {
    if (e.map.width() != sem.width || e.map.height() != sem.height) {
      throw ArgumentError("SEM entry size differs from file size");
    }
    out.U32(e.frame_index);
    out.U8(e.is_key ? 1 : 0);
    out.Bytes(e.map.labels());
  }
  return out.Take();
}

SemFile ParseSem(std::span<const uint8_t> bytes) {
  ByteReader in(bytes, "sem");
  auto magic = in.Bytes(4);
  if (std::string(magic.begin(), magic.end()) != "SEM1") {
    throw FormatError("unsupported format: not a SEM1 file");
  }
  SemFile sem;
  sem.width = in.U16();
  sem.height = in.U16();
  if (sem.width == 0 || sem.height == 0) in.Fail("zero map dimension");
  const uint8_t k8 = in.U8();
  const int k = k8 == 0 ? 256 : k8;
  const uint8_t effective = in.U8();
  std::vector<Rgb> palette;
  for (int i = 0; i < effective; ++i) {
    Rgb c;
    c.r = in.U8();
    c.g = in.U8();
    c.b = in.U8();
    palette.push_back(c);
  }
  try {
    sem.codebook = Codebook(k, palette);
  } catch (const ArgumentError& e) {
    in.Fail(e.what());
  }
  if (sem.codebook.centroids() != palette) in.Fail("palette not canonical");
  const uint32_t count = in.U32();
  const size_t pixels = static_cast<size_t>(sem.width) * sem.height;
  for (uint32_t i = 0; i < count; ++i) {
    SemEntry e;
    e.frame_index = in.U32();
    const uint8_t key = in.U8();
    if (key > 1) in.Fail("is_key must be 0 or 1");
    e.is_key = key == 1;
    auto labels = in.Bytes(pixels);
    for (uint8_t l : labels) {
      if (l > effective) in.Fail("label without palette entry");
    }
    e.map = SoftEdgeMap(sem.width, sem.height, k,
                        std::vector<uint8_t>(labels.begin(), labels.end()));
    sem.entries.push_back(std::move(e));
  }
  if (in.remaining() != 0) in.Fail("trailing bytes");
  return sem;
}

}  // namespace sev
