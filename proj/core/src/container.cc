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

#include "sev/container.h"

#include <algorithm>
#include <string>
#include <utility>

#include "json.hpp"
#include "sev/bit_io.h"
#include "sev/downsample.h"
#include "sev/errors.h"

namespace sev {
namespace {

constexpr size_t kFixedHeaderBytes =
    4 + 1 + 2 + 2 + 4 + 4 + 4 + 1 + 1 + 1 + 8 + 1 + 1 + 1 + 4;

size_t VarintSize(uint64_t v) {
  size_t n = 1;
  while (v >= 0x80) {
    v >>= 7;
    ++n;
  }
  return n;
}

void ValidateConfig(const VideoSequence& video, const EncoderConfig& config) {
  if (video.width() > 65535 || video.height() > 65535) {
    throw ArgumentError("frames larger than 65535 pixels per side");
  }
  if (video.size() > UINT32_MAX) throw ArgumentError("too many frames");
  if (config.scale < 1 || config.scale > 255) {
    throw ArgumentError("scale must lie in [1, 255], got " +
                        std::to_string(config.scale));
  }
  if (config.k < kMinSymbols || config.k > kMaxSymbols) {
    throw ArgumentError("k must lie in [2, 256], got " +
                        std::to_string(config.k));
  }
  if (config.canny.low >= config.canny.high) {
    throw ArgumentError("canny low threshold must be below high threshold");
  }
}

struct Reduced {
  Frame small;
  EdgeMap edges;
};

Reduced Reduce(const Frame& frame, int scale, CannyThresholds canny) {
  Frame small = Downsample(frame, scale);
  EdgeMap edges = DetectFrameEdges(small, canny);
  return {std::move(small), std::move(edges)};
}

}  // namespace

int SevHeader::map_width() const { return DownsampledExtent(width, scale); }
int SevHeader::map_height() const { return DownsampledExtent(height, scale); }

SevFile EncodeVideo(const VideoSequence& video, const EncoderConfig& config,
                    const KeyFrameCodec& codec, EncoderTap* tap) {
  ValidateConfig(video, config);
  const uint32_t n = static_cast<uint32_t>(video.size());
  const FramePartition partition =
      config.key_indices.empty()
          ? PartitionFrames(n, config.alpha)
          : PartitionFromKeyIndices(n, config.key_indices);

  // First stage, then its reconstruction: everything below derives from the
  // decoded key frames, exactly as the receiver will see them.
  std::vector<Frame> key_frames;
  key_frames.reserve(partition.key_indices.size());
  for (uint32_t i : partition.key_indices) key_frames.push_back(video.frame(i));
  std::vector<uint8_t> key_payload = codec.Encode(key_frames, config.quality);
  std::vector<Frame> decoded = codec.Decode(key_payload);
  if (decoded.size() != key_frames.size()) {
    throw KeyCodecError("key codec returned " + std::to_string(decoded.size()) +
                        " frames for " + std::to_string(key_frames.size()));
  }
  for (const Frame& f : decoded) {
    if (f.width() != video.width() || f.height() != video.height()) {
      throw KeyCodecError("key codec changed the frame size");
    }
  }

  std::vector<Reduced> key_reduced;
  key_reduced.reserve(decoded.size());
  std::vector<Rgb> colors;
  for (const Frame& f : decoded) {
    key_reduced.push_back(Reduce(f, config.scale, config.canny));
    const auto c = EdgeColors(key_reduced.back().small,
                              key_reduced.back().edges);
    colors.insert(colors.end(), c.begin(), c.end());
  }

  std::vector<Reduced> g_reduced;
  g_reduced.reserve(partition.g_indices.size());
  for (uint32_t i : partition.g_indices) {
    g_reduced.push_back(Reduce(video.frame(i), config.scale, config.canny));
  }
  if (colors.empty()) {
    // Key frames carry no edges at all; the palette travels in the header, so
    // fitting it on G-frame edges keeps both sides consistent.
    for (const Reduced& r : g_reduced) {
      const auto c = EdgeColors(r.small, r.edges);
      colors.insert(colors.end(), c.begin(), c.end());
    }
  }
  const Codebook book = FitCodebook(colors, config.k, config.kmeans_seed);

  std::vector<SoftEdgeMap> g_maps;
  g_maps.reserve(g_reduced.size());
  for (const Reduced& r : g_reduced) {
    g_maps.push_back(QuantizeSoftEdges(r.small, r.edges, book));
  }

  SevFile file;
  SevHeader& h = file.header;
  h.width = static_cast<uint16_t>(video.width());
  h.height = static_cast<uint16_t>(video.height());
  h.fps = video.fps();
  h.frame_count = n;
  h.scale = static_cast<uint8_t>(config.scale);
  h.k = config.k;
  h.kmeans_seed = config.kmeans_seed;
  h.canny = config.canny;
  h.key_codec = codec.id();
  h.key_indices = partition.key_indices;
  h.palette = book.centroids();
  file.key_payload = std::move(key_payload);

  size_t next = 0;
  for (const auto& group : GroupsOfPictures(partition)) {
    if (group.empty()) continue;
    std::span<const SoftEdgeMap> maps(g_maps.data() + next, group.size());
    file.chunks.push_back(CompressChunk(maps));
    next += group.size();
  }

  if (tap) {
    tap->key_maps.clear();
    for (const Reduced& r : key_reduced) {
      tap->key_maps.push_back(QuantizeSoftEdges(r.small, r.edges, book));
    }
    tap->decoded_key_frames = std::move(decoded);
    tap->g_maps = std::move(g_maps);
    tap->g_indices = partition.g_indices;
  }
  return file;
}

DecodedSev DecodeSev(const SevFile& file, const KeyFrameCodec& codec) {
  const SevHeader& h = file.header;
  if (codec.id() != h.key_codec) {
    throw KeyCodecError("stream uses key codec " +
                        std::to_string(static_cast<int>(h.key_codec)) +
                        ", decoder was given " +
                        std::to_string(static_cast<int>(codec.id())));
  }
  if (h.scale == 0) throw FormatError("scale is zero");
  if (h.canny.low >= h.canny.high) {
    throw FormatError("canny thresholds out of order");
  }

  DecodedSev out;
  try {
    out.codebook = h.codebook();
  } catch (const ArgumentError& e) {
    throw FormatError(std::string("palette inconsistent with k: ") + e.what());
  }
  if (out.codebook.centroids() != h.palette) {
    throw FormatError("palette is not in canonical order");
  }
  FramePartition partition;
  try {
    partition = PartitionFromKeyIndices(h.frame_count, h.key_indices);
  } catch (const ArgumentError& e) {
    throw FormatError(std::string("bad key frame list: ") + e.what());
  }

  out.key_indices = partition.key_indices;
  out.key_frames = codec.Decode(file.key_payload);
  if (out.key_frames.size() != out.key_indices.size()) {
    throw KeyCodecError("key payload holds " +
                        std::to_string(out.key_frames.size()) +
                        " frames, header lists " +
                        std::to_string(out.key_indices.size()));
  }
  for (const Frame& f : out.key_frames) {
    if (f.width() != h.width || f.height() != h.height) {
      throw KeyCodecError("decoded key frame size differs from header");
    }
  }

  // Regenerate the key-frame maps with the transmitted palette.
  for (const Frame& f : out.key_frames) {
    const Reduced r = Reduce(f, h.scale, h.canny);
    try {
      out.key_maps.push_back(QuantizeSoftEdges(r.small, r.edges,
                                               out.codebook));
    } catch (const FormatError& e) {
      throw FormatError(std::string("header palette cannot label key frame "
                                    "edges: ") + e.what());
    }
  }

  const auto groups = GroupsOfPictures(partition);
  size_t chunk = 0;
  for (size_t gop = 0; gop < groups.size(); ++gop) {
    if (groups[gop].empty()) continue;
    const std::string where = "GOP " + std::to_string(gop);
    if (chunk >= file.chunks.size()) {
      throw FormatError(where + ": missing edge chunk");
    }
    std::vector<SoftEdgeMap> maps;
    try {
      maps = DecompressChunk(file.chunks[chunk]);
    } catch (const CorruptStreamError& e) {
      throw CorruptStreamError(where + ": " + e.what());
    }
    if (maps.size() != groups[gop].size()) {
      throw CorruptStreamError(where + ": chunk holds " +
                               std::to_string(maps.size()) + " frames, GOP has " +
                               std::to_string(groups[gop].size()));
    }
    for (SoftEdgeMap& m : maps) {
      if (m.width() != h.map_width() || m.height() != h.map_height() ||
          m.k() != h.k) {
        throw CorruptStreamError(where + ": map geometry or k differs from "
                                 "header");
      }
      for (uint8_t l : m.labels()) {
        if (l > out.codebook.effective_count()) {
          throw FormatError(where + ": label " + std::to_string(l) +
                            " has no palette entry");
        }
      }
      out.g_maps.push_back(std::move(m));
    }
    out.g_indices.insert(out.g_indices.end(), groups[gop].begin(),
                         groups[gop].end());
    ++chunk;
  }
  if (chunk != file.chunks.size()) {
    throw FormatError(std::to_string(file.chunks.size() - chunk) +
                      " surplus edge chunks");
  }
  return out;
}

std::vector<uint8_t> SerializeContainer(const SevFile& file) {
  const SevHeader& h = file.header;
  ByteWriter out;
  for (char c : kSevMagic) out.U8(static_cast<uint8_t>(c));
  out.U8(kSevVersion);
  out.U16(h.width);
  out.U16(h.height);
  out.U32(h.fps.num);
  out.U32(h.fps.den);
  out.U32(h.frame_count);
  out.U8(h.scale);
  out.U8(static_cast<uint8_t>(h.k & 0xFF));
  out.U8(static_cast<uint8_t>(h.palette.size()));
  out.U64(h.kmeans_seed);
  out.U8(h.canny.low);
  out.U8(h.canny.high);
  out.U8(static_cast<uint8_t>(h.key_codec));
  out.U32(static_cast<uint32_t>(h.key_indices.size()));
  uint32_t prev = 0;
  for (size_t i = 0; i < h.key_indices.size(); ++i) {
    out.Varint(i == 0 ? h.key_indices[0] : h.key_indices[i] - prev);
    prev = h.key_indices[i];
  }
  for (Rgb c : h.palette) {
    out.U8(c.r);
    out.U8(c.g);
    out.U8(c.b);
  }
  out.U32(static_cast<uint32_t>(file.key_payload.size()));
  out.Bytes(file.key_payload);
  out.U32(static_cast<uint32_t>(file.chunks.size()));
  for (const CompressedChunk& c : file.chunks) {
    const std::vector<uint8_t> bytes = SerializeChunk(c);
    out.U32(static_cast<uint32_t>(bytes.size()));
    out.Bytes(bytes);
  }
  return out.Take();
}

SevFile ParseContainer(std::span<const uint8_t> bytes) {
  ByteReader in(bytes, "sev header");
  SevFile file;
  SevHeader& h = file.header;

  auto magic = in.Bytes(4);
  if (!std::equal(magic.begin(), magic.end(), kSevMagic.begin())) {
    throw FormatError("unsupported format: bad magic, not a .sev stream");
  }
  const uint8_t version = in.U8();
  if (version != kSevVersion) {
    throw FormatError("unsupported version " + std::to_string(version));
  }
  h.width = in.U16();
  h.height = in.U16();
  if (h.width == 0 || h.height == 0) in.Fail("zero frame dimension");
  h.fps.num = in.U32();
  h.fps.den = in.U32();
  if (h.fps.num == 0 || h.fps.den == 0) in.Fail("zero frame rate");
  h.frame_count = in.U32();
  if (h.frame_count == 0) in.Fail("zero frame count");
  h.scale = in.U8();
  if (h.scale == 0) in.Fail("zero scale");
  const uint8_t k = in.U8();
  h.k = k == 0 ? 256 : k;
  const uint8_t effective = in.U8();
  if (effective > h.k - 1) in.Fail("palette larger than k-1");
  h.kmeans_seed = in.U64();
  h.canny.low = in.U8();
  h.canny.high = in.U8();
  if (h.canny.low >= h.canny.high) in.Fail("canny thresholds out of order");
  const uint8_t codec = in.U8();
  if (codec > 1) in.Fail("unknown key codec id " + std::to_string(codec));
  h.key_codec = static_cast<KeyCodecId>(codec);

  const uint32_t key_count = in.U32();
  if (key_count == 0 || key_count > h.frame_count) {
    in.Fail("key frame count out of range");
  }
  h.key_indices.reserve(key_count);
  uint64_t index = 0;
  for (uint32_t i = 0; i < key_count; ++i) {
    const uint64_t delta = in.Varint();
    if (i == 0 && delta != 0) in.Fail("first key frame must be frame 0");
    if (i > 0 && delta == 0) in.Fail("key frame indices not increasing");
    index += delta;
    if (index >= h.frame_count) in.Fail("key frame index past last frame");
    h.key_indices.push_back(static_cast<uint32_t>(index));
  }
  for (uint8_t i = 0; i < effective; ++i) {
    Rgb c;
    c.r = in.U8();
    c.g = in.U8();
    c.b = in.U8();
    h.palette.push_back(c);
  }
  if (Codebook(h.k, h.palette).centroids() != h.palette) {
    in.Fail("palette not in canonical order");
  }

  const uint32_t key_size = in.U32();
  auto key = in.Bytes(key_size);
  file.key_payload.assign(key.begin(), key.end());

  const uint32_t chunk_count = in.U32();
  for (uint32_t i = 0; i < chunk_count; ++i) {
    const uint32_t size = in.U32();
    auto chunk = in.Bytes(size);
    try {
      file.chunks.push_back(ParseChunk(chunk, h.map_width(), h.map_height()));
    } catch (const CorruptStreamError& e) {
      throw CorruptStreamError("edge chunk " + std::to_string(i) + ": " +
                               e.what());
    }
  }
  if (in.remaining() != 0) in.Fail("trailing bytes after last chunk");
  return file;
}

SectionSizes ComputeSectionSizes(const SevFile& file) {
  SectionSizes s;
  s.header_bytes = kFixedHeaderBytes + 3 * file.header.palette.size() + 4 +
                   4 + 4 * file.chunks.size();
  uint32_t prev = 0;
  for (size_t i = 0; i < file.header.key_indices.size(); ++i) {
    const uint32_t idx = file.header.key_indices[i];
    s.header_bytes += VarintSize(i == 0 ? idx : idx - prev);
    prev = idx;
  }
  s.key_bytes = file.key_payload.size();
  for (const CompressedChunk& c : file.chunks) s.g_bytes += c.byte_size();
  return s;
}

double BitrateKbps(uint64_t bits, uint32_t frame_count, Rational fps) {
  if (frame_count == 0) return 0;
  return static_cast<double>(bits) * fps.num /
         (static_cast<double>(fps.den) * frame_count * 1000.0);
}

BitrateReport ComputeBitrate(const SevFile& file) {
  const SectionSizes s = ComputeSectionSizes(file);
  const uint32_t n = file.header.frame_count;
  const Rational fps = file.header.fps;
  BitrateReport r;
  r.bits_header = 8 * s.header_bytes;
  r.bits_key = 8 * s.key_bytes;
  r.bits_g = 8 * s.g_bytes;
  r.bits_total = 8 * s.total();
  r.kbps_total = BitrateKbps(r.bits_total, n, fps);
  r.kbps_key = BitrateKbps(r.bits_key, n, fps);
  r.kbps_g = BitrateKbps(r.bits_g, n, fps);
  r.kbps_header = BitrateKbps(r.bits_header, n, fps);
  const uint64_t payload = r.bits_key + r.bits_g;
  r.key_share = payload == 0 ? 1.0
                             : static_cast<double>(r.bits_key) / payload;
  return r;
}

std::string HeaderToJson(const SevFile& file) {
  const SevHeader& h = file.header;
  nlohmann::ordered_json j;
  j["magic"] = "SEVC";
  j["version"] = kSevVersion;
  j["width"] = h.width;
  j["height"] = h.height;
  j["fps"] = {{"num", h.fps.num}, {"den", h.fps.den}};
  j["frame_count"] = h.frame_count;
  j["scale"] = h.scale;
  j["map_width"] = h.map_width();
  j["map_height"] = h.map_height();
  j["k"] = h.k;
  j["effective_count"] = h.palette.size();
  j["kmeans_seed"] = h.kmeans_seed;
  j["canny_low"] = h.canny.low;
  j["canny_high"] = h.canny.high;
  j["key_codec"] = h.key_codec == KeyCodecId::kRawPng ? "raw" : "ext";
  j["key_frame_count"] = h.key_indices.size();
  j["key_indices"] = h.key_indices;
  auto palette = nlohmann::ordered_json::array();
  for (Rgb c : h.palette) palette.push_back({c.r, c.g, c.b});
  j["palette"] = palette;
  j["chunk_count"] = file.chunks.size();
  const BitrateReport r = ComputeBitrate(file);
  j["bits"] = {{"total", r.bits_total},
               {"header", r.bits_header},
               {"key", r.bits_key},
               {"g", r.bits_g}};
  j["kbps"] = {{"total", r.kbps_total}, {"key", r.kbps_key}, {"g", r.kbps_g}};
  return j.dump(2);
}

}  // namespace sev
