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

#include <gtest/gtest.h>

#include "json.hpp"
#include "sev/errors.h"
#include "sev/synthetic.h"

namespace sev {
namespace {

SevFile HandFile() {
  SevFile f;
  SevHeader& h = f.header;
  h.width = 10;
  h.height = 6;
  h.fps = {25, 1};
  h.frame_count = 200;
  h.scale = 4;
  h.k = 4;
  h.kmeans_seed = 0x0102030405060708ull;
  h.canny = {20, 60};
  h.key_codec = KeyCodecId::kRawPng;
  h.key_indices = {0, 130};
  h.palette = {{10, 20, 30}, {200, 100, 50}};
  f.key_payload = {0xAA, 0xBB};
  return f;
}

const std::vector<uint8_t> kHandBytes = {
    'S', 'E', 'V', 'C',                              // magic
    0x01,                                            // version
    0x0A, 0x00, 0x06, 0x00,                          // 10 x 6
    0x19, 0x00, 0x00, 0x00, 0x01, 0x00, 0x00, 0x00,  // 25/1 fps
    0xC8, 0x00, 0x00, 0x00,                          // 200 frames
    0x04, 0x04, 0x02,                                // scale, k, palette size
    0x08, 0x07, 0x06, 0x05, 0x04, 0x03, 0x02, 0x01,  // seed
    0x14, 0x3C,                                      // canny 20 / 60
    0x00,                                            // raw key codec
    0x02, 0x00, 0x00, 0x00,                          // two key frames
    0x00, 0x82, 0x01,                                // deltas 0, 130
    0x0A, 0x14, 0x1E, 0xC8, 0x64, 0x32,              // palette
    0x02, 0x00, 0x00, 0x00, 0xAA, 0xBB,              // key payload
    0x00, 0x00, 0x00, 0x00,                          // no chunks
};

TEST(ContainerTest, GoldenHeaderBytes) {
  EXPECT_EQ(SerializeContainer(HandFile()), kHandBytes);
  EXPECT_EQ(ParseContainer(kHandBytes), HandFile());
}

TEST(ContainerTest, SectionSizesOfHandFile) {
  const SectionSizes s = ComputeSectionSizes(HandFile());
  EXPECT_EQ(s.key_bytes, 2u);
  EXPECT_EQ(s.g_bytes, 0u);
  EXPECT_EQ(s.header_bytes, 56u);
  EXPECT_EQ(s.total(), kHandBytes.size());
}

template <typename E>
void ExpectParseError(std::vector<uint8_t> bytes, const std::string& needle) {
  try {
    ParseContainer(bytes);
    FAIL() << "expected failure containing '" << needle << "'";
  } catch (const E& e) {
    EXPECT_NE(std::string(e.what()).find(needle), std::string::npos)
        << e.what();
  }
}

TEST(ContainerTest, RejectsBadMagicAndVersion) {
  std::vector<uint8_t> b = kHandBytes;
  b[0] = b[1] = b[2] = b[3] = 'X';
  ExpectParseError<FormatError>(b, "unsupported format");
  b = kHandBytes;
  b[4] = 2;
  ExpectParseError<FormatError>(b, "unsupported version 2");
  ExpectParseError<FormatError>({}, "");
}

TEST(ContainerTest, RejectsEveryTruncation) {
  for (size_t n = 0; n < kHandBytes.size(); ++n) {
    std::vector<uint8_t> b(kHandBytes.begin(), kHandBytes.begin() + n);
    EXPECT_THROW(ParseContainer(b), FormatError) << n;
  }
}

TEST(ContainerTest, RejectsTrailingBytes) {
  std::vector<uint8_t> b = kHandBytes;
  b.push_back(0);
  ExpectParseError<FormatError>(b, "trailing");
}

TEST(ContainerTest, RejectsBadKeyLists) {
  std::vector<uint8_t> b = kHandBytes;
  b[39] = 0x05;  // first index must be 0
  ExpectParseError<FormatError>(b, "frame 0");
  b = kHandBytes;
  b[40] = 0x00;  // zero delta
  b[41] = 0x00;
  b.erase(b.begin() + 41);
  ExpectParseError<FormatError>(b, "not increasing");
  b = kHandBytes;
  b[40] = 0xC8;  // 0 + 200 * ... past the last frame
  ExpectParseError<FormatError>(b, "past last frame");
}

TEST(ContainerTest, RejectsInconsistentFields) {
  std::vector<uint8_t> b = kHandBytes;
  b[23] = 4;  // palette of 4 with k = 4
  ExpectParseError<FormatError>(b, "k-1");
  b = kHandBytes;
  b[32] = 0x50;  // low above high
  ExpectParseError<FormatError>(b, "canny");
  b = kHandBytes;
  b[34] = 7;
  ExpectParseError<FormatError>(b, "key codec");
  b = kHandBytes;
  std::swap_ranges(b.begin() + 42, b.begin() + 45, b.begin() + 45);
  ExpectParseError<FormatError>(b, "canonical order");
}

VideoSequence SmallVideo(int frames = 12) {
  return MakeMovingRectangleVideo(48, 32, frames, 3);
}

EncoderConfig SmallConfig() {
  EncoderConfig c;
  c.alpha = 0.2;
  c.scale = 2;
  c.k = 8;
  c.canny = {20, 60};
  return c;
}

TEST(ContainerTest, EncodeDecodeRoundTrip) {
  const VideoSequence video = SmallVideo();
  RawPngCodec codec;
  EncoderTap tap;
  const SevFile file = EncodeVideo(video, SmallConfig(), codec, &tap);
  EXPECT_EQ(file.header.key_indices, (std::vector<uint32_t>{0, 6}));
  EXPECT_EQ(file.chunks.size(), 2u);
  EXPECT_EQ(file.header.map_width(), 24);
  EXPECT_EQ(file.header.map_height(), 16);

  const std::vector<uint8_t> bytes = SerializeContainer(file);
  const SevFile parsed = ParseContainer(bytes);
  EXPECT_EQ(parsed, file);
  EXPECT_EQ(SerializeContainer(parsed), bytes);
  EXPECT_EQ(ComputeSectionSizes(file).total(), bytes.size());

  const DecodedSev d = DecodeSev(parsed, codec);
  EXPECT_EQ(d.key_indices, file.header.key_indices);
  EXPECT_EQ(d.g_indices, tap.g_indices);
  EXPECT_EQ(d.key_maps, tap.key_maps);
  EXPECT_EQ(d.g_maps, tap.g_maps);
  ASSERT_EQ(d.key_frames.size(), 2u);
  EXPECT_EQ(d.key_frames[0], video.frame(0));
  EXPECT_EQ(d.key_frames[1], video.frame(6));
  EXPECT_EQ(d.codebook, file.header.codebook());
}

TEST(ContainerTest, EncodingIsDeterministic) {
  RawPngCodec codec;
  EXPECT_EQ(SerializeContainer(EncodeVideo(SmallVideo(), SmallConfig(), codec)),
            SerializeContainer(EncodeVideo(SmallVideo(), SmallConfig(), codec)));
}

TEST(ContainerTest, SingleFrameVideo) {
  RawPngCodec codec;
  const SevFile file = EncodeVideo(SmallVideo(1), SmallConfig(), codec);
  EXPECT_EQ(file.header.key_indices, (std::vector<uint32_t>{0}));
  EXPECT_TRUE(file.chunks.empty());
  const DecodedSev d = DecodeSev(ParseContainer(SerializeContainer(file)), codec);
  EXPECT_TRUE(d.g_maps.empty());
  EXPECT_EQ(d.key_frames.size(), 1u);
}

TEST(ContainerTest, AllKeyFramesGiveNoChunks) {
  EncoderConfig c = SmallConfig();
  c.alpha = 1.0;
  RawPngCodec codec;
  const SevFile file = EncodeVideo(SmallVideo(), c, codec);
  EXPECT_EQ(file.header.key_indices.size(), 12u);
  EXPECT_TRUE(file.chunks.empty());
  const BitrateReport r = ComputeBitrate(file);
  EXPECT_EQ(r.bits_g, 0u);
  EXPECT_EQ(r.key_share, 1.0);
  const DecodedSev d = DecodeSev(file, codec);
  for (size_t i = 0; i < 12; ++i) EXPECT_EQ(d.key_frames[i], SmallVideo().frame(i));
}

TEST(ContainerTest, LongVideoOperatingPoint) {
  // 8000 frames at alpha 0.01, scale 8, k 8: 80 keys, each followed by a
  // 99-frame GOP.
  const VideoSequence video = MakeMovingRectangleVideo(16, 16, 8000, 1);
  EncoderConfig c;
  c.alpha = 0.01;
  c.scale = 8;
  c.k = 8;
  RawPngCodec codec;
  const SevFile file = EncodeVideo(video, c, codec);
  EXPECT_EQ(file.header.key_indices.size(), 80u);
  EXPECT_EQ(file.header.key_indices[79], 7900u);
  ASSERT_EQ(file.chunks.size(), 80u);
  for (const CompressedChunk& chunk : file.chunks) {
    EXPECT_EQ(chunk.frame_count, 99u);
  }
  const auto j = nlohmann::json::parse(HeaderToJson(file));
  EXPECT_EQ(j["key_frame_count"], 80);
  EXPECT_EQ(j["chunk_count"], 80);
}

TEST(ContainerTest, ExplicitKeyIndices) {
  EncoderConfig c = SmallConfig();
  c.key_indices = {0, 3, 4};
  RawPngCodec codec;
  const SevFile file = EncodeVideo(SmallVideo(), c, codec);
  EXPECT_EQ(file.header.key_indices, c.key_indices);
  EXPECT_EQ(file.chunks.size(), 2u);  // GOP of key 3 is empty
  EXPECT_EQ(file.chunks[0].frame_count, 2u);
  EXPECT_EQ(file.chunks[1].frame_count, 7u);
  c.key_indices = {1, 3};
  EXPECT_THROW(EncodeVideo(SmallVideo(), c, codec), ArgumentError);
}

TEST(ContainerTest, EncoderRejectsBadConfig) {
  RawPngCodec codec;
  EncoderConfig c = SmallConfig();
  c.k = 1;
  EXPECT_THROW(EncodeVideo(SmallVideo(), c, codec), ArgumentError);
  c = SmallConfig();
  c.scale = 0;
  EXPECT_THROW(EncodeVideo(SmallVideo(), c, codec), ArgumentError);
  c = SmallConfig();
  c.canny = {60, 60};
  EXPECT_THROW(EncodeVideo(SmallVideo(), c, codec), ArgumentError);
}

TEST(ContainerTest, CorruptChunkNamesGop) {
  RawPngCodec codec;
  SevFile file = EncodeVideo(SmallVideo(), SmallConfig(), codec);
  file.chunks[1].frame_count += 1;
  try {
    DecodeSev(file, codec);
    FAIL();
  } catch (const CorruptStreamError& e) {
    EXPECT_EQ(std::string(e.what()).rfind("GOP 1: corrupt chunk", 0), 0u)
        << e.what();
  }
}

TEST(ContainerTest, CorruptChunkBytesNameChunk) {
  RawPngCodec codec;
  std::vector<uint8_t> bytes =
      SerializeContainer(EncodeVideo(SmallVideo(), SmallConfig(), codec));
  // Flip the scan-mode byte of the first chunk to an unknown value.
  const SevFile file = ParseContainer(bytes);
  const size_t first_chunk = ComputeSectionSizes(file).header_bytes -
                             4 * file.chunks.size() + 4 +
                             file.key_payload.size();
  ASSERT_LE(bytes[first_chunk], 1);
  bytes[first_chunk] = 9;
  try {
    ParseContainer(bytes);
    FAIL();
  } catch (const CorruptStreamError& e) {
    EXPECT_NE(std::string(e.what()).find("edge chunk 0"), std::string::npos)
        << e.what();
  }
}

TEST(ContainerTest, ChunkCountMismatch) {
  RawPngCodec codec;
  SevFile file = EncodeVideo(SmallVideo(), SmallConfig(), codec);
  SevFile missing = file;
  missing.chunks.pop_back();
  EXPECT_THROW(DecodeSev(missing, codec), FormatError);
  SevFile surplus = file;
  surplus.chunks.push_back(file.chunks[0]);
  EXPECT_THROW(DecodeSev(surplus, codec), FormatError);
}

TEST(ContainerTest, WrongKeyCodecIsReported) {
  SevFile file = HandFile();
  file.header.key_codec = KeyCodecId::kExternal;
  RawPngCodec codec;
  EXPECT_THROW(DecodeSev(file, codec), KeyCodecError);
}

TEST(BitrateTest, HandComputedOperatingPoints) {
  EXPECT_NEAR(BitrateKbps(71400, 250, {25, 1}) / 7.14, 1.0, 1e-9);
  EXPECT_NEAR(BitrateKbps(2284800, 8000, {25, 1}) / 7.14, 1.0, 1e-9);
  EXPECT_NEAR(BitrateKbps(71400, 300, {30000, 1001}) / (71400.0 * 30000 / 1001 / 300 / 1000),
              1.0, 1e-12);
  EXPECT_EQ(BitrateKbps(100, 0, {25, 1}), 0.0);
}

TEST(BitrateTest, ReportSplitsSections) {
  RawPngCodec codec;
  const SevFile file = EncodeVideo(SmallVideo(), SmallConfig(), codec);
  const BitrateReport r = ComputeBitrate(file);
  EXPECT_EQ(r.bits_total, r.bits_key + r.bits_g + r.bits_header);
  EXPECT_EQ(r.bits_total, 8 * SerializeContainer(file).size());
  EXPECT_NEAR(r.kbps_total, r.kbps_key + r.kbps_g + r.kbps_header, 1e-9);
  EXPECT_DOUBLE_EQ(r.key_share,
                   static_cast<double>(r.bits_key) / (r.bits_key + r.bits_g));
}

TEST(ContainerTest, HeaderJson) {
  const auto j = nlohmann::json::parse(HeaderToJson(HandFile()));
  EXPECT_EQ(j["magic"], "SEVC");
  EXPECT_EQ(j["width"], 10);
  EXPECT_EQ(j["map_width"], 3);
  EXPECT_EQ(j["map_height"], 2);
  EXPECT_EQ(j["k"], 4);
  EXPECT_EQ(j["key_codec"], "raw");
  EXPECT_EQ(j["key_indices"], nlohmann::json({0, 130}));
  EXPECT_EQ(j["palette"][1], nlohmann::json({200, 100, 50}));
  EXPECT_EQ(j["bits"]["total"], 8 * 58);
}

}  // namespace
}  // namespace sev
