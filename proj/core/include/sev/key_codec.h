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

// First-stage codec for key frames. The container treats its output as an
// opaque blob; decode(encode(f)) must preserve frame count and dimensions.

#ifndef SEV_KEY_CODEC_H_
#define SEV_KEY_CODEC_H_

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "sev/frame.h"

namespace sev {

enum class KeyCodecId : uint8_t {
  kRawPng = 0,
  kExternal = 1,
};

class KeyFrameCodec {
 public:
  virtual ~KeyFrameCodec() = default;

  virtual KeyCodecId id() const = 0;
  virtual std::vector<uint8_t> Encode(std::span<const Frame> frames,
                                      int quality) const = 0;
  virtual std::vector<Frame> Decode(std::span<const uint8_t> blob) const = 0;
};

// Lossless: each frame stored as a PNG.
// Blob: count:u32 | per frame: size:u32, PNG bytes.
class RawPngCodec : public KeyFrameCodec {
 public:
  KeyCodecId id() const override { return KeyCodecId::kRawPng; }
  std::vector<uint8_t> Encode(std::span<const Frame> frames,
                              int quality) const override;
  std::vector<Frame> Decode(std::span<const uint8_t> blob) const override;
};

// Delegates to user-supplied shell commands, e.g. an ffmpeg/x264 pipeline.
//
// Placeholders {w} {h} {fps} {quality} {in} {out} are substituted in both
// templates. Encoding writes the frames as raw RGB24 to {in} and also feeds
// them on standard input; the command must leave its bitstream in {out}.
// Decoding writes that bitstream to {in}; the command must leave raw RGB24
// frames in {out}.
//
// Blob: width:u16 | height:u16 | count:u32 | quality:i32 | bitstream.
struct ExternalCodecCommands {
  std::string encode_cmd;
  std::string decode_cmd;
  Rational fps;
};

class ExternalCommandCodec : public KeyFrameCodec {
 public:
  explicit ExternalCommandCodec(ExternalCodecCommands commands);

  KeyCodecId id() const override { return KeyCodecId::kExternal; }
  std::vector<uint8_t> Encode(std::span<const Frame> frames,
                              int quality) const override;
  std::vector<Frame> Decode(std::span<const uint8_t> blob) const override;

 private:
  ExternalCodecCommands commands_;
};

// Substitutes every {name} placeholder; unknown placeholders are left as is.
std::string ExpandCommandTemplate(
    const std::string& templ,
    const std::vector<std::pair<std::string, std::string>>& values);

std::unique_ptr<KeyFrameCodec> MakeKeyFrameCodec(
    KeyCodecId id, const ExternalCodecCommands& commands = {});

}  // namespace sev

#endif  // SEV_KEY_CODEC_H_
