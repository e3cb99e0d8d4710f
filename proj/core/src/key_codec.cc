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

#include "sev/key_codec.h"

#include <stdlib.h>
#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <string>
#include <utility>

#include "sev/bit_io.h"
#include "sev/errors.h"
#include "sev/video_io.h"

namespace fs = std::filesystem;

namespace sev {
namespace {

// Scratch directory removed on scope exit.
class TempDir {
 public:
  TempDir() {
    std::string templ = (fs::temp_directory_path() / "sev-XXXXXX").string();
    if (mkdtemp(templ.data()) == nullptr) {
      throw KeyCodecError("cannot create a temporary directory");
    }
    path_ = templ;
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path_, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  const fs::path& path() const { return path_; }

 private:
  fs::path path_;
};

std::string ShellQuote(const std::string& s) {
  std::string out = "'";
  for (char c : s) {
    if (c == '\'') {
      out += "'\\''";
    } else {
      out += c;
    }
  }
  return out + "'";
}

std::string Tail(const fs::path& path, size_t max_bytes = 2000) {
  std::error_code ec;
  if (!fs::exists(path, ec)) return "";
  auto bytes = ReadFileBytes(path);
  std::string text(bytes.begin(), bytes.end());
  if (text.size() > max_bytes) text = "..." + text.substr(text.size() - max_bytes);
  return text;
}

void RunCommand(const std::string& command, const fs::path& stdin_file,
                const fs::path& stderr_file) {
  const std::string shell = "( " + command + " ) < " +
                            ShellQuote(stdin_file.string()) + " 2> " +
                            ShellQuote(stderr_file.string());
  const int status = std::system(shell.c_str());
  if (status == -1) throw KeyCodecError("failed to spawn shell for: " + command);
  if (!WIFEXITED(status) || WEXITSTATUS(status) != 0) {
    const int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    throw KeyCodecError("external key-frame command exited with status " +
                        std::to_string(code) + ": " + command +
                        "\nstderr:\n" + Tail(stderr_file));
  }
}

void CheckUniformSize(std::span<const Frame> frames) {
  if (frames.empty()) throw KeyCodecError("no key frames to encode");
  for (const Frame& f : frames) {
    if (f.width() != frames[0].width() || f.height() != frames[0].height()) {
      throw KeyCodecError("key frames differ in size");
    }
  }
}

}  // namespace

std::vector<uint8_t> RawPngCodec::Encode(std::span<const Frame> frames,
                                         int /*quality*/) const {
  CheckUniformSize(frames);
  ByteWriter out;
  out.U32(static_cast<uint32_t>(frames.size()));
  for (const Frame& f : frames) {
    const std::vector<uint8_t> png = EncodePng(f);
    out.U32(static_cast<uint32_t>(png.size()));
    out.Bytes(png);
  }
  return out.Take();
}

std::vector<Frame> RawPngCodec::Decode(std::span<const uint8_t> blob) const {
  std::vector<Frame> frames;
  try {
    ByteReader in(blob, "raw key payload");
    const uint32_t count = in.U32();
    for (uint32_t i = 0; i < count; ++i) {
      const uint32_t size = in.U32();
      frames.push_back(DecodePng(in.Bytes(size)));
    }
    if (in.remaining() != 0) in.Fail("trailing bytes");
  } catch (const Error& e) {
    throw KeyCodecError(std::string("raw key-frame decode failed: ") +
                        e.what());
  }
  return frames;
}

ExternalCommandCodec::ExternalCommandCodec(ExternalCodecCommands commands)
    : commands_(std::move(commands)) {}

std::vector<uint8_t> ExternalCommandCodec::Encode(std::span<const Frame> frames,
                                                  int quality) const {
  if (commands_.encode_cmd.empty()) {
    throw KeyCodecError("external key-frame codec needs an encode command");
  }
  CheckUniformSize(frames);
  TempDir tmp;
  const fs::path in = tmp.path() / "frames.rgb";
  const fs::path out = tmp.path() / "keyframes.bin";
  const fs::path err = tmp.path() / "stderr.txt";

  std::vector<uint8_t> raw;
  raw.reserve(frames.size() * frames[0].pixels().size());
  for (const Frame& f : frames) {
    raw.insert(raw.end(), f.pixels().begin(), f.pixels().end());
  }
  WriteFileBytes(in, raw);

  const std::string cmd = ExpandCommandTemplate(
      commands_.encode_cmd,
      {{"w", std::to_string(frames[0].width())},
       {"h", std::to_string(frames[0].height())},
       {"fps", std::to_string(commands_.fps.num) + "/" +
                   std::to_string(commands_.fps.den)},
       {"quality", std::to_string(quality)},
       {"in", in.string()},
       {"out", out.string()}});
  RunCommand(cmd, in, err);
  if (!fs::exists(out)) {
    throw KeyCodecError("external encoder produced no output file: " + cmd);
  }
  const std::vector<uint8_t> bitstream = ReadFileBytes(out);

  ByteWriter blob;
  blob.U16(static_cast<uint16_t>(frames[0].width()));
  blob.U16(static_cast<uint16_t>(frames[0].height()));
  blob.U32(static_cast<uint32_t>(frames.size()));
  blob.U32(static_cast<uint32_t>(quality));
  blob.Bytes(bitstream);
  return blob.Take();
}

std::vector<Frame> ExternalCommandCodec::Decode(
    std::span<const uint8_t> blob) const {
  if (commands_.decode_cmd.empty()) {
    throw KeyCodecError("external key-frame codec needs a decode command");
  }
  int width = 0, height = 0;
  uint32_t count = 0, quality = 0;
  std::span<const uint8_t> bitstream;
  try {
    ByteReader in(blob, "external key payload");
    width = in.U16();
    height = in.U16();
    count = in.U32();
    quality = in.U32();
    bitstream = in.Bytes(in.remaining());
  } catch (const Error& e) {
    throw KeyCodecError(e.what());
  }
  if (width == 0 || height == 0 || count == 0) {
    throw KeyCodecError("external key payload declares an empty frame set");
  }

  TempDir tmp;
  const fs::path in = tmp.path() / "keyframes.bin";
  const fs::path out = tmp.path() / "frames.rgb";
  const fs::path err = tmp.path() / "stderr.txt";
  WriteFileBytes(in, bitstream);
  const std::string cmd = ExpandCommandTemplate(
      commands_.decode_cmd,
      {{"w", std::to_string(width)},
       {"h", std::to_string(height)},
       {"fps", std::to_string(commands_.fps.num) + "/" +
                   std::to_string(commands_.fps.den)},
       {"quality", std::to_string(static_cast<int32_t>(quality))},
       {"in", in.string()},
       {"out", out.string()}});
  RunCommand(cmd, in, err);
  if (!fs::exists(out)) {
    throw KeyCodecError("external decoder produced no output file: " + cmd);
  }
  const std::vector<uint8_t> raw = ReadFileBytes(out);
  const size_t frame_bytes = static_cast<size_t>(width) * height * 3;
  if (raw.size() != frame_bytes * count) {
    throw KeyCodecError("external decoder returned " +
                        std::to_string(raw.size()) + " bytes, expected " +
                        std::to_string(frame_bytes * count) + " (" +
                        std::to_string(count) + " RGB24 frames)");
  }
  std::vector<Frame> frames;
  frames.reserve(count);
  for (uint32_t i = 0; i < count; ++i) {
    frames.emplace_back(width, height,
                        std::vector<uint8_t>(raw.begin() + i * frame_bytes,
                                             raw.begin() + (i + 1) * frame_bytes));
  }
  return frames;
}

std::string ExpandCommandTemplate(
    const std::string& templ,
    const std::vector<std::pair<std::string, std::string>>& values) {
  std::string out;
  size_t i = 0;
  while (i < templ.size()) {
    if (templ[i] == '{') {
      const size_t close = templ.find('}', i);
      if (close != std::string::npos) {
        const std::string name = templ.substr(i + 1, close - i - 1);
        bool replaced = false;
        for (const auto& [key, value] : values) {
          if (key == name) {
            out += value;
            replaced = true;
            break;
          }
        }
        if (replaced) {
          i = close + 1;
          continue;
        }
      }
    }
    out += templ[i++];
  }
  return out;
}

std::unique_ptr<KeyFrameCodec> MakeKeyFrameCodec(
    KeyCodecId id, const ExternalCodecCommands& commands) {
  switch (id) {
    case KeyCodecId::kRawPng:
      return std::make_unique<RawPngCodec>();
    case KeyCodecId::kExternal:
      return std::make_unique<ExternalCommandCodec>(commands);
  }
  throw KeyCodecError("unknown key codec id " +
                      std::to_string(static_cast<int>(id)));
}

}  // namespace sev
