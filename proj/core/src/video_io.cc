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

#include "sev/video_io.h"

#include <png.h>

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstring>
#include <fstream>
#include <iterator>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>

#include "sev/errors.h"

namespace fs = std::filesystem;

namespace sev {
namespace {

uint8_t ClampRound(double v) {
  // Half-up rounding; v is finite.
  const double r = std::floor(v + 0.5);
  return static_cast<uint8_t>(std::clamp(r, 0.0, 255.0));
}

// png_image wrapper that always releases libpng state.
struct PngImage {
  png_image image;
  PngImage() {
    std::memset(&image, 0, sizeof(image));
    image.version = PNG_IMAGE_VERSION;
  }
  ~PngImage() { png_image_free(&image); }
  PngImage(const PngImage&) = delete;
  PngImage& operator=(const PngImage&) = delete;
};

Frame FinishPngRead(PngImage& png, const std::string& what) {
  png.image.format = PNG_FORMAT_RGB;
  if (png.image.width == 0 || png.image.height == 0 ||
      png.image.width > 65535 || png.image.height > 65535) {
    throw IoError(what + ": unsupported PNG dimensions");
  }
  std::vector<uint8_t> pixels(PNG_IMAGE_SIZE(png.image));
  if (!png_image_finish_read(&png.image, nullptr, pixels.data(), 0, nullptr)) {
    throw IoError(what + ": " + png.image.message);
  }
  return Frame(static_cast<int>(png.image.width),
               static_cast<int>(png.image.height), std::move(pixels));
}

// Numeric value of a file stem made only of digits, or -1.
long long NumericStem(const fs::path& p) {
  const std::string stem = p.stem().string();
  if (stem.empty() || stem.size() > 18) return -1;
  for (char c : stem) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return -1;
  }
  return std::stoll(stem);
}

VideoSequence LoadPngDirectory(const fs::path& dir, Rational fps) {
  std::vector<std::pair<long long, fs::path>> files;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (!entry.is_regular_file()) continue;
    std::string ext = entry.path().extension().string();
    std::transform(ext.begin(), ext.end(), ext.begin(),
                   [](unsigned char c) { return std::tolower(c); });
    if (ext != ".png") continue;
    const long long n = NumericStem(entry.path());
    if (n < 0) {
      throw IoError(entry.path().string() +
                    ": frame files must be named by frame number");
    }
    files.emplace_back(n, entry.path());
  }
  if (files.empty()) {
    throw IoError(dir.string() + ": no numbered PNG frames found");
  }
  std::sort(files.begin(), files.end());
  for (size_t i = 1; i < files.size(); ++i) {
    if (files[i].first == files[i - 1].first) {
      throw IoError(files[i].second.string() + ": duplicate frame number " +
                    std::to_string(files[i].first));
    }
  }

  std::vector<Frame> frames;
  frames.reserve(files.size());
  for (const auto& [n, path] : files) {
    Frame f = LoadPng(path);
    if (!frames.empty() && (f.width() != frames[0].width() ||
                            f.height() != frames[0].height())) {
      throw IoError(path.string() + ": dimension mismatch, " +
                    std::to_string(f.width()) + "x" +
                    std::to_string(f.height()) + " vs " +
                    std::to_string(frames[0].width()) + "x" +
                    std::to_string(frames[0].height()));
    }
    frames.push_back(std::move(f));
  }
  return VideoSequence(std::move(frames), fps);
}

// Bilinear chroma value at luma position (x, y). Chroma samples sit at the
// centre of each 2x2 luma block, so the weights are 3/4 and 1/4 per axis.
double UpsampleChroma(const uint8_t* plane, int cw, int ch, int x, int y) {
  auto taps = [](int pos, int extent, int& near, int& far) {
    near = pos / 2;
    far = (pos % 2 == 0) ? near - 1 : near + 1;
    far = std::clamp(far, 0, extent - 1);
  };
  int x0, x1, y0, y1;
  taps(x, cw, x0, x1);
  taps(y, ch, y0, y1);
  const int sum = 9 * plane[y0 * cw + x0] + 3 * plane[y0 * cw + x1] +
                  3 * plane[y1 * cw + x0] + plane[y1 * cw + x1];
  return sum / 16.0;
}

}  // namespace

Rgb YCbCrToRgb(double y, double cb, double cr) {
  const double u = cb - 128.0;
  const double v = cr - 128.0;
  return {ClampRound(y + 1.402 * v),
          ClampRound(y - 0.344136 * u - 0.714136 * v),
          ClampRound(y + 1.772 * u)};
}

VideoSequence ParseY4m(std::span<const uint8_t> bytes) {
  auto read_line = [&](size_t& pos) -> std::string {
    const auto begin = bytes.begin() + pos;
    const auto nl = std::find(begin, bytes.end(), uint8_t{'\n'});
    if (nl == bytes.end()) throw IoError("y4m: unterminated header line");
    std::string line(begin, nl);
    pos = static_cast<size_t>(nl - bytes.begin()) + 1;
    return line;
  };

  size_t pos = 0;
  std::istringstream header(read_line(pos));
  std::string token;
  header >> token;
  if (token != "YUV4MPEG2") throw IoError("y4m: missing YUV4MPEG2 signature");

  int width = 0, height = 0;
  Rational fps{0, 0};
  while (header >> token) {
    const char tag = token[0];
    const std::string value = token.substr(1);
    switch (tag) {
      case 'W':
        width = std::stoi(value);
        break;
      case 'H':
        height = std::stoi(value);
        break;
      case 'F': {
        const auto colon = value.find(':');
        if (colon == std::string::npos) throw IoError("y4m: bad F tag");
        fps.num = static_cast<uint32_t>(std::stoul(value.substr(0, colon)));
        fps.den = static_cast<uint32_t>(std::stoul(value.substr(colon + 1)));
        break;
      }
      case 'C':
        if (value != "420" && value != "420jpeg" && value != "420paldv" &&
            value != "420mpeg2") {
          throw IoError("y4m: unsupported colorspace C" + value +
                        " (only 4:2:0)");
        }
        break;
      case 'I':
        if (value != "p" && value != "?") {
          throw IoError("y4m: interlaced input is not supported");
        }
        break;
      default:
        break;  // A (aspect), X (comments) are ignored.
    }
  }
  if (width <= 0 || height <= 0) throw IoError("y4m: missing W/H");
  if (fps.num == 0 || fps.den == 0) throw IoError("y4m: missing or zero F");

  const int cw = (width + 1) / 2;
  const int ch = (height + 1) / 2;
  const size_t y_size = static_cast<size_t>(width) * height;
  const size_t c_size = static_cast<size_t>(cw) * ch;

  std::vector<Frame> frames;
  while (pos < bytes.size()) {
    const std::string line = read_line(pos);
    if (line.rfind("FRAME", 0) != 0) {
      throw IoError("y4m: expected FRAME marker at frame " +
                    std::to_string(frames.size()));
    }
    if (bytes.size() - pos < y_size + 2 * c_size) {
      throw IoError("y4m: truncated frame " + std::to_string(frames.size()));
    }
    const uint8_t* yp = bytes.data() + pos;
    const uint8_t* up = yp + y_size;
    const uint8_t* vp = up + c_size;
    pos += y_size + 2 * c_size;

    Frame f(width, height);
    for (int y = 0; y < height; ++y) {
      for (int x = 0; x < width; ++x) {
        f.set(x, y,
              YCbCrToRgb(yp[static_cast<size_t>(y) * width + x],
                         UpsampleChroma(up, cw, ch, x, y),
                         UpsampleChroma(vp, cw, ch, x, y)));
      }
    }
    frames.push_back(std::move(f));
  }
  if (frames.empty()) throw IoError("y4m: stream contains no frames");
  return VideoSequence(std::move(frames), fps);
}

VideoSequence LoadVideo(const fs::path& path, Rational fps) {
  if (path.empty() || !fs::exists(path)) {
    throw IoError("input not found: " + path.string());
  }
  if (fs::is_directory(path)) return LoadPngDirectory(path, fps);
  std::string ext = path.extension().string();
  std::transform(ext.begin(), ext.end(), ext.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  if (ext != ".y4m") {
    throw IoError(path.string() +
                  ": expected a directory of PNG frames or a .y4m file");
  }
  const auto bytes = ReadFileBytes(path);
  try {
    return ParseY4m(bytes);
  } catch (const IoError& e) {
    throw IoError(path.string() + ": " + e.what());
  }
}

Frame LoadPng(const fs::path& path) {
  const auto bytes = ReadFileBytes(path);
  PngImage png;
  if (!png_image_begin_read_from_memory(&png.image, bytes.data(),
                                        bytes.size())) {
    throw IoError(path.string() + ": " + png.image.message);
  }
  return FinishPngRead(png, path.string());
}

Frame DecodePng(std::span<const uint8_t> bytes) {
  PngImage png;
  if (!png_image_begin_read_from_memory(&png.image, bytes.data(),
                                        bytes.size())) {
    throw IoError(std::string("png decode: ") + png.image.message);
  }
  return FinishPngRead(png, "png decode");
}

std::vector<uint8_t> EncodePng(const Frame& frame) {
  PngImage png;
  png.image.width = static_cast<png_uint_32>(frame.width());
  png.image.height = static_cast<png_uint_32>(frame.height());
  png.image.format = PNG_FORMAT_RGB;
  png_alloc_size_t size = 0;
  if (!png_image_write_to_memory(&png.image, nullptr, &size, 0,
                                 frame.pixels().data(), 0, nullptr)) {
    throw IoError(std::string("png encode: ") + png.image.message);
  }
  std::vector<uint8_t> out(size);
  if (!png_image_write_to_memory(&png.image, out.data(), &size, 0,
                                 frame.pixels().data(), 0, nullptr)) {
    throw IoError(std::string("png encode: ") + png.image.message);
  }
  out.resize(size);
  return out;
}

void SavePng(const Frame& frame, const fs::path& path) {
  WriteFileBytes(path, EncodePng(frame));
}

void SaveFrameSequence(const std::vector<Frame>& frames,
                       const std::vector<uint32_t>& indices,
                       const fs::path& dir, int digits) {
  if (frames.size() != indices.size()) {
    throw ArgumentError("frame and index lists differ in length");
  }
  fs::create_directories(dir);
  for (size_t i = 0; i < frames.size(); ++i) {
    std::string name = std::to_string(indices[i]);
    if (static_cast<int>(name.size()) < digits) {
      name.insert(0, digits - name.size(), '0');
    }
    SavePng(frames[i], dir / (name + ".png"));
  }
}

std::vector<uint8_t> ReadFileBytes(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::vector<uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                             std::istreambuf_iterator<char>());
  if (in.bad()) throw IoError("read failed: " + path.string());
  return bytes;
}

void WriteFileBytes(const fs::path& path, std::span<const uint8_t> bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot create " + path.string());
  out.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
  if (!out) throw IoError("write failed: " + path.string());
}

Frame ResizeFrame(const Frame& frame, int width, int height, ResizeMode mode) {
  if (width <= 0 || height <= 0) {
    throw ArgumentError("resize target must be positive");
  }
  // Source window [x0, x0 + sw) x [y0, y0 + sh).
  double x0 = 0, y0 = 0;
  double sw = frame.width(), sh = frame.height();
  if (mode == ResizeMode::kCenterCrop) {
    const double target = static_cast<double>(width) / height;
    if (sw / sh > target) {
      const double crop_w = sh * target;
      x0 = (sw - crop_w) / 2;
      sw = crop_w;
    } else {
      const double crop_h = sw / target;
      y0 = (sh - crop_h) / 2;
      sh = crop_h;
    }
  }
  if (mode == ResizeMode::kStretch && width == frame.width() &&
      height == frame.height()) {
    return frame;
  }

  Frame out(width, height);
  const double fx = sw / width;
  const double fy = sh / height;
  for (int y = 0; y < height; ++y) {
    const double sy = std::clamp(y0 + (y + 0.5) * fy - 0.5, 0.0,
                                 static_cast<double>(frame.height() - 1));
    const int iy = static_cast<int>(sy);
    const int iy1 = std::min(iy + 1, frame.height() - 1);
    const double wy = sy - iy;
    for (int x = 0; x < width; ++x) {
      const double sx = std::clamp(x0 + (x + 0.5) * fx - 0.5, 0.0,
                                   static_cast<double>(frame.width() - 1));
      const int ix = static_cast<int>(sx);
      const int ix1 = std::min(ix + 1, frame.width() - 1);
      const double wx = sx - ix;
      const Rgb a = frame.at(ix, iy), b = frame.at(ix1, iy);
      const Rgb c = frame.at(ix, iy1), d = frame.at(ix1, iy1);
      auto lerp = [&](uint8_t pa, uint8_t pb, uint8_t pc, uint8_t pd) {
        const double top = pa + (pb - pa) * wx;
        const double bottom = pc + (pd - pc) * wx;
        return ClampRound(top + (bottom - top) * wy);
      };
      out.set(x, y,
              {lerp(a.r, b.r, c.r, d.r), lerp(a.g, b.g, c.g, d.g),
               lerp(a.b, b.b, c.b, d.b)});
    }
  }
  return out;
}

VideoSequence ResizeVideo(const VideoSequence& video, int width, int height,
                          ResizeMode mode) {
  std::vector<Frame> frames;
  frames.reserve(video.size());
  for (const Frame& f : video.frames()) {
    frames.push_back(ResizeFrame(f, width, height, mode));
  }
  return VideoSequence(std::move(frames), video.fps());
}

}  // namespace sev
