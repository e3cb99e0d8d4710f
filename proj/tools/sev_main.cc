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

// sev: command-line front end for the soft-edge video codec.
//
//   sev encode   --input frames/ --output out.sev [--alpha 0.01 ...]
//   sev decode   --input out.sev --emit-keyframes dir --emit-sem maps.sem
//   sev inspect  --input out.sev
//   sev metrics  --ref dir --dist dir --metrics psnr,ssim,msssim --out m.csv
//   sev rd-sweep --input frames/ --alphas 0.01,0.02 --out sweep.csv

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "sev/container.h"
#include "sev/errors.h"
#include "sev/metrics.h"
#include "sev/rd_sweep.h"
#include "sev/sem.h"
#include "sev/video_io.h"

namespace fs = std::filesystem;

namespace {

sev::Rational ParseFps(const std::string& text) {
  const auto slash = text.find('/');
  sev::Rational fps;
  try {
    if (slash == std::string::npos) {
      fps = {static_cast<uint32_t>(std::stoul(text)), 1};
    } else {
      fps = {static_cast<uint32_t>(std::stoul(text.substr(0, slash))),
             static_cast<uint32_t>(std::stoul(text.substr(slash + 1)))};
    }
  } catch (const std::exception&) {
    throw sev::ArgumentError("bad --fps value '" + text + "'");
  }
  if (fps.num == 0 || fps.den == 0) {
    throw sev::ArgumentError("--fps must be positive");
  }
  return fps;
}

struct KeyCodecOptions {
  std::string name = "raw";
  std::string encode_cmd;
  std::string decode_cmd;

  void Register(CLI::App* app, bool encoding) {
    if (encoding) {
      app->add_option("--keyframe-codec", name, "Key-frame codec")
          ->check(CLI::IsMember({"raw", "ext"}));
      app->add_option("--ext-cmd", encode_cmd,
                      "External encoder command template; placeholders "
                      "{w} {h} {fps} {quality} {in} {out}");
    }
    app->add_option("--ext-decode-cmd", decode_cmd,
                    "External decoder command template (same placeholders)");
  }

  std::unique_ptr<sev::KeyFrameCodec> Make(sev::KeyCodecId id,
                                           sev::Rational fps) const {
    return sev::MakeKeyFrameCodec(id, {encode_cmd, decode_cmd, fps});
  }
  sev::KeyCodecId id() const {
    return name == "ext" ? sev::KeyCodecId::kExternal
                         : sev::KeyCodecId::kRawPng;
  }
};

struct InputOptions {
  std::string input;
  std::string fps = "25";
  std::string resize;
  std::string resize_mode = "crop";

  void Register(CLI::App* app) {
    app->add_option("--input", input,
                    "Directory of numbered PNG frames or a .y4m file")
        ->required();
    app->add_option("--fps", fps, "Frame rate for PNG input (N or N/D)");
    app->add_option("--resize", resize, "Resize frames to WxH before coding");
    app->add_option("--resize-mode", resize_mode, "crop or stretch")
        ->check(CLI::IsMember({"crop", "stretch"}));
  }

  sev::VideoSequence Load() const {
    sev::VideoSequence video = sev::LoadVideo(input, ParseFps(fps));
    if (resize.empty()) return video;
    const auto x = resize.find('x');
    if (x == std::string::npos) {
      throw sev::ArgumentError("--resize expects WxH, got '" + resize + "'");
    }
    const int w = std::stoi(resize.substr(0, x));
    const int h = std::stoi(resize.substr(x + 1));
    return sev::ResizeVideo(video, w, h,
                            resize_mode == "stretch"
                                ? sev::ResizeMode::kStretch
                                : sev::ResizeMode::kCenterCrop);
  }
};

template <typename T>
std::vector<T> ParseList(const std::string& text) {
  std::vector<T> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    std::istringstream is(item);
    T v{};
    if (!(is >> v) || !is.eof()) {
      throw sev::ArgumentError("bad list element '" + item + "'");
    }
    out.push_back(v);
  }
  if (out.empty()) throw sev::ArgumentError("empty list '" + text + "'");
  return out;
}

void WriteText(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  sev::WriteFileBytes(path, std::vector<uint8_t>(text.begin(), text.end()));
}

std::string FormatMetric(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6f", v);
  return buf;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Soft-edge video codec toolkit"};
  app.require_subcommand(1);

  // encode
  auto* encode = app.add_subcommand("encode", "Encode a video into a .sev file");
  InputOptions enc_input;
  enc_input.Register(encode);
  std::string enc_output;
  sev::EncoderConfig enc_config;
  std::string enc_keys;
  int canny_low = 50, canny_high = 150;
  KeyCodecOptions enc_codec;
  encode->add_option("--output", enc_output, "Output .sev path")->required();
  encode->add_option("--alpha", enc_config.alpha, "Key-frame ratio in (0, 1]")
      ->default_val(0.01);
  encode->add_option("--key-indices", enc_keys,
                     "Explicit comma-separated key frames (overrides alpha)");
  encode->add_option("--scale", enc_config.scale, "Downsampling factor")
      ->default_val(8)
      ->check(CLI::Range(1, 255));
  encode->add_option("--k", enc_config.k, "Soft edge symbol count")
      ->default_val(8)
      ->check(CLI::Range(2, 256));
  encode->add_option("--canny-low", canny_low)->default_val(50)->check(
      CLI::Range(0, 255));
  encode->add_option("--canny-high", canny_high)->default_val(150)->check(
      CLI::Range(0, 255));
  encode->add_option("--kmeans-seed", enc_config.kmeans_seed)->default_val(0);
  encode->add_option("--quality", enc_config.quality,
                     "Key codec quality parameter (passed as {quality})")
      ->default_val(23);
  enc_codec.Register(encode, true);

  // decode
  auto* decode = app.add_subcommand("decode", "Decode a .sev file");
  std::string dec_input, emit_keyframes, emit_sem, emit_maps;
  KeyCodecOptions dec_codec;
  decode->add_option("--input", dec_input, "Input .sev path")->required();
  decode->add_option("--emit-keyframes", emit_keyframes,
                     "Write decoded key frames as PNG into this directory");
  decode->add_option("--emit-sem", emit_sem, "Write soft edge maps as SEM");
  decode->add_option("--emit-maps", emit_maps,
                     "Write grayscale renderings of every map as PNG");
  dec_codec.Register(decode, false);

  // inspect
  auto* inspect = app.add_subcommand("inspect", "Print a .sev header as JSON");
  std::string insp_input;
  inspect->add_option("--input", insp_input, "Input .sev path")->required();

  // metrics
  auto* metrics = app.add_subcommand("metrics", "Full-reference metrics CSV");
  std::string ref_dir, dist_dir, metric_list = "psnr,ssim,msssim",
                                 metric_out = "-";
  metrics->add_option("--ref", ref_dir, "Reference frames")->required();
  metrics->add_option("--dist", dist_dir, "Distorted frames")->required();
  metrics->add_option("--metrics", metric_list, "psnr,ssim,msssim");
  metrics->add_option("--out", metric_out, "CSV path ('-' for stdout)");

  // rd-sweep
  auto* sweep = app.add_subcommand("rd-sweep", "Rate-distortion sweep CSV");
  InputOptions sweep_input;
  sweep_input.Register(sweep);
  std::string alphas = "0.01", scales = "8", ks = "8", qualities = "23";
  std::string sweep_out = "-", recon_dir, gnuplot;
  uint64_t sweep_seed = 0;
  int sweep_low = 50, sweep_high = 150;
  KeyCodecOptions sweep_codec;
  sweep->add_option("--alphas", alphas);
  sweep->add_option("--scales", scales);
  sweep->add_option("--ks", ks);
  sweep->add_option("--qualities", qualities);
  sweep->add_option("--canny-low", sweep_low)->check(CLI::Range(0, 255));
  sweep->add_option("--canny-high", sweep_high)->check(CLI::Range(0, 255));
  sweep->add_option("--kmeans-seed", sweep_seed);
  sweep->add_option("--out", sweep_out, "CSV path ('-' for stdout)");
  sweep->add_option("--recon-dir", recon_dir,
                    "Directory holding <grid point>/ reconstructions");
  sweep->add_option("--gnuplot", gnuplot, "Also write a gnuplot data file");
  sweep_codec.Register(sweep, true);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*encode) {
      const sev::VideoSequence video = enc_input.Load();
      if (!enc_keys.empty()) {
        enc_config.key_indices = ParseList<uint32_t>(enc_keys);
      }
      enc_config.canny = {static_cast<uint8_t>(canny_low),
                          static_cast<uint8_t>(canny_high)};
      const auto codec = enc_codec.Make(enc_codec.id(), video.fps());
      const sev::SevFile file = sev::EncodeVideo(video, enc_config, *codec);
      sev::WriteFileBytes(enc_output, sev::SerializeContainer(file));
      const sev::BitrateReport r = sev::ComputeBitrate(file);
      std::cerr << "encoded " << file.header.frame_count << " frames ("
                << file.header.key_indices.size() << " key, "
                << file.chunks.size() << " edge chunks), "
                << r.bits_total / 8 << " bytes, " << r.kbps_total
                << " kbps (key " << r.kbps_key << ", G " << r.kbps_g
                << ")\n";
    } else if (*decode) {
      const sev::SevFile file =
          sev::ParseContainer(sev::ReadFileBytes(dec_input));
      const auto codec =
          dec_codec.Make(file.header.key_codec, file.header.fps);
      const sev::DecodedSev decoded = sev::DecodeSev(file, *codec);
      if (!emit_keyframes.empty()) {
        sev::SaveFrameSequence(decoded.key_frames, decoded.key_indices,
                               emit_keyframes);
      }
      const sev::SemFile sem = sev::MakeSem(decoded);
      if (!emit_sem.empty()) {
        sev::WriteFileBytes(emit_sem, sev::SerializeSem(sem));
      }
      if (!emit_maps.empty()) {
        fs::create_directories(emit_maps);
        for (const sev::SemEntry& e : sem.entries) {
          const sev::LumaPlane gray =
              sev::RenderGrayscale(e.map, decoded.codebook);
          sev::Frame f(gray.width(), gray.height());
          for (int y = 0; y < gray.height(); ++y) {
            for (int x = 0; x < gray.width(); ++x) {
              const uint8_t v = gray.at(x, y);
              f.set(x, y, {v, v, v});
            }
          }
          std::string name = std::to_string(e.frame_index);
          name.insert(0, name.size() < 6 ? 6 - name.size() : 0, '0');
          sev::SavePng(f, fs::path(emit_maps) / (name + ".png"));
        }
      }
      std::cerr << "decoded " << decoded.key_frames.size() << " key frames, "
                << decoded.g_maps.size() << " G-frame maps\n";
    } else if (*inspect) {
      const sev::SevFile file =
          sev::ParseContainer(sev::ReadFileBytes(insp_input));
      std::cout << sev::HeaderToJson(file) << "\n";
    } else if (*metrics) {
      const auto wanted = ParseList<std::string>(metric_list);
      bool want_psnr = false, want_ssim = false, want_ms = false;
      for (const std::string& m : wanted) {
        if (m == "psnr") want_psnr = true;
        else if (m == "ssim") want_ssim = true;
        else if (m == "msssim") want_ms = true;
        else throw sev::ArgumentError("unknown metric '" + m + "'");
      }
      const sev::VideoSequence ref = sev::LoadVideo(ref_dir, {25, 1});
      const sev::VideoSequence dist = sev::LoadVideo(dist_dir, {25, 1});
      if (ref.size() != dist.size()) {
        throw sev::ArgumentError("reference has " + std::to_string(ref.size()) +
                                 " frames, distorted has " +
                                 std::to_string(dist.size()));
      }
      std::vector<double> psnr, ssim, ms;
      std::ostringstream csv;
      csv << "frame_index,psnr_db,ssim,msssim,vmaf\n";
      for (size_t i = 0; i < ref.size(); ++i) {
        csv << i << ",";
        if (want_psnr) {
          psnr.push_back(sev::Psnr(ref.frame(i), dist.frame(i)));
          csv << FormatMetric(psnr.back());
        }
        csv << ",";
        if (want_ssim) {
          ssim.push_back(sev::Ssim(ref.frame(i), dist.frame(i)));
          csv << FormatMetric(ssim.back());
        }
        csv << ",";
        if (want_ms) {
          ms.push_back(sev::MsSsim(ref.frame(i), dist.frame(i)));
          csv << FormatMetric(ms.back());
        }
        csv << ",\n";
      }
      csv << "mean,";
      if (want_psnr) csv << FormatMetric(sev::Summarize(psnr).mean);
      csv << ",";
      if (want_ssim) csv << FormatMetric(sev::Summarize(ssim).mean);
      csv << ",";
      if (want_ms) csv << FormatMetric(sev::Summarize(ms).mean);
      csv << ",\n";
      WriteText(metric_out, csv.str());
    } else if (*sweep) {
      const sev::VideoSequence video = sweep_input.Load();
      sev::SweepConfig config;
      config.alphas = ParseList<double>(alphas);
      config.scales = ParseList<int>(scales);
      config.ks = ParseList<int>(ks);
      config.qualities = ParseList<int>(qualities);
      config.canny = {static_cast<uint8_t>(sweep_low),
                      static_cast<uint8_t>(sweep_high)};
      config.kmeans_seed = sweep_seed;
      if (!recon_dir.empty()) config.reconstruction_dir = recon_dir;
      const auto codec = sweep_codec.Make(sweep_codec.id(), video.fps());
      const auto rows = sev::RunSweep(video, config, *codec);
      WriteText(sweep_out, sev::SweepToCsv(rows));
      if (!gnuplot.empty()) WriteText(gnuplot, sev::SweepToGnuplot(rows));
    }
  } catch (const sev::Error& e) {
    std::cerr << "sev: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "sev: unexpected error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
