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

#include "sev/rd_sweep.h"

#include <algorithm>
#include <cstdio>
#include <exception>
#include <sstream>

#include "sev/errors.h"
#include "sev/metrics.h"
#include "sev/video_io.h"

namespace sev {
namespace {

template <typename T>
std::vector<T> SortedUnique(std::vector<T> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

std::string Fixed(double v, int digits = 6) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", digits, v);
  return buf;
}

std::string Compact(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%g", v);
  return buf;
}

std::string OptionalField(const std::optional<double>& v) {
  return v ? Fixed(*v) : "";
}

std::string CsvField(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += "\"\"";
    else if (c == '\n') out += ' ';
    else out += c;
  }
  return out + "\"";
}

void ScoreReconstructions(const VideoSequence& video,
                          const std::filesystem::path& dir, SweepRow& row) {
  const VideoSequence recon = LoadVideo(dir, video.fps());
  if (recon.size() != video.size()) {
    throw ArgumentError(dir.string() + ": holds " +
                        std::to_string(recon.size()) + " frames, expected " +
                        std::to_string(video.size()));
  }
  std::vector<double> psnr, ssim, msssim;
  const bool ms_ok =
      std::min(video.width(), video.height()) >= kMsSsimMinSide;
  for (size_t i = 0; i < video.size(); ++i) {
    const Frame& ref = video.frame(i);
    const Frame& dist = recon.frame(i);
    psnr.push_back(Psnr(ref, dist));
    ssim.push_back(Ssim(ref, dist));
    if (ms_ok) msssim.push_back(MsSsim(ref, dist));
  }
  row.psnr = Summarize(psnr).mean;
  row.ssim = Summarize(ssim).mean;
  if (ms_ok) row.msssim = Summarize(msssim).mean;
}

}  // namespace

std::string GridPointName(double alpha, int scale, int k, int quality) {
  return "a" + Compact(alpha) + "_s" + std::to_string(scale) + "_k" +
         std::to_string(k) + "_q" + std::to_string(quality);
}

std::vector<SweepRow> RunSweep(const VideoSequence& video,
                               const SweepConfig& config,
                               const KeyFrameCodec& codec) {
  std::vector<SweepRow> rows;
  for (double alpha : SortedUnique(config.alphas)) {
    for (int scale : SortedUnique(config.scales)) {
      for (int k : SortedUnique(config.ks)) {
        for (int quality : SortedUnique(config.qualities)) {
          SweepRow row;
          row.alpha = alpha;
          row.scale = scale;
          row.k = k;
          row.quality = quality;
          try {
            EncoderConfig enc;
            enc.alpha = alpha;
            enc.scale = scale;
            enc.k = k;
            enc.quality = quality;
            enc.canny = config.canny;
            enc.kmeans_seed = config.kmeans_seed;
            EncoderTap tap;
            const SevFile file = EncodeVideo(video, enc, codec, &tap);
            row.bitrate = ComputeBitrate(file);

            const SevFile parsed = ParseContainer(SerializeContainer(file));
            const DecodedSev decoded = DecodeSev(parsed, codec);
            row.symmetric = decoded.key_maps == tap.key_maps &&
                            decoded.g_maps == tap.g_maps;
            if (!row.symmetric) {
              row.error = "decoder soft edge maps differ from encoder";
            }

            if (config.reconstruction_dir) {
              const auto dir = *config.reconstruction_dir /
                               GridPointName(alpha, scale, k, quality);
              if (std::filesystem::is_directory(dir)) {
                ScoreReconstructions(video, dir, row);
              }
            }
          } catch (const std::exception& e) {
            row.error = e.what();
          }
          rows.push_back(std::move(row));
        }
      }
    }
  }
  return rows;
}

std::string SweepToCsv(const std::vector<SweepRow>& rows) {
  std::ostringstream out;
  out << kSweepCsvHeader << "\n";
  for (const SweepRow& r : rows) {
    out << Compact(r.alpha) << "," << r.scale << "," << r.k << ","
        << r.quality << "," << Fixed(r.bitrate.kbps_total) << ","
        << Fixed(r.bitrate.kbps_key) << "," << Fixed(r.bitrate.kbps_g) << ","
        << OptionalField(r.psnr) << "," << OptionalField(r.ssim) << ","
        << OptionalField(r.msssim) << ",," << CsvField(r.error) << "\n";
  }
  return out.str();
}

std::string SweepToGnuplot(const std::vector<SweepRow>& rows) {
  std::ostringstream out;
  out << "# alpha scale k quality kbps_total kbps_key kbps_g psnr ssim "
         "msssim\n";
  for (const SweepRow& r : rows) {
    if (!r.error.empty()) continue;
    auto col = [](const std::optional<double>& v) {
      return v ? Fixed(*v) : std::string("NaN");
    };
    out << Compact(r.alpha) << " " << r.scale << " " << r.k << " "
        << r.quality << " " << Fixed(r.bitrate.kbps_total) << " "
        << Fixed(r.bitrate.kbps_key) << " " << Fixed(r.bitrate.kbps_g) << " "
        << col(r.psnr) << " " << col(r.ssim) << " " << col(r.msssim) << "\n";
  }
  return out.str();
}

}  // namespace sev
