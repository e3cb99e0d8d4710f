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

// Rate-distortion sweeps over (alpha, scale, k, quality).

#ifndef SEV_RD_SWEEP_H_
#define SEV_RD_SWEEP_H_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "sev/container.h"
#include "sev/frame.h"
#include "sev/key_codec.h"

namespace sev {

struct SweepConfig {
  std::vector<double> alphas = {0.01};
  std::vector<int> scales = {8};
  std::vector<int> ks = {8};
  std::vector<int> qualities = {23};
  CannyThresholds canny;
  uint64_t kmeans_seed = 0;
  // Optional. Reconstructions for a grid point live in
  // <reconstruction_dir>/<GridPointName(...)>/ as numbered PNGs.
  std::optional<std::filesystem::path> reconstruction_dir;
};

struct SweepRow {
  double alpha = 0;
  int scale = 0;
  int k = 0;
  int quality = 0;
  BitrateReport bitrate;
  bool symmetric = false;
  std::optional<double> psnr;
  std::optional<double> ssim;
  std::optional<double> msssim;
  std::string error;
};

// Rows in lexicographic order of (alpha, scale, k, quality), each grid sorted
// ascending. Per-point failures land in SweepRow::error.
std::vector<SweepRow> RunSweep(const VideoSequence& video,
                               const SweepConfig& config,
                               const KeyFrameCodec& codec);

// Directory name for a grid point, e.g. "a0.01_s8_k8_q23".
std::string GridPointName(double alpha, int scale, int k, int quality);

inline constexpr const char* kSweepCsvHeader =
    "alpha,scale,k,quality,kbps_total,kbps_key,kbps_g,psnr,ssim,msssim,vmaf,"
    "error";

std::string SweepToCsv(const std::vector<SweepRow>& rows);
// Whitespace-separated columns with a '#' header line, for gnuplot.
std::string SweepToGnuplot(const std::vector<SweepRow>& rows);

}  // namespace sev

#endif  // SEV_RD_SWEEP_H_
