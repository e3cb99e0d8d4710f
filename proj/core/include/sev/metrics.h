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

// Full-reference quality metrics. PSNR is computed jointly over the RGB
// samples; SSIM and MS-SSIM run on the BT.601 luma plane.

#ifndef SEV_METRICS_H_
#define SEV_METRICS_H_

#include <array>
#include <vector>

#include "sev/frame.h"

namespace sev {

inline constexpr double kPsnrCapDb = 100.0;

inline constexpr int kSsimWindow = 11;
inline constexpr double kSsimSigma = 1.5;
inline constexpr double kSsimK1 = 0.01;
inline constexpr double kSsimK2 = 0.03;
inline constexpr double kSsimL = 255.0;

inline constexpr int kMsSsimScales = 5;
inline constexpr std::array<double, kMsSsimScales> kMsSsimWeights = {
    0.0448, 0.2856, 0.3001, 0.2363, 0.1333};
// Smallest side accepted by MsSsim: the coarsest scale must still fit one
// window.
inline constexpr int kMsSsimMinSide = kSsimWindow << (kMsSsimScales - 1);

// 10 log10(255^2 / MSE), capped at kPsnrCapDb.
double Psnr(const Frame& ref, const Frame& dist);

// Mean SSIM over every valid 11x11 window position.
double Ssim(const Frame& ref, const Frame& dist);

// Five-scale MS-SSIM with 2x2 average pooling between scales. Scales 1-4
// contribute their mean contrast-structure term, the coarsest scale its mean
// SSIM; negative terms are clamped to zero before exponentiation.
double MsSsim(const Frame& ref, const Frame& dist);

// Plane-level entry points used by the frame versions.
struct SsimComponents {
  double ssim = 0;  // mean of l * cs
  double cs = 0;    // mean contrast-structure term
  double l = 0;     // mean luminance term
};
SsimComponents SsimPlane(const std::vector<double>& a,
                         const std::vector<double>& b, int width, int height);

struct MetricResult {
  std::vector<double> per_frame;
  double mean = 0;
};

MetricResult Summarize(std::vector<double> per_frame);

}  // namespace sev

#endif  // SEV_METRICS_H_
