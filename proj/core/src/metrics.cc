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

#include "sev/metrics.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <utility>

#include "sev/errors.h"

namespace sev {
namespace {

void CheckSameSize(const Frame& a, const Frame& b) {
  if (a.width() != b.width() || a.height() != b.height()) {
    throw ArgumentError("metric inputs differ in size: " +
                        std::to_string(a.width()) + "x" +
                        std::to_string(a.height()) + " vs " +
                        std::to_string(b.width()) + "x" +
                        std::to_string(b.height()));
  }
}

std::vector<double> LumaSamples(const Frame& f) {
  const LumaPlane y = RgbToLuma(f);
  return {y.values().begin(), y.values().end()};
}

std::array<double, kSsimWindow> GaussianWindow() {
  std::array<double, kSsimWindow> w{};
  double sum = 0;
  for (int i = 0; i < kSsimWindow; ++i) {
    const double d = i - kSsimWindow / 2;
    w[i] = std::exp(-d * d / (2 * kSsimSigma * kSsimSigma));
    sum += w[i];
  }
  for (double& v : w) v /= sum;
  return w;
}

// Separable valid-mode filtering; output is (w-10) x (h-10).
std::vector<double> FilterValid(const std::vector<double>& in, int w, int h) {
  static const auto kWin = GaussianWindow();
  const int ow = w - kSsimWindow + 1;
  const int oh = h - kSsimWindow + 1;
  std::vector<double> rows(static_cast<size_t>(ow) * h);
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < ow; ++x) {
      double acc = 0;
      for (int i = 0; i < kSsimWindow; ++i) {
        acc += kWin[i] * in[static_cast<size_t>(y) * w + x + i];
      }
      rows[static_cast<size_t>(y) * ow + x] = acc;
    }
  }
  std::vector<double> out(static_cast<size_t>(ow) * oh);
  for (int y = 0; y < oh; ++y) {
    for (int x = 0; x < ow; ++x) {
      double acc = 0;
      for (int i = 0; i < kSsimWindow; ++i) {
        acc += kWin[i] * rows[static_cast<size_t>(y + i) * ow + x];
      }
      out[static_cast<size_t>(y) * ow + x] = acc;
    }
  }
  return out;
}

std::vector<double> Pool2x2(const std::vector<double>& in, int w, int h) {
  const int ow = w / 2;
  const int oh = h / 2;
  std::vector<double> out(static_cast<size_t>(ow) * oh);
  for (int y = 0; y < oh; ++y) {
    for (int x = 0; x < ow; ++x) {
      const size_t i = static_cast<size_t>(2 * y) * w + 2 * x;
      out[static_cast<size_t>(y) * ow + x] =
          (in[i] + in[i + 1] + in[i + w] + in[i + w + 1]) / 4.0;
    }
  }
  return out;
}

}  // namespace

double Psnr(const Frame& ref, const Frame& dist) {
  CheckSameSize(ref, dist);
  auto a = ref.pixels();
  auto b = dist.pixels();
  uint64_t sse = 0;
  for (size_t i = 0; i < a.size(); ++i) {
    const int64_t d = int64_t{a[i]} - b[i];
    sse += static_cast<uint64_t>(d * d);
  }
  if (sse == 0) return kPsnrCapDb;
  const double mse = static_cast<double>(sse) / static_cast<double>(a.size());
  return std::min(kPsnrCapDb, 10.0 * std::log10(255.0 * 255.0 / mse));
}

SsimComponents SsimPlane(const std::vector<double>& a,
                         const std::vector<double>& b, int width, int height) {
  if (width < kSsimWindow || height < kSsimWindow) {
    throw ArgumentError("SSIM needs at least 11x11 pixels, got " +
                        std::to_string(width) + "x" + std::to_string(height));
  }
  const size_t n = a.size();
  std::vector<double> aa(n), bb(n), ab(n);
  for (size_t i = 0; i < n; ++i) {
    aa[i] = a[i] * a[i];
    bb[i] = b[i] * b[i];
    ab[i] = a[i] * b[i];
  }
  const auto mu_a = FilterValid(a, width, height);
  const auto mu_b = FilterValid(b, width, height);
  const auto e_aa = FilterValid(aa, width, height);
  const auto e_bb = FilterValid(bb, width, height);
  const auto e_ab = FilterValid(ab, width, height);

  const double c1 = (kSsimK1 * kSsimL) * (kSsimK1 * kSsimL);
  const double c2 = (kSsimK2 * kSsimL) * (kSsimK2 * kSsimL);
  SsimComponents sum;
  for (size_t i = 0; i < mu_a.size(); ++i) {
    const double ma = mu_a[i], mb = mu_b[i];
    const double var_a = e_aa[i] - ma * ma;
    const double var_b = e_bb[i] - mb * mb;
    const double cov = e_ab[i] - ma * mb;
    const double l = (2 * ma * mb + c1) / (ma * ma + mb * mb + c1);
    const double cs = (2 * cov + c2) / (var_a + var_b + c2);
    sum.l += l;
    sum.cs += cs;
    sum.ssim += l * cs;
  }
  const double count = static_cast<double>(mu_a.size());
  return {sum.ssim / count, sum.cs / count, sum.l / count};
}

double Ssim(const Frame& ref, const Frame& dist) {
  CheckSameSize(ref, dist);
  return SsimPlane(LumaSamples(ref), LumaSamples(dist), ref.width(),
                   ref.height())
      .ssim;
}

double MsSsim(const Frame& ref, const Frame& dist) {
  CheckSameSize(ref, dist);
  if (std::min(ref.width(), ref.height()) < kMsSsimMinSide) {
    throw ArgumentError("MS-SSIM needs at least " +
                        std::to_string(kMsSsimMinSide) +
                        " pixels per side, got " + std::to_string(ref.width()) +
                        "x" + std::to_string(ref.height()));
  }
  std::vector<double> a = LumaSamples(ref);
  std::vector<double> b = LumaSamples(dist);
  int w = ref.width();
  int h = ref.height();
  double score = 1.0;
  for (int scale = 0; scale < kMsSsimScales; ++scale) {
    const SsimComponents c = SsimPlane(a, b, w, h);
    const bool last = scale == kMsSsimScales - 1;
    const double term = std::max(0.0, last ? c.ssim : c.cs);
    score *= std::pow(term, kMsSsimWeights[scale]);
    if (!last) {
      a = Pool2x2(a, w, h);
      b = Pool2x2(b, w, h);
      w /= 2;
      h /= 2;
    }
  }
  return score;
}

MetricResult Summarize(std::vector<double> per_frame) {
  MetricResult r;
  r.per_frame = std::move(per_frame);
  if (!r.per_frame.empty()) {
    r.mean = std::accumulate(r.per_frame.begin(), r.per_frame.end(), 0.0) /
             static_cast<double>(r.per_frame.size());
  }
  return r;
}

}  // namespace sev
