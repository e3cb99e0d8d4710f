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

#ifndef SEV_DOWNSAMPLE_H_
#define SEV_DOWNSAMPLE_H_

#include "sev/frame.h"

namespace sev {

// Integer box-average reduction by `scale` per axis. The output is
// ceil(W/scale) x ceil(H/scale); partial blocks on the right and bottom are
// filled by replicating the last column/row. Each channel mean is rounded
// half-up in integer arithmetic.
Frame Downsample(const Frame& frame, int scale);

// Output size along one axis.
constexpr int DownsampledExtent(int extent, int scale) {
  return (extent + scale - 1) / scale;
}

}  // namespace sev

#endif  // SEV_DOWNSAMPLE_H_
