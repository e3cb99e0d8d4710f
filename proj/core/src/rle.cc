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

#include "sev/rle.h"

namespace sev {

std::vector<RunToken> RleTokenize(std::span<const uint8_t> labels) {
  std::vector<RunToken> tokens;
  size_t i = 0;
  while (i < labels.size()) {
    const uint8_t label = labels[i];
    size_t j = i + 1;
    while (j < labels.size() && labels[j] == label) ++j;
    size_t run = j - i;
    while (run > 0) {
      const size_t take = run > kMaxRun ? kMaxRun : run;
      tokens.push_back({label, static_cast<uint8_t>(take)});
      run -= take;
    }
    i = j;
  }
  return tokens;
}

size_t RleTokenCount(std::span<const uint8_t> labels) {
  size_t count = 0;
  size_t i = 0;
  while (i < labels.size()) {
    size_t j = i + 1;
    while (j < labels.size() && labels[j] == labels[i]) ++j;
    count += (j - i + kMaxRun - 1) / kMaxRun;
    i = j;
  }
  return count;
}

std::vector<uint8_t> RleExpand(std::span<const RunToken> tokens) {
  std::vector<uint8_t> out;
  for (const RunToken& t : tokens) out.insert(out.end(), t.run, t.label);
  return out;
}

}  // namespace sev
