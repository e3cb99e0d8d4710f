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

#include "sev/huffman.h"

#include <algorithm>
#include <numeric>
#include <queue>
#include <string>
#include <tuple>

#include "sev/errors.h"

namespace sev {

uint64_t KraftNumerator(std::span<const uint8_t> lengths, int max_len) {
  uint64_t sum = 0;
  for (uint8_t len : lengths) {
    if (len != 0 && len <= max_len) sum += uint64_t{1} << (max_len - len);
  }
  return sum;
}

bool HuffmanTable::ValidLengths(std::span<const uint8_t> lengths) {
  bool any = false;
  for (uint8_t len : lengths) {
    if (len > kMaxCodeLength) return false;
    any |= len != 0;
  }
  return any && KraftNumerator(lengths, kMaxCodeLength) <=
                    (uint64_t{1} << kMaxCodeLength);
}

HuffmanTable HuffmanTable::FromLengths(std::vector<uint8_t> lengths) {
  if (!ValidLengths(lengths)) {
    throw ArgumentError("code lengths violate the Kraft inequality, exceed " +
                        std::to_string(kMaxCodeLength) +
                        " bits, or define no symbol");
  }
  HuffmanTable t;
  t.lengths_ = std::move(lengths);
  t.codes_.assign(t.lengths_.size(), 0);
  t.count_per_length_.assign(kMaxCodeLength + 1, 0);
  for (uint8_t len : t.lengths_) {
    if (len) ++t.count_per_length_[len];
  }

  // Canonical assignment: codes of each length are consecutive, in symbol
  // order, starting where the previous length left off.
  std::vector<uint16_t> next(kMaxCodeLength + 2, 0);
  uint32_t code = 0;
  for (int len = 1; len <= kMaxCodeLength; ++len) {
    code = (code + t.count_per_length_[len - 1]) << 1;
    next[len] = static_cast<uint16_t>(code);
  }
  for (size_t s = 0; s < t.lengths_.size(); ++s) {
    const uint8_t len = t.lengths_[s];
    if (len) t.codes_[s] = next[len]++;
  }

  t.sorted_symbols_.reserve(t.lengths_.size());
  for (int len = 1; len <= kMaxCodeLength; ++len) {
    for (size_t s = 0; s < t.lengths_.size(); ++s) {
      if (t.lengths_[s] == len) {
        t.sorted_symbols_.push_back(static_cast<uint16_t>(s));
      }
    }
  }
  return t;
}

int HuffmanTable::Decode(BitReader& in) const {
  int code = 0;
  int first = 0;
  int index = 0;
  for (int len = 1; len <= kMaxCodeLength; ++len) {
    code |= in.ReadBit();
    const int count = count_per_length_[len];
    if (code - count < first) return sorted_symbols_[index + (code - first)];
    index += count;
    first = (first + count) << 1;
    code <<= 1;
  }
  throw CorruptStreamError("code word not in table");
}

uint64_t HuffmanTable::Cost(std::span<const uint64_t> frequencies) const {
  uint64_t cost = 0;
  for (size_t s = 0; s < frequencies.size() && s < lengths_.size(); ++s) {
    cost += frequencies[s] * lengths_[s];
  }
  return cost;
}

std::vector<uint8_t> HuffmanCodeLengths(std::span<const uint64_t> frequencies) {
  const size_t n = frequencies.size();
  std::vector<uint8_t> lengths(n, 0);
  size_t present = 0;
  size_t only = 0;
  for (size_t s = 0; s < n; ++s) {
    if (frequencies[s]) {
      ++present;
      only = s;
    }
  }
  if (present == 0) {
    throw ArgumentError("cannot build a Huffman code from all-zero counts");
  }
  if (present == 1) {
    lengths[only] = 1;
    return lengths;
  }

  // Node ids: leaves are their symbol, internal nodes n, n+1, ... in creation
  // order. Ordering by (weight, id) realizes the tie rule: leaves before
  // internal nodes, lower symbols first, older internal nodes first.
  using Entry = std::tuple<uint64_t, size_t>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap;
  std::vector<size_t> parent(n, 0);
  for (size_t s = 0; s < n; ++s) {
    if (frequencies[s]) heap.emplace(frequencies[s], s);
  }
  size_t next_id = n;
  while (heap.size() > 1) {
    const auto [wa, a] = heap.top();
    heap.pop();
    const auto [wb, b] = heap.top();
    heap.pop();
    parent.push_back(0);
    parent[a] = next_id;
    parent[b] = next_id;
    heap.emplace(wa + wb, next_id);
    ++next_id;
  }
  const size_t root = next_id - 1;

  // Parents always have larger ids, so depths resolve top-down.
  std::vector<uint32_t> depth(next_id, 0);
  for (size_t id = root; id-- > 0;) {
    if (id >= n || frequencies[id]) depth[id] = depth[parent[id]] + 1;
  }
  for (size_t s = 0; s < n; ++s) {
    if (frequencies[s]) {
      // Depth never exceeds present - 1 <= 255.
      lengths[s] = static_cast<uint8_t>(depth[s]);
    }
  }
  return lengths;
}

HuffmanTable HuffmanBuild(std::span<const uint64_t> frequencies) {
  std::vector<uint8_t> lengths = HuffmanCodeLengths(frequencies);
  const int longest = *std::max_element(lengths.begin(), lengths.end());
  if (longest > kMaxCodeLength) {
    // Move pairs of over-long leaves up: two leaves at depth i become one leaf
    // at i-1 plus, by splitting a shorter leaf at depth j, two leaves at j+1.
    std::vector<uint32_t> count(longest + 1, 0);
    for (uint8_t len : lengths) {
      if (len) ++count[len];
    }
    for (int i = longest; i > kMaxCodeLength; --i) {
      while (count[i] > 0) {
        int j = i - 2;
        while (count[j] == 0) --j;
        count[i] -= 2;
        count[i - 1] += 1;
        count[j + 1] += 2;
        count[j] -= 1;
      }
    }
    // Hand the new lengths out in the old order (shortest first, then by
    // symbol), so more frequent symbols keep the shorter codes.
    std::vector<size_t> order;
    for (size_t s = 0; s < lengths.size(); ++s) {
      if (lengths[s]) order.push_back(s);
    }
    std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) {
      return lengths[a] < lengths[b];
    });
    size_t pos = 0;
    for (int len = 1; len <= kMaxCodeLength; ++len) {
      for (uint32_t c = 0; c < count[len]; ++c) {
        lengths[order[pos++]] = static_cast<uint8_t>(len);
      }
    }
  }
  return HuffmanTable::FromLengths(std::move(lengths));
}

}  // namespace sev
