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

#include "sev/chunk.h"

#include <string>

#include "sev/bit_io.h"
#include "sev/errors.h"

namespace sev {
namespace {

// Fixed part of the serialized chunk, excluding the label table.
constexpr size_t kChunkFixedBytes = 1 + 4 + 1 + kRunAlphabetSize + 8;

uint8_t EncodeSymbolCount(int k) { return static_cast<uint8_t>(k & 0xFF); }
int DecodeSymbolCount(uint8_t v) { return v == 0 ? 256 : v; }

[[noreturn]] void Corrupt(const std::string& what) {
  throw CorruptStreamError("corrupt chunk: " + what);
}

}  // namespace

size_t CompressedChunk::byte_size() const {
  return kChunkFixedBytes + label_lengths.size() + payload.size();
}

std::vector<uint8_t> SpatialScan(std::span<const SoftEdgeMap> maps) {
  std::vector<uint8_t> out;
  if (maps.empty()) return out;
  out.reserve(maps.size() * maps[0].pixel_count());
  for (const SoftEdgeMap& m : maps) {
    out.insert(out.end(), m.labels().begin(), m.labels().end());
  }
  return out;
}

std::vector<uint8_t> TemporalScan(std::span<const SoftEdgeMap> maps) {
  std::vector<uint8_t> out;
  if (maps.empty()) return out;
  const size_t pixels = maps[0].pixel_count();
  out.resize(maps.size() * pixels);
  for (size_t t = 0; t < maps.size(); ++t) {
    auto labels = maps[t].labels();
    for (size_t p = 0; p < pixels; ++p) out[p * maps.size() + t] = labels[p];
  }
  return out;
}

CompressedChunk CompressChunk(std::span<const SoftEdgeMap> maps) {
  if (maps.empty()) throw ArgumentError("cannot compress an empty map list");
  const SoftEdgeMap& first = maps[0];
  for (size_t i = 1; i < maps.size(); ++i) {
    if (maps[i].width() != first.width() ||
        maps[i].height() != first.height() || maps[i].k() != first.k()) {
      throw ArgumentError("map " + std::to_string(i) +
                          " differs in dimensions or k from map 0");
    }
  }

  CompressedChunk chunk;
  chunk.frame_count = static_cast<uint32_t>(maps.size());
  chunk.width = first.width();
  chunk.height = first.height();
  chunk.k = first.k();

  std::vector<uint8_t> labels = SpatialScan(maps);
  if (maps.size() > 1) {
    std::vector<uint8_t> temporal = TemporalScan(maps);
    if (RleTokenCount(temporal) < RleTokenCount(labels)) {
      labels = std::move(temporal);
      chunk.scan_mode = ScanMode::kTemporal;
    }
  }
  const std::vector<RunToken> tokens = RleTokenize(labels);

  std::vector<uint64_t> label_freq(chunk.k, 0);
  std::vector<uint64_t> run_freq(kRunAlphabetSize, 0);
  for (const RunToken& t : tokens) {
    ++label_freq[t.label];
    ++run_freq[t.run];
  }
  const HuffmanTable label_table = HuffmanBuild(label_freq);
  const HuffmanTable run_table = HuffmanBuild(run_freq);

  BitWriter bits;
  for (const RunToken& t : tokens) {
    label_table.Encode(t.label, bits);
    run_table.Encode(t.run, bits);
  }
  chunk.label_lengths = label_table.lengths();
  chunk.run_lengths = run_table.lengths();
  chunk.payload_bit_count = bits.bit_count();
  chunk.payload = bits.TakeBytes();
  return chunk;
}

std::vector<SoftEdgeMap> DecompressChunk(const CompressedChunk& chunk) {
  if (chunk.frame_count == 0) Corrupt("frame_count is zero");
  if (chunk.width <= 0 || chunk.height <= 0) Corrupt("bad map dimensions");
  if (chunk.k < kMinSymbols || chunk.k > kMaxSymbols) Corrupt("bad k");
  if (chunk.label_lengths.size() != static_cast<size_t>(chunk.k)) {
    Corrupt("label table size differs from k");
  }
  if (chunk.run_lengths.size() != kRunAlphabetSize) {
    Corrupt("run table must have 256 entries");
  }
  if (!HuffmanTable::ValidLengths(chunk.label_lengths)) {
    Corrupt("invalid label code lengths");
  }
  if (!HuffmanTable::ValidLengths(chunk.run_lengths)) {
    Corrupt("invalid run code lengths");
  }
  if (chunk.run_lengths[0] != 0) Corrupt("run table codes a zero run");
  if (chunk.payload.size() != (chunk.payload_bit_count + 7) / 8) {
    Corrupt("truncated payload: " + std::to_string(chunk.payload.size()) +
            " bytes for " + std::to_string(chunk.payload_bit_count) + " bits");
  }
  if (const unsigned tail = chunk.payload_bit_count & 7; tail != 0) {
    const uint8_t mask = static_cast<uint8_t>(0xFFu >> tail);
    if (chunk.payload.back() & mask) Corrupt("nonzero padding bits");
  }

  const HuffmanTable label_table =
      HuffmanTable::FromLengths(chunk.label_lengths);
  const HuffmanTable run_table = HuffmanTable::FromLengths(chunk.run_lengths);

  const size_t pixels = static_cast<size_t>(chunk.width) * chunk.height;
  const uint64_t total = uint64_t{chunk.frame_count} * pixels;
  std::vector<uint8_t> labels;
  labels.reserve(total);
  BitReader in(chunk.payload, chunk.payload_bit_count);
  try {
    while (in.remaining() > 0) {
      const int label = label_table.Decode(in);
      const int run = run_table.Decode(in);
      if (labels.size() + run > total) {
        Corrupt("length mismatch: tokens expand past " +
                std::to_string(total) + " labels");
      }
      labels.insert(labels.end(), run, static_cast<uint8_t>(label));
    }
  } catch (const CorruptStreamError& e) {
    const std::string what = e.what();
    if (what.rfind("corrupt chunk", 0) == 0) throw;
    Corrupt(what);
  }
  if (labels.size() != total) {
    Corrupt("length mismatch: tokens expand to " +
            std::to_string(labels.size()) + " labels, declared " +
            std::to_string(total));
  }

  std::vector<SoftEdgeMap> maps;
  maps.reserve(chunk.frame_count);
  const size_t frames = chunk.frame_count;
  for (size_t t = 0; t < frames; ++t) {
    std::vector<uint8_t> frame(pixels);
    if (chunk.scan_mode == ScanMode::kSpatial) {
      std::copy_n(labels.begin() + t * pixels, pixels, frame.begin());
    } else {
      for (size_t p = 0; p < pixels; ++p) frame[p] = labels[p * frames + t];
    }
    maps.emplace_back(chunk.width, chunk.height, chunk.k, std::move(frame));
  }
  return maps;
}

std::vector<uint8_t> SerializeChunk(const CompressedChunk& chunk) {
  ByteWriter out;
  out.U8(static_cast<uint8_t>(chunk.scan_mode));
  out.U32(chunk.frame_count);
  out.U8(EncodeSymbolCount(chunk.k));
  out.Bytes(chunk.label_lengths);
  out.Bytes(chunk.run_lengths);
  out.U64(chunk.payload_bit_count);
  out.Bytes(chunk.payload);
  return out.Take();
}

CompressedChunk ParseChunk(std::span<const uint8_t> bytes, int width,
                           int height) {
  ByteReader in(bytes, "chunk", ByteReader::Failure::kCorrupt);
  CompressedChunk chunk;
  chunk.width = width;
  chunk.height = height;
  const uint8_t mode = in.U8();
  if (mode > 1) in.Fail("unknown scan mode " + std::to_string(mode));
  chunk.scan_mode = static_cast<ScanMode>(mode);
  chunk.frame_count = in.U32();
  chunk.k = DecodeSymbolCount(in.U8());
  auto label_lengths = in.Bytes(chunk.k);
  chunk.label_lengths.assign(label_lengths.begin(), label_lengths.end());
  auto run_lengths = in.Bytes(kRunAlphabetSize);
  chunk.run_lengths.assign(run_lengths.begin(), run_lengths.end());
  chunk.payload_bit_count = in.U64();
  const uint64_t payload_bytes = (chunk.payload_bit_count + 7) / 8;
  if (payload_bytes > in.remaining()) {
    in.Fail("truncated payload: " + std::to_string(payload_bytes) +
            " bytes declared, " + std::to_string(in.remaining()) + " present");
  }
  if (payload_bytes < in.remaining()) {
    in.Fail(std::to_string(in.remaining() - payload_bytes) +
            " trailing bytes after payload");
  }
  auto payload = in.Bytes(static_cast<size_t>(payload_bytes));
  chunk.payload.assign(payload.begin(), payload.end());
  return chunk;
}

double ChunkBitsPerPixel(const CompressedChunk& chunk) {
  const double pixels = static_cast<double>(chunk.frame_count) * chunk.width *
                        chunk.height;
  return 8.0 * static_cast<double>(chunk.byte_size()) / pixels;
}

}  // namespace sev
