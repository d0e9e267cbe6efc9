// audio/wav-io.cc

// Copyright 2026  Clearwave Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#include "audio/wav-io.h"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <vector>

namespace clearwave {

namespace {

constexpr std::uint16_t kFormatPcm = 1;
constexpr std::uint16_t kFormatFloat = 3;

struct FmtChunk {
  std::uint16_t format = 0;
  std::uint16_t channels = 0;
  std::uint32_t sample_rate = 0;
  std::uint16_t bits_per_sample = 0;
};

template <typename T>
T ReadScalar(std::istream &is, const char *what) {
  T v{};
  is.read(reinterpret_cast<char *>(&v), sizeof v);
  if (static_cast<std::size_t>(is.gcount()) != sizeof v)
    throw FormatError(std::string("wav: truncated ") + what);
  return v;
}

template <typename T>
void WriteScalar(std::ostream &os, T v) {
  os.write(reinterpret_cast<const char *>(&v), sizeof v);
}

}  // namespace

AudioBuffer ReadWav(const std::string &path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw DataError("wav: cannot open: " + path);

  char tag[4];
  is.read(tag, 4);
  if (is.gcount() != 4 || std::memcmp(tag, "RIFF", 4) != 0)
    throw FormatError("wav: missing RIFF header: " + path);
  ReadScalar<std::uint32_t>(is, "riff size");
  is.read(tag, 4);
  if (is.gcount() != 4 || std::memcmp(tag, "WAVE", 4) != 0)
    throw FormatError("wav: not a WAVE file: " + path);

  FmtChunk fmt;
  bool have_fmt = false;
  std::vector<char> data;

  while (is.read(tag, 4)) {
    const std::uint32_t chunk_size = ReadScalar<std::uint32_t>(is, "chunk size");
    if (std::memcmp(tag, "fmt ", 4) == 0) {
      if (chunk_size < 16) throw FormatError("wav: fmt chunk too small");
      fmt.format = ReadScalar<std::uint16_t>(is, "fmt");
      fmt.channels = ReadScalar<std::uint16_t>(is, "fmt");
      fmt.sample_rate = ReadScalar<std::uint32_t>(is, "fmt");
      ReadScalar<std::uint32_t>(is, "fmt");  // byte rate
      ReadScalar<std::uint16_t>(is, "fmt");  // block align
      fmt.bits_per_sample = ReadScalar<std::uint16_t>(is, "fmt");
      is.ignore(chunk_size - 16);
      have_fmt = true;
    } else if (std::memcmp(tag, "data", 4) == 0) {
      data.resize(chunk_size);
      is.read(data.data(), chunk_size);
      if (static_cast<std::uint32_t>(is.gcount()) != chunk_size)
        throw FormatError("wav: truncated data chunk: " + path);
    } else {
      is.ignore(chunk_size + (chunk_size & 1));  // chunks are 2-byte aligned
    }
  }

  if (!have_fmt) throw FormatError("wav: missing fmt chunk: " + path);
  if (fmt.channels == 0 || fmt.sample_rate == 0)
    throw FormatError("wav: bad fmt fields: " + path);

  const bool pcm16 = fmt.format == kFormatPcm && fmt.bits_per_sample == 16;
  const bool f32 = fmt.format == kFormatFloat && fmt.bits_per_sample == 32;
  if (!pcm16 && !f32)
    throw UnsupportedError("wav: only PCM16 and float32 are supported: " +
                           path);

  const std::size_t bytes_per_sample = pcm16 ? 2 : 4;
  const std::size_t frame_bytes = bytes_per_sample * fmt.channels;
  const std::size_t frames = data.size() / frame_bytes;

  AudioBuffer buf(fmt.channels, frames, static_cast<int>(fmt.sample_rate));
  const char *p = data.data();
  for (std::size_t i = 0; i < frames; ++i) {
    for (int c = 0; c < fmt.channels; ++c) {
      double v;
      if (pcm16) {
        std::int16_t s;
        std::memcpy(&s, p, 2);
        p += 2;
        v = s / 32768.0;
      } else {
        float f;
        std::memcpy(&f, p, 4);
        p += 4;
        v = f;
      }
      buf.channels[c][i] = v;
    }
  }
  return buf;
}

void WriteWav(const AudioBuffer &buffer, const std::string &path,
              WavEncoding encoding, bool *clipped) {
  buffer.CheckConsistent();
  if (clipped) *clipped = false;

  const int channels = buffer.num_channels();
  const std::size_t frames = buffer.length();
  const std::size_t bytes_per_sample =
      encoding == WavEncoding::kPcm16 ? 2 : 4;
  const std::uint32_t data_size =
      static_cast<std::uint32_t>(frames * channels * bytes_per_sample);

  std::ofstream os(path, std::ios::binary);
  if (!os) throw DataError("wav: cannot open for writing: " + path);

  os.write("RIFF", 4);
  WriteScalar<std::uint32_t>(os, 36 + data_size);
  os.write("WAVE", 4);
  os.write("fmt ", 4);
  WriteScalar<std::uint32_t>(os, 16);
  WriteScalar<std::uint16_t>(
      os, encoding == WavEncoding::kPcm16 ? kFormatPcm : kFormatFloat);
  WriteScalar<std::uint16_t>(os, static_cast<std::uint16_t>(channels));
  WriteScalar<std::uint32_t>(os, static_cast<std::uint32_t>(buffer.sample_rate));
  WriteScalar<std::uint32_t>(
      os, static_cast<std::uint32_t>(buffer.sample_rate * channels *
                                     bytes_per_sample));
  WriteScalar<std::uint16_t>(
      os, static_cast<std::uint16_t>(channels * bytes_per_sample));
  WriteScalar<std::uint16_t>(os, static_cast<std::uint16_t>(8 * bytes_per_sample));
  os.write("data", 4);
  WriteScalar<std::uint32_t>(os, data_size);

  for (std::size_t i = 0; i < frames; ++i) {
    for (int c = 0; c < channels; ++c) {
      double v = buffer.channels[c][i];
      if (!std::isfinite(v)) throw DataError("wav: non-finite sample");
      if (v > 1.0 || v < -1.0) {
        v = std::clamp(v, -1.0, 1.0);
        if (clipped) *clipped = true;
      }
      if (encoding == WavEncoding::kPcm16) {
        const double scaled = std::round(v * 32768.0);
        const std::int16_t s = static_cast<std::int16_t>(
            std::clamp(scaled, -32768.0, 32767.0));
        WriteScalar(os, s);
      } else {
        WriteScalar(os, static_cast<float>(v));
      }
    }
  }
  if (!os) throw DataError("wav: write failed: " + path);
}

}  // namespace clearwave
