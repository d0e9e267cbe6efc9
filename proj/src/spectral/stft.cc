// spectral/stft.cc

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

#include "spectral/stft.h"

#include <cmath>
#include <numbers>

#include "base/fft.h"
#include "base/threading.h"

namespace clearwave {

namespace {

bool IsPowerOfTwo(int n) { return n > 0 && (n & (n - 1)) == 0; }

}  // namespace

std::vector<double> MakeWindow(WindowKind kind, int size) {
  std::vector<double> w(size, 1.0);
  if (kind == WindowKind::kHann) {
    // periodic Hann
    for (int n = 0; n < size; ++n)
      w[n] = 0.5 * (1.0 - std::cos(2.0 * std::numbers::pi * n / size));
  }
  return w;
}

Spectrogram Stft(const std::vector<double> &signal, int frame_size, int hop,
                 WindowKind window, int sample_rate) {
  CLEARWAVE_CHECK_ARG(IsPowerOfTwo(frame_size),
                      "Stft: frame_size must be a power of two");
  CLEARWAVE_CHECK_ARG(hop > 0 && hop <= frame_size,
                      "Stft: need 0 < hop <= frame_size");
  if (signal.size() < static_cast<std::size_t>(frame_size))
    throw DataError("Stft: signal shorter than one frame");

  const int frames =
      static_cast<int>((signal.size() - frame_size) / hop) + 1;
  const int bins = frame_size / 2 + 1;
  const std::vector<double> win = MakeWindow(window, frame_size);

  Spectrogram spec;
  spec.frame_size = frame_size;
  spec.hop = hop;
  spec.sample_rate = sample_rate;
  spec.values.resize(bins, frames);

  ParallelFor(frames, [&](std::int64_t t) {
    std::vector<double> frame(frame_size);
    const std::size_t off = static_cast<std::size_t>(t) * hop;
    for (int n = 0; n < frame_size; ++n)
      frame[n] = signal[off + n] * win[n];
    const auto bins_t = RealFft(frame, frame_size);
    for (int b = 0; b < bins; ++b) spec.values(b, t) = bins_t[b];
  });
  return spec;
}

std::vector<double> Istft(const Spectrogram &spec, WindowKind window,
                          std::size_t length) {
  CLEARWAVE_CHECK_ARG(IsPowerOfTwo(spec.frame_size),
                      "Istft: frame_size must be a power of two");
  CLEARWAVE_CHECK_ARG(spec.hop > 0 && spec.hop <= spec.frame_size,
                      "Istft: need 0 < hop <= frame_size");
  const int frames = spec.frames();
  const int n = spec.frame_size;
  const std::vector<double> win = MakeWindow(window, n);

  const std::size_t natural =
      frames > 0 ? static_cast<std::size_t>(n) + spec.hop * (frames - 1) : 0;
  std::vector<double> acc(natural, 0.0);
  std::vector<double> norm(natural, 0.0);

  // Frame inverse FFTs are independent; the overlap-add accumulation is kept
  // serial because frames share output samples.
  std::vector<std::vector<double>> time_frames(frames);
  ParallelFor(frames, [&](std::int64_t t) {
    std::vector<std::complex<double>> col(spec.bins());
    for (int b = 0; b < spec.bins(); ++b) col[b] = spec.values(b, t);
    time_frames[t] = RealIfft(col, n);
  });

  for (int t = 0; t < frames; ++t) {
    const std::size_t off = static_cast<std::size_t>(t) * spec.hop;
    for (int i = 0; i < n; ++i) {
      acc[off + i] += win[i] * time_frames[t][i];
      norm[off + i] += win[i] * win[i];
    }
  }

  // A window/hop pair is usable iff every sample past the first frame has
  // nonzero window energy. Periodic Hann is zero only at its first sample, so
  // the head sample is an edge effect, but hop == frame_size would leave a
  // gap at every frame boundary.
  constexpr double kMinCoverage = 1e-8;
  for (std::size_t i = 0; i < natural; ++i) {
    if (norm[i] > kMinCoverage) {
      acc[i] /= norm[i];
    } else {
      if (i >= static_cast<std::size_t>(n))
        throw ConfigError(
            "Istft: window/hop pair is not overlap-add invertible");
      acc[i] = 0.0;
    }
  }

  if (length == 0) length = natural;
  acc.resize(length, 0.0);
  return acc;
}

}  // namespace clearwave
