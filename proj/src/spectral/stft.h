// spectral/stft.h

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

#ifndef CLEARWAVE_SPECTRAL_STFT_H_
#define CLEARWAVE_SPECTRAL_STFT_H_

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "base/error.h"

namespace clearwave {

enum class WindowKind { kHann, kRectangular };

// Complex STFT frames: bins x frames, one-sided (frame_size/2 + 1 bins).
// The forward DFT is unnormalized (FFTW convention); frame energy relates to
// spectrum energy as sum_n |v(n)|^2 = (1/N) * (|X_0|^2 + 2*sum_mid |X_b|^2 +
// |X_{N/2}|^2).
struct Spectrogram {
  int frame_size = 0;
  int hop = 0;
  int sample_rate = 0;
  Eigen::MatrixXcd values;  // bins x frames

  int bins() const { return frame_size / 2 + 1; }
  int frames() const { return static_cast<int>(values.cols()); }

  Eigen::MatrixXd Magnitudes() const { return values.cwiseAbs(); }
  Eigen::MatrixXd Phases() const {
    return values.unaryExpr([](const std::complex<double> &z) {
      return std::arg(z);
    });
  }
};

std::vector<double> MakeWindow(WindowKind kind, int size);

// Frames the signal with the given analysis window; T = floor((len -
// frame_size)/hop) + 1. frame_size must be a power of two and hop <= frame
// size. Throws DataError if the signal is shorter than one frame.
Spectrogram Stft(const std::vector<double> &signal, int frame_size, int hop,
                 WindowKind window = WindowKind::kHann, int sample_rate = 0);

// Weighted overlap-add inverse with per-sample window-energy normalization.
// Exact (to rounding) wherever the window pair covers the signal; throws
// ConfigError when the window/hop pair leaves zero-coverage gaps (e.g. Hann
// with hop == frame_size). `length` trims or zero-pads the tail; pass 0 for
// the natural length (frame_size + hop * (T - 1)).
std::vector<double> Istft(const Spectrogram &spec,
                          WindowKind window = WindowKind::kHann,
                          std::size_t length = 0);

}  // namespace clearwave

#endif  // CLEARWAVE_SPECTRAL_STFT_H_
