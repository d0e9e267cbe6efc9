// base/fft.h

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

#ifndef CLEARWAVE_BASE_FFT_H_
#define CLEARWAVE_BASE_FFT_H_

#include <complex>
#include <span>
#include <vector>

namespace clearwave {

inline int NextPow2(int n) {
  int p = 1;
  while (p < n) p <<= 1;
  return p;
}

// Forward real FFT (unnormalized, FFTW convention). The input is zero-padded
// to fft_size; returns the one-sided spectrum of fft_size/2 + 1 bins.
// fft_size must be even and >= x.size(). Thread-safe; plans are cached per
// thread and size.
std::vector<std::complex<double>> RealFft(std::span<const double> x,
                                          int fft_size);

// Inverse of RealFft, normalized by 1/fft_size so RealIfft(RealFft(x)) == x
// up to rounding. Expects fft_size/2 + 1 bins.
std::vector<double> RealIfft(std::span<const std::complex<double>> spectrum,
                             int fft_size);

}  // namespace clearwave

#endif  // CLEARWAVE_BASE_FFT_H_
