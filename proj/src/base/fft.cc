// base/fft.cc

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

#include "base/fft.h"

#include <fftw3.h>

#include <algorithm>
#include <cstring>
#include <map>
#include <mutex>

#include "base/error.h"

namespace clearwave {

namespace {

// FFTW's planner is not thread-safe; executing plans is. Each thread keeps its
// own plans and buffers, planning under a global lock.
std::mutex &PlannerMutex() {
  static std::mutex m;
  return m;
}

struct PlanEntry {
  int n = 0;
  double *real = nullptr;
  fftw_complex *cplx = nullptr;
  fftw_plan forward = nullptr;
  fftw_plan backward = nullptr;

  explicit PlanEntry(int size) : n(size) {
    real = fftw_alloc_real(size);
    cplx = fftw_alloc_complex(size / 2 + 1);
    std::lock_guard<std::mutex> lock(PlannerMutex());
    forward = fftw_plan_dft_r2c_1d(size, real, cplx, FFTW_ESTIMATE);
    backward = fftw_plan_dft_c2r_1d(size, cplx, real, FFTW_ESTIMATE);
  }
  PlanEntry(const PlanEntry &) = delete;
  PlanEntry &operator=(const PlanEntry &) = delete;
  ~PlanEntry() {
    {
      std::lock_guard<std::mutex> lock(PlannerMutex());
      if (forward) fftw_destroy_plan(forward);
      if (backward) fftw_destroy_plan(backward);
    }
    fftw_free(real);
    fftw_free(cplx);
  }
};

PlanEntry &GetPlan(int fft_size) {
  thread_local std::map<int, std::unique_ptr<PlanEntry>> cache;
  auto it = cache.find(fft_size);
  if (it == cache.end())
    it = cache.emplace(fft_size, std::make_unique<PlanEntry>(fft_size)).first;
  return *it->second;
}

}  // namespace

std::vector<std::complex<double>> RealFft(std::span<const double> x,
                                          int fft_size) {
  CLEARWAVE_CHECK_ARG(fft_size > 0 && fft_size % 2 == 0,
                      "RealFft: fft_size must be positive and even");
  CLEARWAVE_CHECK_ARG(static_cast<int>(x.size()) <= fft_size,
                      "RealFft: input longer than fft_size");
  PlanEntry &p = GetPlan(fft_size);
  std::copy(x.begin(), x.end(), p.real);
  std::fill(p.real + x.size(), p.real + fft_size, 0.0);
  fftw_execute(p.forward);
  const int bins = fft_size / 2 + 1;
  std::vector<std::complex<double>> out(bins);
  std::memcpy(out.data(), p.cplx, sizeof(fftw_complex) * bins);
  return out;
}

std::vector<double> RealIfft(std::span<const std::complex<double>> spectrum,
                             int fft_size) {
  CLEARWAVE_CHECK_ARG(fft_size > 0 && fft_size % 2 == 0,
                      "RealIfft: fft_size must be positive and even");
  const int bins = fft_size / 2 + 1;
  CLEARWAVE_CHECK_ARG(static_cast<int>(spectrum.size()) == bins,
                      "RealIfft: expected fft_size/2+1 bins");
  PlanEntry &p = GetPlan(fft_size);
  std::memcpy(p.cplx, spectrum.data(), sizeof(fftw_complex) * bins);
  fftw_execute(p.backward);
  std::vector<double> out(fft_size);
  const double scale = 1.0 / fft_size;
  for (int i = 0; i < fft_size; ++i) out[i] = p.real[i] * scale;
  return out;
}

}  // namespace clearwave
