// base/threading.h

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

#ifndef CLEARWAVE_BASE_THREADING_H_
#define CLEARWAVE_BASE_THREADING_H_

#include <atomic>
#include <cstdint>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace clearwave {

namespace internal {
inline std::atomic<int> g_num_threads{0};  // 0 = use OpenMP default
}

inline int NumThreads() {
  int n = internal::g_num_threads.load(std::memory_order_relaxed);
  if (n > 0) return n;
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

// n <= 0 resets to the OpenMP default.
inline void SetNumThreads(int n) {
  internal::g_num_threads.store(n > 0 ? n : 0, std::memory_order_relaxed);
}

// Data-parallel loop over [0, n). Iterations must be independent; callers that
// need deterministic reductions store per-index results and combine them in
// index order afterwards. With one thread (or without OpenMP) this is a plain
// serial loop, which doubles as the reference execution path in tests.
template <typename F>
void ParallelFor(std::int64_t n, F &&f) {
#ifdef _OPENMP
  const int threads = NumThreads();
  if (threads > 1 && n > 1) {
#pragma omp parallel for num_threads(threads) schedule(static)
    for (std::int64_t i = 0; i < n; ++i) f(i);
    return;
  }
#endif
  for (std::int64_t i = 0; i < n; ++i) f(i);
}

}  // namespace clearwave

#endif  // CLEARWAVE_BASE_THREADING_H_
