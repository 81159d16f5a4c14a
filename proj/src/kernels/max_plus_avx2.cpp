// Copyright 2026 The gvks Authors
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

// Compiled with -mavx2 on x86-64; never called unless the CPU reports AVX2.

#include <cstddef>

#include "gvks/kernels/max_plus.hpp"

#if defined(__AVX2__)
#include <immintrin.h>
#endif

namespace gvks::kernels {

#if defined(__AVX2__)

void max_plus_avx2(std::span<double> acc, std::span<const double> src,
                   double add) {
  const std::size_t n = acc.size();
  double* a = acc.data();
  const double* s = src.data();
  const __m256d vadd = _mm256_set1_pd(add);
  std::size_t t = 0;
  for (; t + 8 <= n; t += 8) {
    __m256d c0 = _mm256_add_pd(_mm256_loadu_pd(s + t), vadd);
    __m256d c1 = _mm256_add_pd(_mm256_loadu_pd(s + t + 4), vadd);
    // max_pd(x, y) = x > y ? x : y, so the accumulator wins ties.
    _mm256_storeu_pd(a + t, _mm256_max_pd(c0, _mm256_loadu_pd(a + t)));
    _mm256_storeu_pd(a + t + 4, _mm256_max_pd(c1, _mm256_loadu_pd(a + t + 4)));
  }
  for (; t + 4 <= n; t += 4) {
    __m256d c = _mm256_add_pd(_mm256_loadu_pd(s + t), vadd);
    _mm256_storeu_pd(a + t, _mm256_max_pd(c, _mm256_loadu_pd(a + t)));
  }
  for (; t < n; ++t) {
    const double cand = s[t] + add;
    a[t] = a[t] < cand ? cand : a[t];
  }
}

#else

void max_plus_avx2(std::span<double> acc, std::span<const double> src,
                   double add) {
  max_plus_scalar(acc, src, add);
}

#endif

}  // namespace gvks::kernels
