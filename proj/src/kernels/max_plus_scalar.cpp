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

#include <cstddef>

#include "gvks/kernels/max_plus.hpp"

namespace gvks::kernels {

void max_plus_scalar(std::span<double> acc, std::span<const double> src,
                     double add) {
  const std::size_t n = acc.size();
  double* a = acc.data();
  const double* s = src.data();
  for (std::size_t t = 0; t < n; ++t) {
    const double cand = s[t] + add;
    // Keep the existing entry on ties and NaN-free inputs, like _mm256_max_pd.
    a[t] = a[t] < cand ? cand : a[t];
  }
}

}  // namespace gvks::kernels
