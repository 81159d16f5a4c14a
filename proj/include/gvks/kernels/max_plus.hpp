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

// Row kernel of the Vector-Max-GAP dynamic program:
//
//   acc[t] = max(acc[t], src[t] + add)   for t in [0, acc.size())
//
// There is a scalar reference and an AVX2 variant. Both perform one IEEE add
// and one max per element, so their results are bit-identical; the variant is
// picked once at runtime from CPU features and can be forced with the
// GVKS_KERNEL environment variable ("scalar" or "avx2").

#ifndef GVKS_KERNELS_MAX_PLUS_HPP_
#define GVKS_KERNELS_MAX_PLUS_HPP_

#include <span>
#include <string_view>

namespace gvks::kernels {

enum class Isa { kScalar, kAvx2 };

using MaxPlusFn = void (*)(std::span<double> acc, std::span<const double> src,
                           double add);

void max_plus_scalar(std::span<double> acc, std::span<const double> src,
                     double add);

// Only valid to call when avx2_supported() is true.
void max_plus_avx2(std::span<double> acc, std::span<const double> src,
                   double add);

bool avx2_supported();

// The kernel selected for this process.
Isa active_isa();
std::string_view isa_name(Isa isa);
MaxPlusFn max_plus_for(Isa isa);

inline void max_plus(std::span<double> acc, std::span<const double> src,
                     double add) {
  max_plus_for(active_isa())(acc, src, add);
}

}  // namespace gvks::kernels

#endif  // GVKS_KERNELS_MAX_PLUS_HPP_
