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

#include <cstdlib>
#include <string_view>

#include "gvks/kernels/max_plus.hpp"

namespace gvks::kernels {

bool avx2_supported() {
#if defined(GVKS_HAVE_AVX2_KERNEL) && (defined(__x86_64__) || defined(__i386__))
  static const bool supported = [] {
    __builtin_cpu_init();
    return __builtin_cpu_supports("avx2") != 0;
  }();
  return supported;
#else
  return false;
#endif
}

Isa active_isa() {
  static const Isa isa = [] {
    const char* forced = std::getenv("GVKS_KERNEL");
    if (forced != nullptr && std::string_view(forced) == "scalar") {
      return Isa::kScalar;
    }
    return avx2_supported() ? Isa::kAvx2 : Isa::kScalar;
  }();
  return isa;
}

std::string_view isa_name(Isa isa) {
  return isa == Isa::kAvx2 ? "avx2" : "scalar";
}

MaxPlusFn max_plus_for(Isa isa) {
  if (isa == Isa::kAvx2 && avx2_supported()) return &max_plus_avx2;
  return &max_plus_scalar;
}

}  // namespace gvks::kernels
