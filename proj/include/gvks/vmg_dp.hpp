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

#ifndef GVKS_VMG_DP_HPP_
#define GVKS_VMG_DP_HPP_

#include <cstddef>
#include <cstdint>

#include "gvks/gap.hpp"
#include "gvks/kernels/max_plus.hpp"

namespace gvks {

struct DpOptions {
  // Upper bound on n * prod(M_j + 1) * prod(W_q + 1).
  std::uint64_t max_states = std::uint64_t{1} << 25;
  kernels::Isa isa = kernels::active_isa();
};

struct DpStats {
  // Table entries evaluated by the recurrence (excluding the n = 0 layer).
  std::uint64_t state_visits = 0;
  // n * prod(M_j + 1) * prod(W_q + 1) for the input.
  std::uint64_t state_bound = 0;
};

// Exact optimum of a Vector-Max-GAP instance whose sizes, weights,
// capacities and weight limits are nonnegative integers (sizes may also be
// kInfiniteSize). The table is indexed by remaining capacities and filled
// item by item; the solution is recovered by re-evaluating the recurrence
// backwards, preferring "skip" and then the lowest machine index on ties, so
// no item is ever assigned to a machine where its value is 0.
//
// Throws ContractError on non-integral input and ResourceError if the state
// space exceeds options.max_states.
GapAssignment solve_integral_dp(const GapInstance& instance,
                                const DpOptions& options = {},
                                DpStats* stats = nullptr);

}  // namespace gvks

#endif  // GVKS_VMG_DP_HPP_
