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

// Exponential-time exact solvers. They share no code with the approximation
// pipeline and serve as ground truth at desk scale.

#ifndef GVKS_ORACLE_HPP_
#define GVKS_ORACLE_HPP_

#include <chrono>
#include <cstddef>
#include <cstdint>

#include "gvks/container_pack.hpp"
#include "gvks/gap.hpp"
#include "gvks/types.hpp"

namespace gvks::oracle {

// Instances beyond the budget are refused with ResourceError.
struct OracleBudget {
  std::size_t max_items = 12;
  std::uint64_t max_states = std::uint64_t{1} << 27;
  std::chrono::milliseconds timeout{60'000};
};

// Enumerates all (k+1)^n assignments; among the optimal ones returns the
// lexicographically smallest machine vector (unassigned sorts first).
GapAssignment exact_vmg(const GapInstance& instance,
                        const OracleBudget& budget = {});

// Optimal value of a container packing instance, by enumerating every
// item -> container assignment (and every orientation when rotations are
// allowed) against the container rules directly.
double exact_container_packing(const ContainerPackingInstance& cp,
                               const OracleBudget& budget = {.max_items = 8});

struct ExactPacking {
  double profit = 0.0;
  Packing witness;
};

// Optimal (2,d) knapsack packing. Subsets are tried in non-increasing profit
// order; each is tested for geometric packability by a search over placements
// at normal-pattern coordinates (sums of other items' widths and heights).
ExactPacking exact_gvks_small(const KnapsackInstance& instance,
                              const OracleBudget& budget = {.max_items = 7});

// Geometric packability of `items` in the unit square, restricted to
// positions at normal-pattern coordinates. Fills `out` on success.
bool packable_normal_patterns(const std::vector<Item>& items, bool rotations,
                              std::vector<Placement>* out = nullptr);

// Same decision with positions restricted to multiples of `step`; used to
// cross-check the normal-pattern restriction.
bool packable_on_grid(const std::vector<Item>& items, bool rotations,
                      double step);

}  // namespace gvks::oracle

#endif  // GVKS_ORACLE_HPP_
