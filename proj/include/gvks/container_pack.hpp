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

// Packing items into a fixed set of typed containers:
//   large - at most one item;
//   wide  - items stacked on top of each other;
//   tall  - items side by side;
//   area  - only eps'-small items, total area <= (1 - eps')^2 * area.
// plus the global d-dimensional weight limit of 1. Each container becomes a
// machine of a Vector-Max-GAP instance whose sizes encode these rules.

#ifndef GVKS_CONTAINER_PACK_HPP_
#define GVKS_CONTAINER_PACK_HPP_

#include <vector>

#include "gvks/gap.hpp"
#include "gvks/types.hpp"
#include "gvks/vmg_ptas.hpp"

namespace gvks {

struct ContainerPackingInstance {
  std::vector<Item> items;
  std::vector<Container> containers;
  double eps_prime = 0.1;
  bool rotations_allowed = false;
  std::size_t d = 0;
};

bool fits_in(const Item& item, const Container& c, bool rotated);

// Whether the item is eps'-small for an area container (never rotated).
bool is_small_for(const Item& item, const Container& c, double eps_prime);

// Machine j is container j, item i is item i; W is all ones. Items that do
// not fit a container get kInfiniteSize there.
GapInstance reduce_to_vmg(const ContainerPackingInstance& cp);

// Orientation the reduction chose for item `i` in container `c`: the one
// whose stacking dimension is smaller when both fit, unrotated on ties and
// for area containers.
bool chosen_rotation(const Item& item, const Container& c, bool rotations);

// Geometric packing of a feasible assignment of reduce_to_vmg(cp): a large
// container holds its item at its lower-left corner, wide containers stack
// bottom-up and tall containers left-to-right in ascending item order, area
// containers use NFDH. Throws ContractError if the assignment is infeasible.
Packing realize_assignment(const GapAssignment& assignment,
                           const ContainerPackingInstance& cp);

struct ContainerSolution {
  Packing packing;
  GapAssignment assignment;
  PtasStats stats;
};

// reduce_to_vmg + vmg_ptas + realize_assignment. Profit is at least
// (1 - (2d+3) eps_cont) times the container packing optimum.
ContainerSolution solve_container_packing(const ContainerPackingInstance& cp,
                                          const PtasOptions& options);

inline Packing solve_container_packing(const ContainerPackingInstance& cp,
                                       double eps_cont) {
  PtasOptions options;
  options.eps = eps_cont;
  return solve_container_packing(cp, options).packing;
}

}  // namespace gvks

#endif  // GVKS_CONTAINER_PACK_HPP_
