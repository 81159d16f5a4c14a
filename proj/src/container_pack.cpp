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

#include "gvks/container_pack.hpp"

#include <algorithm>
#include <string>

#include "gvks/nfdh.hpp"
#include "gvks/validate.hpp"

namespace gvks {

bool fits_in(const Item& item, const Container& c, bool rotated) {
  return item.width(rotated) <= c.width + kTol &&
         item.height(rotated) <= c.height + kTol;
}

bool is_small_for(const Item& item, const Container& c, double eps_prime) {
  return item.width() <= eps_prime * c.width + kTol &&
         item.height() <= eps_prime * c.height + kTol;
}

bool chosen_rotation(const Item& item, const Container& c, bool rotations) {
  if (!rotations || c.kind == ContainerKind::kArea) return false;
  const bool plain = fits_in(item, c, false);
  const bool turned = fits_in(item, c, true);
  if (!turned) return false;
  if (!plain) return true;
  switch (c.kind) {
    case ContainerKind::kWide:
      return item.height(true) < item.height(false);
    case ContainerKind::kTall:
      return item.width(true) < item.width(false);
    default:
      return false;
  }
}

GapInstance reduce_to_vmg(const ContainerPackingInstance& cp) {
  const std::size_t n = cp.items.size();
  const std::size_t k = cp.containers.size();
  GapInstance g(n, k, cp.d);
  for (std::size_t q = 0; q < cp.d; ++q) g.weight_limits()[q] = 1.0;

  for (std::size_t j = 0; j < k; ++j) {
    const Container& c = cp.containers[j];
    switch (c.kind) {
      case ContainerKind::kLarge:
        g.capacities()[j] = 1.0;
        break;
      case ContainerKind::kWide:
        g.capacities()[j] = c.height;
        break;
      case ContainerKind::kTall:
        g.capacities()[j] = c.width;
        break;
      case ContainerKind::kArea:
        g.capacities()[j] =
            (1.0 - cp.eps_prime) * (1.0 - cp.eps_prime) * c.area();
        break;
    }
  }

  for (std::size_t i = 0; i < n; ++i) {
    const Item& it = cp.items[i];
    for (std::size_t q = 0; q < cp.d; ++q) g.weight(i, q) = it.weight(q);
    for (std::size_t j = 0; j < k; ++j) {
      const Container& c = cp.containers[j];
      g.value(i, j) = it.profit();
      double size = kInfiniteSize;
      if (c.kind == ContainerKind::kArea) {
        if (is_small_for(it, c, cp.eps_prime)) size = it.area();
      } else {
        const bool any = fits_in(it, c, false) ||
                         (cp.rotations_allowed && fits_in(it, c, true));
        if (any) {
          const bool rot = chosen_rotation(it, c, cp.rotations_allowed);
          if (c.kind == ContainerKind::kLarge) {
            size = 1.0;
          } else if (c.kind == ContainerKind::kWide) {
            size = it.height(rot);
          } else {
            size = it.width(rot);
          }
        }
      }
      g.size(i, j) = size;
    }
  }
  return g;
}

Packing realize_assignment(const GapAssignment& assignment,
                           const ContainerPackingInstance& cp) {
  const GapInstance g = reduce_to_vmg(cp);
  if (!is_feasible(g, assignment)) {
    throw ContractError("realize_assignment: assignment is infeasible");
  }
  for (std::size_t i : assignment.assigned_items()) {
    if (g.size(i, *assignment.machine[i]) == kInfiniteSize) {
      throw ContractError("realize_assignment: item " + cp.items[i].id() +
                          " does not fit its container");
    }
  }

  Packing packing;
  packing.containers = cp.containers;
  for (std::size_t j = 0; j < cp.containers.size(); ++j) {
    const Container& c = cp.containers[j];
    const std::vector<std::size_t> members = assignment.items_on(j);
    if (c.kind == ContainerKind::kArea) {
      std::vector<Item> group;
      for (std::size_t i : members) group.push_back(cp.items[i]);
      NfdhResult r = nfdh_pack(group, c.width, c.height, c.x, c.y);
      if (!r.unpacked.empty()) {
        throw std::logic_error("NFDH left items of an area container unpacked");
      }
      packing.placements.insert(packing.placements.end(), r.placements.begin(),
                                r.placements.end());
    } else {
      double cursor = 0.0;
      for (std::size_t i : members) {
        const Item& it = cp.items[i];
        const bool rot = chosen_rotation(it, c, cp.rotations_allowed);
        if (c.kind == ContainerKind::kTall) {
          packing.placements.push_back({it.id(), c.x + cursor, c.y, rot});
          cursor += it.width(rot);
        } else {
          packing.placements.push_back({it.id(), c.x, c.y + cursor, rot});
          cursor += it.height(rot);
        }
      }
    }
    for (std::size_t i : members) packing.packed_profit += cp.items[i].profit();
  }
  return packing;
}

ContainerSolution solve_container_packing(const ContainerPackingInstance& cp,
                                          const PtasOptions& options) {
  if (!container_config_valid(cp.containers).empty()) {
    throw ContractError("solve_container_packing: containers overlap");
  }
  ContainerSolution out;
  const GapInstance g = reduce_to_vmg(cp);
  out.assignment = vmg_ptas(g, options, &out.stats);
  out.packing = realize_assignment(out.assignment, cp);
  return out;
}

}  // namespace gvks
