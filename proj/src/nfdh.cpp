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

#include "gvks/nfdh.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace gvks {

NfdhResult nfdh_pack(const std::vector<Item>& items, double bin_width,
                     double bin_height, double origin_x, double origin_y) {
  for (const Item& it : items) {
    if (it.width() > bin_width + kTol || it.height() > bin_height + kTol) {
      throw ContractError("nfdh_pack: item '" + it.id() +
                          "' is larger than the bin");
    }
  }
  std::vector<std::size_t> order(items.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (items[a].height() != items[b].height()) {
      return items[a].height() > items[b].height();
    }
    return items[a].id() < items[b].id();
  });

  NfdhResult result;
  std::size_t r = 0;
  for (; r < order.size(); ++r) {
    const Item& it = items[order[r]];
    if (result.shelves.empty()) {
      result.shelves.push_back({0.0, it.height(), 0.0});
    }
    Shelf* shelf = &result.shelves.back();
    if (shelf->cursor_x + it.width() > bin_width + kTol) {
      const double base = shelf->base_y + shelf->shelf_height;
      if (base + it.height() > bin_height + kTol) break;
      result.shelves.push_back({base, it.height(), 0.0});
      shelf = &result.shelves.back();
    }
    result.placements.push_back(
        {it.id(), origin_x + shelf->cursor_x, origin_y + shelf->base_y, false});
    shelf->cursor_x += it.width();
  }
  for (; r < order.size(); ++r) result.unpacked.push_back(items[order[r]].id());
  return result;
}

GreedyResult pack_small_greedy(const std::vector<Item>& items,
                               const std::vector<Container>& containers,
                               double eps) {
  GreedyResult result;
  if (containers.empty()) return result;
  const double cw = containers.front().width;
  const double ch = containers.front().height;
  for (const Container& c : containers) {
    if (std::abs(c.width - cw) > kTol || std::abs(c.height - ch) > kTol) {
      throw ContractError("pack_small_greedy: containers must be identical");
    }
  }
  for (const Item& it : items) {
    if (it.width() > eps * cw + kTol || it.height() > eps * ch + kTol) {
      throw ContractError("pack_small_greedy: item '" + it.id() +
                          "' is not eps-small for the containers");
    }
  }

  std::vector<std::size_t> order(items.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  // Compare p_a / a_a against p_b / a_b without dividing.
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const double lhs = items[a].profit() * items[b].area();
    const double rhs = items[b].profit() * items[a].area();
    if (lhs != rhs) return lhs > rhs;
    return items[a].id() < items[b].id();
  });

  const double budget = (1.0 - eps) * (1.0 - eps) * cw * ch;
  std::size_t next = 0;
  for (const Container& c : containers) {
    std::vector<Item> prefix;
    double area = 0.0;
    while (next < order.size() && area + items[order[next]].area() <= budget) {
      area += items[order[next]].area();
      prefix.push_back(items[order[next]]);
      ++next;
    }
    NfdhResult packed = nfdh_pack(prefix, c.width, c.height, c.x, c.y);
    if (!packed.unpacked.empty()) {
      throw std::logic_error("NFDH failed on a prefix within its area bound");
    }
    for (const Item& it : prefix) {
      result.packed.push_back(it.id());
      result.packing.packed_profit += it.profit();
    }
    result.packing.placements.insert(result.packing.placements.end(),
                                      packed.placements.begin(),
                                      packed.placements.end());
    result.packing.containers.push_back(c);
  }
  return result;
}

}  // namespace gvks
