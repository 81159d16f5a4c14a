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

#ifndef GVKS_NFDH_HPP_
#define GVKS_NFDH_HPP_

#include <string>
#include <vector>

#include "gvks/types.hpp"

namespace gvks {

struct Shelf {
  double base_y = 0.0;
  double shelf_height = 0.0;  // height of the shelf's first (tallest) item
  double cursor_x = 0.0;
};

struct NfdhResult {
  // Placements in absolute coordinates (bin origin added), unrotated.
  std::vector<Placement> placements;
  // Items not packed, in processing order. Once an item fits neither at the
  // cursor nor on a fresh shelf, it and every later item end up here.
  std::vector<std::string> unpacked;
  std::vector<Shelf> shelves;
};

// Next-Fit-Decreasing-Heights into a bin_width x bin_height bin whose lower
// left corner is (origin_x, origin_y). Items are processed by non-increasing
// height, ties by id. If the total area is at most
// (bin_width - max width) * (bin_height - max height), everything is packed.
// Throws ContractError when an item is larger than the bin.
NfdhResult nfdh_pack(const std::vector<Item>& items, double bin_width,
                     double bin_height, double origin_x = 0.0,
                     double origin_y = 0.0);

struct GreedyResult {
  std::vector<std::string> packed;  // ids, in profit-density order
  Packing packing;
};

// Packs a profit-dense subset of eps-small items into identical area
// containers. Items are ordered by non-increasing profit / area (ties by id);
// for each container in turn, the longest remaining prefix of total area at
// most (1 - eps)^2 * container area is packed with NFDH. If all items fit in
// the containers, the packed profit is at least (1 - 2 eps) of the optimum.
// Throws ContractError if an item is not eps-small or the containers differ
// in size.
GreedyResult pack_small_greedy(const std::vector<Item>& items,
                               const std::vector<Container>& containers,
                               double eps);

}  // namespace gvks

#endif  // GVKS_NFDH_HPP_
