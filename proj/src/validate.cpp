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

#include "gvks/validate.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <unordered_map>

namespace gvks {

namespace {

struct Box {
  std::string name;
  double x, y, w, h;
};

// Reports containment and pairwise overlap for a list of boxes. Pairs are
// reported in ascending (i, j) order of the input.
void check_boxes(const std::vector<Box>& boxes, ValidityReport& report) {
  for (const Box& b : boxes) {
    double over = std::max({-b.x, -b.y, b.x + b.w - 1.0, b.y + b.h - 1.0});
    if (over > kTol) {
      report.push_back({ViolationKind::kOutOfBounds, b.name, "", 0, over});
    }
  }
  for (std::size_t i = 0; i < boxes.size(); ++i) {
    for (std::size_t j = i + 1; j < boxes.size(); ++j) {
      const Box& a = boxes[i];
      const Box& b = boxes[j];
      double area = interior_overlap(a.x, a.y, a.w, a.h, b.x, b.y, b.w, b.h);
      if (area > 0.0) {
        report.push_back({ViolationKind::kOverlap, a.name, b.name, 0, area});
      }
    }
  }
}

}  // namespace

std::string Violation::describe() const {
  std::ostringstream os;
  switch (kind) {
    case ViolationKind::kOverlap:
      os << "overlap between '" << first << "' and '" << second
         << "' (area " << magnitude << ")";
      break;
    case ViolationKind::kOutOfBounds:
      os << "'" << first << "' leaves the unit square by " << magnitude;
      break;
    case ViolationKind::kWeight:
      os << "weight dimension " << dimension << " exceeds 1 by " << magnitude;
      break;
    case ViolationKind::kRotationNotAllowed:
      os << "'" << first << "' is rotated but rotations are not allowed";
      break;
    case ViolationKind::kProfitMismatch:
      os << "reported profit differs from the placed items' profit by "
         << magnitude;
      break;
  }
  return os.str();
}

double interior_overlap(double ax, double ay, double aw, double ah, double bx,
                        double by, double bw, double bh) {
  double ox = std::min(ax + aw, bx + bw) - std::max(ax, bx);
  double oy = std::min(ay + ah, by + bh) - std::max(ay, by);
  if (ox <= kTol || oy <= kTol) return 0.0;
  return ox * oy;
}

ValidityReport validate_packing(const Packing& packing,
                                const KnapsackInstance& instance) {
  std::unordered_map<std::string_view, std::size_t> index;
  index.reserve(instance.items.size());
  for (std::size_t i = 0; i < instance.items.size(); ++i) {
    index.emplace(instance.items[i].id(), i);
  }

  ValidityReport report;
  std::vector<Box> boxes;
  boxes.reserve(packing.placements.size());
  std::vector<bool> seen(instance.items.size(), false);
  std::vector<double> load(instance.d, 0.0);
  double profit = 0.0;

  for (const Placement& p : packing.placements) {
    auto it = index.find(p.item_id);
    if (it == index.end()) {
      throw StructuralError("placement refers to unknown item '" + p.item_id +
                            "'");
    }
    if (seen[it->second]) {
      throw StructuralError("item '" + p.item_id + "' is placed twice");
    }
    seen[it->second] = true;
    const Item& item = instance.items[it->second];
    if (p.rotated && !instance.rotations_allowed) {
      report.push_back(
          {ViolationKind::kRotationNotAllowed, p.item_id, "", 0, 0.0});
    }
    boxes.push_back({p.item_id, p.x, p.y, item.width(p.rotated),
                     item.height(p.rotated)});
    for (std::size_t q = 0; q < instance.d; ++q) load[q] += item.weight(q);
    profit += item.profit();
  }

  check_boxes(boxes, report);
  for (std::size_t q = 0; q < instance.d; ++q) {
    if (load[q] > 1.0 + kTol) {
      report.push_back({ViolationKind::kWeight, "", "", q, load[q] - 1.0});
    }
  }
  double mismatch = std::abs(profit - packing.packed_profit);
  if (mismatch > kTol * std::max(1.0, std::abs(profit))) {
    report.push_back({ViolationKind::kProfitMismatch, "", "", 0, mismatch});
  }
  return report;
}

ValidityReport container_config_valid(std::span<const Container> containers) {
  std::vector<Box> boxes;
  boxes.reserve(containers.size());
  for (std::size_t i = 0; i < containers.size(); ++i) {
    const Container& c = containers[i];
    boxes.push_back({"container " + std::to_string(i), c.x, c.y, c.width,
                     c.height});
  }
  ValidityReport report;
  check_boxes(boxes, report);
  return report;
}

}  // namespace gvks
