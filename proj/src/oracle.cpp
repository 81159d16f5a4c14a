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

#include "gvks/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace gvks::oracle {

namespace {

using Clock = std::chrono::steady_clock;

class Deadline {
 public:
  explicit Deadline(std::chrono::milliseconds timeout)
      : end_(Clock::now() + timeout) {}
  void tick() {
    if ((++ticks_ & 0xFFFF) == 0 && Clock::now() > end_) {
      throw ResourceError("oracle timed out");
    }
  }

 private:
  Clock::time_point end_;
  std::uint64_t ticks_ = 0;
};

void check_items(std::size_t n, const OracleBudget& budget) {
  if (n > budget.max_items) {
    throw ResourceError("oracle refuses " + std::to_string(n) +
                        " items (budget " + std::to_string(budget.max_items) +
                        ")");
  }
}

// (base)^n, or max_states + 1 when larger.
std::uint64_t capped_power(std::uint64_t base, std::size_t n,
                           std::uint64_t cap) {
  std::uint64_t v = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (v > cap / base) return cap + 1;
    v *= base;
  }
  return v;
}

struct Box {
  double x, y, w, h;
};

bool overlaps(const Box& a, const Box& b) {
  return std::min(a.x + a.w, b.x + b.w) - std::max(a.x, b.x) > kTol &&
         std::min(a.y + a.h, b.y + b.h) - std::max(a.y, b.y) > kTol;
}

// Placement search shared by both packability tests. `xs(i, rot)` and
// `ys(i, rot, placed)` produce candidate coordinates for item i.
class PlacementSearch {
 public:
  PlacementSearch(const std::vector<Item>& items, bool rotations,
                  Deadline& deadline)
      : items_(items), rotations_(rotations), deadline_(deadline) {}

  template <typename XFn, typename YFn>
  bool run(XFn&& xs, YFn&& ys, std::vector<Placement>* out) {
    placed_.assign(items_.size(), false);
    boxes_.clear();
    rot_.assign(items_.size(), false);
    where_.assign(items_.size(), Box{});
    const bool ok = dfs(xs, ys, 0.0, -1.0);
    if (ok && out != nullptr) {
      out->clear();
      for (std::size_t i = 0; i < items_.size(); ++i) {
        out->push_back({items_[i].id(), where_[i].x, where_[i].y, rot_[i]});
      }
    }
    return ok;
  }

  const std::vector<Box>& boxes() const { return boxes_; }

 private:
  template <typename XFn, typename YFn>
  bool dfs(XFn& xs, YFn& ys, double last_y, double last_x) {
    if (boxes_.size() == items_.size()) return true;
    for (std::size_t i = 0; i < items_.size(); ++i) {
      if (placed_[i]) continue;
      for (int r = 0; r < (rotations_ ? 2 : 1); ++r) {
        const bool rot = r == 1;
        const double w = items_[i].width(rot);
        const double h = items_[i].height(rot);
        if (rot && items_[i].width() == items_[i].height()) continue;
        if (w > 1.0 + kTol || h > 1.0 + kTol) continue;
        for (double y : ys(boxes_)) {
          if (y + h > 1.0 + kTol || y < last_y - kTol) continue;
          const std::vector<double> xcands = xs(w);
          for (double x : xcands) {
            // Positions are visited in increasing (y, x) order.
            if (std::abs(y - last_y) <= kTol && x <= last_x + kTol) continue;
            deadline_.tick();
            const Box b{x, y, w, h};
            bool clash = false;
            for (const Box& o : boxes_) {
              if (overlaps(b, o)) {
                clash = true;
                break;
              }
            }
            if (clash) continue;
            placed_[i] = true;
            rot_[i] = rot;
            where_[i] = b;
            boxes_.push_back(b);
            if (dfs(xs, ys, y, x)) return true;
            boxes_.pop_back();
            placed_[i] = false;
          }
        }
      }
    }
    return false;
  }

  const std::vector<Item>& items_;
  bool rotations_;
  Deadline& deadline_;
  std::vector<bool> placed_;
  std::vector<bool> rot_;
  std::vector<Box> where_;
  std::vector<Box> boxes_;
};

std::vector<double> subset_sums(const std::vector<Item>& items, bool rotations,
                                bool widths) {
  std::vector<double> sums = {0.0};
  for (const Item& it : items) {
    const std::size_t before = sums.size();
    for (int r = 0; r < (rotations ? 2 : 1); ++r) {
      const double side = widths ? it.width(r == 1) : it.height(r == 1);
      for (std::size_t s = 0; s < before; ++s) {
        if (sums[s] + side <= 1.0 + kTol) sums.push_back(sums[s] + side);
      }
    }
    std::sort(sums.begin(), sums.end());
    std::vector<double> dedup;
    for (double v : sums) {
      if (dedup.empty() || v - dedup.back() > kTol) dedup.push_back(v);
    }
    sums = std::move(dedup);
  }
  return sums;
}

bool packable_normal_patterns_impl(const std::vector<Item>& items,
                                   bool rotations, std::vector<Placement>* out,
                                   Deadline& deadline) {
  double area = 0.0;
  for (const Item& it : items) area += it.area();
  if (area > 1.0 + kTol) return false;

  const std::vector<double> pattern = subset_sums(items, rotations, true);
  auto xs = [&](double w) {
    std::vector<double> out;
    for (double x : pattern) {
      if (x + w <= 1.0 + kTol) out.push_back(x);
    }
    return out;
  };
  // A bottom-left justified item rests on the floor or on an item placed
  // before it in (y, x) order.
  auto ys = [](const std::vector<Box>& placed) {
    std::vector<double> out = {0.0};
    for (const Box& b : placed) out.push_back(b.y + b.h);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end(),
                          [](double a, double b) { return b - a <= kTol; }),
              out.end());
    return out;
  };
  PlacementSearch search(items, rotations, deadline);
  return search.run(xs, ys, out);
}

}  // namespace

GapAssignment exact_vmg(const GapInstance& instance,
                        const OracleBudget& budget) {
  const std::size_t n = instance.num_items();
  const std::size_t k = instance.num_machines();
  const std::size_t d = instance.num_dims();
  check_items(n, budget);
  if (capped_power(k + 1, n, budget.max_states) > budget.max_states) {
    throw ResourceError("exact_vmg: (k+1)^n exceeds the state budget");
  }
  Deadline deadline(budget.timeout);

  std::vector<std::size_t> digit(n, 0);  // 0 = unassigned, j+1 = machine j
  std::vector<std::size_t> best_digit(n, 0);
  double best = 0.0;
  bool have = false;
  std::vector<double> load(k);
  std::vector<double> weight(d);
  while (true) {
    deadline.tick();
    std::fill(load.begin(), load.end(), 0.0);
    std::fill(weight.begin(), weight.end(), 0.0);
    double value = 0.0;
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) {
      if (digit[i] == 0) continue;
      const std::size_t j = digit[i] - 1;
      if (instance.size(i, j) == kInfiniteSize) {
        ok = false;
        break;
      }
      load[j] += instance.size(i, j);
      for (std::size_t q = 0; q < d; ++q) weight[q] += instance.weight(i, q);
      value += instance.value(i, j);
    }
    for (std::size_t j = 0; j < k && ok; ++j) {
      ok = load[j] <= instance.capacities()[j] + kTol;
    }
    for (std::size_t q = 0; q < d && ok; ++q) {
      ok = weight[q] <= instance.weight_limits()[q] + kTol;
    }
    if (ok && (!have || value > best)) {
      best = value;
      best_digit = digit;
      have = true;
    }
    // Next vector in lexicographic order (item 0 most significant).
    std::size_t t = n;
    while (t > 0 && digit[t - 1] == k) digit[--t] = 0;
    if (t == 0) break;
    ++digit[t - 1];
  }

  GapAssignment out = GapAssignment::empty(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (best_digit[i] != 0) out.machine[i] = best_digit[i] - 1;
  }
  out.total_value = best;
  return out;
}

double exact_container_packing(const ContainerPackingInstance& cp,
                               const OracleBudget& budget) {
  const std::size_t n = cp.items.size();
  const std::size_t k = cp.containers.size();
  check_items(n, budget);
  const std::uint64_t choices = cp.rotations_allowed ? 2 * k + 1 : k + 1;
  if (capped_power(choices, n, budget.max_states) > budget.max_states) {
    throw ResourceError("exact_container_packing: search exceeds the budget");
  }
  Deadline deadline(budget.timeout);

  const double slack = (1.0 - cp.eps_prime) * (1.0 - cp.eps_prime);
  std::vector<double> load(k, 0.0);     // stacked length / used area
  std::vector<int> count(k, 0);         // items per container
  std::vector<double> weight(cp.d, 0.0);
  double best = 0.0;

  std::function<void(std::size_t, double)> go = [&](std::size_t i,
                                                    double profit) {
    deadline.tick();
    if (i == n) {
      best = std::max(best, profit);
      return;
    }
    go(i + 1, profit);  // leave item i out
    const Item& it = cp.items[i];
    for (std::size_t q = 0; q < cp.d; ++q) {
      if (weight[q] + it.weight(q) > 1.0 + kTol) return;
    }
    for (std::size_t j = 0; j < k; ++j) {
      const Container& c = cp.containers[j];
      const int orientations =
          (cp.rotations_allowed && c.kind != ContainerKind::kArea) ? 2 : 1;
      for (int r = 0; r < orientations; ++r) {
        const bool rot = r == 1;
        const double w = it.width(rot);
        const double h = it.height(rot);
        double add = 0.0;
        switch (c.kind) {
          case ContainerKind::kLarge:
            if (count[j] > 0 || w > c.width + kTol || h > c.height + kTol) {
              continue;
            }
            break;
          case ContainerKind::kWide:
            if (w > c.width + kTol || load[j] + h > c.height + kTol) continue;
            add = h;
            break;
          case ContainerKind::kTall:
            if (h > c.height + kTol || load[j] + w > c.width + kTol) continue;
            add = w;
            break;
          case ContainerKind::kArea:
            if (w > cp.eps_prime * c.width + kTol ||
                h > cp.eps_prime * c.height + kTol ||
                load[j] + w * h > slack * c.width * c.height + kTol) {
              continue;
            }
            add = w * h;
            break;
        }
        load[j] += add;
        ++count[j];
        for (std::size_t q = 0; q < cp.d; ++q) weight[q] += it.weight(q);
        go(i + 1, profit + it.profit());
        for (std::size_t q = 0; q < cp.d; ++q) weight[q] -= it.weight(q);
        --count[j];
        load[j] -= add;
      }
    }
  };
  go(0, 0.0);
  return best;
}

bool packable_normal_patterns(const std::vector<Item>& items, bool rotations,
                              std::vector<Placement>* out) {
  Deadline deadline(std::chrono::milliseconds(60'000));
  return packable_normal_patterns_impl(items, rotations, out, deadline);
}

bool packable_on_grid(const std::vector<Item>& items, bool rotations,
                      double step) {
  double area = 0.0;
  for (const Item& it : items) area += it.area();
  if (area > 1.0 + kTol) return false;
  const auto cells = static_cast<std::size_t>(std::floor(1.0 / step + kTol));
  std::vector<double> grid;
  for (std::size_t t = 0; t <= cells; ++t) grid.push_back(t * step);
  auto xs = [&](double w) {
    std::vector<double> out;
    for (double x : grid) {
      if (x + w <= 1.0 + kTol) out.push_back(x);
    }
    return out;
  };
  auto ys = [&](const std::vector<Box>&) -> const std::vector<double>& {
    return grid;
  };
  Deadline deadline(std::chrono::milliseconds(600'000));
  PlacementSearch search(items, rotations, deadline);
  return search.run(xs, ys, nullptr);
}

ExactPacking exact_gvks_small(const KnapsackInstance& instance,
                              const OracleBudget& budget) {
  const std::size_t n = instance.items.size();
  check_items(n, budget);
  Deadline deadline(budget.timeout);

  struct Candidate {
    std::uint32_t mask;
    double profit;
  };
  std::vector<Candidate> subsets;
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
    double profit = 0.0;
    std::vector<double> weight(instance.d, 0.0);
    bool ok = true;
    for (std::size_t i = 0; i < n; ++i) {
      if (!(mask >> i & 1u)) continue;
      profit += instance.items[i].profit();
      for (std::size_t q = 0; q < instance.d; ++q) {
        weight[q] += instance.items[i].weight(q);
        ok = ok && weight[q] <= 1.0 + kTol;
      }
    }
    if (ok) subsets.push_back({mask, profit});
  }
  std::stable_sort(subsets.begin(), subsets.end(),
                   [](const Candidate& a, const Candidate& b) {
                     return a.profit > b.profit;
                   });

  for (const Candidate& c : subsets) {
    std::vector<Item> chosen;
    for (std::size_t i = 0; i < n; ++i) {
      if (c.mask >> i & 1u) chosen.push_back(instance.items[i]);
    }
    std::vector<Placement> placements;
    if (packable_normal_patterns_impl(chosen, instance.rotations_allowed,
                                      &placements, deadline)) {
      ExactPacking out;
      out.profit = c.profit;
      out.witness.placements = std::move(placements);
      out.witness.packed_profit = c.profit;
      return out;
    }
  }
  return {};
}

}  // namespace gvks::oracle
