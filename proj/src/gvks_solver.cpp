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

#include "gvks/gvks_solver.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

#include "gvks/container_pack.hpp"

namespace gvks {

namespace {

std::vector<double> side_sums(const std::vector<double>& sides,
                              std::size_t depth) {
  std::vector<double> out = {1.0};
  // Depth-first over index combinations of size 1..depth.
  std::vector<std::size_t> stack;
  std::function<void(std::size_t, double)> go = [&](std::size_t from,
                                                    double sum) {
    for (std::size_t i = from; i < sides.size(); ++i) {
      const double next = sum + sides[i];
      if (next > 1.0 + kTol) continue;
      out.push_back(std::min(next, 1.0));
      stack.push_back(i);
      if (stack.size() < depth) go(i + 1, next);
      stack.pop_back();
    }
  };
  go(0, 0.0);
  std::sort(out.begin(), out.end());
  std::vector<double> dedup;
  for (double v : out) {
    if (dedup.empty() || v - dedup.back() > kTol) dedup.push_back(v);
  }
  // Keep 1.0 exact when a sum landed within tolerance of it.
  if (!dedup.empty() && dedup.back() > 1.0 - kTol) dedup.back() = 1.0;
  return dedup;
}

constexpr ContainerKind kKinds[] = {ContainerKind::kLarge, ContainerKind::kWide,
                                    ContainerKind::kTall, ContainerKind::kArea};

using Layout = std::vector<Rect>;

// Canonical guillotine layouts of `region` with 1..budget leaves.
std::vector<Layout> layouts_of(const Rect& region, std::size_t budget,
                               bool allow_vertical, bool allow_horizontal,
                               const CandidateDimensions& cands) {
  std::vector<Layout> out = {{region}};
  if (budget < 2) return out;
  if (allow_vertical) {
    for (double a : cands.widths) {
      if (a <= kTol || a >= region.width - kTol) continue;
      const Rect left{region.x, region.y, a, region.height};
      const Rect right{region.x + a, region.y, region.width - a, region.height};
      for (const Layout& l : layouts_of(left, budget - 1, false, true, cands)) {
        for (const Layout& r :
             layouts_of(right, budget - l.size(), true, true, cands)) {
          Layout both = l;
          both.insert(both.end(), r.begin(), r.end());
          out.push_back(std::move(both));
        }
      }
    }
  }
  if (allow_horizontal) {
    for (double b : cands.heights) {
      if (b <= kTol || b >= region.height - kTol) continue;
      const Rect bottom{region.x, region.y, region.width, b};
      const Rect top{region.x, region.y + b, region.width, region.height - b};
      for (const Layout& l : layouts_of(bottom, budget - 1, true, false, cands)) {
        for (const Layout& r :
             layouts_of(top, budget - l.size(), true, true, cands)) {
          Layout both = l;
          both.insert(both.end(), r.begin(), r.end());
          out.push_back(std::move(both));
        }
      }
    }
  }
  return out;
}

std::uint64_t pow4(std::size_t e) { return std::uint64_t{1} << (2 * e); }

}  // namespace

CandidateDimensions generate_candidate_dimensions(const std::vector<Item>& items,
                                                  const SolverParams& params,
                                                  bool rotations) {
  if (params.sum_depth < 1) throw ContractError("sum_depth must be >= 1");
  std::vector<double> ws;
  std::vector<double> hs;
  for (const Item& it : items) {
    ws.push_back(it.width());
    hs.push_back(it.height());
    if (rotations) {
      ws.push_back(it.height());
      hs.push_back(it.width());
    }
  }
  return {side_sums(ws, params.sum_depth), side_sums(hs, params.sum_depth)};
}

ConfigSpace::ConfigSpace(const CandidateDimensions& cands, std::size_t c_max) {
  if (c_max >= 1) {
    layouts_ = layouts_of({0.0, 0.0, 1.0, 1.0}, c_max, true, true, cands);
  }
  offsets_.push_back(0);
  for (const Layout& l : layouts_) offsets_.push_back(offsets_.back() + pow4(l.size()));
}

std::vector<Container> ConfigSpace::config(std::uint64_t index) const {
  const auto it = std::upper_bound(offsets_.begin(), offsets_.end(), index);
  const std::size_t li = static_cast<std::size_t>(it - offsets_.begin()) - 1;
  std::uint64_t code = index - offsets_[li];
  const Layout& layout = layouts_[li];
  std::vector<Container> out(layout.size());
  // The first leaf's label is the most significant base-4 digit.
  for (std::size_t t = layout.size(); t-- > 0;) {
    const Rect& r = layout[t];
    out[t] = Container{kKinds[code % 4], r.x, r.y, r.width, r.height};
    code /= 4;
  }
  return out;
}

bool enumerate_container_configs(
    const CandidateDimensions& cands, const SolverParams& params,
    const std::function<bool(const std::vector<Container>&)>& visit) {
  const ConfigSpace space(cands, params.c_max);
  const std::uint64_t limit =
      params.config_budget == 0 ? space.size()
                                : std::min<std::uint64_t>(space.size(),
                                                          params.config_budget);
  for (std::uint64_t i = 0; i < limit; ++i) {
    if (!visit(space.config(i))) return false;
  }
  return limit < space.size();
}

GvksResult solve_gvks_detailed(const KnapsackInstance& instance,
                               const SolverParams& params) {
  params.check();
  instance.check();
  const double limit = 1.0 / static_cast<double>(2 * instance.d + 3);
  if (!(params.eps_cont < limit)) {
    throw ContractError("eps_cont must be below 1/(2d+3) = " +
                        std::to_string(limit));
  }

  GvksResult result;
  if (instance.items.empty()) return result;

  const CandidateDimensions cands = generate_candidate_dimensions(
      instance.items, params, instance.rotations_allowed);
  const ConfigSpace space(cands, params.c_max);
  GvksStats& stats = result.stats;
  stats.configs_total = space.size();
  std::uint64_t limit_configs = space.size();
  if (params.config_budget != 0 && params.config_budget < limit_configs) {
    limit_configs = params.config_budget;
    stats.truncated = true;
  }
  stats.configs_explored = limit_configs;

  PtasOptions ptas;
  ptas.eps = params.eps_cont;
  ptas.x_max = params.x_max;
  ptas.max_guesses = params.max_guesses;

  std::size_t workers = params.threads;
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = std::max<std::size_t>(1, std::min<std::size_t>(workers, limit_configs));

  struct Best {
    double profit = -1.0;
    std::uint64_t index = 0;
    Packing packing;
  };
  std::atomic<std::uint64_t> next{0};
  std::atomic<std::uint64_t> solved{0};
  std::mutex mu;
  Best global;
  // Monotone lower bound shared between workers for pruning only.
  std::atomic<double> floor_profit{0.0};
  std::exception_ptr failure;

  auto work = [&] {
    Best local;
    try {
      while (true) {
        const std::uint64_t i = next.fetch_add(1);
        if (i >= limit_configs) break;
        ContainerPackingInstance cp{instance.items, space.config(i),
                                    params.eps_prime,
                                    instance.rotations_allowed, instance.d};
        double bound = 0.0;
        for (const Item& it : cp.items) {
          for (const Container& c : cp.containers) {
            const bool ok =
                c.kind == ContainerKind::kArea
                    ? is_small_for(it, c, cp.eps_prime)
                    : fits_in(it, c, false) ||
                          (cp.rotations_allowed && fits_in(it, c, true));
            if (ok) {
              bound += it.profit();
              break;
            }
          }
        }
        if (bound < floor_profit.load() || bound <= 0.0) continue;
        solved.fetch_add(1);
        ContainerSolution sol = solve_container_packing(cp, ptas);
        const double p = sol.packing.packed_profit;
        if (p > local.profit || (p == local.profit && i < local.index)) {
          local = Best{p, i, std::move(sol.packing)};
          double seen = floor_profit.load();
          while (p > seen && !floor_profit.compare_exchange_weak(seen, p)) {
          }
        }
      }
    } catch (...) {
      std::lock_guard<std::mutex> lock(mu);
      if (!failure) failure = std::current_exception();
      next.store(limit_configs);
    }
    std::lock_guard<std::mutex> lock(mu);
    if (local.profit > global.profit ||
        (local.profit == global.profit && local.profit >= 0.0 &&
         local.index < global.index)) {
      global = std::move(local);
    }
  };

  if (workers == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work);
    for (std::thread& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);

  stats.configs_solved = solved.load();
  if (global.profit > 0.0) {
    result.packing = std::move(global.packing);
    stats.best_config = global.index;
  }
  return result;
}

}  // namespace gvks
