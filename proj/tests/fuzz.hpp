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

// Random instance builders shared by the unit tests and the acceptance suite.

#ifndef GVKS_TESTS_FUZZ_HPP_
#define GVKS_TESTS_FUZZ_HPP_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "gvks/container_pack.hpp"
#include "gvks/gap.hpp"
#include "gvks/types.hpp"

namespace gvks::fuzz {

using Rng = std::mt19937_64;

inline double real(Rng& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline std::size_t integer(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

inline bool coin(Rng& rng, double p = 0.5) {
  return std::bernoulli_distribution(p)(rng);
}

// Integral instance: n <= max_n, 1 <= k <= max_k, 0 <= d <= max_d, capacities
// and limits in [0, max_cap]. Some sizes are infinite, some values zero.
inline GapInstance integral_gap(Rng& rng, std::size_t max_n, std::size_t max_k,
                                std::size_t max_d, std::size_t max_cap) {
  const std::size_t n = integer(rng, 0, max_n);
  const std::size_t k = integer(rng, 1, max_k);
  const std::size_t d = integer(rng, 0, max_d);
  GapInstance g(n, k, d);
  for (double& m : g.capacities()) m = static_cast<double>(integer(rng, 0, max_cap));
  for (double& w : g.weight_limits()) w = static_cast<double>(integer(rng, 0, max_cap));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      g.size(i, j) = coin(rng, 0.1) ? kInfiniteSize
                                    : static_cast<double>(integer(rng, 0, max_cap));
      g.value(i, j) = coin(rng, 0.1) ? 0.0 : static_cast<double>(integer(rng, 1, 20));
    }
    for (std::size_t q = 0; q < d; ++q) {
      g.weight(i, q) = static_cast<double>(integer(rng, 0, max_cap / 2 + 1));
    }
  }
  return g;
}

// Real-valued instance with n items, k machines, d dimensions.
inline GapInstance real_gap(Rng& rng, std::size_t n, std::size_t k,
                            std::size_t d) {
  GapInstance g(n, k, d);
  for (double& m : g.capacities()) m = real(rng, 0.2, 2.0);
  for (double& w : g.weight_limits()) w = real(rng, 0.2, 2.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      g.size(i, j) = coin(rng, 0.05) ? kInfiniteSize : real(rng, 0.0, 0.9);
      g.value(i, j) = coin(rng, 0.05) ? 0.0 : real(rng, 0.0, 1.0);
    }
    for (std::size_t q = 0; q < d; ++q) g.weight(i, q) = real(rng, 0.0, 0.9);
  }
  return g;
}

// Random assignment that satisfies capacities and limits without any
// tolerance: items in random order, each to a random machine if it fits.
inline GapAssignment random_feasible(Rng& rng, const GapInstance& g,
                                     double assign_prob = 0.7) {
  const std::size_t n = g.num_items();
  const std::size_t k = g.num_machines();
  const std::size_t d = g.num_dims();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<double> load(k, 0.0);
  std::vector<double> weight(d, 0.0);
  GapAssignment a = GapAssignment::empty(n);
  for (std::size_t i : order) {
    if (!coin(rng, assign_prob)) continue;
    const std::size_t j = integer(rng, 0, k - 1);
    if (g.size(i, j) == kInfiniteSize) continue;
    if (load[j] + g.size(i, j) > g.capacities()[j]) continue;
    bool ok = true;
    for (std::size_t q = 0; q < d; ++q) {
      ok = ok && weight[q] + g.weight(i, q) <= g.weight_limits()[q];
    }
    if (!ok) continue;
    load[j] += g.size(i, j);
    for (std::size_t q = 0; q < d; ++q) weight[q] += g.weight(i, q);
    a.machine[i] = j;
  }
  a.total_value = assignment_value(g, a);
  return a;
}

inline Item item(Rng& rng, std::size_t index, std::size_t d, double min_side,
                 double max_side, double max_weight = 0.5) {
  std::vector<double> v(d);
  for (double& x : v) x = real(rng, 0.0, max_weight);
  return Item("i" + std::to_string(index), real(rng, min_side, max_side),
              real(rng, min_side, max_side), real(rng, 0.01, 1.0), std::move(v));
}

inline KnapsackInstance knapsack(Rng& rng, std::size_t n, std::size_t d,
                                 bool rotations, double max_side = 0.7) {
  KnapsackInstance inst;
  inst.d = d;
  inst.rotations_allowed = rotations;
  for (std::size_t i = 0; i < n; ++i) {
    inst.items.push_back(item(rng, i, d, 0.05, max_side));
  }
  return inst;
}

// Guillotine split of the unit square into up to `count` typed containers.
inline std::vector<Container> containers(Rng& rng, std::size_t count) {
  std::vector<Container> out = {{ContainerKind::kLarge, 0.0, 0.0, 1.0, 1.0}};
  while (out.size() < count) {
    const std::size_t t = integer(rng, 0, out.size() - 1);
    Container c = out[t];
    const double f = real(rng, 0.25, 0.75);
    Container other = c;
    if (coin(rng)) {
      c.width *= f;
      other.x = c.x + c.width;
      other.width -= c.width;
    } else {
      c.height *= f;
      other.y = c.y + c.height;
      other.height -= c.height;
    }
    out[t] = c;
    out.push_back(other);
  }
  constexpr ContainerKind kinds[] = {ContainerKind::kLarge, ContainerKind::kWide,
                                     ContainerKind::kTall, ContainerKind::kArea};
  for (Container& c : out) c.kind = kinds[integer(rng, 0, 3)];
  return out;
}

}  // namespace gvks::fuzz

#endif  // GVKS_TESTS_FUZZ_HPP_
