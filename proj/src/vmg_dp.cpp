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

#include "gvks/vmg_dp.hpp"

#include <cmath>
#include <span>
#include <string>
#include <vector>

#include "gvks/types.hpp"

namespace gvks {

namespace {

bool is_integral(double v) { return std::isfinite(v) && v == std::floor(v); }

// Capacity as a table extent (value + 1); throws when it alone is too big.
std::uint64_t extent_of(double capacity, std::uint64_t max_states) {
  if (capacity >= static_cast<double>(max_states)) {
    throw ResourceError("DP capacity " + std::to_string(capacity) +
                        " exceeds the state budget");
  }
  return static_cast<std::uint64_t>(capacity) + 1;
}

// One DP transition "assign item to machine j": the offset it subtracts from
// the remaining-capacity vector, and the value it adds.
struct Branch {
  std::size_t machine;
  std::vector<std::uint64_t> shift;
  std::uint64_t linear_offset;
  double value;
};

}  // namespace

GapAssignment solve_integral_dp(const GapInstance& instance,
                                const DpOptions& options, DpStats* stats) {
  instance.check();
  const std::size_t n = instance.num_items();
  const std::size_t k = instance.num_machines();
  const std::size_t d = instance.num_dims();

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      double s = instance.size(i, j);
      if (s != kInfiniteSize && !is_integral(s)) {
        throw ContractError("DP sizes must be integral");
      }
    }
    for (std::size_t q = 0; q < d; ++q) {
      if (!is_integral(instance.weight(i, q))) {
        throw ContractError("DP weights must be integral");
      }
    }
  }
  for (double m : instance.capacities()) {
    if (!is_integral(m)) throw ContractError("DP capacities must be integral");
  }
  for (double w : instance.weight_limits()) {
    if (!is_integral(w)) throw ContractError("DP weight limits must be integral");
  }

  // Dimensions: machines first, then weights; the last one is contiguous.
  const std::size_t dims = k + d;
  std::vector<std::uint64_t> extent(dims);
  for (std::size_t j = 0; j < k; ++j) {
    extent[j] = extent_of(instance.capacities()[j], options.max_states);
  }
  for (std::size_t q = 0; q < d; ++q) {
    extent[k + q] = extent_of(instance.weight_limits()[q], options.max_states);
  }
  std::uint64_t layer = 1;
  for (std::uint64_t e : extent) {
    if (layer > options.max_states / e) {
      throw ResourceError("DP state space exceeds the budget of " +
                          std::to_string(options.max_states));
    }
    layer *= e;
  }
  if (n > 0 && layer > options.max_states / n) {
    throw ResourceError("DP state space exceeds the budget of " +
                        std::to_string(options.max_states));
  }
  if (stats != nullptr) {
    stats->state_bound = n * layer;
    stats->state_visits = 0;
  }

  GapAssignment result = GapAssignment::empty(n);
  if (n == 0 || k == 0) {
    if (stats != nullptr) stats->state_visits = n * layer;
    return result;
  }

  std::vector<std::uint64_t> stride(dims);
  stride[dims - 1] = 1;
  for (std::size_t t = dims - 1; t > 0; --t) {
    stride[t - 1] = stride[t] * extent[t];
  }

  auto branches_for = [&](std::size_t item) {
    std::vector<Branch> out;
    for (std::size_t j = 0; j < k; ++j) {
      double s = instance.size(item, j);
      double v = instance.value(item, j);
      // A zero-value branch can never beat "skip": VAL is monotone in the
      // remaining capacities.
      if (s == kInfiniteSize || !(v > 0.0)) continue;
      Branch b{j, std::vector<std::uint64_t>(dims, 0), 0, v};
      bool fits = true;
      auto set = [&](std::size_t dim, double amount) {
        if (amount >= static_cast<double>(extent[dim])) {
          fits = false;
          return;
        }
        b.shift[dim] = static_cast<std::uint64_t>(amount);
      };
      set(j, s);
      for (std::size_t q = 0; q < d && fits; ++q) {
        set(k + q, instance.weight(item, q));
      }
      if (!fits) continue;
      for (std::size_t t = 0; t < dims; ++t) {
        b.linear_offset += b.shift[t] * stride[t];
      }
      out.push_back(std::move(b));
    }
    return out;
  };

  // table[l] holds VAL(l, ., .) for every remaining-capacity vector.
  std::vector<double> table((n + 1) * layer, 0.0);
  const kernels::MaxPlusFn kernel = kernels::max_plus_for(options.isa);
  const std::uint64_t inner = extent[dims - 1];
  std::vector<std::uint64_t> coord(dims, 0);

  for (std::size_t l = 1; l <= n; ++l) {
    std::span<const double> prev(table.data() + (l - 1) * layer, layer);
    std::span<double> cur(table.data() + l * layer, layer);
    std::copy(prev.begin(), prev.end(), cur.begin());
    if (stats != nullptr) stats->state_visits += layer;

    for (const Branch& b : branches_for(l - 1)) {
      const std::uint64_t run_start = b.shift[dims - 1];
      const std::uint64_t run = inner - run_start;
      // Odometer over all but the last dimension, starting at the shift.
      for (std::size_t t = 0; t + 1 < dims; ++t) coord[t] = b.shift[t];
      while (true) {
        std::uint64_t base = run_start;
        for (std::size_t t = 0; t + 1 < dims; ++t) base += coord[t] * stride[t];
        kernel(cur.subspan(base, run), prev.subspan(base - b.linear_offset, run),
               b.value);
        std::size_t t = dims - 1;
        while (t > 0) {
          --t;
          if (++coord[t] < extent[t]) break;
          coord[t] = b.shift[t];
          if (t == 0) goto next_branch;
        }
        if (dims == 1) break;
      }
    next_branch:;
    }
  }

  // Backtrack from the full-capacity state.
  for (std::size_t t = 0; t < dims; ++t) coord[t] = extent[t] - 1;
  for (std::size_t l = n; l >= 1; --l) {
    std::uint64_t idx = 0;
    for (std::size_t t = 0; t < dims; ++t) idx += coord[t] * stride[t];
    const double here = table[l * layer + idx];
    const double skip = table[(l - 1) * layer + idx];
    if (here == skip) continue;
    bool found = false;
    for (const Branch& b : branches_for(l - 1)) {
      bool fits = true;
      for (std::size_t t = 0; t < dims; ++t) fits = fits && coord[t] >= b.shift[t];
      if (!fits) continue;
      if (table[(l - 1) * layer + idx - b.linear_offset] + b.value == here) {
        result.machine[l - 1] = b.machine;
        for (std::size_t t = 0; t < dims; ++t) coord[t] -= b.shift[t];
        found = true;
        break;
      }
    }
    if (!found) throw std::logic_error("DP backtracking found no branch");
  }
  result.total_value = assignment_value(instance, result);
  return result;
}

}  // namespace gvks
