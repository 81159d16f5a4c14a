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

#include "gvks/vmg_ptas.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "gvks/types.hpp"

namespace gvks {

namespace {

constexpr double kSnap = 1e-9;

double snapped_ceil(double q) {
  double r = std::round(q);
  return std::abs(q - r) <= kSnap ? r : std::ceil(q);
}

double snapped_floor(double q) {
  double r = std::round(q);
  return std::abs(q - r) <= kSnap ? r : std::floor(q);
}

bool assignable_somewhere(const GapInstance& inst, std::size_t i) {
  for (std::size_t j = 0; j < inst.num_machines(); ++j) {
    if (inst.value(i, j) > 0.0 && inst.size(i, j) <= inst.capacities()[j] + kTol) {
      for (std::size_t q = 0; q < inst.num_dims(); ++q) {
        if (inst.weight(i, q) > inst.weight_limits()[q] + kTol) return false;
      }
      return true;
    }
  }
  return false;
}

// Lifts an assignment of `sub` (built from `items`) back to `n` items.
GapAssignment lift(const GapAssignment& sub,
                   const std::vector<std::size_t>& items, std::size_t n) {
  GapAssignment out = GapAssignment::empty(n);
  for (std::size_t r = 0; r < items.size(); ++r) {
    out.machine[items[r]] = sub.machine[r];
  }
  out.total_value = sub.total_value;
  return out;
}

}  // namespace

RoundingScheme RoundingScheme::standard(const GapInstance& instance,
                                        double eps) {
  const double n = static_cast<double>(instance.num_items());
  RoundingScheme scheme;
  for (double m : instance.capacities()) scheme.mu.push_back(eps * m / n);
  for (double w : instance.weight_limits()) scheme.delta.push_back(eps * w / n);
  return scheme;
}

GapInstance round_instance(const GapInstance& instance,
                           const RoundingScheme& scheme) {
  const std::size_t n = instance.num_items();
  const std::size_t k = instance.num_machines();
  const std::size_t d = instance.num_dims();
  if (scheme.mu.size() != k || scheme.delta.size() != d) {
    throw ContractError("rounding scheme does not match the instance shape");
  }
  for (double g : scheme.mu) {
    if (!(g > 0.0)) throw ContractError("machine granularity must be positive");
  }
  for (double g : scheme.delta) {
    if (!(g > 0.0)) throw ContractError("weight granularity must be positive");
  }

  GapInstance out(n, k, d);
  const double extra = static_cast<double>(n);
  for (std::size_t j = 0; j < k; ++j) {
    out.capacities()[j] =
        snapped_floor(instance.capacities()[j] / scheme.mu[j]) + extra;
  }
  for (std::size_t q = 0; q < d; ++q) {
    out.weight_limits()[q] =
        snapped_floor(instance.weight_limits()[q] / scheme.delta[q]) + extra;
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      double s = instance.size(i, j);
      out.size(i, j) =
          s == kInfiniteSize ? kInfiniteSize : snapped_ceil(s / scheme.mu[j]);
      out.value(i, j) = instance.value(i, j);
    }
    for (std::size_t q = 0; q < d; ++q) {
      out.weight(i, q) = snapped_ceil(instance.weight(i, q) / scheme.delta[q]);
    }
  }
  return out;
}

GapAssignment assign_res_aug(const GapInstance& instance, double eps,
                             const DpOptions& dp) {
  if (!(eps > 0.0 && eps < 1.0)) {
    throw ContractError("assign_res_aug needs eps in (0, 1)");
  }
  instance.check();
  const std::size_t k = instance.num_machines();
  const std::size_t d = instance.num_dims();

  // Items that cannot contribute anywhere (even with augmented capacities)
  // are dropped; this also keeps the rounding granularity eps*M/n coarse.
  std::vector<std::size_t> useful;
  for (std::size_t i = 0; i < instance.num_items(); ++i) {
    bool weight_ok = true;
    for (std::size_t q = 0; q < d; ++q) {
      weight_ok = weight_ok &&
                  instance.weight(i, q) <=
                      (1.0 + eps) * instance.weight_limits()[q] + kTol;
    }
    bool any = false;
    for (std::size_t j = 0; j < k && weight_ok; ++j) {
      any = any || (instance.value(i, j) > 0.0 &&
                    instance.size(i, j) <=
                        (1.0 + eps) * instance.capacities()[j] + kTol);
    }
    if (any) useful.push_back(i);
  }
  if (useful.empty()) return GapAssignment::empty(instance.num_items());

  GapInstance sub = instance.subset(useful);
  const std::size_t n = sub.num_items();

  // Zero capacities cannot be expressed with the standard scheme (mu = 0).
  // Such a machine keeps capacity 0 and admits only zero-size items; a zero
  // weight limit excludes every item with positive weight in that dimension.
  RoundingScheme scheme = RoundingScheme::standard(sub, eps);
  for (double& g : scheme.mu) g = g > 0.0 ? g : 1.0;
  for (double& g : scheme.delta) g = g > 0.0 ? g : 1.0;
  GapInstance rounded = round_instance(sub, scheme);
  for (std::size_t j = 0; j < k; ++j) {
    if (sub.capacities()[j] > 0.0) continue;
    rounded.capacities()[j] = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      rounded.size(i, j) = sub.size(i, j) == 0.0 ? 0.0 : kInfiniteSize;
    }
  }
  for (std::size_t q = 0; q < d; ++q) {
    if (sub.weight_limits()[q] > 0.0) continue;
    rounded.weight_limits()[q] = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      if (sub.weight(i, q) > 0.0) {
        for (std::size_t j = 0; j < k; ++j) rounded.size(i, j) = kInfiniteSize;
      }
      rounded.weight(i, q) = 0.0;
    }
  }

  // Capacity beyond the total demand is never used; clamping keeps the DP
  // table small without changing its optimum.
  for (std::size_t j = 0; j < k; ++j) {
    double demand = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      if (rounded.size(i, j) != kInfiniteSize && rounded.value(i, j) > 0.0) {
        demand += rounded.size(i, j);
      }
    }
    rounded.capacities()[j] = std::min(rounded.capacities()[j], demand);
  }
  for (std::size_t q = 0; q < d; ++q) {
    double demand = 0.0;
    for (std::size_t i = 0; i < n; ++i) demand += rounded.weight(i, q);
    rounded.weight_limits()[q] = std::min(rounded.weight_limits()[q], demand);
  }

  GapAssignment solved = solve_integral_dp(rounded, dp);
  GapAssignment out = lift(solved, useful, instance.num_items());
  out.total_value = assignment_value(instance, out);
  return out;
}

TrimResult trim(const std::vector<TrimItem>& items, double eps, double delta) {
  if (!(eps > 0.0) || !(delta > 0.0)) {
    throw ContractError("trim needs positive eps and delta");
  }
  double total = 0.0;
  for (const TrimItem& it : items) {
    if (it.size < 0.0 || it.size > eps + kTol) {
      throw ContractError("trim: item " + std::to_string(it.id) +
                          " has size outside [0, eps]");
    }
    total += it.size;
  }
  if (total > 1.0 + delta + kTol) {
    throw ContractError("trim: total size exceeds 1 + delta");
  }

  TrimResult result;
  if (total <= 1.0) {
    for (const TrimItem& it : items) result.kept.push_back(it.id);
    return result;
  }

  const std::size_t k =
      static_cast<std::size_t>(std::floor(1.0 / (delta + eps)));
  std::vector<double> start(items.size());
  double cursor = 0.0;
  for (std::size_t r = 0; r < items.size(); ++r) {
    start[r] = cursor;
    cursor += items[r].size;
  }
  auto meets = [&](std::size_t r, std::size_t window) {
    const double lo = static_cast<double>(window) * (delta + eps);
    const double hi = lo + delta;
    const double a = start[r];
    const double b = start[r] + items[r].size;
    return b > a && a < hi && b > lo;
  };

  std::size_t best_window = 0;
  double best_profit = std::numeric_limits<double>::infinity();
  for (std::size_t w = 0; w <= k; ++w) {
    double profit = 0.0;
    for (std::size_t r = 0; r < items.size(); ++r) {
      if (meets(r, w)) profit += items[r].profit;
    }
    if (profit < best_profit) {
      best_profit = profit;
      best_window = w;
    }
  }
  for (std::size_t r = 0; r < items.size(); ++r) {
    (meets(r, best_window) ? result.removed : result.kept)
        .push_back(items[r].id);
  }
  return result;
}

GapAssignment trim_small_solution(const GapAssignment& assignment,
                                  const GapInstance& instance, double eps) {
  const std::size_t k = instance.num_machines();
  const std::size_t d = instance.num_dims();
  const auto& cap = instance.capacities();
  const auto& lim = instance.weight_limits();

  for (std::size_t i : assignment.assigned_items()) {
    for (std::size_t j = 0; j < k; ++j) {
      if (instance.value(i, j) != 0.0 && instance.size(i, j) > eps * cap[j] + kTol) {
        throw ContractError("trim_small_solution: item " + std::to_string(i) +
                            " is not eps-small for machine " +
                            std::to_string(j));
      }
    }
    for (std::size_t q = 0; q < d; ++q) {
      if (instance.weight(i, q) > eps * lim[q] + kTol) {
        throw ContractError("trim_small_solution: item " + std::to_string(i) +
                            " is not eps-small in weight dimension " +
                            std::to_string(q));
      }
    }
  }

  GapAssignment out = assignment;
  auto value_of = [&](std::size_t i) {
    return instance.value(i, *out.machine[i]);
  };

  for (std::size_t j = 0; j < k; ++j) {
    if (cap[j] <= 0.0) continue;  // only zero-size items can be there
    std::vector<TrimItem> stack;
    for (std::size_t i : out.items_on(j)) {
      stack.push_back({i, instance.size(i, j) / cap[j], value_of(i)});
    }
    for (std::size_t i : trim(stack, eps, eps).removed) out.machine[i].reset();
  }
  for (std::size_t q = 0; q < d; ++q) {
    if (lim[q] <= 0.0) continue;
    std::vector<TrimItem> stack;
    for (std::size_t i : out.assigned_items()) {
      stack.push_back({i, instance.weight(i, q) / lim[q], value_of(i)});
    }
    for (std::size_t i : trim(stack, eps, eps).removed) out.machine[i].reset();
  }
  out.total_value = assignment_value(instance, out);
  return out;
}

GapAssignment vmg_ptas(const GapInstance& instance, const PtasOptions& options,
                       PtasStats* stats) {
  instance.check();
  const std::size_t n = instance.num_items();
  const std::size_t k = instance.num_machines();
  const std::size_t d = instance.num_dims();
  const double eps = options.eps;
  if (!(eps > 0.0 && eps < 1.0 / static_cast<double>(2 * d + 3))) {
    throw ContractError("vmg_ptas needs eps in (0, 1/(2d+3))");
  }

  PtasStats local;
  PtasStats& st = stats != nullptr ? *stats : local;
  st = PtasStats{};

  GapAssignment best = GapAssignment::empty(n);
  if (k == 0) return best;

  std::vector<std::size_t> items;
  for (std::size_t i = 0; i < n; ++i) {
    if (assignable_somewhere(instance, i)) items.push_back(i);
  }
  const std::size_t m = items.size();

  const double bound = std::floor(static_cast<double>(d + k) / (eps * eps) + kSnap);
  st.x_cap = std::min({options.x_max, m,
                       bound >= static_cast<double>(m)
                           ? m
                           : static_cast<std::size_t>(bound)});

  if (options.max_guesses != 0) {
    // sum_{t <= x_cap} C(m, t) * k^t, saturating.
    const double limit = static_cast<double>(options.max_guesses);
    double total = 0.0;
    double term = 1.0;
    for (std::size_t t = 0; t <= st.x_cap && total <= limit; ++t) {
      total += term;
      term = term * static_cast<double>(m - t) / static_cast<double>(t + 1) *
             static_cast<double>(k);
    }
    if (total > limit) {
      throw ResourceError("vmg_ptas: more than " +
                          std::to_string(options.max_guesses) +
                          " guesses; lower x_max");
    }
  }

  std::vector<double> cap(k);
  std::vector<double> lim(d);
  std::vector<std::size_t> rest;
  std::vector<std::size_t> machine_of;  // partition of X, as a machine vector
  std::vector<std::size_t> chosen;      // positions into `items`
  std::vector<bool> in_x(n, false);

  auto evaluate = [&]() {
    ++st.guesses;
    cap = instance.capacities();
    lim = instance.weight_limits();
    double x_value = 0.0;
    for (std::size_t r = 0; r < chosen.size(); ++r) {
      const std::size_t i = items[chosen[r]];
      const std::size_t j = machine_of[r];
      // Placing a zero-value item is dominated by leaving it out of X.
      if (!(instance.value(i, j) > 0.0) || instance.size(i, j) == kInfiniteSize) {
        return;
      }
      cap[j] -= instance.size(i, j);
      for (std::size_t q = 0; q < d; ++q) lim[q] -= instance.weight(i, q);
      x_value += instance.value(i, j);
    }
    for (double& c : cap) {
      if (c < -kTol) return;
      c = std::max(c, 0.0);
    }
    for (double& w : lim) {
      if (w < -kTol) return;
      w = std::max(w, 0.0);
    }

    // Residual instance on I - X with values zeroed where an item is not
    // eps-small (in size for that machine; in weight for all machines).
    rest.clear();
    for (std::size_t i : items) {
      if (!in_x[i]) rest.push_back(i);
    }
    GapInstance residual = instance.subset(rest);
    residual.capacities() = cap;
    residual.weight_limits() = lim;
    double optimistic = x_value;
    for (std::size_t r = 0; r < rest.size(); ++r) {
      bool weight_small = true;
      for (std::size_t q = 0; q < d; ++q) {
        weight_small = weight_small && residual.weight(r, q) <= eps * lim[q];
      }
      double top = 0.0;
      for (std::size_t j = 0; j < k; ++j) {
        if (!weight_small || !(residual.size(r, j) <= eps * cap[j])) {
          residual.value(r, j) = 0.0;
        }
        top = std::max(top, residual.value(r, j));
      }
      optimistic += top;
    }
    if (!(optimistic > best.total_value)) return;

    GapAssignment z;
    if (optimistic > x_value) {
      ++st.dp_calls;
      GapAssignment augmented = assign_res_aug(residual, eps, options.dp);
      z = trim_small_solution(augmented, residual, eps);
    } else {
      z = GapAssignment::empty(rest.size());
    }

    GapAssignment candidate = GapAssignment::empty(n);
    for (std::size_t r = 0; r < chosen.size(); ++r) {
      candidate.machine[items[chosen[r]]] = machine_of[r];
    }
    for (std::size_t r = 0; r < rest.size(); ++r) {
      candidate.machine[rest[r]] = z.machine[r];
    }
    candidate.total_value = assignment_value(instance, candidate);
    if (candidate.total_value > best.total_value) best = std::move(candidate);
  };

  for (std::size_t size = 0; size <= st.x_cap; ++size) {
    // Lexicographic combinations of `size` positions out of m.
    chosen.resize(size);
    std::iota(chosen.begin(), chosen.end(), std::size_t{0});
    while (true) {
      for (std::size_t r = 0; r < size; ++r) in_x[items[chosen[r]]] = true;
      machine_of.assign(size, 0);
      while (true) {
        evaluate();
        std::size_t r = size;
        while (r > 0 && machine_of[r - 1] + 1 == k) machine_of[--r] = 0;
        if (r == 0) break;
        ++machine_of[r - 1];
      }
      for (std::size_t r = 0; r < size; ++r) in_x[items[chosen[r]]] = false;

      std::size_t r = size;
      while (r > 0 && chosen[r - 1] == m - size + r - 1) --r;
      if (r == 0) break;
      ++chosen[r - 1];
      for (std::size_t t = r; t < size; ++t) chosen[t] = chosen[t - 1] + 1;
    }
  }
  return best;
}

Decomposition structural_decompose(const GapAssignment& assignment,
                                   const GapInstance& instance, double eps) {
  const std::size_t n = instance.num_items();
  const std::size_t k = instance.num_machines();
  const std::size_t d = instance.num_dims();
  const double total = assignment_value(instance, assignment);

  std::vector<bool> removed(n, false);
  std::vector<double> used_cap(k, 0.0);
  std::vector<double> used_weight(d, 0.0);
  Decomposition out;

  for (std::size_t round = 1;; ++round) {
    std::vector<std::size_t> big;
    double big_value = 0.0;
    for (std::size_t i : assignment.assigned_items()) {
      if (removed[i]) continue;
      const std::size_t j = *assignment.machine[i];
      bool is_big =
          instance.size(i, j) > eps * (instance.capacities()[j] - used_cap[j]);
      for (std::size_t q = 0; q < d && !is_big; ++q) {
        is_big = instance.weight(i, q) >
                 eps * (instance.weight_limits()[q] - used_weight[q]);
      }
      if (is_big) {
        big.push_back(i);
        big_value += instance.value(i, j);
      }
    }
    if (big_value <= eps * total) {
      out.y = std::move(big);
      out.rounds = round;
      break;
    }
    for (std::size_t i : big) {
      removed[i] = true;
      used_cap[*assignment.machine[i]] += instance.size(i, *assignment.machine[i]);
      for (std::size_t q = 0; q < d; ++q) used_weight[q] += instance.weight(i, q);
    }
  }

  std::vector<bool> in_y(n, false);
  for (std::size_t i : out.y) in_y[i] = true;
  for (std::size_t i : assignment.assigned_items()) {
    if (removed[i]) {
      out.x.push_back(i);
    } else if (!in_y[i]) {
      out.z.push_back(i);
    }
  }
  return out;
}

}  // namespace gvks
