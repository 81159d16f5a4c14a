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

#include "gvks/gap.hpp"

#include <cmath>

#include "gvks/types.hpp"

namespace gvks {

GapInstance::GapInstance(std::size_t num_items, std::size_t num_machines,
                         std::size_t num_dims)
    : n_(num_items),
      k_(num_machines),
      d_(num_dims),
      sizes_(num_items * num_machines, 0.0),
      values_(num_items * num_machines, 0.0),
      weights_(num_items * num_dims, 0.0),
      capacities_(num_machines, 0.0),
      weight_limits_(num_dims, 0.0) {}

GapInstance GapInstance::subset(const std::vector<std::size_t>& items) const {
  GapInstance out(items.size(), k_, d_);
  for (std::size_t r = 0; r < items.size(); ++r) {
    std::size_t i = items[r];
    for (std::size_t j = 0; j < k_; ++j) {
      out.size(r, j) = size(i, j);
      out.value(r, j) = value(i, j);
    }
    for (std::size_t q = 0; q < d_; ++q) out.weight(r, q) = weight(i, q);
  }
  out.capacities_ = capacities_;
  out.weight_limits_ = weight_limits_;
  return out;
}

void GapInstance::check() const {
  auto bad = [](double v) { return std::isnan(v) || v < 0.0; };
  for (double v : sizes_) {
    if (bad(v)) throw ContractError("GAP sizes must be nonnegative");
  }
  for (double v : values_) {
    if (bad(v) || std::isinf(v)) {
      throw ContractError("GAP values must be finite and nonnegative");
    }
  }
  for (double v : weights_) {
    if (bad(v) || std::isinf(v)) {
      throw ContractError("GAP weights must be finite and nonnegative");
    }
  }
  for (double v : capacities_) {
    if (bad(v) || std::isinf(v)) {
      throw ContractError("GAP capacities must be finite and nonnegative");
    }
  }
  for (double v : weight_limits_) {
    if (bad(v) || std::isinf(v)) {
      throw ContractError("GAP weight limits must be finite and nonnegative");
    }
  }
}

std::vector<std::size_t> GapAssignment::assigned_items() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < machine.size(); ++i) {
    if (machine[i]) out.push_back(i);
  }
  return out;
}

std::vector<std::size_t> GapAssignment::items_on(
    std::size_t machine_index) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < machine.size(); ++i) {
    if (machine[i] && *machine[i] == machine_index) out.push_back(i);
  }
  return out;
}

double assignment_value(const GapInstance& instance,
                        const GapAssignment& assignment) {
  double total = 0.0;
  for (std::size_t i = 0; i < assignment.machine.size(); ++i) {
    if (assignment.machine[i]) total += instance.value(i, *assignment.machine[i]);
  }
  return total;
}

bool is_feasible_for(const GapInstance& instance,
                     const GapAssignment& assignment,
                     const std::vector<double>& capacities,
                     const std::vector<double>& weight_limits) {
  if (assignment.machine.size() != instance.num_items()) return false;
  std::vector<double> load(instance.num_machines(), 0.0);
  std::vector<double> weight(instance.num_dims(), 0.0);
  for (std::size_t i = 0; i < instance.num_items(); ++i) {
    if (!assignment.machine[i]) continue;
    std::size_t j = *assignment.machine[i];
    if (j >= instance.num_machines()) return false;
    load[j] += instance.size(i, j);
    for (std::size_t q = 0; q < instance.num_dims(); ++q) {
      weight[q] += instance.weight(i, q);
    }
  }
  for (std::size_t j = 0; j < load.size(); ++j) {
    if (!(load[j] <= capacities[j] + kTol)) return false;
  }
  for (std::size_t q = 0; q < weight.size(); ++q) {
    if (!(weight[q] <= weight_limits[q] + kTol)) return false;
  }
  return true;
}

bool is_feasible(const GapInstance& instance, const GapAssignment& assignment,
                 double capacity_scale, double weight_scale) {
  std::vector<double> caps = instance.capacities();
  for (double& c : caps) c *= capacity_scale;
  std::vector<double> lims = instance.weight_limits();
  for (double& w : lims) w *= weight_scale;
  return is_feasible_for(instance, assignment, caps, lims);
}

}  // namespace gvks
