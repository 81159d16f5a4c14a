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

// Vector-Max-GAP: assign a subset of items to k machines so that every
// machine's size capacity and the d global weight limits hold, maximizing the
// total (machine-dependent) value.

#ifndef GVKS_GAP_HPP_
#define GVKS_GAP_HPP_

#include <cstddef>
#include <limits>
#include <optional>
#include <vector>

namespace gvks {

// Size of an item on a machine it can never be assigned to.
inline constexpr double kInfiniteSize = std::numeric_limits<double>::infinity();

class GapInstance {
 public:
  GapInstance() = default;
  // Zero-filled instance with the given shape.
  GapInstance(std::size_t num_items, std::size_t num_machines,
              std::size_t num_dims);

  std::size_t num_items() const { return n_; }
  std::size_t num_machines() const { return k_; }
  std::size_t num_dims() const { return d_; }

  double& size(std::size_t item, std::size_t machine) {
    return sizes_[item * k_ + machine];
  }
  double size(std::size_t item, std::size_t machine) const {
    return sizes_[item * k_ + machine];
  }
  double& value(std::size_t item, std::size_t machine) {
    return values_[item * k_ + machine];
  }
  double value(std::size_t item, std::size_t machine) const {
    return values_[item * k_ + machine];
  }
  double& weight(std::size_t item, std::size_t dim) {
    return weights_[item * d_ + dim];
  }
  double weight(std::size_t item, std::size_t dim) const {
    return weights_[item * d_ + dim];
  }

  std::vector<double>& capacities() { return capacities_; }
  const std::vector<double>& capacities() const { return capacities_; }
  std::vector<double>& weight_limits() { return weight_limits_; }
  const std::vector<double>& weight_limits() const { return weight_limits_; }

  // Instance restricted to `items` (in that order); machines and limits kept.
  GapInstance subset(const std::vector<std::size_t>& items) const;

  // Throws ContractError on negative or NaN entries or infinite weights.
  void check() const;

 private:
  std::size_t n_ = 0;
  std::size_t k_ = 0;
  std::size_t d_ = 0;
  std::vector<double> sizes_;
  std::vector<double> values_;
  std::vector<double> weights_;
  std::vector<double> capacities_;
  std::vector<double> weight_limits_;
};

struct GapAssignment {
  // machine[i] is the machine item i is assigned to, or nullopt.
  std::vector<std::optional<std::size_t>> machine;
  double total_value = 0.0;

  static GapAssignment empty(std::size_t num_items) {
    return GapAssignment{std::vector<std::optional<std::size_t>>(num_items),
                         0.0};
  }
  std::vector<std::size_t> assigned_items() const;
  std::vector<std::size_t> items_on(std::size_t machine_index) const;

  friend bool operator==(const GapAssignment&, const GapAssignment&) = default;
};

// Sum of val_{machine(i)}(i) over assigned items.
double assignment_value(const GapInstance& instance,
                        const GapAssignment& assignment);

// Whether the assignment respects capacities scaled by `capacity_scale` and
// weight limits scaled by `weight_scale`, each with absolute slack kTol.
bool is_feasible(const GapInstance& instance, const GapAssignment& assignment,
                 double capacity_scale = 1.0, double weight_scale = 1.0);

// Same check against explicit capacity and weight vectors.
bool is_feasible_for(const GapInstance& instance,
                     const GapAssignment& assignment,
                     const std::vector<double>& capacities,
                     const std::vector<double>& weight_limits);

}  // namespace gvks

#endif  // GVKS_GAP_HPP_
