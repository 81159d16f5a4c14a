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

#ifndef GVKS_TYPES_HPP_
#define GVKS_TYPES_HPP_

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace gvks {

// Absolute tolerance for every geometric and vector feasibility comparison.
inline constexpr double kTol = 1e-9;

// A precondition of an operation was violated by the caller.
class ContractError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A configured state/enumeration budget would be exceeded.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The input refers to things that do not exist (e.g. an unknown item id).
// Distinct from infeasibility, which validators report as violations.
class StructuralError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A rectangle of the (2,d) knapsack problem. The knapsack is the unit square.
class Item {
 public:
  Item(std::string id, double width, double height, double profit,
       std::vector<double> weights);

  const std::string& id() const { return id_; }
  double width() const { return width_; }
  double height() const { return height_; }
  double profit() const { return profit_; }
  const std::vector<double>& weights() const { return weights_; }
  double weight(std::size_t q) const { return weights_[q]; }
  std::size_t dims() const { return weights_.size(); }
  double area() const { return width_ * height_; }

  // Footprint in the given orientation.
  double width(bool rotated) const { return rotated ? height_ : width_; }
  double height(bool rotated) const { return rotated ? width_ : height_; }

 private:
  std::string id_;
  double width_;
  double height_;
  double profit_;
  std::vector<double> weights_;
};

struct KnapsackInstance {
  std::vector<Item> items;
  std::size_t d = 0;
  bool rotations_allowed = false;

  // Throws ContractError when an item's weight vector is not d long.
  void check() const;
  // Index of the item with this id, or npos.
  std::size_t find(std::string_view id) const;
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
};

struct Placement {
  std::string item_id;
  double x = 0.0;
  double y = 0.0;
  bool rotated = false;

  friend bool operator==(const Placement&, const Placement&) = default;
};

enum class ContainerKind { kLarge, kWide, kTall, kArea };

std::string_view to_string(ContainerKind kind);

struct Container {
  ContainerKind kind = ContainerKind::kLarge;
  double x = 0.0;
  double y = 0.0;
  double width = 0.0;
  double height = 0.0;

  double area() const { return width * height; }
  friend bool operator==(const Container&, const Container&) = default;
};

struct Packing {
  std::vector<Placement> placements;
  double packed_profit = 0.0;
  // Containers the placements were realized in, if any. Informational only;
  // not part of feasibility.
  std::vector<Container> containers;

  friend bool operator==(const Packing&, const Packing&) = default;
};

// Every accuracy constant of the solver pipeline.
struct SolverParams {
  double eps = 0.1;
  double eps_struct = 0.05;
  double eps_cont = 0.1;
  double eps_prime = 0.1;
  std::size_t c_max = 2;
  std::size_t sum_depth = 2;
  // Maximum number of container configurations evaluated; 0 = unlimited.
  std::size_t config_budget = 0;
  // Worker threads for configuration evaluation; 0 = hardware concurrency.
  std::size_t threads = 1;
  // Cap on the guessed-set size inside the container PTAS. The guarantee
  // needs (d + k) / eps_cont^2; the default leaves that bound in force.
  std::size_t x_max = static_cast<std::size_t>(-1);
  // Per-configuration guess budget of the container PTAS; 0 = unlimited.
  std::uint64_t max_guesses = 0;

  // Defaults derived from a single accuracy parameter: eps_struct = eps/2,
  // eps_cont = eps, eps_prime = eps_cont.
  static SolverParams from_eps(double eps);
  void check() const;
};

}  // namespace gvks

#endif  // GVKS_TYPES_HPP_
