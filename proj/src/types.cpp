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

#include "gvks/types.hpp"

#include <cmath>
#include <utility>

namespace gvks {

Item::Item(std::string id, double width, double height, double profit,
           std::vector<double> weights)
    : id_(std::move(id)),
      width_(width),
      height_(height),
      profit_(profit),
      weights_(std::move(weights)) {
  if (!(width_ > 0.0 && width_ <= 1.0) || !(height_ > 0.0 && height_ <= 1.0)) {
    throw ContractError("item '" + id_ + "': sides must lie in (0, 1]");
  }
  if (!(profit_ >= 0.0) || !std::isfinite(profit_)) {
    throw ContractError("item '" + id_ + "': profit must be a finite value >= 0");
  }
  for (double v : weights_) {
    if (!(v >= 0.0 && v <= 1.0)) {
      throw ContractError("item '" + id_ + "': weights must lie in [0, 1]");
    }
  }
}

void KnapsackInstance::check() const {
  for (const Item& item : items) {
    if (item.dims() != d) {
      throw ContractError("item '" + item.id() + "' has " +
                          std::to_string(item.dims()) + " weights, expected " +
                          std::to_string(d));
    }
  }
}

std::size_t KnapsackInstance::find(std::string_view id) const {
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (items[i].id() == id) return i;
  }
  return npos;
}

std::string_view to_string(ContainerKind kind) {
  switch (kind) {
    case ContainerKind::kLarge:
      return "large";
    case ContainerKind::kWide:
      return "wide";
    case ContainerKind::kTall:
      return "tall";
    case ContainerKind::kArea:
      return "area";
  }
  return "?";
}

SolverParams SolverParams::from_eps(double eps) {
  SolverParams p;
  p.eps = eps;
  p.eps_struct = eps / 2.0;
  p.eps_cont = eps;
  p.eps_prime = eps;
  return p;
}

void SolverParams::check() const {
  auto in_range = [](double e) { return e > 0.0 && e < 0.5; };
  if (!in_range(eps) || !in_range(eps_struct) || !in_range(eps_cont) ||
      !in_range(eps_prime)) {
    throw ContractError("all epsilon parameters must lie in (0, 1/2)");
  }
  if (c_max < 1) throw ContractError("c_max must be >= 1");
  if (sum_depth < 1) throw ContractError("sum_depth must be >= 1");
}

}  // namespace gvks
