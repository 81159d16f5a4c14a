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

// (2,d) knapsack solver: guess a container configuration, solve the container
// packing problem for it, keep the best packing.
//
// Configurations are guillotine partitions of the unit square into at most
// c_max leaves, every leaf being one typed container. A cut is placed at an
// offset (from the region's left or bottom edge) taken from the candidate
// widths or heights. Canonical form: the left child of a vertical cut is not
// itself cut vertically, the bottom child of a horizontal cut is not cut
// horizontally. Leaves fill their region: a container that is smaller than
// its region is dominated by the full-region one, and an empty region by
// letting its sibling take it over.

#ifndef GVKS_GVKS_SOLVER_HPP_
#define GVKS_GVKS_SOLVER_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <vector>

#include "gvks/types.hpp"

namespace gvks {

struct CandidateDimensions {
  std::vector<double> widths;   // sorted, deduplicated within kTol
  std::vector<double> heights;  // sorted, deduplicated within kTol
};

// widths = {1} + item widths + sums of at most sum_depth distinct item widths
// that are <= 1; heights likewise. With rotations, every item contributes
// both of its sides to both sets.
CandidateDimensions generate_candidate_dimensions(const std::vector<Item>& items,
                                                  const SolverParams& params,
                                                  bool rotations = false);

struct Rect {
  double x, y, width, height;
};

// All canonical layouts and their labelings, addressable by index.
class ConfigSpace {
 public:
  ConfigSpace(const CandidateDimensions& cands, std::size_t c_max);

  // Number of configurations: sum over layouts of 4^(leaves).
  std::uint64_t size() const { return offsets_.empty() ? 0 : offsets_.back(); }
  std::size_t num_layouts() const { return layouts_.size(); }
  const std::vector<Rect>& layout(std::size_t i) const { return layouts_[i]; }

  // Configuration `index` in canonical order: layouts in generation order,
  // then labelings in lexicographic order of (large, wide, tall, area).
  std::vector<Container> config(std::uint64_t index) const;

 private:
  std::vector<std::vector<Rect>> layouts_;
  std::vector<std::uint64_t> offsets_;  // prefix sums, size layouts_ + 1
};

// Visits configurations in canonical order until the visitor returns false or
// params.config_budget configurations were visited (0 = unlimited). Returns
// whether the stream was cut short by the budget.
bool enumerate_container_configs(
    const CandidateDimensions& cands, const SolverParams& params,
    const std::function<bool(const std::vector<Container>&)>& visit);

struct GvksStats {
  std::uint64_t configs_total = 0;      // size of the configuration space
  std::uint64_t configs_explored = 0;   // configurations considered
  std::uint64_t configs_solved = 0;     // ... of which not pruned by bounds
  bool truncated = false;               // stopped by params.config_budget
  std::uint64_t best_config = 0;        // index of the winning configuration
};

struct GvksResult {
  Packing packing;
  GvksStats stats;
};

// Best packing over all configurations (up to params.config_budget),
// evaluated on params.threads workers. Ties go to the earliest configuration,
// so the result does not depend on the thread count. Pruning only skips a
// configuration whose profit bound is strictly below the best found.
GvksResult solve_gvks_detailed(const KnapsackInstance& instance,
                               const SolverParams& params);

inline Packing solve_gvks(const KnapsackInstance& instance,
                          const SolverParams& params) {
  return solve_gvks_detailed(instance, params).packing;
}

}  // namespace gvks

#endif  // GVKS_GVKS_SOLVER_HPP_
