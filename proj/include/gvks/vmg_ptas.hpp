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

// Approximation scheme for Vector-Max-GAP.
//
// The pipeline is: round sizes/weights to multiples of granularities mu and
// delta so that the integral DP solves the resource-augmented problem
// exactly (assign_res_aug), repair the (1+eps)-overload of a solution made of
// eps-small items by trimming (trim, trim_small_solution), and guess the few
// big items of an optimum by enumeration (vmg_ptas). structural_decompose
// replays the argument that such a guess exists.

#ifndef GVKS_VMG_PTAS_HPP_
#define GVKS_VMG_PTAS_HPP_

#include <cstddef>
#include <cstdint>
#include <limits>
#include <vector>

#include "gvks/gap.hpp"
#include "gvks/vmg_dp.hpp"

namespace gvks {

struct RoundingScheme {
  std::vector<double> mu;     // one per machine
  std::vector<double> delta;  // one per weight dimension

  // mu_j = eps * M_j / n and delta_q = eps * W_q / n.
  static RoundingScheme standard(const GapInstance& instance, double eps);
};

// s'_j(i) = ceil(s_j(i) / mu_j), M'_j = floor(M_j / mu_j) + n, and the same
// for weights with delta. Values are copied. Infinite sizes stay infinite.
// Quotients within 1e-9 of an integer are snapped to it before rounding.
// Throws ContractError on a non-positive granularity.
GapInstance round_instance(const GapInstance& instance,
                           const RoundingScheme& scheme);

// Optimal solution of the rounded instance built with the standard scheme.
// It is feasible for capacities (1+eps)M and weight limits (1+eps)W, and its
// value is at least the optimum of `instance`. Machines (weight dimensions)
// with zero capacity (limit) only admit items of zero size (weight).
GapAssignment assign_res_aug(const GapInstance& instance, double eps,
                             const DpOptions& dp = {});

struct TrimItem {
  std::size_t id;
  double size;
  double profit;
};

struct TrimResult {
  std::vector<std::size_t> removed;  // ids, in input order
  std::vector<std::size_t> kept;     // ids, in input order
};

// Removes a low-profit set of items from a 1-D bin of length 1 + delta so the
// rest fits in length 1. Items are laid out in input order; with
// k = floor(1 / (delta + eps)), k + 1 windows of length delta separated by
// gaps of length eps are placed from 0, and the cheapest set of items meeting
// a window's interior is removed (lowest window index on ties). Items of
// size 0 meet no window. When the total size is already <= 1 nothing is
// removed. Throws ContractError for an item larger than eps.
TrimResult trim(const std::vector<TrimItem>& items, double eps, double delta);

// Turns an assignment of eps-small items that is feasible for
// ((1+eps)M, (1+eps)W) into one feasible for (M, W): trims every machine on
// its sizes, then the whole set on each weight dimension. Throws
// ContractError when an assigned item is not eps-small.
GapAssignment trim_small_solution(const GapAssignment& assignment,
                                  const GapInstance& instance, double eps);

struct PtasOptions {
  double eps = 0.05;
  // Largest guessed set. The approximation guarantee needs at least
  // (d + k) / eps^2; the effective cap is min(that bound, x_max).
  std::size_t x_max = std::numeric_limits<std::size_t>::max();
  // Refuse (ResourceError) when more (X, partition) guesses than this would
  // be enumerated; 0 = unlimited.
  std::uint64_t max_guesses = 0;
  DpOptions dp;
};

struct PtasStats {
  std::uint64_t guesses = 0;       // (X, partition) pairs evaluated
  std::uint64_t dp_calls = 0;
  std::size_t x_cap = 0;           // effective |X| bound
};

// (1 - (2d+3)eps)-approximation for Vector-Max-GAP when options.x_max reaches
// (d + k) / eps^2. Guessed sets X are enumerated by size, then
// lexicographically; partitions of X in lexicographic machine-vector order.
// The first best solution found is returned.
GapAssignment vmg_ptas(const GapInstance& instance, const PtasOptions& options,
                       PtasStats* stats = nullptr);

struct Decomposition {
  std::vector<std::size_t> x;  // guessed big items
  std::vector<std::size_t> y;  // dropped, value <= eps * val(J)
  std::vector<std::size_t> z;  // small relative to residual capacities
  std::size_t rounds = 0;      // index T of the round that produced y
};

// Constructive decomposition of a feasible assignment into X, Y, Z: round t
// collects the items that are big relative to the capacities left after
// removing rounds 1..t-1; the first round of value <= eps * val(J) becomes Y.
Decomposition structural_decompose(const GapAssignment& assignment,
                                   const GapInstance& instance, double eps);

}  // namespace gvks

#endif  // GVKS_VMG_PTAS_HPP_
