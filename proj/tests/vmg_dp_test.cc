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

#include <gtest/gtest.h>

#include "fuzz.hpp"
#include "gvks/gap.hpp"
#include "gvks/oracle.hpp"
#include "gvks/vmg_dp.hpp"

namespace gvks {
namespace {

GapInstance two_items() {
  GapInstance g(2, 1, 1);
  g.capacities() = {4};
  g.weight_limits() = {3};
  g.size(0, 0) = 2;
  g.weight(0, 0) = 1;
  g.value(0, 0) = 5;
  g.size(1, 0) = 3;
  g.weight(1, 0) = 2;
  g.value(1, 0) = 6;
  return g;
}

TEST(DpTest, NoItems) {
  GapInstance g(0, 2, 1);
  g.capacities() = {3, 4};
  g.weight_limits() = {2};
  const GapAssignment a = solve_integral_dp(g);
  EXPECT_TRUE(a.machine.empty());
  EXPECT_EQ(a.total_value, 0.0);
}

TEST(DpTest, SingleItemExactlyFits) {
  GapInstance g(1, 1, 1);
  g.capacities() = {2};
  g.weight_limits() = {1};
  g.size(0, 0) = 2;
  g.value(0, 0) = 5;
  g.weight(0, 0) = 1;
  const GapAssignment a = solve_integral_dp(g);
  ASSERT_TRUE(a.machine[0].has_value());
  EXPECT_EQ(*a.machine[0], 0u);
  EXPECT_EQ(a.total_value, 5.0);
}

TEST(DpTest, ItemsThatCannotCoexist) {
  const GapAssignment a = solve_integral_dp(two_items());
  EXPECT_EQ(a.total_value, 6.0);
  EXPECT_FALSE(a.machine[0].has_value());
  EXPECT_EQ(a.machine[1], std::optional<std::size_t>(0));
}

TEST(DpTest, TieBreakPrefersSkipThenLowestMachine) {
  GapInstance g(2, 2, 0);
  g.capacities() = {1, 1};
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 2; ++j) {
      g.size(i, j) = 1;
      g.value(i, j) = 3;
    }
  }
  // Recovery runs from the last item down: item 1 takes the lowest machine
  // that keeps the optimum, item 0 the other one.
  const GapAssignment a = solve_integral_dp(g);
  EXPECT_EQ(a.total_value, 6.0);
  EXPECT_EQ(a.machine[1], std::optional<std::size_t>(0));
  EXPECT_EQ(a.machine[0], std::optional<std::size_t>(1));

  // With room for only one, skipping item 1 keeps the optimum.
  g.capacities() = {1, 0};
  const GapAssignment b = solve_integral_dp(g);
  EXPECT_EQ(b.total_value, 3.0);
  EXPECT_FALSE(b.machine[1].has_value());
  EXPECT_EQ(b.machine[0], std::optional<std::size_t>(0));
}

TEST(DpTest, NeverAssignsZeroValue) {
  GapInstance g(3, 2, 0);
  g.capacities() = {5, 5};
  for (std::size_t i = 0; i < 3; ++i) {
    g.size(i, 0) = 1;
    g.size(i, 1) = 1;
    g.value(i, 0) = 0;
    g.value(i, 1) = i == 1 ? 4 : 0;
  }
  const GapAssignment a = solve_integral_dp(g);
  EXPECT_FALSE(a.machine[0].has_value());
  EXPECT_EQ(a.machine[1], std::optional<std::size_t>(1));
  EXPECT_FALSE(a.machine[2].has_value());
}

TEST(DpTest, InfiniteSizeIsNeverChosen) {
  GapInstance g(1, 2, 0);
  g.capacities() = {8, 8};
  g.size(0, 0) = kInfiniteSize;
  g.value(0, 0) = 100;
  g.size(0, 1) = 1;
  g.value(0, 1) = 1;
  const GapAssignment a = solve_integral_dp(g);
  EXPECT_EQ(a.machine[0], std::optional<std::size_t>(1));
  EXPECT_EQ(a.total_value, 1.0);
}

TEST(DpTest, Errors) {
  GapInstance g = two_items();
  g.size(0, 0) = 1.5;
  EXPECT_THROW(solve_integral_dp(g), ContractError);
  g = two_items();
  g.capacities() = {3.5};
  EXPECT_THROW(solve_integral_dp(g), ContractError);
  g = two_items();
  g.capacities() = {1e6};
  g.weight_limits() = {1e6};
  DpOptions tight;
  tight.max_states = 1000;
  EXPECT_THROW(solve_integral_dp(g, tight), ResourceError);
}

TEST(DpTest, StatsReportBound) {
  DpStats stats;
  solve_integral_dp(two_items(), {}, &stats);
  EXPECT_EQ(stats.state_bound, 2u * 5u * 4u);
  EXPECT_LE(stats.state_visits, stats.state_bound);
  EXPECT_GT(stats.state_visits, 0u);
}

TEST(DpTest, MatchesOracleAndIsFeasible) {
  fuzz::Rng rng(1);
  for (int t = 0; t < 300; ++t) {
    const GapInstance g = fuzz::integral_gap(rng, 9, 2, 2, 8);
    const GapAssignment a = solve_integral_dp(g);
    ASSERT_TRUE(is_feasible(g, a)) << t;
    ASSERT_EQ(a.total_value, assignment_value(g, a)) << t;
    ASSERT_EQ(a.total_value, oracle::exact_vmg(g).total_value) << t;
  }
}

TEST(DpTest, MonotoneInCapacities) {
  fuzz::Rng rng(2);
  for (int t = 0; t < 200; ++t) {
    GapInstance g = fuzz::integral_gap(rng, 8, 2, 2, 6);
    const double before = solve_integral_dp(g).total_value;
    if (fuzz::coin(rng) || g.num_dims() == 0) {
      g.capacities()[fuzz::integer(rng, 0, g.num_machines() - 1)] += 1;
    } else {
      g.weight_limits()[fuzz::integer(rng, 0, g.num_dims() - 1)] += 1;
    }
    ASSERT_GE(solve_integral_dp(g).total_value, before) << t;
  }
}

}  // namespace
}  // namespace gvks
