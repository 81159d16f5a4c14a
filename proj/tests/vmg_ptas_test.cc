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

#include <cmath>
#include <set>

#include <gtest/gtest.h>

#include "fuzz.hpp"
#include "gvks/oracle.hpp"
#include "gvks/vmg_dp.hpp"
#include "gvks/vmg_ptas.hpp"

namespace gvks {
namespace {

TEST(RoundingTest, FormulaExample) {
  GapInstance g(4, 1, 0);
  g.capacities() = {1.0};
  g.size(0, 0) = 0.5;
  g.value(0, 0) = 2.0;
  const GapInstance r = round_instance(g, {{0.1}, {}});
  EXPECT_EQ(r.size(0, 0), 5.0);
  EXPECT_EQ(r.capacities()[0], 14.0);
  EXPECT_EQ(r.value(0, 0), 2.0);
}

TEST(RoundingTest, StandardScheme) {
  GapInstance g(5, 2, 1);
  g.capacities() = {1.0, 2.0};
  g.weight_limits() = {0.5};
  const RoundingScheme s = RoundingScheme::standard(g, 0.1);
  EXPECT_DOUBLE_EQ(s.mu[0], 0.02);
  EXPECT_DOUBLE_EQ(s.mu[1], 0.04);
  EXPECT_DOUBLE_EQ(s.delta[0], 0.01);
}

TEST(RoundingTest, InfiniteStaysInfiniteAndZeroGranularityFails) {
  GapInstance g(1, 1, 1);
  g.capacities() = {1.0};
  g.weight_limits() = {1.0};
  g.size(0, 0) = kInfiniteSize;
  EXPECT_EQ(round_instance(g, {{0.5}, {0.5}}).size(0, 0), kInfiniteSize);
  EXPECT_THROW(round_instance(g, {{0.0}, {0.5}}), ContractError);
  EXPECT_THROW(round_instance(g, {{0.5}, {0.0}}), ContractError);
}

TEST(RoundingTest, FeasibilityTransfersBothWays) {
  fuzz::Rng rng(5);
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = fuzz::integer(rng, 1, 8);
    const GapInstance g = fuzz::real_gap(rng, n, 2, 2);
    const RoundingScheme s = RoundingScheme::standard(g, 0.2);
    const GapInstance r = round_instance(g, s);
    std::vector<double> caps = g.capacities();
    std::vector<double> lims = g.weight_limits();
    for (std::size_t j = 0; j < 2; ++j) caps[j] += n * s.mu[j];
    for (std::size_t q = 0; q < 2; ++q) lims[q] += n * s.delta[q];
    for (int a = 0; a < 20; ++a) {
      ASSERT_TRUE(is_feasible(r, fuzz::random_feasible(rng, g)));
      ASSERT_TRUE(is_feasible_for(g, fuzz::random_feasible(rng, r), caps, lims));
    }
  }
}

TEST(ResAugTest, IntegralWithRoomMatchesDp) {
  GapInstance g(3, 2, 1);
  g.capacities() = {50, 50};
  g.weight_limits() = {50};
  for (std::size_t i = 0; i < 3; ++i) {
    g.size(i, 0) = 2;
    g.size(i, 1) = 3;
    g.value(i, 0) = 1.0 + i;
    g.value(i, 1) = 3.0 - i;
    g.weight(i, 0) = 4;
  }
  EXPECT_EQ(assign_res_aug(g, 0.1).total_value, solve_integral_dp(g).total_value);
}

TEST(ResAugTest, AugmentedFeasibleAndAtLeastOptimal) {
  fuzz::Rng rng(6);
  for (int t = 0; t < 150; ++t) {
    // The table has about (n / eps)^(k + d) cells; keep it desk-sized.
    const GapInstance g = fuzz::real_gap(rng, fuzz::integer(rng, 0, 6),
                                         fuzz::integer(rng, 1, 2),
                                         fuzz::integer(rng, 0, 2));
    const double eps = fuzz::real(rng, 0.2, 0.5);
    const GapAssignment a = assign_res_aug(g, eps);
    ASSERT_TRUE(is_feasible(g, a, 1.0 + eps, 1.0 + eps)) << t;
    ASSERT_GE(a.total_value, oracle::exact_vmg(g).total_value) << t;
  }
}

TEST(ResAugTest, ZeroCapacityAdmitsOnlyZeroSize) {
  GapInstance g(2, 1, 1);
  g.capacities() = {0.0};
  g.weight_limits() = {1.0};
  g.size(0, 0) = 0.0;
  g.value(0, 0) = 1.0;
  g.size(1, 0) = 0.1;
  g.value(1, 0) = 5.0;
  const GapAssignment a = assign_res_aug(g, 0.2);
  EXPECT_EQ(a.machine[0], std::optional<std::size_t>(0));
  EXPECT_FALSE(a.machine[1].has_value());
  EXPECT_THROW(assign_res_aug(g, 0.0), ContractError);
}

TEST(TrimTest, NothingToRemoveWhenItFits) {
  const TrimResult r = trim({{0, 0.1, 1.0}, {1, 0.2, 1.0}}, 0.2, 0.1);
  EXPECT_TRUE(r.removed.empty());
  EXPECT_EQ(r.kept, (std::vector<std::size_t>{0, 1}));
}

TEST(TrimTest, SixEqualItems) {
  std::vector<TrimItem> items;
  for (std::size_t i = 0; i < 6; ++i) items.push_back({i, 0.2, 1.0});
  // Windows [0,0.25], [0.45,0.7], [0.9,1.15] each meet two items; the first
  // one wins the tie.
  const TrimResult r = trim(items, 0.2, 0.25);
  EXPECT_EQ(r.removed, (std::vector<std::size_t>{0, 1}));
  double kept = 0.0;
  for (std::size_t id : r.kept) kept += items[id].size;
  EXPECT_LE(kept, 1.0 + kTol);
  EXPECT_LT(2.0, 0.45 * 6.0);
}

TEST(TrimTest, PicksCheapestWindow) {
  const std::vector<TrimItem> items = {
      {0, 0.25, 4.0}, {1, 0.25, 1.0}, {2, 0.25, 3.0}, {3, 0.25, 5.0}, {4, 0.2, 2.0}};
  // Windows [0,.25], [.5,.75], [1,1.25] meet {0}, {2}, {4}.
  const TrimResult r = trim(items, 0.25, 0.25);
  EXPECT_EQ(r.removed, (std::vector<std::size_t>{4}));
}

TEST(TrimTest, ZeroSizeItemsAreNeverRemoved) {
  std::vector<TrimItem> items;
  for (std::size_t i = 0; i < 12; ++i) items.push_back({i, i % 2 ? 0.0 : 0.2, 1.0});
  const TrimResult r = trim(items, 0.2, 0.25);
  for (std::size_t id : r.removed) EXPECT_GT(items[id].size, 0.0);
}

TEST(TrimTest, Errors) {
  EXPECT_THROW(trim({{0, 0.3, 1.0}}, 0.2, 0.2), ContractError);
  std::vector<TrimItem> many;
  for (std::size_t i = 0; i < 10; ++i) many.push_back({i, 0.2, 1.0});
  EXPECT_THROW(trim(many, 0.2, 0.2), ContractError);
}

TEST(TrimTest, Postconditions) {
  fuzz::Rng rng(8);
  for (int t = 0; t < 500; ++t) {
    const double eps = fuzz::real(rng, 0.01, 0.6);
    const double delta = fuzz::real(rng, 0.01, 0.6);
    std::vector<TrimItem> items;
    double total = 0.0;
    double profit = 0.0;
    while (true) {
      const double s = fuzz::real(rng, 0.0, eps);
      if (total + s > 1.0 + delta) break;
      items.push_back({items.size(), s, fuzz::real(rng, 0.01, 1.0)});
      total += s;
      profit += items.back().profit;
    }
    const TrimResult r = trim(items, eps, delta);
    double kept = 0.0;
    double removed = 0.0;
    for (std::size_t id : r.kept) kept += items[id].size;
    for (std::size_t id : r.removed) removed += items[id].profit;
    ASSERT_LE(kept, 1.0 + kTol) << t;
    ASSERT_LT(removed, (delta + eps) * profit) << t;
    ASSERT_EQ(r.kept.size() + r.removed.size(), items.size());
  }
}

GapInstance hand_instance() {
  GapInstance g(5, 1, 1);
  g.capacities() = {1.0};
  g.weight_limits() = {1.0};
  const double sizes[] = {0.25, 0.25, 0.25, 0.25, 0.2};
  const double values[] = {4, 1, 3, 5, 2};
  for (std::size_t i = 0; i < 5; ++i) {
    g.size(i, 0) = sizes[i];
    g.value(i, 0) = values[i];
    g.weight(i, 0) = 0.1;
  }
  return g;
}

GapAssignment everything_on_zero(std::size_t n) {
  GapAssignment a = GapAssignment::empty(n);
  for (auto& m : a.machine) m = 0;
  return a;
}

TEST(TrimSmallTest, HandCaseMachine) {
  const GapInstance g = hand_instance();
  const GapAssignment out = trim_small_solution(everything_on_zero(5), g, 0.25);
  EXPECT_FALSE(out.machine[4].has_value());
  EXPECT_EQ(out.total_value, 13.0);
  EXPECT_TRUE(is_feasible(g, out));
}

TEST(TrimSmallTest, HandCaseWeight) {
  GapInstance g = hand_instance();
  for (std::size_t i = 0; i < 5; ++i) {
    g.weight(i, 0) = g.size(i, 0);
    g.size(i, 0) = 0.1;
  }
  const GapAssignment out = trim_small_solution(everything_on_zero(5), g, 0.25);
  EXPECT_FALSE(out.machine[4].has_value());
  EXPECT_EQ(out.total_value, 13.0);
}

TEST(TrimSmallTest, FeasibleInputUnchanged) {
  GapInstance g = hand_instance();
  g.capacities() = {2.0};
  const GapAssignment in = everything_on_zero(5);
  EXPECT_EQ(trim_small_solution(in, g, 0.25).machine, in.machine);
}

TEST(TrimSmallTest, RejectsLargeItems) {
  const GapInstance g = hand_instance();
  EXPECT_THROW(trim_small_solution(everything_on_zero(5), g, 0.1), ContractError);
}

TEST(TrimSmallTest, Postconditions) {
  fuzz::Rng rng(9);
  for (int t = 0; t < 300; ++t) {
    const double eps = fuzz::real(rng, 0.05, 0.3);
    const std::size_t k = fuzz::integer(rng, 1, 3);
    const std::size_t d = fuzz::integer(rng, 0, 2);
    const std::size_t n = fuzz::integer(rng, 1, 60);
    GapInstance g(n, k, d);
    for (double& m : g.capacities()) m = fuzz::real(rng, 0.5, 2.0);
    for (double& w : g.weight_limits()) w = fuzz::real(rng, 0.5, 2.0);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < k; ++j) {
        g.size(i, j) = fuzz::real(rng, 0.0, eps * g.capacities()[j]);
        g.value(i, j) = fuzz::real(rng, 0.01, 1.0);
      }
      for (std::size_t q = 0; q < d; ++q) {
        g.weight(i, q) = fuzz::real(rng, 0.0, eps * g.weight_limits()[q]);
      }
    }
    // Overloaded by up to (1 + eps).
    GapInstance aug = g;
    for (double& m : aug.capacities()) m *= 1.0 + eps;
    for (double& w : aug.weight_limits()) w *= 1.0 + eps;
    const GapAssignment in = fuzz::random_feasible(rng, aug, 1.0);
    const GapAssignment out = trim_small_solution(in, g, eps);
    ASSERT_TRUE(is_feasible(g, out)) << t;
    ASSERT_GE(out.total_value, (1.0 - 2.0 * (d + 1) * eps) * in.total_value) << t;
  }
}

TEST(PtasTest, SingleItem) {
  GapInstance g(1, 3, 1);
  g.capacities() = {1, 1, 1};
  g.weight_limits() = {1};
  g.weight(0, 0) = 0.5;
  for (std::size_t j = 0; j < 3; ++j) {
    g.size(0, j) = 0.5;
    g.value(0, j) = 1.0 + (j == 1);
  }
  PtasOptions opt;
  opt.eps = 0.1;
  const GapAssignment a = vmg_ptas(g, opt);
  EXPECT_EQ(a.machine[0], std::optional<std::size_t>(1));
  EXPECT_EQ(a.total_value, 2.0);
}

TEST(PtasTest, EpsRange) {
  GapInstance g(1, 1, 1);
  g.capacities() = {1};
  g.weight_limits() = {1};
  PtasOptions opt;
  opt.eps = 0.2;  // 1/(2d+3) = 0.2
  EXPECT_THROW(vmg_ptas(g, opt), ContractError);
  opt.eps = 0.19;
  EXPECT_NO_THROW(vmg_ptas(g, opt));
}

TEST(PtasTest, ExactWhenGuessesCoverOptimum) {
  fuzz::Rng rng(10);
  for (int t = 0; t < 100; ++t) {
    const GapInstance g = fuzz::real_gap(rng, fuzz::integer(rng, 1, 7),
                                         fuzz::integer(rng, 1, 2), 1);
    PtasOptions opt;
    opt.eps = 0.1;
    PtasStats stats;
    const GapAssignment a = vmg_ptas(g, opt, &stats);
    // (d + k) / eps^2 >= 200 > n, so every subset is guessed.
    const GapAssignment exact = oracle::exact_vmg(g);
    ASSERT_GE(stats.x_cap, exact.assigned_items().size());
    ASSERT_TRUE(is_feasible(g, a));
    ASSERT_NEAR(a.total_value, exact.total_value, 1e-12) << t;
  }
}

TEST(PtasTest, CappedGuessesStayFeasibleAndDeterministic) {
  fuzz::Rng rng(12);
  for (int t = 0; t < 100; ++t) {
    const GapInstance g = fuzz::real_gap(rng, fuzz::integer(rng, 1, 10), 2, 2);
    PtasOptions opt;
    opt.eps = 0.1;
    opt.x_max = 1;
    const GapAssignment a = vmg_ptas(g, opt);
    ASSERT_TRUE(is_feasible(g, a));
    ASSERT_EQ(a, vmg_ptas(g, opt));
  }
}

TEST(PtasTest, GuessBudget) {
  fuzz::Rng rng(13);
  const GapInstance g = fuzz::real_gap(rng, 10, 2, 1);
  PtasOptions opt;
  opt.eps = 0.1;
  opt.max_guesses = 5;
  EXPECT_THROW(vmg_ptas(g, opt), ResourceError);
}

TEST(DecomposeTest, AllTiny) {
  GapInstance g(20, 1, 1);
  g.capacities() = {1.0};
  g.weight_limits() = {1.0};
  for (std::size_t i = 0; i < 20; ++i) {
    g.size(i, 0) = 0.01;
    g.weight(i, 0) = 0.01;
    g.value(i, 0) = 1.0;
  }
  const Decomposition dec = structural_decompose(everything_on_zero(20), g, 0.1);
  EXPECT_TRUE(dec.x.empty());
  EXPECT_TRUE(dec.y.empty());
  EXPECT_EQ(dec.z.size(), 20u);
  EXPECT_EQ(dec.rounds, 1u);
}

TEST(DecomposeTest, OneHugeItem) {
  GapInstance g(3, 1, 1);
  g.capacities() = {1.0};
  g.weight_limits() = {1.0};
  g.size(0, 0) = 0.9;
  g.weight(0, 0) = 0.1;
  g.value(0, 0) = 100.0;
  for (std::size_t i = 1; i < 3; ++i) {
    g.size(i, 0) = 0.001;
    g.weight(i, 0) = 0.001;
    g.value(i, 0) = 0.1;
  }
  const Decomposition dec = structural_decompose(everything_on_zero(3), g, 0.1);
  EXPECT_EQ(dec.x, (std::vector<std::size_t>{0}));
  EXPECT_TRUE(dec.y.empty());
  EXPECT_EQ(dec.z.size(), 2u);
}

TEST(DecomposeTest, Postconditions) {
  fuzz::Rng rng(14);
  for (int t = 0; t < 300; ++t) {
    const std::size_t k = fuzz::integer(rng, 1, 3);
    const std::size_t d = fuzz::integer(rng, 0, 2);
    const GapInstance g = fuzz::real_gap(rng, fuzz::integer(rng, 1, 30), k, d);
    const double eps = fuzz::real(rng, 0.05, 0.5);
    const GapAssignment a = fuzz::random_feasible(rng, g, 0.9);
    const Decomposition dec = structural_decompose(a, g, eps);

    std::multiset<std::size_t> parts(dec.x.begin(), dec.x.end());
    parts.insert(dec.y.begin(), dec.y.end());
    parts.insert(dec.z.begin(), dec.z.end());
    const std::vector<std::size_t> assigned = a.assigned_items();
    ASSERT_EQ(parts, std::multiset<std::size_t>(assigned.begin(), assigned.end()));

    ASSERT_LE(dec.x.size(), (d + k) / (eps * eps));
    const double total = assignment_value(g, a);
    double y_value = 0.0;
    for (std::size_t i : dec.y) y_value += g.value(i, *a.machine[i]);
    ASSERT_LE(y_value, eps * total);
    ASSERT_LE(dec.rounds, static_cast<std::size_t>(std::ceil(1.0 / eps)));

    std::vector<double> cap = g.capacities();
    std::vector<double> lim = g.weight_limits();
    for (std::size_t i : dec.x) {
      cap[*a.machine[i]] -= g.size(i, *a.machine[i]);
      for (std::size_t q = 0; q < d; ++q) lim[q] -= g.weight(i, q);
    }
    for (std::size_t i : dec.z) {
      const std::size_t j = *a.machine[i];
      ASSERT_LE(g.size(i, j), eps * cap[j] + kTol);
      for (std::size_t q = 0; q < d; ++q) ASSERT_LE(g.weight(i, q), eps * lim[q] + kTol);
    }
  }
}

}  // namespace
}  // namespace gvks
