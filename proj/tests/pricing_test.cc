#include <gtest/gtest.h>

#include <algorithm>

#include "bbap/kernels.h"
#include "bbap/pricing.h"
#include "support.h"

namespace bbap {
namespace {

std::vector<int> AllFlights(const Instance& inst) {
  std::vector<int> v(inst.num_flights());
  for (int j = 0; j < inst.num_flights(); ++j) v[j] = j;
  return v;
}

DualPrices RandomDuals(const Instance& inst, SplitMix64& rng) {
  const double bound = static_cast<double>(inst.max_abs_profit());
  DualPrices d;
  for (int j = 0; j < inst.num_flights(); ++j) {
    d.y.push_back(testing::RationalIn(rng, -bound, bound));
  }
  for (int i = 0; i < inst.num_belts(); ++i) {
    d.u.push_back(testing::RationalIn(rng, 0.0, bound));
  }
  return d;
}

// Schedule is in flight order, inside windows and pairwise disjoint.
void ExpectWellFormed(const Instance& inst, int belt,
                      const std::vector<ScheduledFlight>& s) {
  int free_at = 0;
  int last = -1;
  for (const auto& a : s) {
    EXPECT_GT(a.flight, last);
    EXPECT_TRUE(inst.admissible(belt, a.flight, a.start, a.duration));
    EXPECT_GE(a.start, free_at);
    free_at = a.start + a.duration;
    last = a.flight;
  }
}

TEST(Pricing, NoEligibleFlights) {
  const Instance inst = testing::RandomPricingInstance(1);
  DualPrices duals{std::vector<double>(inst.num_flights(), 0.0), {3.5}};
  PricingInput in{&inst, 0, {}, {}, &duals};
  const auto res = SolvePricing(in);
  ASSERT_TRUE(res.has_value());
  EXPECT_TRUE(res->column.assignments.empty());
  EXPECT_EQ(res->reduced_cost, -3.5);
}

TEST(Pricing, SingleFlightTakesBestStartAndDuration) {
  testing::TableSpec spec;
  spec.t_max = 12;
  spec.t_req = {3};
  spec.w_values = {{2, 4}};
  const Instance inst = Instance::Create(testing::TableData(spec, 17, 0, 50));
  DualPrices duals{{1.0}, {2.0}};
  std::int64_t best = -1;
  for (int w : {4, 2}) {
    for (int t = 3; t + w <= 12; ++t) {
      best = std::max(best, inst.profit(0, 0, t, w));
    }
  }
  PricingInput in{&inst, 0, {0}, {}, &duals};
  const auto res = SolvePricing(in);
  ASSERT_TRUE(res.has_value());
  ASSERT_EQ(res->column.assignments.size(), 1u);
  EXPECT_EQ(inst.profit(0, 0, res->column.assignments[0].start,
                        res->column.assignments[0].duration),
            best);
  EXPECT_EQ(res->reduced_cost, static_cast<double>(best) - 1.0 - 2.0);
}

TEST(Pricing, LossMakingFlightIsSkipped) {
  testing::TableSpec spec;
  spec.t_max = 10;
  spec.t_req = {0};
  spec.w_values = {{3}};
  const Instance inst = Instance::Create(testing::TableData(spec, 3, 0, 10));
  DualPrices duals{{100.0}, {0.0}};
  PricingInput in{&inst, 0, {0}, {}, &duals};
  const auto res = SolvePricing(in);
  ASSERT_TRUE(res.has_value());
  EXPECT_TRUE(res->column.assignments.empty());
  EXPECT_EQ(res->reduced_cost, 0.0);
}

TEST(Pricing, InitialConditionsAndMonotonicity) {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    const Instance inst = testing::RandomPricingInstance(seed);
    SplitMix64 rng(seed);
    const DualPrices duals = RandomDuals(inst, rng);
    PricingInput in{&inst, 0, AllFlights(inst), {}, &duals};
    const DpTable table = DpFill(in);
    for (int k = 0; k <= table.items; ++k) EXPECT_EQ(table.value(0, k), 0.0);
    for (int t = 0; t <= table.t_max; ++t) EXPECT_EQ(table.value(t, 0), 0.0);
    for (int k = 0; k <= table.items; ++k) {
      for (int t = 0; t <= table.t_max; ++t) {
        if (t > 0) {
          EXPECT_GE(table.value(t, k), table.value(t - 1, k));
        }
        if (k > 0) {
          EXPECT_GE(table.value(t, k), table.value(t, k - 1));
        }
      }
    }
  }
}

TEST(Pricing, MatchesExhaustiveEnumeration) {
  int cases = 0;
  for (std::uint64_t seed = 1; seed <= 220; ++seed) {
    const Instance inst = testing::RandomPricingInstance(seed);
    SplitMix64 rng(seed + 1000);
    const DualPrices duals = RandomDuals(inst, rng);
    PricingInput in{&inst, 0, AllFlights(inst), {}, &duals};
    const auto brute = testing::BruteForceSchedule(inst, 0, in.eligible, {}, duals.y);
    ASSERT_TRUE(brute.has_value());
    const DpTable table = DpFill(in);
    EXPECT_EQ(table.optimum(), brute->value) << "seed " << seed;
    const auto schedule = Backtrack(table, in);
    ExpectWellFormed(inst, 0, schedule);
    EXPECT_EQ(ReducedProfit(inst, 0, schedule, duals), table.optimum());
    ++cases;
  }
  EXPECT_GE(cases, 200);
}

TEST(Pricing, ForcedFlightsMatchEnumeration) {
  for (std::uint64_t seed = 1; seed <= 150; ++seed) {
    const Instance inst = testing::RandomPricingInstance(seed);
    SplitMix64 rng(seed + 77);
    const DualPrices duals = RandomDuals(inst, rng);
    std::vector<int> forced;
    for (int j = 0; j < inst.num_flights(); ++j) {
      if (rng.UniformInt(0, 2) == 0) forced.push_back(j);
    }
    PricingInput in{&inst, 0, AllFlights(inst), forced, &duals};
    const auto brute = testing::BruteForceSchedule(inst, 0, in.eligible, forced, duals.y);
    const auto res = SolvePricing(in);
    ASSERT_EQ(res.has_value(), brute.has_value()) << "seed " << seed;
    if (!res) continue;
    for (int j : forced) EXPECT_TRUE(res->column.covers(j));
    ExpectWellFormed(inst, 0, res->column.assignments);
    // No lift in the reported value.
    EXPECT_EQ(res->reduced_cost + duals.u[0], brute->value) << "seed " << seed;
    EXPECT_EQ(ReducedProfit(inst, 0, res->column.assignments, duals),
              brute->value);
  }
}

TEST(Pricing, ImpossibleForcingReturnsNone) {
  testing::TableSpec spec;
  spec.t_max = 10;
  spec.t_req = {0, 1};
  spec.w_values = {{6}, {6}};
  const Instance inst = Instance::Create(testing::TableData(spec, 9, 1, 20));
  DualPrices duals{{0.0, 0.0}, {0.0}};
  PricingInput in{&inst, 0, {0, 1}, {0, 1}, &duals};
  EXPECT_FALSE(SolvePricing(in).has_value());
  in.forced = {1};
  const auto res = SolvePricing(in);
  ASSERT_TRUE(res.has_value());
  EXPECT_TRUE(res->column.covers(1));
  EXPECT_FALSE(res->column.covers(0));
}

TEST(Pricing, RemovingAFlightNeverHelps) {
  for (std::uint64_t seed = 1; seed <= 80; ++seed) {
    const Instance inst = testing::RandomPricingInstance(seed);
    SplitMix64 rng(seed + 5);
    const DualPrices duals = RandomDuals(inst, rng);
    const auto all = AllFlights(inst);
    const double full = DpFill({&inst, 0, all, {}, &duals}).optimum();
    for (int drop = 0; drop < inst.num_flights(); ++drop) {
      std::vector<int> fewer;
      for (int j : all) {
        if (j != drop) fewer.push_back(j);
      }
      EXPECT_LE(DpFill({&inst, 0, fewer, {}, &duals}).optimum(), full);
    }
  }
}

TEST(Pricing, TiesPreferTakeAndLongerDurations) {
  testing::TableSpec spec;
  spec.t_max = 10;
  spec.t_req = {0};
  spec.w_values = {{2, 4}};
  InstanceData data = testing::TableData(spec, 1, 0, 0);
  for (auto& [key, p] : std::get<ProfitTable>(data.profit)) p = 5;
  const Instance inst = Instance::Create(data);
  DualPrices duals{{5.0}, {0.0}};  // every choice is worth exactly zero
  PricingInput in{&inst, 0, {0}, {}, &duals};
  const auto res = SolvePricing(in);
  ASSERT_TRUE(res.has_value());
  ASSERT_EQ(res->column.assignments.size(), 1u);
  EXPECT_EQ(res->column.assignments[0].duration, 4);
}

TEST(Pricing, ScalarAndVectorPathsAgree) {
  const kernels::Isa detected = kernels::DetectIsa();
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const Instance inst = testing::RandomPricingInstance(seed);
    SplitMix64 rng(seed);
    const DualPrices duals = RandomDuals(inst, rng);
    PricingInput in{&inst, 0, AllFlights(inst), {}, &duals};
    kernels::SetActiveIsa(kernels::Isa::kScalar);
    const DpTable a = DpFill(in);
    kernels::SetActiveIsa(detected);
    const DpTable b = DpFill(in);
    EXPECT_EQ(a.values, b.values);
    EXPECT_EQ(a.parent, b.parent);
  }
}

}  // namespace
}  // namespace bbap
