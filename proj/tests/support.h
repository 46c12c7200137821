// Shared fixtures and independent reference computations for the tests.

#ifndef BBAP_TESTS_SUPPORT_H_
#define BBAP_TESTS_SUPPORT_H_

#include <cstdint>
#include <optional>
#include <vector>

#include "bbap/generator.h"
#include "bbap/instance.h"
#include "bbap/lp.h"
#include "bbap/pricing.h"

namespace bbap::testing {

// One belt of productivity 1 compatible with everything, explicit profits
// given by `profit(flight, t, w)` over the durations `w_values`.
struct TableSpec {
  int t_max = 20;
  std::vector<int> t_req;
  std::vector<std::vector<int>> w_values;  // per flight
  int belts = 1;
};

InstanceData TableData(const TableSpec& spec, std::uint64_t profit_seed,
                       int profit_lo, int profit_hi);

// Random explicit-table instance for pricing checks: n flights on one belt,
// |W| <= 3 with durations >= 2, profits in [-20, 100].
Instance RandomPricingInstance(std::uint64_t seed);

// Generator configuration sized for the exhaustive oracle: n <= 8, m <= 3,
// t_max <= 30.
GenConfig OracleSizedConfig(std::uint64_t seed);

// Exhaustive maximum of sum (p - y) over every feasible single-belt
// schedule that contains all `forced` flights, enumerated one assignment at
// a time. nullopt when no such schedule exists.
struct BruteForceBest {
  double value = 0.0;
  std::vector<ScheduledFlight> schedule;
};
std::optional<BruteForceBest> BruteForceSchedule(
    const Instance& inst, int belt, const std::vector<int>& eligible,
    const std::vector<int>& forced, const std::vector<double>& y);

// Optimum of an LP by enumerating every basis of its standard form
// (slacks added to <= rows). Only for bounded problems with a handful of
// rows. nullopt when infeasible.
std::optional<double> VertexEnumerationOptimum(const LpProblem& problem);

// Uniform double in [lo, hi] from the test RNG, rounded to a multiple of
// 1/64 so sums stay exact.
double RationalIn(SplitMix64& rng, double lo, double hi);

}  // namespace bbap::testing

#endif  // BBAP_TESTS_SUPPORT_H_
