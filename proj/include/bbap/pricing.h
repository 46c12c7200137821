// Exact pricing for one belt: the position-dependent knapsack over the
// belt's eligible flights, solved by a dynamic program over (finish time,
// flight prefix) with backtracking.

#ifndef BBAP_PRICING_H_
#define BBAP_PRICING_H_

#include <cstdint>
#include <optional>
#include <vector>

#include "bbap/instance.h"

namespace bbap {

struct ScheduledFlight {
  int flight = 0;
  int start = 0;
  int duration = 0;

  bool operator==(const ScheduledFlight&) const = default;
  auto operator<=>(const ScheduledFlight&) const = default;
};

// One feasible timetable for a single belt.
struct ScheduleColumn {
  int belt = 0;
  std::vector<ScheduledFlight> assignments;  // in flight order
  std::int64_t profit = 0;
  std::vector<int> coverage;  // sorted flight indices
  bool is_dummy = false;

  bool covers(int flight) const;
};

// Builds a column from assignments, filling profit and coverage.
ScheduleColumn MakeColumn(const Instance& inst, int belt,
                          std::vector<ScheduledFlight> assignments);

struct DualPrices {
  std::vector<double> y;  // per flight (partition rows)
  std::vector<double> u;  // per belt (convexity rows)
};

struct PricingInput {
  const Instance* instance = nullptr;
  int belt = 0;
  std::vector<int> eligible;  // sorted flight indices
  std::vector<int> forced;    // sorted subset of eligible
  const DualPrices* duals = nullptr;
};

// f(t, k): best reduced profit using the first k eligible flights with every
// selected flight finished by time t. Row-major by k, t in [0, t_max].
struct DpTable {
  static constexpr std::int32_t kSkip = -2;
  static constexpr std::int32_t kShift = -1;
  // parent >= 0 is "take" with that duration index.

  int t_max = 0;
  int items = 0;
  std::vector<double> values;
  std::vector<std::int32_t> parent;
  std::vector<double> lift;  // per item, nonzero for forced flights

  double value(int t, int k) const { return values[index(t, k)]; }
  std::int32_t choice(int t, int k) const { return parent[index(t, k)]; }
  double optimum() const { return value(t_max, items); }
  std::size_t index(int t, int k) const {
    return static_cast<std::size_t>(k) * (t_max + 1) + t;
  }
};

// Lift added to every choice of a forced flight so that an optimal schedule
// includes all forced flights whenever one exists.
double ForcedLift(const PricingInput& in);

DpTable DpFill(const PricingInput& in);

// Recovers an optimal schedule from a filled table. The reduced profits of
// the returned flights, summed in flight order and including lifts,
// reproduce table.optimum() exactly.
std::vector<ScheduledFlight> Backtrack(const DpTable& table,
                                       const PricingInput& in);

struct PricingResult {
  ScheduleColumn column;
  // Sum of (p - y) over the schedule minus the belt dual, without lifts.
  double reduced_cost = 0.0;
};

// Best schedule for the belt; nullopt when the forced flights cannot all be
// scheduled together.
std::optional<PricingResult> SolvePricing(const PricingInput& in);

// Sum of p - y_j over a schedule, in the given order.
double ReducedProfit(const Instance& inst, int belt,
                     const std::vector<ScheduledFlight>& schedule,
                     const DualPrices& duals);

}  // namespace bbap

#endif  // BBAP_PRICING_H_
