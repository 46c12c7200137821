#include "bbap/pricing.h"

#include <algorithm>
#include <cmath>
#include <limits>

#include "bbap/kernels.h"

namespace bbap {

bool ScheduleColumn::covers(int flight) const {
  return std::binary_search(coverage.begin(), coverage.end(), flight);
}

ScheduleColumn MakeColumn(const Instance& inst, int belt,
                          std::vector<ScheduledFlight> assignments) {
  ScheduleColumn col;
  col.belt = belt;
  std::sort(assignments.begin(), assignments.end(),
            [](const ScheduledFlight& a, const ScheduledFlight& b) {
              return a.flight < b.flight;
            });
  for (const auto& a : assignments) {
    col.profit += inst.profit(belt, a.flight, a.start, a.duration);
    col.coverage.push_back(a.flight);
  }
  col.assignments = std::move(assignments);
  return col;
}

double ForcedLift(const PricingInput& in) {
  if (in.forced.empty()) return 0.0;
  const Instance& inst = *in.instance;
  double swing = 0.0;
  for (int j : in.eligible) {
    const double y = in.duals->y[j];
    const auto& ws = inst.durations(in.belt, j).values;
    double worst = 0.0;
    for (std::size_t d = 0; d < ws.size(); ++d) {
      for (std::int32_t p : inst.profit_row(in.belt, j, static_cast<int>(d))) {
        worst = std::max(worst, std::abs(static_cast<double>(p) - y));
      }
    }
    swing += worst;
  }
  // A schedule missing one forced flight can gain at most `swing` on the
  // optional flights and save at most `swing` on the forced ones.
  return 1.0 + 2.0 * swing;
}

DpTable DpFill(const PricingInput& in) {
  const Instance& inst = *in.instance;
  const int t_max = inst.t_max();
  const int items = static_cast<int>(in.eligible.size());

  DpTable table;
  table.t_max = t_max;
  table.items = items;
  table.values.assign(static_cast<std::size_t>(items + 1) * (t_max + 1), 0.0);
  table.parent.assign(table.values.size(), DpTable::kSkip);
  table.lift.assign(items, 0.0);

  const double lift = ForcedLift(in);
  for (int k = 0; k < items; ++k) {
    if (std::binary_search(in.forced.begin(), in.forced.end(),
                           in.eligible[k])) {
      table.lift[k] = lift;
    }
  }

  constexpr double kNegInf = -std::numeric_limits<double>::infinity();
  std::vector<double> take(t_max + 1);
  std::vector<std::int32_t> arg(t_max + 1);
  std::vector<double> gain(t_max + 1);

  for (int k = 1; k <= items; ++k) {
    const int j = in.eligible[k - 1];
    const int t_req = inst.flight(j).t_req;
    const auto& ws = inst.durations(in.belt, j).values;
    const double offset = table.lift[k - 1] - in.duals->y[j];
    const double* prev = table.values.data() + table.index(0, k - 1);
    double* cur = table.values.data() + table.index(0, k);
    std::int32_t* par = table.parent.data() + table.index(0, k);

    std::fill(take.begin(), take.end(), kNegInf);
    std::fill(arg.begin(), arg.end(), DpTable::kSkip);
    // Largest duration first: the strict update keeps it on ties.
    for (int d = static_cast<int>(ws.size()) - 1; d >= 0; --d) {
      const int w = ws[d];
      const auto row = inst.profit_row(in.belt, j, d);
      const std::size_t len = row.size();
      if (len == 0) continue;
      kernels::ShiftedGain(row, offset, {gain.data(), len});
      // Start s = t_req + x finishes at s + w.
      kernels::TakeMax({prev + t_req, len}, {gain.data(), len},
                       {take.data() + t_req + w, len},
                       {arg.data() + t_req + w, len}, d);
    }

    cur[0] = prev[0];
    par[0] = DpTable::kSkip;
    for (int t = 1; t <= t_max; ++t) {
      const double skip = prev[t];
      const double shift = cur[t - 1];
      const double tk = take[t];
      if (tk >= shift && tk >= skip) {
        cur[t] = tk;
        par[t] = arg[t];
      } else if (shift >= skip) {
        cur[t] = shift;
        par[t] = DpTable::kShift;
      } else {
        cur[t] = skip;
        par[t] = DpTable::kSkip;
      }
    }
  }
  return table;
}

std::vector<ScheduledFlight> Backtrack(const DpTable& table,
                                       const PricingInput& in) {
  const Instance& inst = *in.instance;
  std::vector<ScheduledFlight> out;
  int t = table.t_max;
  int k = table.items;
  while (k > 0 && t > 0) {
    const std::int32_t c = table.choice(t, k);
    if (c == DpTable::kSkip) {
      --k;
    } else if (c == DpTable::kShift) {
      --t;
    } else {
      const int j = in.eligible[k - 1];
      const int w = inst.durations(in.belt, j).values[c];
      out.push_back({j, t - w, w});
      t -= w;
      --k;
    }
  }
  std::reverse(out.begin(), out.end());
  return out;
}

double ReducedProfit(const Instance& inst, int belt,
                     const std::vector<ScheduledFlight>& schedule,
                     const DualPrices& duals) {
  double sum = 0.0;
  for (const auto& a : schedule) {
    sum += static_cast<double>(inst.profit(belt, a.flight, a.start, a.duration)) -
           duals.y[a.flight];
  }
  return sum;
}

std::optional<PricingResult> SolvePricing(const PricingInput& in) {
  const DpTable table = DpFill(in);
  auto schedule = Backtrack(table, in);
  for (int j : in.forced) {
    auto it = std::find_if(schedule.begin(), schedule.end(),
                           [j](const ScheduledFlight& a) { return a.flight == j; });
    if (it == schedule.end()) return std::nullopt;
  }
  PricingResult result;
  result.reduced_cost = ReducedProfit(*in.instance, in.belt, schedule, *in.duals) -
                        in.duals->u[in.belt];
  result.column = MakeColumn(*in.instance, in.belt, std::move(schedule));
  return result;
}

}  // namespace bbap
