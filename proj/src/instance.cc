#include "bbap/instance.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <set>
#include <sstream>

#include "bbap/profit.h"

namespace bbap {
namespace {

std::string FlightName(int j) { return "flight " + std::to_string(j); }
std::string BeltName(int i) { return "belt " + std::to_string(i); }
std::string PairName(int i, int j) {
  return BeltName(i) + " / " + FlightName(j);
}

std::string JoinViolations(const std::vector<Violation>& violations) {
  std::ostringstream out;
  out << "invalid instance:";
  for (const auto& v : violations) out << "\n  " << v.ToString();
  return out.str();
}

}  // namespace

std::vector<Violation> ValidateInstance(const InstanceData& data) {
  std::vector<Violation> out;
  auto add = [&](std::string entity, std::string rule) {
    out.push_back({std::move(entity), std::move(rule)});
  };
  const int n = static_cast<int>(data.flights.size());
  const int m = static_cast<int>(data.belts.size());

  if (data.t_max < 1) add("instance", "t_max must be positive");
  if (n == 0) add("instance", "no flights");
  if (m == 0) add("instance", "no belts");

  std::vector<char> flight_ok(n, 1);
  for (int j = 0; j < n; ++j) {
    const Flight& f = data.flights[j];
    if (f.bags < 1) {
      add(FlightName(j), "bags must be >= 1");
    }
    if (f.t_req < 0 || f.t_req >= data.t_max) {
      add(FlightName(j), "t_req out of range");
      flight_ok[j] = 0;
    }
  }

  std::vector<int> belt_count(n, 0);
  std::set<std::pair<int, int>> compatible;
  for (int i = 0; i < m; ++i) {
    const Belt& b = data.belts[i];
    if (!(b.productivity > 0.0) || !std::isfinite(b.productivity)) {
      add(BeltName(i), "productivity must be positive");
    }
    if (b.dual_station_threshold && *b.dual_station_threshold < 1) {
      add(BeltName(i), "dual_station_threshold must be >= 1");
    }
    std::set<int> seen;
    for (int j : b.compatible_flights) {
      if (j < 0 || j >= n) {
        add(BeltName(i), "compatible flight " + std::to_string(j) +
                             " out of range");
        continue;
      }
      if (!seen.insert(j).second) {
        add(BeltName(i), "duplicate compatible flight " + std::to_string(j));
        continue;
      }
      ++belt_count[j];
      compatible.insert({i, j});
    }
  }
  for (int j = 0; j < n; ++j) {
    if (belt_count[j] == 0) add(FlightName(j), "no compatible belt");
  }

  for (const auto& [key, set] : data.durations) {
    if (!compatible.contains(key)) {
      add(PairName(key.first, key.second), "durations given for incompatible pair");
    }
  }

  for (const auto& [i, j] : compatible) {
    auto it = data.durations.find({i, j});
    if (it == data.durations.end()) {
      add(PairName(i, j), "missing duration set");
      continue;
    }
    const DurationSet& w = it->second;
    bool set_ok = !w.values.empty();
    for (std::size_t k = 0; k < w.values.size(); ++k) {
      if (w.values[k] < 1 || (k > 0 && w.values[k] <= w.values[k - 1])) {
        set_ok = false;
      }
    }
    if (!set_ok) {
      add(PairName(i, j), "durations must be sorted, distinct and positive");
      continue;
    }
    if (std::find(w.values.begin(), w.values.end(), w.nominal) ==
        w.values.end()) {
      add(PairName(i, j), "nominal duration not in duration set");
    }
    if (flight_ok[j] && data.flights[j].t_req + w.min() > data.t_max) {
      add(PairName(i, j), "unschedulable flight");
    }
  }

  if (const auto* params = std::get_if<ProfitParams>(&data.profit)) {
    if (!ValidProfitParams(*params)) {
      add("profit", "formula requires 0 < alpha < 1 and beta1, beta2 > 0");
    }
  } else {
    const auto& table = std::get<ProfitTable>(data.profit);
    constexpr std::int64_t kLimit = std::numeric_limits<std::int32_t>::max();
    for (const auto& [key, p] : table) {
      if (p > kLimit || p < -kLimit) {
        add("profit", "table value out of 32-bit range");
        break;
      }
    }
    for (const auto& [i, j] : compatible) {
      auto it = data.durations.find({i, j});
      if (it == data.durations.end() || !flight_ok[j]) continue;
      bool missing = false;
      for (int w : it->second.values) {
        for (int t = data.flights[j].t_req; t + w <= data.t_max; ++t) {
          if (!table.contains({i, j, t, w})) missing = true;
        }
      }
      if (missing) add(PairName(i, j), "profit table incomplete");
    }
  }
  return out;
}

InvalidInstanceError::InvalidInstanceError(std::vector<Violation> violations)
    : std::runtime_error(JoinViolations(violations)),
      violations_(std::move(violations)) {}

Instance Instance::Create(InstanceData data) {
  auto violations = ValidateInstance(data);
  if (!violations.empty()) throw InvalidInstanceError(std::move(violations));

  const int n = static_cast<int>(data.flights.size());
  const int m = static_cast<int>(data.belts.size());

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return data.flights[a].t_req < data.flights[b].t_req;
  });
  std::vector<int> rank(n);
  for (int k = 0; k < n; ++k) rank[order[k]] = k;

  Instance inst;
  inst.t_max_ = data.t_max;
  inst.input_order_ = order;
  inst.flights_.resize(n);
  for (int k = 0; k < n; ++k) {
    inst.flights_[k] = data.flights[order[k]];
    inst.flights_[k].id = k;
  }
  inst.belts_ = std::move(data.belts);
  inst.compat_.assign(static_cast<std::size_t>(m) * n, 0);
  for (int i = 0; i < m; ++i) {
    Belt& b = inst.belts_[i];
    b.id = i;
    for (int& j : b.compatible_flights) j = rank[j];
    std::sort(b.compatible_flights.begin(), b.compatible_flights.end());
    for (int j : b.compatible_flights) {
      inst.compat_[static_cast<std::size_t>(i) * n + j] = 1;
    }
  }
  for (auto& [key, set] : data.durations) {
    inst.durations_[{key.first, rank[key.second]}] = std::move(set);
  }
  if (auto* table = std::get_if<ProfitTable>(&data.profit)) {
    ProfitTable remapped;
    for (const auto& [key, p] : *table) {
      auto [i, j, t, w] = key;
      if (j >= 0 && j < n) remapped[{i, rank[j], t, w}] = p;
    }
    inst.profit_ = std::move(remapped);
  } else {
    inst.profit_ = std::move(data.profit);
  }

  // Materialize admissible profits: per compatible pair one row per
  // duration, indexed by start - t_req.
  inst.tables_.assign(static_cast<std::size_t>(m) * n, {});
  std::size_t total = 0;
  for (int i = 0; i < m; ++i) {
    for (int j : inst.belts_[i].compatible_flights) {
      auto& pt = inst.tables_[static_cast<std::size_t>(i) * n + j];
      pt.offset = total;
      pt.stride = inst.t_max_ - inst.flights_[j].t_req;
      total += static_cast<std::size_t>(pt.stride) *
               inst.durations_.at({i, j}).values.size();
    }
  }
  inst.profits_.assign(total, 0);
  for (int i = 0; i < m; ++i) {
    for (int j : inst.belts_[i].compatible_flights) {
      const auto& pt = inst.tables_[static_cast<std::size_t>(i) * n + j];
      const DurationSet& ws = inst.durations_.at({i, j});
      const int t_req = inst.flights_[j].t_req;
      for (std::size_t d = 0; d < ws.values.size(); ++d) {
        const int w = ws.values[d];
        for (int t = t_req; t + w <= inst.t_max_; ++t) {
          std::int64_t p;
          if (const auto* params = std::get_if<ProfitParams>(&inst.profit_)) {
            p = FormulaProfit(*params, inst.t_max_, t_req, ws.nominal, t, w);
          } else {
            p = std::get<ProfitTable>(inst.profit_).at({i, j, t, w});
          }
          inst.profits_[pt.offset + d * pt.stride + (t - t_req)] =
              static_cast<std::int32_t>(p);
          inst.max_abs_profit_ = std::max(inst.max_abs_profit_, std::abs(p));
        }
      }
    }
  }
  return inst;
}

const DurationSet& Instance::durations(int belt, int flight) const {
  auto it = durations_.find({belt, flight});
  if (it == durations_.end()) {
    throw std::out_of_range("no duration set for " + PairName(belt, flight));
  }
  return it->second;
}

bool Instance::admissible(int belt, int flight, int start,
                          int duration) const {
  if (belt < 0 || belt >= num_belts() || flight < 0 ||
      flight >= num_flights() || !compatible(belt, flight)) {
    return false;
  }
  const auto& values = durations(belt, flight).values;
  return std::binary_search(values.begin(), values.end(), duration) &&
         start >= flights_[flight].t_req && start + duration <= t_max_;
}

std::int64_t Instance::profit(int belt, int flight, int start,
                              int duration) const {
  if (!admissible(belt, flight, start, duration)) {
    throw std::out_of_range("inadmissible assignment " +
                            PairName(belt, flight) + " start " +
                            std::to_string(start) + " duration " +
                            std::to_string(duration));
  }
  const auto& values = durations(belt, flight).values;
  const auto d = std::lower_bound(values.begin(), values.end(), duration) -
                 values.begin();
  const auto& pt = tables_[static_cast<std::size_t>(belt) * num_flights() + flight];
  return profits_[pt.offset + d * pt.stride + (start - flights_[flight].t_req)];
}

std::span<const std::int32_t> Instance::profit_row(int belt, int flight,
                                                   int duration_index) const {
  const auto& pt = tables_[static_cast<std::size_t>(belt) * num_flights() + flight];
  const int w = durations(belt, flight).values.at(duration_index);
  const int len = std::max(0, t_max_ - w - flights_[flight].t_req + 1);
  return {profits_.data() + pt.offset +
              static_cast<std::size_t>(duration_index) * pt.stride,
          static_cast<std::size_t>(len)};
}

InstanceData Instance::ToData() const {
  InstanceData data;
  data.t_max = t_max_;
  data.flights = flights_;
  data.belts = belts_;
  data.durations = durations_;
  data.profit = profit_;
  return data;
}

const char* ToString(ViolationClass c) {
  switch (c) {
    case ViolationClass::kCoverage:
      return "coverage";
    case ViolationClass::kWindow:
      return "window";
    case ViolationClass::kDuration:
      return "duration";
    case ViolationClass::kCompatibility:
      return "compatibility";
    case ViolationClass::kOverlap:
      return "overlap/precedence";
  }
  return "unknown";
}

FeasibilityReport CheckSolution(const Instance& inst, const Solution& sol) {
  const int n = inst.num_flights();
  const int m = inst.num_belts();
  FeasibilityReport report;
  auto add = [&](ViolationClass kind, std::string detail) {
    report.violations.push_back({kind, std::move(detail)});
  };

  for (const Assignment& a : sol.assignments) {
    if (a.flight < 0 || a.flight >= n || a.belt < 0 || a.belt >= m) {
      throw MalformedSolutionError("assignment references flight " +
                                   std::to_string(a.flight) + " / belt " +
                                   std::to_string(a.belt) +
                                   " outside the instance");
    }
  }

  std::vector<int> count(n, 0);
  for (const Assignment& a : sol.assignments) ++count[a.flight];
  for (int j = 0; j < n; ++j) {
    if (count[j] != 1) {
      add(ViolationClass::kCoverage, FlightName(j) + " assigned " +
                                         std::to_string(count[j]) + " times");
    }
  }

  for (const Assignment& a : sol.assignments) {
    const Flight& f = inst.flight(a.flight);
    const std::string who = PairName(a.belt, a.flight);
    if (a.start < f.t_req || Finish(a) > inst.t_max() || a.duration < 1) {
      add(ViolationClass::kWindow, who + " interval [" +
                                       std::to_string(a.start) + ", " +
                                       std::to_string(Finish(a)) +
                                       ") outside window");
    }
    const bool compat = inst.compatible(a.belt, a.flight);
    if (!compat) {
      add(ViolationClass::kCompatibility, who + " incompatible");
    } else {
      const auto& values = inst.durations(a.belt, a.flight).values;
      if (!std::binary_search(values.begin(), values.end(), a.duration)) {
        add(ViolationClass::kDuration,
            who + " duration " + std::to_string(a.duration) + " not allowed");
      }
    }

    // Objective recomputation does not depend on feasibility: use the
    // profit source directly wherever it defines a value.
    if (const auto* params = std::get_if<ProfitParams>(&inst.profit_source())) {
      if (compat && a.start < inst.t_max()) {
        report.recomputed_objective +=
            FormulaProfit(*params, inst.t_max(), f.t_req,
                          inst.durations(a.belt, a.flight).nominal, a.start,
                          a.duration);
      }
    } else {
      const auto& table = std::get<ProfitTable>(inst.profit_source());
      auto it = table.find({a.belt, a.flight, a.start, a.duration});
      if (it != table.end()) report.recomputed_objective += it->second;
    }
  }

  for (int i = 0; i < m; ++i) {
    std::vector<const Assignment*> on_belt;
    for (const Assignment& a : sol.assignments) {
      if (a.belt == i) on_belt.push_back(&a);
    }
    std::sort(on_belt.begin(), on_belt.end(),
              [](const Assignment* x, const Assignment* y) {
                return x->flight < y->flight;
              });
    // Precedence plus non-overlap: each flight must finish before the start
    // of every later-indexed flight on the same belt.
    for (std::size_t k = 0; k < on_belt.size(); ++k) {
      for (std::size_t l = k + 1; l < on_belt.size(); ++l) {
        const Assignment& a = *on_belt[k];
        const Assignment& b = *on_belt[l];
        if (Finish(a) > b.start) {
          add(ViolationClass::kOverlap,
              BeltName(i) + ": " + FlightName(a.flight) + " finishes at " +
                  std::to_string(Finish(a)) + " after " +
                  FlightName(b.flight) + " starts at " +
                  std::to_string(b.start));
        }
      }
    }
  }

  report.objective_matches = report.recomputed_objective == sol.objective;
  return report;
}

}  // namespace bbap
