#include "bbap/oracle.h"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <unordered_map>
#include <vector>

namespace bbap {
namespace {

constexpr std::int64_t kImpossible = std::numeric_limits<std::int64_t>::min();

struct BeltPlan {
  std::int64_t value = kImpossible;
  std::vector<Assignment> assignments;
};

// All flights in `members` (sorted) must run on `belt` in order.
class MandatorySchedule {
 public:
  MandatorySchedule(const Instance& inst, int belt, std::vector<int> members)
      : inst_(inst),
        belt_(belt),
        members_(std::move(members)),
        memo_((members_.size() + 1) * (inst.t_max() + 1), kUnset) {}

  BeltPlan Solve() {
    BeltPlan plan;
    plan.value = Best(0, 0);
    if (plan.value == kImpossible) return plan;
    int free_at = 0;
    for (std::size_t k = 0; k < members_.size(); ++k) {
      const int j = members_[k];
      const auto [start, w] = Choice(k, free_at);
      plan.assignments.push_back({j, belt_, start, w});
      free_at = start + w;
    }
    return plan;
  }

 private:
  static constexpr std::int64_t kUnset = kImpossible + 1;

  std::int64_t& Memo(std::size_t k, int free_at) {
    return memo_[k * (inst_.t_max() + 1) + free_at];
  }

  std::int64_t Best(std::size_t k, int free_at) {
    if (k == members_.size()) return 0;
    std::int64_t& slot = Memo(k, free_at);
    if (slot != kUnset) return slot;
    std::int64_t best = kImpossible;
    const int j = members_[k];
    const int earliest = std::max(free_at, inst_.flight(j).t_req);
    for (int w : inst_.durations(belt_, j).values) {
      for (int s = earliest; s + w <= inst_.t_max(); ++s) {
        const std::int64_t rest = Best(k + 1, s + w);
        if (rest == kImpossible) continue;
        const std::int64_t v = inst_.profit(belt_, j, s, w) + rest;
        if (v > best) best = v;
      }
    }
    slot = best;
    return best;
  }

  std::pair<int, int> Choice(std::size_t k, int free_at) {
    const std::int64_t target = Best(k, free_at);
    const int j = members_[k];
    const int earliest = std::max(free_at, inst_.flight(j).t_req);
    for (int w : inst_.durations(belt_, j).values) {
      for (int s = earliest; s + w <= inst_.t_max(); ++s) {
        const std::int64_t rest = Best(k + 1, s + w);
        if (rest != kImpossible && inst_.profit(belt_, j, s, w) + rest == target) {
          return {s, w};
        }
      }
    }
    return {-1, -1};  // unreachable for a feasible state
  }

  const Instance& inst_;
  int belt_;
  std::vector<int> members_;
  std::vector<std::int64_t> memo_;
};

}  // namespace

std::optional<Solution> OracleSolve(const Instance& inst,
                                    const OracleLimits& limits) {
  const int n = inst.num_flights();
  const int m = inst.num_belts();
  if (n > limits.max_flights || m > limits.max_belts ||
      inst.t_max() > limits.max_tmax) {
    throw OracleLimitError("instance exceeds oracle limits (n=" +
                           std::to_string(n) + ", m=" + std::to_string(m) +
                           ", t_max=" + std::to_string(inst.t_max()) + ")");
  }

  std::vector<std::vector<int>> options(n);
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < m; ++i) {
      if (inst.compatible(i, j)) options[j].push_back(i);
    }
    if (options[j].empty()) return std::nullopt;
  }

  std::unordered_map<std::uint64_t, BeltPlan> cache;
  auto plan_for = [&](int belt, std::uint32_t mask) -> const BeltPlan& {
    const std::uint64_t key = (static_cast<std::uint64_t>(belt) << 32) | mask;
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    std::vector<int> members;
    for (int j = 0; j < n; ++j) {
      if (mask & (1u << j)) members.push_back(j);
    }
    return cache.emplace(key, MandatorySchedule(inst, belt, members).Solve())
        .first->second;
  };

  std::optional<Solution> best;
  std::vector<int> pick(n, 0);  // odometer over options[j]
  while (true) {
    std::vector<std::uint32_t> masks(m, 0);
    for (int j = 0; j < n; ++j) masks[options[j][pick[j]]] |= 1u << j;
    std::int64_t total = 0;
    bool feasible = true;
    for (int i = 0; i < m && feasible; ++i) {
      const BeltPlan& plan = plan_for(i, masks[i]);
      if (plan.value == kImpossible) feasible = false;
      else total += plan.value;
    }
    if (feasible && (!best || total > best->objective)) {
      Solution sol;
      sol.objective = total;
      for (int i = 0; i < m; ++i) {
        const auto& as = plan_for(i, masks[i]).assignments;
        sol.assignments.insert(sol.assignments.end(), as.begin(), as.end());
      }
      std::sort(sol.assignments.begin(), sol.assignments.end(),
                [](const Assignment& a, const Assignment& b) {
                  return a.flight < b.flight;
                });
      best = std::move(sol);
    }

    int j = 0;
    while (j < n && ++pick[j] == static_cast<int>(options[j].size())) {
      pick[j] = 0;
      ++j;
    }
    if (j == n) break;
  }
  return best;
}

}  // namespace bbap
