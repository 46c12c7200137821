#include "bbap/bnp.h"

#include <algorithm>
#include <cmath>
#include <limits>

namespace bbap {
namespace {

constexpr double kBoundEps = 1e-6;
constexpr double kInf = std::numeric_limits<double>::infinity();

// Largest integer objective an LP bound still allows.
double IntegerBound(double ub) {
  return std::isfinite(ub) ? std::floor(ub + kBoundEps) : ub;
}

// Max-heap order: larger ub, then deeper, then older.
bool HeapLess(const BnpNode& a, const BnpNode& b) {
  if (a.ub != b.ub) return a.ub < b.ub;
  if (a.depth != b.depth) return a.depth < b.depth;
  return a.sequence > b.sequence;
}

}  // namespace

const char* ToString(BnpStatus status) {
  switch (status) {
    case BnpStatus::kOptimal:
      return "optimal";
    case BnpStatus::kInfeasible:
      return "infeasible";
    case BnpStatus::kTimeLimit:
      return "time-limit";
  }
  return "unknown";
}

double GapPercent(double ub, double lb) {
  if (!(lb > 0.0)) return kInf;
  return (ub / lb - 1.0) * 100.0;
}

std::optional<int> SelectBranchFlight(const std::vector<double>& values,
                                      const ColumnPool& pool,
                                      const BranchConstraints& constraints) {
  std::vector<int> count(constraints.num_flights(), 0);
  bool any = false;
  for (int k = 0; k < pool.size() && k < static_cast<int>(values.size()); ++k) {
    const double v = values[k];
    if (v <= kIntegralityEps || v >= 1.0 - kIntegralityEps) continue;
    const auto& c = pool.column(k);
    if (c.is_dummy) continue;
    any = true;
    for (int j : c.coverage) ++count[j];
  }
  if (!any) return std::nullopt;
  int best = -1;
  for (int j = 0; j < constraints.num_flights(); ++j) {
    if (constraints.forced_belt(j) >= 0 || count[j] == 0) continue;
    if (best < 0 || count[j] > count[best]) best = j;
  }
  if (best < 0) return std::nullopt;
  return best;
}

std::vector<BnpNode> Branch(const Instance& inst, const BnpNode& node,
                            int flight) {
  std::vector<BnpNode> children;
  for (int i = 0; i < inst.num_belts(); ++i) {
    if (!inst.compatible(i, flight) || node.constraints.forbidden(flight, i)) {
      continue;
    }
    BnpNode child;
    child.constraints = node.constraints;
    child.constraints.Force(flight, i);
    child.pool = node.pool.Filtered([&](const ScheduleColumn& c) {
      return c.belt == i || !c.covers(flight);
    });
    child.ub = node.ub;
    child.depth = node.depth + 1;
    children.push_back(std::move(child));
  }
  return children;
}

BnpResult SolveBnp(const Instance& inst, const BnpOptions& options) {
  const auto start = Clock::now();
  const auto deadline =
      start + std::chrono::duration_cast<Clock::duration>(
                  std::chrono::duration<double>(options.time_limit_seconds));
  auto elapsed = [&] {
    return std::chrono::duration<double>(Clock::now() - start).count();
  };

  BnpResult result;
  auto store = std::make_shared<ColumnStore>();
  std::vector<BnpNode> open;
  std::int64_t sequence = 0;
  {
    BnpNode root;
    root.constraints = BranchConstraints(inst.num_flights(), inst.num_belts());
    root.pool = ColumnPool::WithDummies(inst, store);
    root.ub = kInf;
    root.sequence = sequence++;
    open.push_back(std::move(root));
  }

  CgOptions cg_options;
  cg_options.deadline = deadline;
  cg_options.on_lp = options.on_lp;

  std::optional<Solution> incumbent;
  auto offer = [&](Solution sol) {
    if (incumbent && sol.objective <= incumbent->objective) return;
    incumbent = std::move(sol);
  };
  auto dominated = [&](double ub) {
    return incumbent && IntegerBound(ub) <= static_cast<double>(incumbent->objective);
  };

  bool timed_out = false;
  double interrupted_ub = -kInf;
  while (!open.empty()) {
    std::pop_heap(open.begin(), open.end(), HeapLess);
    BnpNode node = std::move(open.back());
    open.pop_back();
    if (dominated(node.ub)) continue;
    if (Clock::now() >= deadline) {
      timed_out = true;
      interrupted_ub = node.ub;
      break;
    }

    CgOutcome cg = RunColgen(inst, node.pool, node.constraints, cg_options);
    ++result.nodes_explored;
    result.columns_generated += cg.columns_added;
    if (cg.incumbent) offer(std::move(*cg.incumbent));

    if (cg.status == CgStatus::kDeadline) {
      timed_out = true;
      interrupted_ub = node.ub;
      break;
    }
    if (node.depth == 0) {
      result.root_ub = cg.ub;
      result.root_converged = cg.status == CgStatus::kConverged;
    }
    if (cg.status == CgStatus::kInfeasible) continue;
    if (std::isfinite(node.ub)) {
      result.max_child_ub_excess =
          std::max(result.max_child_ub_excess, cg.ub - node.ub);
    }
    node.ub = cg.ub;

    if (options.on_node) {
      double best = incumbent ? static_cast<double>(incumbent->objective) : -kInf;
      best = std::max(best, IntegerBound(node.ub));
      for (const auto& o : open) best = std::max(best, IntegerBound(o.ub));
      ProgressInfo info;
      info.nodes_explored = result.nodes_explored;
      info.best_ub = best;
      if (incumbent) info.incumbent = incumbent->objective;
      info.elapsed_seconds = elapsed();
      info.open_nodes = open.size();
      options.on_node(info);
    }

    if (dominated(node.ub)) continue;
    const auto flight = SelectBranchFlight(cg.values, node.pool, node.constraints);
    // No fractional column left: either integral (already offered) or the
    // dummy carries the whole LP, which means no dummy-free solution.
    if (!flight) continue;
    for (auto& child : Branch(inst, node, *flight)) {
      child.sequence = sequence++;
      open.push_back(std::move(child));
      std::push_heap(open.begin(), open.end(), HeapLess);
    }
  }

  result.elapsed_seconds = elapsed();
  result.incumbent = incumbent;
  const double lb = incumbent ? static_cast<double>(incumbent->objective) : -kInf;
  if (!timed_out) {
    result.proven_optimal = incumbent.has_value();
    result.status = incumbent ? BnpStatus::kOptimal : BnpStatus::kInfeasible;
    result.best_ub = lb;
    result.gap_percent = incumbent ? 0.0 : kInf;
    return result;
  }
  double ub = IntegerBound(interrupted_ub);
  for (const auto& o : open) {
    if (!dominated(o.ub)) ub = std::max(ub, IntegerBound(o.ub));
  }
  result.status = BnpStatus::kTimeLimit;
  result.best_ub = std::max(ub, lb);
  result.gap_percent = GapPercent(result.best_ub, lb);
  return result;
}

}  // namespace bbap
