// Best-first branch-and-price over flight-to-belt decisions.

#ifndef BBAP_BNP_H_
#define BBAP_BNP_H_

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "bbap/colgen.h"
#include "bbap/instance.h"

namespace bbap {

struct BnpNode {
  BranchConstraints constraints;
  ColumnPool pool;
  double ub = 0.0;  // parent's LP bound until this node is solved
  int depth = 0;
  std::int64_t sequence = 0;
};

// Flight covered by the most fractional non-dummy columns (value strictly
// inside (eps, 1 - eps)), ties to the lowest index. Flights already forced
// by `constraints` are skipped. nullopt when no fractional column exists.
std::optional<int> SelectBranchFlight(const std::vector<double>& values,
                                      const ColumnPool& pool,
                                      const BranchConstraints& constraints);

// One child per compatible, non-forbidden belt of `flight`, each forcing the
// flight there. Child pools drop columns that put the flight on another
// belt; dummies and everything else are inherited.
std::vector<BnpNode> Branch(const Instance& inst, const BnpNode& node,
                            int flight);

struct ProgressInfo {
  std::int64_t nodes_explored = 0;
  double best_ub = 0.0;
  std::optional<std::int64_t> incumbent;
  double elapsed_seconds = 0.0;
  std::size_t open_nodes = 0;
};

struct BnpOptions {
  double time_limit_seconds = 300.0;
  std::function<void(const ProgressInfo&)> on_node;
  std::function<void(const LpProblem&, const LpResult&)> on_lp;
};

enum class BnpStatus { kOptimal, kInfeasible, kTimeLimit };

const char* ToString(BnpStatus status);

struct BnpResult {
  BnpStatus status = BnpStatus::kTimeLimit;
  std::optional<Solution> incumbent;
  // Integer upper bound: floor of the largest open LP bound, or the
  // incumbent objective once the tree is closed.
  double best_ub = 0.0;
  double gap_percent = 0.0;
  std::int64_t nodes_explored = 0;
  bool proven_optimal = false;
  double elapsed_seconds = 0.0;

  // Diagnostics.
  double root_ub = 0.0;
  bool root_converged = false;
  double max_child_ub_excess = 0.0;  // max over nodes of child ub - parent ub
  std::int64_t columns_generated = 0;
};

// (ub / lb - 1) * 100; infinite when lb <= 0.
double GapPercent(double ub, double lb);

BnpResult SolveBnp(const Instance& inst, const BnpOptions& options = {});

}  // namespace bbap

#endif  // BBAP_BNP_H_
