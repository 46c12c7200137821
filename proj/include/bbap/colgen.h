// Restricted master problem over schedule columns and the column
// generation loop that prices out new schedules belt by belt.
//
// RMP rows: one equality row per flight (partition) followed by one <= 1
// row per belt (at most one schedule per belt).

#ifndef BBAP_COLGEN_H_
#define BBAP_COLGEN_H_

#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "bbap/instance.h"
#include "bbap/lp.h"
#include "bbap/pricing.h"

namespace bbap {

using Clock = std::chrono::steady_clock;

inline constexpr double kReducedCostEps = 1e-9;
inline constexpr double kIntegralityEps = 1e-6;

// Flight-to-belt decisions of a branch-and-price node.
class BranchConstraints {
 public:
  BranchConstraints() = default;
  BranchConstraints(int flights, int belts);

  int forced_belt(int flight) const { return forced_[flight]; }
  bool forbidden(int flight, int belt) const {
    return forbidden_[static_cast<std::size_t>(flight) * belts_ + belt];
  }
  // Fixes `flight` to `belt` and forbids it everywhere else.
  void Force(int flight, int belt);
  void Forbid(int flight, int belt);

  int num_flights() const { return static_cast<int>(forced_.size()); }
  int num_belts() const { return belts_; }
  // Flights forced to `belt`, sorted.
  std::vector<int> ForcedOn(int belt) const;
  // Compatible, non-forbidden flights of `belt`, sorted.
  std::vector<int> Eligible(const Instance& inst, int belt) const;
  // True when the column contains no forbidden (flight, belt) pair.
  bool Admits(const ScheduleColumn& column) const;

 private:
  int belts_ = 0;
  std::vector<int> forced_;
  std::vector<char> forbidden_;
};

// Every column ever generated, shared by all nodes of one search and
// deduplicated on (belt, assignments).
class ColumnStore {
 public:
  int Intern(ScheduleColumn column);
  const ScheduleColumn& at(int id) const { return columns_[id]; }
  int size() const { return static_cast<int>(columns_.size()); }

 private:
  std::vector<ScheduleColumn> columns_;
  std::map<std::pair<int, std::vector<ScheduledFlight>>, int> index_;
  std::vector<int> dummy_by_belt_;
  friend class ColumnPool;
};

// Penalty of a dummy column: 1 + n * max |p|.
std::int64_t DummyPenalty(const Instance& inst);

// The columns available to one node. Dummies come first, one per belt.
class ColumnPool {
 public:
  static ColumnPool WithDummies(const Instance& inst,
                                std::shared_ptr<ColumnStore> store);

  // Returns false if the column is already in this pool.
  bool Add(ScheduleColumn column);
  int size() const { return static_cast<int>(ids_.size()); }
  const ScheduleColumn& column(int k) const { return store_->at(ids_[k]); }
  int id(int k) const { return ids_[k]; }
  const ColumnStore& store() const { return *store_; }

  // Same store, keeping only the columns for which keep(column) is true.
  // Dummies are always kept.
  ColumnPool Filtered(const std::function<bool(const ScheduleColumn&)>& keep) const;

 private:
  std::shared_ptr<ColumnStore> store_;
  std::vector<int> ids_;
};

// RMP over the admissible columns of a pool. lp_to_pool maps LP column
// index to pool position.
struct Rmp {
  LpProblem problem;
  std::vector<int> lp_to_pool;
};

Rmp BuildRmp(const Instance& inst, const ColumnPool& pool,
             const BranchConstraints& constraints);

// A starting basis that is feasible whenever the first LP column is a
// dummy: that dummy, every belt slack and zero-level flight artificials.
std::vector<int> DummyCrashBasis(const Instance& inst, const Rmp& rmp,
                                 const ColumnPool& pool);

// A Solution iff every positive column is at 1, none is a dummy and the
// columns partition the flights. `values` is indexed by pool position.
std::optional<Solution> ExtractInteger(const Instance& inst,
                                       const std::vector<double>& values,
                                       const ColumnPool& pool);

struct CgOptions {
  std::optional<Clock::time_point> deadline;
  // Called after every RMP solve.
  std::function<void(const LpProblem&, const LpResult&)> on_lp;
};

enum class CgStatus { kConverged, kInfeasible, kDeadline };

struct CgOutcome {
  CgStatus status = CgStatus::kConverged;
  double ub = 0.0;              // final RMP optimum; a bound only if converged
  std::vector<double> values;   // per pool position
  DualPrices duals;
  std::optional<Solution> incumbent;  // best integral RMP solution seen
  int iterations = 0;
  int columns_added = 0;
  std::vector<double> objective_history;  // RMP optimum per iteration
  double max_reduced_cost = 0.0;          // over belts, last pricing round
};

class LpFailureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Solves the node LP by column generation: solve RMP, price every belt with
// the node's forced/forbidden flights, add each column with reduced cost
// above kReducedCostEps, repeat. Throws LpFailureError if the RMP solver
// reports anything but optimal.
CgOutcome RunColgen(const Instance& inst, ColumnPool& pool,
                    const BranchConstraints& constraints,
                    const CgOptions& options = {});

}  // namespace bbap

#endif  // BBAP_COLGEN_H_
