// Problem data for baggage belt assignment: flights, belts, duration sets,
// profit sources and the feasibility rules of the compact assignment model.
//
// An Instance is immutable once created. Flights are held in non-decreasing
// order of requested start time (stable with respect to input order), and
// every flight index used anywhere in the library refers to that order.

#ifndef BBAP_INSTANCE_H_
#define BBAP_INSTANCE_H_

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <tuple>
#include <variant>
#include <vector>

namespace bbap {

struct Flight {
  int id = 0;
  int bags = 1;
  int t_req = 0;
};

struct Belt {
  int id = 0;
  double productivity = 1.0;  // bags per minute
  std::vector<int> compatible_flights;
  // Flights with at least this many bags are unloaded at twice the
  // productivity (belt with two unloading stations).
  std::optional<int> dual_station_threshold;
};

struct DurationSet {
  int nominal = 1;
  std::vector<int> values;  // sorted, distinct, positive

  int min() const { return values.front(); }
  int max() const { return values.back(); }
};

struct ProfitParams {
  double alpha = 0.5;
  double beta1 = 500.0;
  double beta2 = 500.0;
};

// Key is (belt, flight, start, duration).
using ProfitKey = std::tuple<int, int, int, int>;
using ProfitTable = std::map<ProfitKey, std::int64_t>;

using ProfitSource = std::variant<ProfitParams, ProfitTable>;

// (belt, flight) -> duration set, only for compatible pairs.
using DurationMap = std::map<std::pair<int, int>, DurationSet>;

// Raw problem statement in caller order. Flight references (belt
// compatibility, duration keys, profit-table keys) are positions in
// `flights`. Nothing is checked until ValidateInstance or Instance::Create.
struct InstanceData {
  int t_max = 0;
  std::vector<Flight> flights;
  std::vector<Belt> belts;
  DurationMap durations;
  ProfitSource profit = ProfitParams{};
};

struct Violation {
  std::string entity;  // e.g. "flight 3", "belt 1", "belt 0 / flight 2"
  std::string rule;    // e.g. "t_req out of range"

  std::string ToString() const { return entity + ": " + rule; }
  bool operator==(const Violation&) const = default;
};

std::vector<Violation> ValidateInstance(const InstanceData& data);

class InvalidInstanceError : public std::runtime_error {
 public:
  explicit InvalidInstanceError(std::vector<Violation> violations);
  const std::vector<Violation>& violations() const { return violations_; }

 private:
  std::vector<Violation> violations_;
};

class Instance {
 public:
  // Validates, sorts flights by (t_req, input position), remaps every flight
  // reference and materializes the profit table. Throws InvalidInstanceError.
  static Instance Create(InstanceData data);

  int num_flights() const { return static_cast<int>(flights_.size()); }
  int num_belts() const { return static_cast<int>(belts_.size()); }
  int t_max() const { return t_max_; }
  const std::vector<Flight>& flights() const { return flights_; }
  const std::vector<Belt>& belts() const { return belts_; }
  const Flight& flight(int j) const { return flights_[j]; }
  const Belt& belt(int i) const { return belts_[i]; }
  const ProfitSource& profit_source() const { return profit_; }

  bool compatible(int belt, int flight) const {
    return compat_[static_cast<std::size_t>(belt) * flights_.size() + flight];
  }
  // Compatible flights of a belt in flight order.
  const std::vector<int>& compatible_flights(int belt) const {
    return belts_[belt].compatible_flights;
  }
  const DurationSet& durations(int belt, int flight) const;

  // Profit of starting `flight` on `belt` at `start` for `duration`.
  // Requires an admissible tuple: compatible, duration in the set,
  // start >= t_req and start + duration <= t_max.
  std::int64_t profit(int belt, int flight, int start, int duration) const;
  bool admissible(int belt, int flight, int start, int duration) const;

  // Profits of all admissible starts t_req..t_max-w for the duration with
  // index `duration_index` in durations(belt, flight).values. Empty when the
  // duration does not fit.
  std::span<const std::int32_t> profit_row(int belt, int flight,
                                           int duration_index) const;

  // Largest absolute admissible profit over the whole instance.
  std::int64_t max_abs_profit() const { return max_abs_profit_; }

  // Sorted-order data with flight ids equal to positions.
  InstanceData ToData() const;

  // Position in the caller's input of each sorted flight.
  const std::vector<int>& input_order() const { return input_order_; }

 private:
  Instance() = default;

  struct PairTable {
    std::size_t offset = 0;  // into profits_
    int stride = 0;          // t_max - t_req (row length of the longest row)
  };

  int t_max_ = 0;
  std::vector<Flight> flights_;
  std::vector<Belt> belts_;
  DurationMap durations_;
  ProfitSource profit_;
  std::vector<char> compat_;
  std::vector<int> input_order_;
  std::vector<PairTable> tables_;  // belt-major, only meaningful if compatible
  std::vector<std::int32_t> profits_;
  std::int64_t max_abs_profit_ = 0;
};

struct Assignment {
  int flight = 0;
  int belt = 0;
  int start = 0;
  int duration = 0;

  bool operator==(const Assignment&) const = default;
};

inline int Finish(const Assignment& a) { return a.start + a.duration; }

struct Solution {
  std::vector<Assignment> assignments;  // one per flight, any order
  std::int64_t objective = 0;
};

class MalformedSolutionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class ViolationClass {
  kCoverage,
  kWindow,
  kDuration,
  kCompatibility,
  kOverlap,
};

const char* ToString(ViolationClass c);

struct SolutionViolation {
  ViolationClass kind;
  std::string detail;
};

struct FeasibilityReport {
  std::vector<SolutionViolation> violations;
  std::int64_t recomputed_objective = 0;
  bool objective_matches = false;

  bool feasible() const { return violations.empty(); }
  bool ok() const { return feasible() && objective_matches; }
};

// Checks coverage, time window, duration membership, compatibility and
// per-belt overlap/precedence. The objective is recomputed for every
// assignment whose profit is defined, feasible or not. Throws
// MalformedSolutionError when an index is out of range.
FeasibilityReport CheckSolution(const Instance& inst, const Solution& sol);

}  // namespace bbap

#endif  // BBAP_INSTANCE_H_
