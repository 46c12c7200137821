// Exhaustive reference solver for tiny instances. Enumerates every
// flight-to-belt map and schedules each belt's fixed flight set with a
// memoized search over (position, earliest free time). Shares nothing with
// the pricing code beyond the instance and its profit lookup.

#ifndef BBAP_ORACLE_H_
#define BBAP_ORACLE_H_

#include <optional>
#include <stdexcept>

#include "bbap/instance.h"

namespace bbap {

struct OracleLimits {
  int max_flights = 8;
  int max_belts = 3;
  int max_tmax = 30;
};

class OracleLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Optimal solution, or nullopt when no feasible assignment exists.
// Throws OracleLimitError when the instance exceeds `limits`.
std::optional<Solution> OracleSolve(const Instance& inst,
                                    const OracleLimits& limits = {});

}  // namespace bbap

#endif  // BBAP_ORACLE_H_
