// Profit function and duration-set construction used by the instance
// generator and by formula-based profit sources.

#ifndef BBAP_PROFIT_H_
#define BBAP_PROFIT_H_

#include <cstdint>
#include <stdexcept>

#include "bbap/instance.h"

namespace bbap {

class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// ceil(bags / productivity), with productivity doubled when the belt has a
// second unloading station and the flight reaches its bag threshold.
// Throws DomainError for an incompatible pair.
int NominalDuration(const Belt& belt, const Flight& flight);

// Five durations spaced two minutes apart containing `nominal`: up to two
// positive values below it, the rest above. Always at least two above.
DurationSet BuildDurationSet(int nominal);

// round(alpha * f(w) + (1 - alpha) * g(t)) with
//   f(w) = beta1 * e^(w - nominal) / (1 + e^(w - nominal))
//   g(t) = beta2 * (t_max - t) / (t_max - t_req)
// rounded half away from zero. Throws DomainError if t_req >= t_max.
std::int64_t FormulaProfit(const ProfitParams& params, int t_max, int t_req,
                           int nominal, int t, int w);

// Upper bound round(alpha * beta1 + (1 - alpha) * beta2) of FormulaProfit.
std::int64_t FormulaProfitCeiling(const ProfitParams& params);

bool ValidProfitParams(const ProfitParams& params);

}  // namespace bbap

#endif  // BBAP_PROFIT_H_
