#include "bbap/profit.h"

#include <algorithm>
#include <cmath>
#include <cstdint>

namespace bbap {

int NominalDuration(const Belt& belt, const Flight& flight) {
  const auto& compat = belt.compatible_flights;
  if (std::find(compat.begin(), compat.end(), flight.id) == compat.end()) {
    throw DomainError("flight " + std::to_string(flight.id) +
                      " is not compatible with belt " +
                      std::to_string(belt.id));
  }
  double rate = belt.productivity;
  if (belt.dual_station_threshold && flight.bags >= *belt.dual_station_threshold) {
    rate *= 2.0;
  }
  // Integral productivities are the common case; keep that path exact.
  const double ratio = static_cast<double>(flight.bags) / rate;
  const double rounded = std::round(ratio);
  int nominal = std::abs(ratio - rounded) < 1e-12
                    ? static_cast<int>(rounded)
                    : static_cast<int>(std::ceil(ratio));
  return std::max(nominal, 1);
}

DurationSet BuildDurationSet(int nominal) {
  constexpr int kCount = 5;
  constexpr int kStep = 2;
  DurationSet set;
  set.nominal = nominal;
  int below = 0;
  while (below < 2 && nominal - kStep * (below + 1) >= 1) ++below;
  const int first = nominal - kStep * below;
  for (int k = 0; k < kCount; ++k) set.values.push_back(first + kStep * k);
  return set;
}

std::int64_t FormulaProfit(const ProfitParams& params, int t_max, int t_req,
                           int nominal, int t, int w) {
  if (t_req >= t_max) {
    throw DomainError("profit undefined for t_req >= t_max");
  }
  const double e = std::exp(static_cast<double>(w - nominal));
  const double f = params.beta1 * e / (1.0 + e);
  const double g = params.beta2 * static_cast<double>(t_max - t) /
                   static_cast<double>(t_max - t_req);
  // std::llround rounds halfway cases away from zero.
  return std::llround(params.alpha * f + (1.0 - params.alpha) * g);
}

std::int64_t FormulaProfitCeiling(const ProfitParams& params) {
  return std::llround(params.alpha * params.beta1 +
                      (1.0 - params.alpha) * params.beta2);
}

bool ValidProfitParams(const ProfitParams& params) {
  return params.alpha > 0.0 && params.alpha < 1.0 && params.beta1 > 0.0 &&
         params.beta2 > 0.0 && std::isfinite(params.beta1) &&
         std::isfinite(params.beta2);
}

}  // namespace bbap
