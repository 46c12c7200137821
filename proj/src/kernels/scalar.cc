#include <cstddef>

#include "bbap/kernels.h"

namespace bbap::kernels::scalar {

void TakeMax(std::span<const double> base, std::span<const double> gain,
             std::span<double> best, std::span<std::int32_t> arg,
             std::int32_t tag) {
  const std::size_t n = best.size();
  for (std::size_t k = 0; k < n; ++k) {
    const double v = base[k] + gain[k];
    if (v > best[k]) {
      best[k] = v;
      arg[k] = tag;
    }
  }
}

void ShiftedGain(std::span<const std::int32_t> profit, double offset,
                 std::span<double> out) {
  const std::size_t n = out.size();
  for (std::size_t k = 0; k < n; ++k) {
    out[k] = static_cast<double>(profit[k]) + offset;
  }
}

}  // namespace bbap::kernels::scalar
