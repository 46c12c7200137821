// Compiled with -mavx2; only reached through the runtime dispatcher.

#include <immintrin.h>

#include <cstddef>

#include "bbap/kernels.h"

namespace bbap::kernels::avx2 {

void TakeMax(std::span<const double> base, std::span<const double> gain,
             std::span<double> best, std::span<std::int32_t> arg,
             std::int32_t tag) {
  const std::size_t n = best.size();
  const __m128i tags = _mm_set1_epi32(tag);
  // Picks the low 32 bits of each 64-bit lane mask.
  const __m256i narrow = _mm256_setr_epi32(0, 2, 4, 6, 0, 2, 4, 6);
  std::size_t k = 0;
  for (; k + 4 <= n; k += 4) {
    const __m256d v = _mm256_add_pd(_mm256_loadu_pd(base.data() + k),
                                    _mm256_loadu_pd(gain.data() + k));
    const __m256d cur = _mm256_loadu_pd(best.data() + k);
    const __m256d gt = _mm256_cmp_pd(v, cur, _CMP_GT_OQ);
    if (_mm256_movemask_pd(gt) == 0) continue;
    _mm256_storeu_pd(best.data() + k, _mm256_blendv_pd(cur, v, gt));
    const __m128i mask32 = _mm256_castsi256_si128(
        _mm256_permutevar8x32_epi32(_mm256_castpd_si256(gt), narrow));
    auto* a = reinterpret_cast<__m128i*>(arg.data() + k);
    _mm_storeu_si128(a, _mm_blendv_epi8(_mm_loadu_si128(a), tags, mask32));
  }
  for (; k < n; ++k) {
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
  const __m256d off = _mm256_set1_pd(offset);
  std::size_t k = 0;
  for (; k + 4 <= n; k += 4) {
    const __m128i p =
        _mm_loadu_si128(reinterpret_cast<const __m128i*>(profit.data() + k));
    _mm256_storeu_pd(out.data() + k, _mm256_add_pd(_mm256_cvtepi32_pd(p), off));
  }
  for (; k < n; ++k) out[k] = static_cast<double>(profit[k]) + offset;
}

}  // namespace bbap::kernels::avx2
