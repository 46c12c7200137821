#include <atomic>
#include <cstdlib>
#include <cstring>

#include "bbap/kernels.h"

namespace bbap::kernels {
namespace {

bool ForcedScalar() {
  const char* env = std::getenv("BBAP_FORCE_SCALAR");
  return env != nullptr && std::strcmp(env, "") != 0 &&
         std::strcmp(env, "0") != 0;
}

std::atomic<Isa>& Active() {
  static std::atomic<Isa> isa{ForcedScalar() ? Isa::kScalar : DetectIsa()};
  return isa;
}

}  // namespace

const char* ToString(Isa isa) {
  switch (isa) {
    case Isa::kScalar:
      return "scalar";
    case Isa::kAvx2:
      return "avx2";
  }
  return "unknown";
}

Isa DetectIsa() {
#if defined(BBAP_HAVE_AVX2)
  __builtin_cpu_init();
  if (__builtin_cpu_supports("avx2")) return Isa::kAvx2;
#endif
  return Isa::kScalar;
}

Isa ActiveIsa() { return Active().load(std::memory_order_relaxed); }

bool SetActiveIsa(Isa isa) {
  if (isa == Isa::kAvx2 && DetectIsa() != Isa::kAvx2) return false;
  Active().store(isa, std::memory_order_relaxed);
  return true;
}

void TakeMax(std::span<const double> base, std::span<const double> gain,
             std::span<double> best, std::span<std::int32_t> arg,
             std::int32_t tag) {
#if defined(BBAP_HAVE_AVX2)
  if (ActiveIsa() == Isa::kAvx2) return avx2::TakeMax(base, gain, best, arg, tag);
#endif
  scalar::TakeMax(base, gain, best, arg, tag);
}

void ShiftedGain(std::span<const std::int32_t> profit, double offset,
                 std::span<double> out) {
#if defined(BBAP_HAVE_AVX2)
  if (ActiveIsa() == Isa::kAvx2) return avx2::ShiftedGain(profit, offset, out);
#endif
  scalar::ShiftedGain(profit, offset, out);
}

#if !defined(BBAP_HAVE_AVX2)
namespace avx2 {
void TakeMax(std::span<const double> base, std::span<const double> gain,
             std::span<double> best, std::span<std::int32_t> arg,
             std::int32_t tag) {
  scalar::TakeMax(base, gain, best, arg, tag);
}
void ShiftedGain(std::span<const std::int32_t> profit, double offset,
                 std::span<double> out) {
  scalar::ShiftedGain(profit, offset, out);
}
}  // namespace avx2
#endif

}  // namespace bbap::kernels
