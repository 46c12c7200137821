// Data-parallel inner loops of the pricing recursion.
//
// Each kernel has a scalar reference implementation and, on x86-64 builds,
// an AVX2 variant compiled with function-level target flags. The variant is
// chosen once at runtime from CPUID; setting BBAP_FORCE_SCALAR=1 in the
// environment pins the scalar path. All variants produce bit-identical
// results (only IEEE add, compare and integer conversion are involved).

#ifndef BBAP_KERNELS_H_
#define BBAP_KERNELS_H_

#include <cstdint>
#include <span>

namespace bbap::kernels {

enum class Isa { kScalar, kAvx2 };

const char* ToString(Isa isa);

// Best instruction set compiled in and supported by this CPU.
Isa DetectIsa();

// DetectIsa() unless overridden by BBAP_FORCE_SCALAR or SetActiveIsa.
Isa ActiveIsa();

// Test hook. Returns false (and changes nothing) if `isa` is unavailable.
bool SetActiveIsa(Isa isa);

// For every k: v = base[k] + gain[k]; if v > best[k] then best[k] = v and
// arg[k] = tag. Strict comparison keeps the earlier tag on ties.
// All spans must have the same length.
void TakeMax(std::span<const double> base, std::span<const double> gain,
             std::span<double> best, std::span<std::int32_t> arg,
             std::int32_t tag);

// out[k] = double(profit[k]) + offset.
void ShiftedGain(std::span<const std::int32_t> profit, double offset,
                 std::span<double> out);

// Explicit variants, used by the equivalence tests.
namespace scalar {
void TakeMax(std::span<const double> base, std::span<const double> gain,
             std::span<double> best, std::span<std::int32_t> arg,
             std::int32_t tag);
void ShiftedGain(std::span<const std::int32_t> profit, double offset,
                 std::span<double> out);
}  // namespace scalar

namespace avx2 {
// Only callable when DetectIsa() == Isa::kAvx2.
void TakeMax(std::span<const double> base, std::span<const double> gain,
             std::span<double> best, std::span<std::int32_t> arg,
             std::int32_t tag);
void ShiftedGain(std::span<const std::int32_t> profit, double offset,
                 std::span<double> out);
}  // namespace avx2

}  // namespace bbap::kernels

#endif  // BBAP_KERNELS_H_
