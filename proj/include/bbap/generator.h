// Seeded random instances in the style of the synthetic benchmark families:
// every belt compatible with every flight, integer productivities and bag
// counts, nominal-centred duration sets and formula profits.

#ifndef BBAP_GENERATOR_H_
#define BBAP_GENERATOR_H_

#include <cstdint>
#include <utility>

#include "bbap/instance.h"

namespace bbap {

// SplitMix64 (Steele, Lea, Flood 2014): 64-bit state advanced by
// 0x9e3779b97f4a7c15, output mixed with 0xbf58476d1ce4e5b9 and
// 0x94d049bb133111eb. Chosen because it is trivially portable.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t Next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform integer in [lo, hi] by 128-bit multiply-shift of one draw
  // (bias below 2^-32 for the ranges used here).
  std::int64_t UniformInt(std::int64_t lo, std::int64_t hi) {
    const auto span = static_cast<unsigned __int128>(hi - lo) + 1;
    const auto scaled = (static_cast<unsigned __int128>(Next()) * span) >> 64;
    return lo + static_cast<std::int64_t>(scaled);
  }

 private:
  std::uint64_t state_;
};

struct GenConfig {
  int n = 30;
  int m = 5;
  int t_max = 120;
  double treq_frac = 0.5;  // t_req uniform in [0, floor(treq_frac * t_max)]
  std::pair<int, int> bag_range{50, 300};
  std::pair<int, int> productivity_range{10, 20};
  double alpha = 0.5;
  double beta1 = 500.0;
  double beta2 = 500.0;
  std::uint64_t seed = 1;
};

bool ValidGenConfig(const GenConfig& cfg);

// Draw order: all belt productivities, then every flight's bag count, then
// every flight's t_req. Throws std::invalid_argument on an invalid config
// and InvalidInstanceError if the drawn instance is unschedulable.
Instance Generate(const GenConfig& cfg);

// Same draws, before sorting and validation.
InstanceData GenerateData(const GenConfig& cfg);

}  // namespace bbap

#endif  // BBAP_GENERATOR_H_
