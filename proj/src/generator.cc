#include "bbap/generator.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "bbap/profit.h"

namespace bbap {

bool ValidGenConfig(const GenConfig& cfg) {
  return cfg.n >= 1 && cfg.m >= 1 && cfg.t_max >= 1 && cfg.treq_frac > 0.0 &&
         cfg.treq_frac <= 1.0 && cfg.bag_range.first >= 1 &&
         cfg.bag_range.first <= cfg.bag_range.second &&
         cfg.productivity_range.first >= 1 &&
         cfg.productivity_range.first <= cfg.productivity_range.second &&
         ValidProfitParams({cfg.alpha, cfg.beta1, cfg.beta2});
}

InstanceData GenerateData(const GenConfig& cfg) {
  if (!ValidGenConfig(cfg)) throw std::invalid_argument("invalid generator config");
  SplitMix64 rng(cfg.seed);
  InstanceData data;
  data.t_max = cfg.t_max;
  data.profit = ProfitParams{cfg.alpha, cfg.beta1, cfg.beta2};

  data.belts.resize(cfg.m);
  for (int i = 0; i < cfg.m; ++i) {
    data.belts[i].id = i;
    data.belts[i].productivity = static_cast<double>(rng.UniformInt(
        cfg.productivity_range.first, cfg.productivity_range.second));
  }
  data.flights.resize(cfg.n);
  for (int j = 0; j < cfg.n; ++j) {
    data.flights[j].id = j;
    data.flights[j].bags = static_cast<int>(
        rng.UniformInt(cfg.bag_range.first, cfg.bag_range.second));
  }
  // Clamp so that t_req stays inside the horizon when treq_frac == 1.
  const int latest = std::min(
      static_cast<int>(std::floor(cfg.treq_frac * cfg.t_max)), cfg.t_max - 1);
  for (int j = 0; j < cfg.n; ++j) {
    data.flights[j].t_req = static_cast<int>(rng.UniformInt(0, latest));
  }

  for (int i = 0; i < cfg.m; ++i) {
    auto& belt = data.belts[i];
    for (int j = 0; j < cfg.n; ++j) belt.compatible_flights.push_back(j);
    for (int j = 0; j < cfg.n; ++j) {
      data.durations[{i, j}] =
          BuildDurationSet(NominalDuration(belt, data.flights[j]));
    }
  }
  return data;
}

Instance Generate(const GenConfig& cfg) {
  return Instance::Create(GenerateData(cfg));
}

}  // namespace bbap
