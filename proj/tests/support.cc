#include "support.h"

#include <algorithm>
#include <cmath>
#include <limits>

#include <Eigen/Dense>

namespace bbap::testing {

InstanceData TableData(const TableSpec& spec, std::uint64_t profit_seed,
                       int profit_lo, int profit_hi) {
  SplitMix64 rng(profit_seed);
  InstanceData data;
  data.t_max = spec.t_max;
  const int n = static_cast<int>(spec.t_req.size());
  for (int j = 0; j < n; ++j) data.flights.push_back({j, 1, spec.t_req[j]});
  ProfitTable table;
  for (int i = 0; i < spec.belts; ++i) {
    Belt b;
    b.id = i;
    b.productivity = 1.0;
    for (int j = 0; j < n; ++j) {
      b.compatible_flights.push_back(j);
      DurationSet ds;
      ds.values = spec.w_values[j];
      std::sort(ds.values.begin(), ds.values.end());
      ds.nominal = ds.values.front();
      data.durations[{i, j}] = ds;
      for (int w : ds.values) {
        for (int t = spec.t_req[j]; t + w <= spec.t_max; ++t) {
          table[{i, j, t, w}] = rng.UniformInt(profit_lo, profit_hi);
        }
      }
    }
    data.belts.push_back(b);
  }
  data.profit = std::move(table);
  return data;
}

Instance RandomPricingInstance(std::uint64_t seed) {
  SplitMix64 rng(seed * 0x9e37 + 11);
  TableSpec spec;
  spec.t_max = static_cast<int>(rng.UniformInt(8, 25));
  const int n = static_cast<int>(rng.UniformInt(1, 6));
  for (int j = 0; j < n; ++j) {
    const int k = static_cast<int>(rng.UniformInt(1, 3));
    std::vector<int> ws;
    while (static_cast<int>(ws.size()) < k) {
      const int w = static_cast<int>(rng.UniformInt(2, 7));
      if (std::find(ws.begin(), ws.end(), w) == ws.end()) ws.push_back(w);
    }
    const int lo = *std::min_element(ws.begin(), ws.end());
    spec.t_req.push_back(static_cast<int>(rng.UniformInt(0, spec.t_max - lo)));
    spec.w_values.push_back(ws);
  }
  return Instance::Create(TableData(spec, rng.Next(), -20, 100));
}

GenConfig OracleSizedConfig(std::uint64_t seed) {
  SplitMix64 rng(seed ^ 0x5bd1e995ULL);
  GenConfig cfg;
  cfg.n = static_cast<int>(rng.UniformInt(2, 8));
  cfg.m = static_cast<int>(rng.UniformInt(1, 3));
  cfg.t_max = static_cast<int>(rng.UniformInt(20, 30));
  cfg.treq_frac = 0.5;
  cfg.bag_range = {10, 60};
  cfg.productivity_range = {10, 20};
  cfg.alpha = 0.5;
  cfg.seed = seed;
  return cfg;
}

namespace {

struct Enumerator {
  const Instance& inst;
  int belt;
  const std::vector<int>& eligible;
  const std::vector<int>& forced;
  const std::vector<double>& y;
  std::vector<ScheduledFlight> current;
  std::optional<BruteForceBest> best;

  bool IsForced(int flight) const {
    return std::find(forced.begin(), forced.end(), flight) != forced.end();
  }

  void Visit(std::size_t pos, int free_at, double value) {
    if (pos == eligible.size()) {
      if (!best || value > best->value) best = BruteForceBest{value, current};
      return;
    }
    const int j = eligible[pos];
    if (!IsForced(j)) Visit(pos + 1, free_at, value);
    for (int w : inst.durations(belt, j).values) {
      for (int t = std::max(free_at, inst.flight(j).t_req); t + w <= inst.t_max();
           ++t) {
        current.push_back({j, t, w});
        Visit(pos + 1, t + w,
              value + (static_cast<double>(inst.profit(belt, j, t, w)) - y[j]));
        current.pop_back();
      }
    }
  }
};

}  // namespace

std::optional<BruteForceBest> BruteForceSchedule(
    const Instance& inst, int belt, const std::vector<int>& eligible,
    const std::vector<int>& forced, const std::vector<double>& y) {
  Enumerator e{inst, belt, eligible, forced, y, {}, std::nullopt};
  e.Visit(0, 0, 0.0);
  return e.best;
}

std::optional<double> VertexEnumerationOptimum(const LpProblem& problem) {
  const int rows = problem.num_rows();
  // Standard form columns: structurals then one slack per <= row.
  std::vector<Eigen::VectorXd> a;
  std::vector<double> c;
  for (const auto& col : problem.columns) {
    Eigen::VectorXd v = Eigen::VectorXd::Zero(rows);
    for (auto [r, coef] : col.entries) v[r] += coef;
    a.push_back(v);
    c.push_back(col.cost);
  }
  for (int r = 0; r < rows; ++r) {
    if (problem.relations[r] != Relation::kLessEqual) continue;
    Eigen::VectorXd v = Eigen::VectorXd::Zero(rows);
    v[r] = 1.0;
    a.push_back(v);
    c.push_back(0.0);
  }
  const int total = static_cast<int>(a.size());
  Eigen::VectorXd b(rows);
  for (int r = 0; r < rows; ++r) b[r] = problem.rhs[r];

  std::optional<double> best;
  std::vector<int> pick(rows);
  // Iterate over all size-`rows` subsets in lexicographic order.
  for (int k = 0; k < rows; ++k) pick[k] = k;
  if (total < rows) return std::nullopt;
  while (true) {
    Eigen::MatrixXd basis(rows, rows);
    for (int k = 0; k < rows; ++k) basis.col(k) = a[pick[k]];
    Eigen::FullPivLU<Eigen::MatrixXd> lu(basis);
    if (lu.isInvertible()) {
      const Eigen::VectorXd x = lu.solve(b);
      if ((basis * x - b).cwiseAbs().maxCoeff() < 1e-9 && x.minCoeff() >= -1e-9) {
        double obj = 0.0;
        for (int k = 0; k < rows; ++k) obj += c[pick[k]] * x[k];
        if (!best || obj > *best) best = obj;
      }
    }
    int k = rows - 1;
    while (k >= 0 && pick[k] == total - rows + k) --k;
    if (k < 0) break;
    ++pick[k];
    for (int q = k + 1; q < rows; ++q) pick[q] = pick[q - 1] + 1;
  }
  return best;
}

double RationalIn(SplitMix64& rng, double lo, double hi) {
  const auto steps = static_cast<std::int64_t>(std::floor((hi - lo) * 64.0));
  return lo + static_cast<double>(rng.UniformInt(0, steps)) / 64.0;
}

}  // namespace bbap::testing
