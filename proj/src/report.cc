#include "bbap/report.h"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <mutex>
#include <thread>

namespace bbap {

BenchSummary Summarize(const std::vector<BenchRecord>& records) {
  BenchSummary s;
  s.instances = static_cast<int>(records.size());
  if (records.empty()) return s;
  for (const auto& r : records) {
    s.avg_time += r.elapsed_seconds;
    s.avg_gap += r.gap_percent;
    s.avg_nodes += static_cast<double>(r.nodes);
    if (r.proven_optimal) ++s.optimal;
  }
  s.avg_time /= s.instances;
  s.avg_gap /= s.instances;
  s.avg_nodes /= s.instances;
  return s;
}

std::optional<GenConfig> FamilyConfig(const std::string& family) {
  GenConfig cfg;
  cfg.t_max = 120;
  if (family == "n30m5") {
    cfg.n = 30;
    cfg.m = 5;
  } else if (family == "n50m10") {
    cfg.n = 50;
    cfg.m = 10;
  } else {
    return std::nullopt;
  }
  return cfg;
}

std::vector<BenchRecord> RunBench(
    const BenchConfig& config,
    const std::function<void(const BenchRecord&)>& on_record) {
  std::vector<BenchRecord> records(config.seeds);
  std::atomic<int> next{0};
  std::mutex report_mu;
  auto worker = [&] {
    for (int k = next++; k < config.seeds; k = next++) {
      GenConfig cfg = config.family;
      cfg.seed = config.first_seed + static_cast<std::uint64_t>(k);
      const Instance inst = Generate(cfg);
      BnpOptions options;
      options.time_limit_seconds = config.time_limit_seconds;
      const BnpResult res = SolveBnp(inst, options);
      BenchRecord& r = records[k];
      r.seed = cfg.seed;
      r.elapsed_seconds = res.elapsed_seconds;
      r.gap_percent = res.gap_percent;
      r.proven_optimal = res.proven_optimal;
      r.nodes = res.nodes_explored;
      if (res.incumbent) r.objective = res.incumbent->objective;
      r.best_ub = res.best_ub;
      if (on_record) {
        std::lock_guard<std::mutex> lock(report_mu);
        on_record(r);
      }
    }
  };
  const int jobs = std::max(1, std::min(config.jobs, config.seeds));
  std::vector<std::thread> threads;
  for (int t = 1; t < jobs; ++t) threads.emplace_back(worker);
  worker();
  for (auto& t : threads) t.join();
  return records;
}

std::string FormatRecord(const BenchRecord& r) {
  char buf[256];
  std::snprintf(buf, sizeof buf,
                "seed %llu  time %.2f  gap (%%) %.2f  optimal %s  nodes %lld  "
                "objective %s  ub %.0f",
                static_cast<unsigned long long>(r.seed), r.elapsed_seconds,
                r.gap_percent, r.proven_optimal ? "yes" : "no",
                static_cast<long long>(r.nodes),
                r.objective ? std::to_string(*r.objective).c_str() : "none",
                r.best_ub);
  return buf;
}

std::string SummaryHeader() {
  return "t_req in          n    m  alpha     time  gap (%)   # opt   # nodes";
}

std::string FormatSummary(const BenchConfig& config, const BenchSummary& s) {
  char range[32];
  std::snprintf(range, sizeof range, "[0, %.2f t_max]", config.family.treq_frac);
  char buf[256];
  std::snprintf(buf, sizeof buf, "%-16s %3d %4d  %5.2f %8.2f %8.2f %4d/%-3d %9.2f",
                range, config.family.n, config.family.m, config.family.alpha,
                s.avg_time, s.avg_gap, s.optimal, s.instances, s.avg_nodes);
  return buf;
}

}  // namespace bbap
